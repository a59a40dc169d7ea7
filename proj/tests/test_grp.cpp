#include <catch2/catch_amalgamated.hpp>

#include "t3/catalogue.hpp"
#include "t3/grp.hpp"

using namespace t3;
using namespace t3::grp;

namespace {

GroupHom signHom() {
  // s3() orders permutations of {0,1,2} lexicographically:
  // 012, 021, 102, 120, 201, 210 with parities +,-,-,+,+,-
  return makeHom(s3(), cyclicGroup(2), {0, 1, 1, 0, 0, 1});
}

}  // namespace

TEST_CASE("validateGroup accepts Z/2 and rejects broken tables") {
  CHECK(validateGroup({"e", "a"}, {0, 1, 1, 0}, 0).ok());

  auto latin = validateGroup({"e", "a"}, {0, 1, 1, 1}, 0);
  REQUIRE_FALSE(latin.ok());
  bool mentionsLatin = false;
  for (const auto& v : latin.violations) mentionsLatin |= v.find("Latin") != std::string::npos;
  CHECK(mentionsLatin);

  // An order-3 Latin square that is not associative (idempotent quasigroup).
  auto quasi = validateGroup({"0", "1", "2"}, {0, 2, 1, 2, 1, 0, 1, 0, 2}, 0);
  REQUIRE_FALSE(quasi.ok());
  bool mentionsAssoc = false;
  for (const auto& v : quasi.violations)
    mentionsAssoc |= v.find("associativity fails") != std::string::npos;
  CHECK(mentionsAssoc);
}

TEST_CASE("makeHom checks the homomorphism law") {
  CHECK_NOTHROW(signHom());
  auto g = s3();
  CHECK_NOTHROW(makeHom(g, g, identityHom(g).map));

  // swap the two fixed-point-free transpositions at indices 1 and 5, fix the rest
  IdxVec notHom = {0, 5, 2, 3, 4, 1};
  CHECK_THROWS_AS(makeHom(g, g, notHom), Error);
}

TEST_CASE("kernels and images") {
  auto f = signHom();
  auto k = kernelOf(f);
  CHECK(k.size() == 3);  // A3
  CHECK(isNormal(k));
  CHECK(isSubgroupClosed(k));

  auto g = s3();
  auto idk = kernelOf(identityHom(g));
  CHECK(idk.size() == 1);

  GroupHom triv{g, cyclicGroup(4), IdxVec(g->size(), 0)};
  CHECK(imageOf(triv).size() == 1);

  // |source| = |ker| * |im|
  for (const GroupHom& h : {f, identityHom(g), triv})
    CHECK(h.source->size() == kernelOf(h).size() * imageOf(h).size());
}

TEST_CASE("quotients") {
  auto z4 = cyclicGroup(4);
  auto n = subgroupGenerated(z4, {2});
  auto [q, proj] = quotientBy(z4, n);
  CHECK(q->size() == 2);
  CHECK(isomorphic(q, cyclicGroup(2)));
  CHECK(kernelOf(proj).members == n.members);

  auto g = s3();
  auto [q2, proj2] = quotientBy(g, trivialSubgroup(g));
  CHECK(isomorphic(q2, g));

  auto sub = subgroupGenerated(g, {1});  // a transposition: order 2, not normal
  REQUIRE(sub.size() == 2);
  CHECK_THROWS_AS(quotientBy(g, sub), Error);
}

TEST_CASE("fiber products") {
  auto z4 = cyclicGroup(4);
  auto z2 = cyclicGroup(2);
  GroupHom mod2{z4, z2, {0, 1, 0, 1}};
  auto fp = fiberProduct(mod2, mod2);
  CHECK(fp.group->size() == 8);
  for (auto [a, b] : fp.pairs) CHECK(a % 2 == b % 2);
  // projections commute with the legs
  CHECK(sameMap(composeHom(mod2, fp.pr1), composeHom(mod2, fp.pr2)));

  // over the trivial group: direct product (cross-checked against the
  // semidirect route with the trivial action)
  auto dp = directProduct(z4, z2);
  CHECK(dp->size() == 8);
  CHECK(isomorphic(dp, semidirectProduct(trivialAction(z4, z2))));
  CHECK_FALSE(isomorphic(dp, cyclicGroup(8)));

  // id,id: diagonal
  auto g = s3();
  auto diag = fiberProduct(identityHom(g), identityHom(g));
  CHECK(diag.group->size() == g->size());
  CHECK(isomorphic(diag.group, g));
}

TEST_CASE("commutator subgroups") {
  auto g = s3();
  auto a3 = kernelOf(signHom());
  CHECK(commutatorOf(a3, a3).size() == 1);
  auto whole = fullSubgroup(g);
  auto comm = commutatorOf(whole, whole);
  CHECK(comm.members == a3.members);
  CHECK(commutatorOf(whole, a3).members == commutatorOf(a3, whole).members);

  auto z6 = cyclicGroup(6);
  CHECK(commutatorOf(fullSubgroup(z6), fullSubgroup(z6)).size() == 1);
}

TEST_CASE("semidirect products") {
  auto z2 = cyclicGroup(2);
  auto z4 = cyclicGroup(4);
  auto z3 = cyclicGroup(3);

  CHECK(isomorphic(semidirectProduct(trivialAction(z4, z2)), directProduct(z2, z4)));

  // Z/2 acting on Z/3 by inversion gives S3
  IdxVec act = {0, 1, 2, 0, 2, 1};
  auto sd = semidirectProduct(GroupAction{z2, z3, act});
  CHECK(sd->size() == 6);
  CHECK(findIsomorphism(sd, s3()).has_value());

  CHECK(isomorphic(semidirectProduct(trivialAction(trivialGroup(), z4)), z4));
}

TEST_CASE("findIsomorphism") {
  CHECK_FALSE(findIsomorphism(cyclicGroup(4), kleinFour()).has_value());
  auto g = s3();
  auto self = findIsomorphism(g, g);
  REQUIRE(self.has_value());
  CHECK(isIsoHom(*self));

  // two presentations of S3
  IdxVec act = {0, 1, 2, 0, 2, 1};
  auto sd = semidirectProduct(GroupAction{cyclicGroup(2), cyclicGroup(3), act});
  auto iso = findIsomorphism(sd, g);
  REQUIRE(iso.has_value());
  CHECK(isIsoHom(*iso));

  CHECK_FALSE(findIsomorphism(dihedralGroup(4), quaternionGroup()).has_value());
  CHECK(findIsomorphism(dihedralGroup(3), g).has_value());
}

TEST_CASE("subquotient labelling is canonical") {
  auto z4 = cyclicGroup(4);
  auto q = subquotient(fullSubgroup(z4), subgroupGenerated(z4, {2}));
  REQUIRE(q.group->size() == 2);
  CHECK(q.group->elements[0] == "[0]");
  CHECK(q.group->elements[1] == "[1]");
  CHECK(q.representative == IdxVec{0, 1});
}

TEST_CASE("structure recognition") {
  CHECK(structureName(*trivialGroup()) == "1");
  CHECK(structureName(*cyclicGroup(6)) == "Z/6");
  CHECK(structureName(*kleinFour()) == "Z/2 x Z/2");
  CHECK(structureName(*directProduct(cyclicGroup(2), cyclicGroup(4))) == "Z/2 x Z/4");
  CHECK(structureName(*s3()) == "S3");
  CHECK(structureName(*quaternionGroup()) == "Q8");
  CHECK(structureName(*dihedralGroup(4)) == "D4");
}
