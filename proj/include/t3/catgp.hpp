#pragma once

// cat1-groups, internal categories in Gp, their equivalence, nerves,
// closed-form homotopy groups, weak equivalences, and the crossed-module
// bridge used to generate fixtures.
//
// Conventions: d0 is the source and d1 the target of an internal category.
// A pair (x,y) is composable when d1(x) = d0(y) ("x then y"), and the
// composite is x * i(d1 x)^-1 * y, the unique homomorphic composition.
// In the nerve, the simplicial face d_0 at level 1 is the *target* map
// (delete vertex 0) and d_1 is the source map.

#include "t3/sgrp.hpp"

namespace t3::catgp {

using grp::FinGroup;
using grp::GroupHom;
using grp::GroupPtr;
using grp::Subgroup;

struct Cat1Group {
  GroupPtr g;
  IdxVec d, t;  // endomorphisms of g as index maps
};

inline ValidationReport validateCat1(const Cat1Group& x) {
  ValidationReport r;
  const std::size_t n = x.g->size();
  if (x.d.size() != n || x.t.size() != n) {
    r.add("endomorphism map length does not match group order");
    return r;
  }
  GroupHom dh{x.g, x.g, x.d}, th{x.g, x.g, x.t};
  Idx bx = 0, by = 0;
  if (!grp::homLawHolds(dh, &bx, &by))
    r.add("d is not an endomorphism at (" + x.g->elements[bx] + "," + x.g->elements[by] + ")");
  if (!grp::homLawHolds(th, &bx, &by))
    r.add("t is not an endomorphism at (" + x.g->elements[bx] + "," + x.g->elements[by] + ")");
  if (!r.ok()) return r;
  for (Idx a = 0; a < n; ++a) {
    if (x.d[x.t[a]] != x.t[a]) {
      r.add("dt != t at " + x.g->elements[a]);
      break;
    }
  }
  for (Idx a = 0; a < n; ++a) {
    if (x.t[x.d[a]] != x.d[a]) {
      r.add("td != d at " + x.g->elements[a]);
      break;
    }
  }
  Subgroup kd = grp::kernelOf(dh), kt = grp::kernelOf(th);
  for (Idx a : kd.members)
    for (Idx b : kt.members)
      if (x.g->mul(a, b) != x.g->mul(b, a)) {
        r.add("[ker d, ker t] != 1 witnessed by (" + x.g->elements[a] + "," + x.g->elements[b] +
              ")");
        return r;
      }
  return r;
}

inline Cat1Group discreteCat1(GroupPtr g) {
  IdxVec id = sgrp::identityMap(g->size());
  return Cat1Group{std::move(g), id, id};
}

struct Cat1Morphism {
  Cat1Group source;
  Cat1Group target;
  IdxVec map;
};

inline ValidationReport validateCat1Morphism(const Cat1Morphism& f) {
  ValidationReport r;
  GroupHom h{f.source.g, f.target.g, f.map};
  if (f.map.size() != f.source.g->size() || !grp::homLawHolds(h)) {
    r.add("underlying map is not a homomorphism");
    return r;
  }
  if (sgrp::composeMaps(f.map, f.source.d) != sgrp::composeMaps(f.target.d, f.map))
    r.add("map does not commute with d");
  if (sgrp::composeMaps(f.map, f.source.t) != sgrp::composeMaps(f.target.t, f.map))
    r.add("map does not commute with t");
  return r;
}

// ---------------------------------------------------------------------------
// Internal categories in Gp

struct InternalCatGp {
  GroupPtr c1, c0;
  GroupHom d0, d1;            // c1 -> c0: source, target
  GroupHom i;                 // c0 -> c1
  grp::TupleGroup composable; // pairs (x,y), d1(x) = d0(y), subgroup of c1^2
  GroupHom c;                 // composable -> c1
};

inline ValidationReport validateInternal(const InternalCatGp& y) {
  ValidationReport r;
  const std::size_t n1 = y.c1->size(), n0 = y.c0->size();
  for (const GroupHom* h : {&y.d0, &y.d1, &y.i, &y.c})
    if (!grp::homLawHolds(*h)) r.add("a structure map is not a homomorphism");
  if (!r.ok()) return r;
  for (Idx a = 0; a < n0; ++a)
    if (y.d0.map[y.i.map[a]] != a || y.d1.map[y.i.map[a]] != a) {
      r.add("d0 i = id = d1 i fails at " + y.c0->elements[a]);
      break;
    }
  const auto& pairs = y.composable.tuples;
  for (Idx p = 0; p < pairs.size(); ++p) {
    Idx x = pairs[p][0], yy = pairs[p][1], z = y.c.map[p];
    if (y.d1.map[x] != y.d0.map[yy]) {
      r.add("composable carrier contains a non-composable pair");
      break;
    }
    if (y.d0.map[z] != y.d0.map[x]) {
      r.add("d0 c != d0 pr0 at " + y.c1->elements[x]);
      break;
    }
    if (y.d1.map[z] != y.d1.map[yy]) {
      r.add("d1 c != d1 pr1 at " + y.c1->elements[yy]);
      break;
    }
  }
  if (!r.ok()) return r;
  for (Idx x = 0; x < n1; ++x) {
    Idx left = y.c.map[y.composable.indexOf({y.i.map[y.d0.map[x]], x})];
    Idx right = y.c.map[y.composable.indexOf({x, y.i.map[y.d1.map[x]]})];
    if (left != x || right != x) {
      r.add("unit law fails at " + y.c1->elements[x]);
      break;
    }
  }
  // associativity over composable triples
  for (Idx x = 0; x < n1 && r.ok(); ++x)
    for (Idx u = 0; u < n1; ++u) {
      if (y.d1.map[x] != y.d0.map[u]) continue;
      for (Idx v = 0; v < n1; ++v) {
        if (y.d1.map[u] != y.d0.map[v]) continue;
        Idx xu = y.c.map[y.composable.indexOf({x, u})];
        Idx uv = y.c.map[y.composable.indexOf({u, v})];
        if (y.c.map[y.composable.indexOf({xu, v})] != y.c.map[y.composable.indexOf({x, uv})]) {
          r.add("composition not associative at (" + y.c1->elements[x] + "," + y.c1->elements[u] +
                "," + y.c1->elements[v] + ")");
          u = v = static_cast<Idx>(n1);
          break;
        }
      }
    }
  return r;
}

inline InternalCatGp cat1ToInternal(const Cat1Group& x, const Caps& caps = {}) {
  ValidationReport v = validateCat1(x);
  if (!v.ok()) fail(Err::InvalidInput, v.joined());
  const FinGroup& g = *x.g;
  GroupHom dh{x.g, x.g, x.d};
  Subgroup im = grp::imageOf(dh);
  auto [c0, incl] = grp::subgroupAsGroup(im);
  IdxVec pos(g.size(), 0);
  for (Idx k = 0; k < im.members.size(); ++k) pos[im.members[k]] = k;

  InternalCatGp y;
  y.c1 = x.g;
  y.c0 = c0;
  IdxVec d0map(g.size()), d1map(g.size());
  for (Idx a = 0; a < g.size(); ++a) {
    d0map[a] = pos[x.d[a]];
    d1map[a] = pos[x.t[a]];
  }
  y.d0 = GroupHom{x.g, c0, std::move(d0map)};
  y.d1 = GroupHom{x.g, c0, std::move(d1map)};
  y.i = GroupHom{c0, x.g, im.members};

  std::vector<IdxVec> pairs;
  if (g.size() * g.size() > caps.max_scan)
    fail(Err::SizeCapExceeded, "composable pair enumeration exceeds scan cap");
  for (Idx a = 0; a < g.size(); ++a)
    for (Idx b = 0; b < g.size(); ++b)
      if (x.t[a] == x.d[b]) pairs.push_back({a, b});
  y.composable = grp::buildTupleGroup(x.g, std::move(pairs), caps);
  IdxVec cmap(y.composable.tuples.size());
  for (Idx p = 0; p < cmap.size(); ++p) {
    Idx a = y.composable.tuples[p][0], b = y.composable.tuples[p][1];
    cmap[p] = g.mul(g.mul(a, g.inv(x.t[a])), b);
  }
  y.c = GroupHom{y.composable.group, x.g, std::move(cmap)};

  ValidationReport r = validateInternal(y);
  if (!r.ok()) fail(Err::Internal, "cat1ToInternal produced invalid category: " + r.joined());
  return y;
}

inline Cat1Group internalToCat1(const InternalCatGp& y) {
  IdxVec d(y.c1->size()), t(y.c1->size());
  for (Idx a = 0; a < y.c1->size(); ++a) {
    d[a] = y.i.map[y.d0.map[a]];
    t[a] = y.i.map[y.d1.map[a]];
  }
  Cat1Group x{y.c1, std::move(d), std::move(t)};
  ValidationReport r = validateCat1(x);
  if (!r.ok()) fail(Err::InvalidInput, "internal category does not yield a cat1-group: " + r.joined());
  return x;
}

// ---------------------------------------------------------------------------
// Homotopy groups, closed form

inline GroupPtr pi0(const InternalCatGp& y) {
  Subgroup k = grp::kernelOf(y.d0);
  Subgroup t_of_k = grp::imageOfSubgroup(y.d1, k);
  if (!grp::isNormal(t_of_k)) fail(Err::Internal, "d1(ker d0) is not normal in C0");
  return grp::subquotient(grp::fullSubgroup(y.c0), t_of_k).group;
}

inline GroupPtr pi1(const InternalCatGp& y) {
  Subgroup k = grp::intersect(grp::kernelOf(y.d0), grp::kernelOf(y.d1));
  auto [g, incl] = grp::subgroupAsGroup(k);
  if (!g->isAbelian()) fail(Err::Internal, "pi1 of a valid cat1-group must be abelian");
  return g;
}

inline GroupPtr pi0Cat1(const Cat1Group& x, const Caps& caps = {}) {
  return pi0(cat1ToInternal(x, caps));
}
inline GroupPtr pi1Cat1(const Cat1Group& x, const Caps& caps = {}) {
  return pi1(cat1ToInternal(x, caps));
}

// ---------------------------------------------------------------------------
// Nerve: level p is the group of composable p-chains.

struct NerveData {
  sgrp::TruncSimpGroup simp;
  std::vector<grp::TupleGroup> chains;  // chains[p] for p >= 2

  Idx chainIndex(int p, const IdxVec& ch) const {
    return p == 1 ? ch[0] : chains[p].indexOf(ch);
  }
};

inline NerveData buildNerve(const InternalCatGp& y, int L, const Caps& caps = {}) {
  if (L < 2) fail(Err::InvalidInput, "nerve needs truncation level >= 2");
  const FinGroup& g = *y.c1;
  const IdxVec& src = y.d0.map;
  const IdxVec& tgt = y.d1.map;

  NerveData nd;
  sgrp::TruncSimpGroup& h = nd.simp;
  h.trunc = L;
  h.levels.push_back(y.c0);
  h.levels.push_back(y.c1);
  nd.chains.resize(L + 1);
  std::vector<IdxVec> prev;  // chains of length p-1
  for (Idx a = 0; a < g.size(); ++a) prev.push_back({a});
  for (int p = 2; p <= L; ++p) {
    std::vector<IdxVec> cur;
    if (prev.size() * g.size() > caps.max_scan)
      fail(Err::SizeCapExceeded, "nerve level enumeration exceeds scan cap");
    for (const IdxVec& ch : prev)
      for (Idx b = 0; b < g.size(); ++b) {
        if (tgt[ch.back()] != src[b]) continue;
        IdxVec e = ch;
        e.push_back(b);
        cur.push_back(std::move(e));
      }
    nd.chains[p] = grp::buildTupleGroup(y.c1, cur, caps);
    h.levels.push_back(nd.chains[p].group);
    prev = std::move(cur);
  }

  auto compose2 = [&](Idx a, Idx b) { return g.mul(g.mul(a, g.inv(y.i.map[tgt[a]])), b); };

  h.faces.resize(L + 1);
  h.degs.resize(L + 1);
  // level 1: d_0 = target (delete vertex 0), d_1 = source
  h.faces[1] = {tgt, src};
  // s_0: C0 -> C1
  h.degs[0] = {y.i.map};
  for (int p = 2; p <= L; ++p) {
    const auto& tup = nd.chains[p].tuples;
    for (int i = 0; i <= p; ++i) {
      IdxVec m(tup.size());
      for (Idx a = 0; a < tup.size(); ++a) {
        const IdxVec& ch = tup[a];
        IdxVec out;
        out.reserve(p - 1);
        if (i == 0) {
          out.assign(ch.begin() + 1, ch.end());
        } else if (i == p) {
          out.assign(ch.begin(), ch.end() - 1);
        } else {
          out.assign(ch.begin(), ch.begin() + (i - 1));
          out.push_back(compose2(ch[i - 1], ch[i]));
          out.insert(out.end(), ch.begin() + i + 1, ch.end());
        }
        m[a] = nd.chainIndex(p - 1, out);
      }
      h.faces[p].push_back(std::move(m));
    }
  }
  for (int p = 1; p < L; ++p) {
    const std::size_t np = h.levels[p]->size();
    for (int i = 0; i <= p; ++i) {
      IdxVec m(np);
      for (Idx a = 0; a < np; ++a) {
        IdxVec ch = p == 1 ? IdxVec{a} : nd.chains[p].tuples[a];
        Idx vertex = i == 0 ? src[ch.front()] : tgt[ch[i - 1]];
        ch.insert(ch.begin() + i, y.i.map[vertex]);
        m[a] = nd.chains[p + 1].indexOf(ch);
      }
      h.degs[p].push_back(std::move(m));
    }
  }
  ValidationReport r = sgrp::validateSimp(h);
  if (!r.ok()) fail(Err::Internal, "nerve is not simplicial: " + r.joined());
  return nd;
}

inline sgrp::TruncSimpGroup nerveOf(const InternalCatGp& y, int L, const Caps& caps = {}) {
  return buildNerve(y, L, caps).simp;
}

// ---------------------------------------------------------------------------
// The fundamental internal category of a truncated simplicial group:
// C1 = H1 / d2(ker d0 /\ ker d1 at level 2), C0 = H0.

struct FundamentalResult {
  InternalCatGp category;
  GroupHom projection;  // H1 -> C1
};

inline FundamentalResult fundamentalInternalCategory(const sgrp::TruncSimpGroup& h,
                                                     const Caps& caps = {}) {
  if (h.trunc < 2) fail(Err::TruncationTooShallow, "needs truncation level >= 2");
  Subgroup x2 = grp::intersect(grp::kernelOf(h.faceHom(2, 0)), grp::kernelOf(h.faceHom(2, 1)));
  Subgroup k = grp::imageOfSubgroup(h.faceHom(2, 2), x2);
  if (!grp::isNormal(k))
    fail(Err::QuotientIllFormed, "d2(ker d0 /\\ ker d1) is not normal in level 1");
  grp::Subquotient q = grp::subquotient(grp::fullSubgroup(h.levels[1]), k);

  // induced structure maps: source = d_1, target = d_0 at level 1, unit = s_0
  const IdxVec& srcMap = h.face(1, 1);
  const IdxVec& tgtMap = h.face(1, 0);
  for (Idx a : k.members)
    if (srcMap[a] != h.levels[0]->identity || tgtMap[a] != h.levels[0]->identity)
      fail(Err::QuotientIllFormed, "boundary image is not endpoint-trivial");

  InternalCatGp y;
  y.c1 = q.group;
  y.c0 = h.levels[0];
  IdxVec d0map(q.group->size()), d1map(q.group->size());
  for (Idx c = 0; c < q.group->size(); ++c) {
    d0map[c] = srcMap[q.representative[c]];
    d1map[c] = tgtMap[q.representative[c]];
  }
  // well-definedness: all members of a coset must agree
  for (Idx a = 0; a < h.levels[1]->size(); ++a) {
    Idx c = q.coset_of_parent[a];
    if (srcMap[a] != d0map[c] || tgtMap[a] != d1map[c])
      fail(Err::QuotientIllFormed, "structure maps do not descend to the quotient");
  }
  y.d0 = GroupHom{q.group, y.c0, std::move(d0map)};
  y.d1 = GroupHom{q.group, y.c0, std::move(d1map)};
  IdxVec imap(y.c0->size());
  for (Idx a = 0; a < y.c0->size(); ++a) imap[a] = q.coset_of_parent[h.deg(0, 0)[a]];
  y.i = GroupHom{y.c0, q.group, std::move(imap)};

  std::vector<IdxVec> pairs;
  for (Idx a = 0; a < q.group->size(); ++a)
    for (Idx b = 0; b < q.group->size(); ++b)
      if (y.d1.map[a] == y.d0.map[b]) pairs.push_back({a, b});
  y.composable = grp::buildTupleGroup(q.group, std::move(pairs), caps);
  IdxVec cmap(y.composable.tuples.size());
  for (Idx p = 0; p < cmap.size(); ++p) {
    Idx a = y.composable.tuples[p][0], b = y.composable.tuples[p][1];
    cmap[p] = q.group->mul(q.group->mul(a, q.group->inv(y.i.map[y.d1.map[a]])), b);
  }
  y.c = GroupHom{y.composable.group, q.group, std::move(cmap)};
  ValidationReport r = validateInternal(y);
  if (!r.ok()) fail(Err::QuotientIllFormed, "fundamental category is not internal: " + r.joined());
  return FundamentalResult{std::move(y), GroupHom{h.levels[1], q.group, q.coset_of_parent}};
}

// Unit comparison map H -> Nerve(P(H)): level p sends a simplex to the chain
// of its projected spine edges.
inline sgrp::SimpMap unitMap(const sgrp::TruncSimpGroup& h, const Caps& caps = {}) {
  FundamentalResult f = fundamentalInternalCategory(h, caps);
  NerveData nerve = buildNerve(f.category, std::max(2, h.trunc), caps);
  const int L = std::min(h.trunc, nerve.simp.trunc);
  sgrp::SimpMap u;
  u.source = h;
  u.target = nerve.simp;
  u.maps.resize(L + 1);
  u.maps[0] = sgrp::identityMap(h.levels[0]->size());
  u.maps[1] = f.projection.map;
  for (int p = 2; p <= L; ++p) {
    std::vector<IdxVec> edges(p + 1);
    for (int k = 1; k <= p; ++k) edges[k] = sgrp::edgeMap(h, p, k);
    IdxVec m(h.levels[p]->size());
    IdxVec chain(p);
    for (Idx a = 0; a < m.size(); ++a) {
      for (int k = 1; k <= p; ++k) chain[k - 1] = f.projection.map[edges[k][a]];
      m[a] = nerve.chainIndex(p, chain);
    }
    u.maps[p] = std::move(m);
  }
  ValidationReport r = sgrp::validateSimpMap(u);
  if (!r.ok()) fail(Err::Internal, "unit map is not simplicial: " + r.joined());
  return u;
}

// ---------------------------------------------------------------------------
// Weak equivalences of cat1-groups: isomorphisms on pi0 and pi1.

inline bool isWeakEquivalenceCat1(const Cat1Morphism& f, const Caps& caps = {}) {
  ValidationReport r = validateCat1Morphism(f);
  if (!r.ok()) fail(Err::NotAMorphism, r.joined());
  InternalCatGp ys = cat1ToInternal(f.source, caps);
  InternalCatGp yt = cat1ToInternal(f.target, caps);

  // induced pi0: C0s/d1(ker d0) -> C0t/d1(ker d0)
  Subgroup ks = grp::imageOfSubgroup(ys.d1, grp::kernelOf(ys.d0));
  Subgroup kt = grp::imageOfSubgroup(yt.d1, grp::kernelOf(yt.d0));
  grp::Subquotient qs = grp::subquotient(grp::fullSubgroup(ys.c0), ks);
  grp::Subquotient qt = grp::subquotient(grp::fullSubgroup(yt.c0), kt);
  IdxVec m0(qs.group->size());
  for (Idx c = 0; c < qs.group->size(); ++c) {
    Idx rep = ys.i.map[qs.representative[c]];  // back into the source group
    Idx img = f.map[rep];                      // lands in im d of the target
    m0[c] = qt.coset_of_parent[yt.d0.map[img]];  // d0 fixes im d pointwise
  }
  GroupHom p0{qs.group, qt.group, std::move(m0)};
  if (!grp::homLawHolds(p0)) fail(Err::Internal, "induced pi0 map is not a hom");
  if (!grp::isIsoHom(p0)) return false;

  // induced pi1: restriction to ker d /\ ker t
  Subgroup s1 = grp::intersect(grp::kernelOf(ys.d0), grp::kernelOf(ys.d1));
  Subgroup t1 = grp::intersect(grp::kernelOf(yt.d0), grp::kernelOf(yt.d1));
  auto [gs, is] = grp::subgroupAsGroup(s1);
  auto [gt, it] = grp::subgroupAsGroup(t1);
  IdxVec pos(yt.c1->size(), ~Idx{0});
  for (Idx k = 0; k < t1.members.size(); ++k) pos[t1.members[k]] = k;
  IdxVec m1(gs->size());
  for (Idx a = 0; a < gs->size(); ++a) {
    Idx img = f.map[s1.members[a]];
    if (pos[img] == ~Idx{0}) return false;  // does not even restrict
    m1[a] = pos[img];
  }
  GroupHom p1{gs, gt, std::move(m1)};
  if (!grp::homLawHolds(p1)) fail(Err::Internal, "induced pi1 map is not a hom");
  return grp::isIsoHom(p1);
}

// ---------------------------------------------------------------------------
// Crossed modules (fixture generator; finite analogue)

struct CrossedModule {
  GroupHom boundary;       // M -> P
  grp::GroupAction action; // P acting on M
};

inline ValidationReport validateCrossedModule(const CrossedModule& cm) {
  ValidationReport r;
  const FinGroup& m = *cm.action.module;
  const FinGroup& p = *cm.action.group;
  if (cm.boundary.source != cm.action.module || cm.boundary.target != cm.action.group)
    r.add("boundary endpoints do not match the action");
  ValidationReport ar = validateAction(cm.action);
  for (const auto& v : ar.violations) r.add("action: " + v);
  if (!grp::homLawHolds(cm.boundary)) r.add("boundary is not a homomorphism");
  if (!r.ok()) return r;
  for (Idx q = 0; q < p.size(); ++q)
    for (Idx a = 0; a < m.size(); ++a)
      if (cm.boundary.map[cm.action(q, a)] != p.conj(q, cm.boundary.map[a])) {
        r.add("equivariance fails at p=" + p.elements[q] + ", m=" + m.elements[a]);
        q = static_cast<Idx>(p.size());
        break;
      }
  for (Idx a = 0; a < m.size(); ++a)
    for (Idx b = 0; b < m.size(); ++b)
      if (cm.action(cm.boundary.map[a], b) != m.conj(a, b)) {
        r.add("Peiffer identity fails at m=" + m.elements[a] + ", m'=" + m.elements[b]);
        a = static_cast<Idx>(m.size());
        break;
      }
  return r;
}

// G = M x| P, d(m,p) = (e,p), t(m,p) = (e, boundary(m) p).
inline Cat1Group cat1FromCrossedModule(const CrossedModule& cm) {
  ValidationReport r = validateCrossedModule(cm);
  if (!r.ok()) fail(Err::NotACrossedModule, r.joined());
  GroupPtr g = grp::semidirectProduct(cm.action);
  const std::size_t np = cm.action.group->size();
  const std::size_t nm = cm.action.module->size();
  auto enc = [&](Idx m, Idx p) { return m * static_cast<Idx>(np) + p; };
  IdxVec d(nm * np), t(nm * np);
  for (Idx m = 0; m < nm; ++m)
    for (Idx p = 0; p < np; ++p) {
      d[enc(m, p)] = enc(cm.action.module->identity, p);
      t[enc(m, p)] = enc(cm.action.module->identity, cm.action.group->mul(cm.boundary.map[m], p));
    }
  Cat1Group x{g, std::move(d), std::move(t)};
  ValidationReport v = validateCat1(x);
  if (!v.ok()) fail(Err::Internal, "crossed module produced an invalid cat1-group: " + v.joined());
  return x;
}

// The converse direction: every valid cat1-group carries (ker d -> im d) with
// the conjugation action as a crossed module.
inline CrossedModule deriveCrossedModule(const Cat1Group& x) {
  ValidationReport v = validateCat1(x);
  if (!v.ok()) fail(Err::InvalidInput, v.joined());
  GroupHom dh{x.g, x.g, x.d};
  auto [mg, mi] = grp::subgroupAsGroup(grp::kernelOf(dh));
  auto [pg, pi] = grp::subgroupAsGroup(grp::imageOf(dh));
  IdxVec posM(x.g->size(), ~Idx{0}), posP(x.g->size(), ~Idx{0});
  for (Idx k = 0; k < mi.map.size(); ++k) posM[mi.map[k]] = k;
  for (Idx k = 0; k < pi.map.size(); ++k) posP[pi.map[k]] = k;
  IdxVec bnd(mg->size());
  for (Idx a = 0; a < mg->size(); ++a) bnd[a] = posP[x.t[mi.map[a]]];
  IdxVec act(pg->size() * mg->size());
  for (Idx q = 0; q < pg->size(); ++q)
    for (Idx a = 0; a < mg->size(); ++a)
      act[q * mg->size() + a] = posM[x.g->conj(pi.map[q], mi.map[a])];
  return CrossedModule{GroupHom{mg, pg, std::move(bnd)}, grp::GroupAction{pg, mg, std::move(act)}};
}

}  // namespace t3::catgp
