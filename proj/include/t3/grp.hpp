#pragma once

// Finite groups as Cayley tables, homomorphisms between them, and the basic
// constructions (kernels, images, quotients, fiber products, commutators,
// semidirect products, isomorphism search) everything else consumes.

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>

#include "t3/common.hpp"

namespace t3::grp {

struct FinGroup {
  std::vector<std::string> elements;
  IdxVec table;  // n*n, row-major: table[a*n+b] = a*b
  Idx identity = 0;
  IdxVec inverse;  // filled by makeGroup

  std::size_t size() const { return elements.size(); }
  Idx mul(Idx a, Idx b) const { return table[a * elements.size() + b]; }
  Idx inv(Idx a) const { return inverse[a]; }
  Idx conj(Idx x, Idx a) const { return mul(mul(x, a), inv(x)); }  // x a x^-1

  std::size_t elementOrder(Idx a) const {
    std::size_t k = 1;
    Idx p = a;
    while (p != identity) {
      p = mul(p, a);
      ++k;
    }
    return k;
  }

  bool isAbelian() const {
    const std::size_t n = size();
    for (Idx a = 0; a < n; ++a)
      for (Idx b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
};

using GroupPtr = std::shared_ptr<const FinGroup>;

// Builds a group value from raw data, precomputing inverses. The data is
// trusted here; run validateGroup on anything read from the outside.
inline GroupPtr makeGroup(std::vector<std::string> elements, IdxVec table, Idx identity) {
  auto g = std::make_shared<FinGroup>();
  const std::size_t n = elements.size();
  if (table.size() != n * n || identity >= n)
    fail(Err::InvalidInput, "group table shape does not match element count");
  g->elements = std::move(elements);
  g->table = std::move(table);
  g->identity = identity;
  g->inverse.assign(n, 0);
  for (Idx a = 0; a < n; ++a) {
    bool found = false;
    for (Idx b = 0; b < n; ++b)
      if (g->mul(a, b) == identity && g->mul(b, a) == identity) {
        g->inverse[a] = b;
        found = true;
        break;
      }
    if (!found) fail(Err::InvalidInput, "element without two-sided inverse: " + g->elements[a]);
  }
  return g;
}

inline ValidationReport validateGroup(const std::vector<std::string>& elements, const IdxVec& table,
                                      Idx identity, const Caps& caps = {}) {
  ValidationReport r;
  const std::size_t n = elements.size();
  if (n == 0) {
    r.add("empty element list");
    return r;
  }
  if (n > caps.max_validate_order)
    fail(Err::SizeCapExceeded, "validateGroup: order " + std::to_string(n) + " exceeds cap");
  if (identity >= n) {
    r.add("identity index out of range");
    return r;
  }
  if (table.size() != n * n) {
    r.add("table is not " + std::to_string(n) + "x" + std::to_string(n));
    return r;
  }
  for (Idx v : table)
    if (v >= n) {
      r.add("table entry out of range");
      return r;
    }
  auto at = [&](Idx a, Idx b) { return table[a * n + b]; };
  // Latin square
  for (Idx a = 0; a < n; ++a) {
    std::vector<bool> seenRow(n, false), seenCol(n, false);
    for (Idx b = 0; b < n; ++b) {
      if (seenRow[at(a, b)]) r.add("not a Latin square: row " + std::to_string(a) + " repeats");
      seenRow[at(a, b)] = true;
      if (seenCol[at(b, a)]) r.add("not a Latin square: column " + std::to_string(a) + " repeats");
      seenCol[at(b, a)] = true;
    }
  }
  for (Idx a = 0; a < n; ++a) {
    if (at(identity, a) != a) {
      r.add("identity row is not the identity permutation");
      break;
    }
  }
  for (Idx a = 0; a < n; ++a) {
    if (at(a, identity) != a) {
      r.add("identity column is not the identity permutation");
      break;
    }
  }
  for (Idx a = 0; a < n && r.violations.size() < 32; ++a)
    for (Idx b = 0; b < n; ++b)
      for (Idx c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          r.add("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(c) + ")");
          b = c = static_cast<Idx>(n);  // one witness per left factor is enough
          break;
        }
  for (Idx a = 0; a < n; ++a) {
    bool found = false;
    for (Idx b = 0; b < n; ++b)
      if (at(a, b) == identity && at(b, a) == identity) found = true;
    if (!found) r.add("no two-sided inverse for element " + std::to_string(a));
  }
  return r;
}

inline ValidationReport validateGroup(const FinGroup& g, const Caps& caps = {}) {
  return validateGroup(g.elements, g.table, g.identity, caps);
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  IdxVec map;  // |source| entries into target

  Idx operator()(Idx a) const { return map[a]; }
};

inline bool homLawHolds(const GroupHom& f, Idx* bad_x = nullptr, Idx* bad_y = nullptr) {
  const std::size_t n = f.source->size();
  if (f.map.size() != n) return false;
  for (Idx v : f.map)
    if (v >= f.target->size()) return false;
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (f.map[f.source->mul(x, y)] != f.target->mul(f.map[x], f.map[y])) {
        if (bad_x) *bad_x = x;
        if (bad_y) *bad_y = y;
        return false;
      }
  return f.map[f.source->identity] == f.target->identity;
}

inline GroupHom makeHom(GroupPtr src, GroupPtr dst, IdxVec map) {
  GroupHom f{std::move(src), std::move(dst), std::move(map)};
  if (f.map.size() != f.source->size())
    fail(Err::NotAHomomorphism, "map length does not match source order");
  Idx x = 0, y = 0;
  if (!homLawHolds(f, &x, &y))
    fail(Err::NotAHomomorphism, "not a homomorphism at (" + f.source->elements[x] + "," +
                                    f.source->elements[y] + ")");
  return f;
}

inline GroupHom identityHom(GroupPtr g) {
  IdxVec m(g->size());
  std::iota(m.begin(), m.end(), 0u);
  return GroupHom{g, g, std::move(m)};
}

inline GroupHom composeHom(const GroupHom& g, const GroupHom& f) {
  // g after f
  IdxVec m(f.source->size());
  for (Idx a = 0; a < m.size(); ++a) m[a] = g.map[f.map[a]];
  return GroupHom{f.source, g.target, std::move(m)};
}

inline bool sameMap(const GroupHom& f, const GroupHom& g) { return f.map == g.map; }

// ---------------------------------------------------------------------------
// Subgroups as index sets into a parent group

struct Subgroup {
  GroupPtr parent;
  IdxVec members;  // sorted, unique

  std::size_t size() const { return members.size(); }
  bool contains(Idx a) const { return std::binary_search(members.begin(), members.end(), a); }
};

inline Subgroup subgroupGenerated(GroupPtr parent, const IdxVec& gens) {
  std::vector<bool> in(parent->size(), false);
  in[parent->identity] = true;
  IdxVec work{parent->identity};
  for (Idx g : gens)
    if (!in[g]) {
      in[g] = true;
      work.push_back(g);
    }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) {
      Idx p = parent->mul(work[i], work[j]);
      if (!in[p]) {
        in[p] = true;
        work.push_back(p);
      }
    }
  IdxVec members;
  for (Idx a = 0; a < parent->size(); ++a)
    if (in[a]) members.push_back(a);
  return Subgroup{std::move(parent), std::move(members)};
}

inline Subgroup trivialSubgroup(GroupPtr parent) {
  Idx e = parent->identity;
  return Subgroup{std::move(parent), {e}};
}

inline Subgroup fullSubgroup(GroupPtr parent) {
  IdxVec m(parent->size());
  std::iota(m.begin(), m.end(), 0u);
  return Subgroup{std::move(parent), std::move(m)};
}

inline bool isSubgroupClosed(const Subgroup& s) {
  if (!s.contains(s.parent->identity)) return false;
  for (Idx a : s.members) {
    if (!s.contains(s.parent->inv(a))) return false;
    for (Idx b : s.members)
      if (!s.contains(s.parent->mul(a, b))) return false;
  }
  return true;
}

inline bool isNormalIn(const Subgroup& n, const Subgroup& ambient) {
  for (Idx x : ambient.members)
    for (Idx a : n.members)
      if (!n.contains(n.parent->conj(x, a))) return false;
  return true;
}

inline bool isNormal(const Subgroup& n) { return isNormalIn(n, fullSubgroup(n.parent)); }

inline Subgroup kernelOf(const GroupHom& f) {
  IdxVec members;
  for (Idx a = 0; a < f.source->size(); ++a)
    if (f.map[a] == f.target->identity) members.push_back(a);
  return Subgroup{f.source, std::move(members)};
}

inline Subgroup imageOf(const GroupHom& f) {
  std::vector<bool> in(f.target->size(), false);
  for (Idx v : f.map) in[v] = true;
  IdxVec members;
  for (Idx a = 0; a < f.target->size(); ++a)
    if (in[a]) members.push_back(a);
  return Subgroup{f.target, std::move(members)};
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  IdxVec members;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(members));
  return Subgroup{a.parent, std::move(members)};
}

inline Subgroup imageOfSubgroup(const GroupHom& f, const Subgroup& s) {
  std::vector<bool> in(f.target->size(), false);
  for (Idx a : s.members) in[f.map[a]] = true;
  IdxVec members;
  for (Idx a = 0; a < f.target->size(); ++a)
    if (in[a]) members.push_back(a);
  return Subgroup{f.target, std::move(members)};
}

// [a,b]: subgroup generated by all x y x^-1 y^-1 with x in a, y in b.
inline Subgroup commutatorOf(const Subgroup& a, const Subgroup& b) {
  const FinGroup& g = *a.parent;
  IdxVec gens;
  for (Idx x : a.members)
    for (Idx y : b.members) gens.push_back(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroupGenerated(a.parent, gens);
}

// The subgroup as a group in its own right, with the inclusion hom.
inline std::pair<GroupPtr, GroupHom> subgroupAsGroup(const Subgroup& s) {
  IdxVec pos(s.parent->size(), 0);
  for (Idx i = 0; i < s.members.size(); ++i) pos[s.members[i]] = i;
  const std::size_t m = s.members.size();
  std::vector<std::string> labels(m);
  IdxVec table(m * m);
  for (Idx i = 0; i < m; ++i) {
    labels[i] = s.parent->elements[s.members[i]];
    for (Idx j = 0; j < m; ++j) table[i * m + j] = pos[s.parent->mul(s.members[i], s.members[j])];
  }
  GroupPtr g = makeGroup(std::move(labels), std::move(table), pos[s.parent->identity]);
  return {g, GroupHom{g, s.parent, s.members}};
}

// K/I for I normal in K, both inside the same parent. Cosets are ordered by
// minimal representative index, so repeated runs are bit-identical.
struct Subquotient {
  GroupPtr group;              // the quotient K/I
  IdxVec coset_of_parent;      // parent index -> coset index (members of K only; others ~0)
  IdxVec representative;       // coset index -> parent index of the minimal representative
};

inline Subquotient subquotient(const Subgroup& K, const Subgroup& I) {
  const FinGroup& g = *K.parent;
  if (!std::includes(K.members.begin(), K.members.end(), I.members.begin(), I.members.end()))
    fail(Err::NotNormal, "denominator is not contained in numerator");
  if (!isNormalIn(I, K)) fail(Err::NotNormal, "denominator is not normal in numerator");
  constexpr Idx kUnset = ~Idx{0};
  IdxVec coset(g.size(), kUnset);
  IdxVec reps;
  for (Idx k : K.members) {
    if (coset[k] != kUnset) continue;
    Idx c = static_cast<Idx>(reps.size());
    reps.push_back(k);  // members are scanned in increasing order: k is minimal
    for (Idx i : I.members) coset[g.mul(k, i)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<std::string> labels(m);
  IdxVec table(m * m);
  for (Idx a = 0; a < m; ++a) {
    labels[a] = "[" + g.elements[reps[a]] + "]";
    for (Idx b = 0; b < m; ++b) table[a * m + b] = coset[g.mul(reps[a], reps[b])];
  }
  Subquotient q;
  q.group = makeGroup(std::move(labels), std::move(table), coset[g.identity]);
  q.coset_of_parent = std::move(coset);
  q.representative = std::move(reps);
  return q;
}

inline std::pair<GroupPtr, GroupHom> quotientBy(GroupPtr g, const Subgroup& n) {
  if (!isNormal(n)) fail(Err::NotNormal, "subgroup is not normal");
  Subquotient q = subquotient(fullSubgroup(g), n);
  IdxVec proj(g->size());
  for (Idx a = 0; a < g->size(); ++a) proj[a] = q.coset_of_parent[a];
  return {q.group, GroupHom{g, q.group, std::move(proj)}};
}

// ---------------------------------------------------------------------------
// Tuple carriers: subgroups of a power of a base group, multiplied
// componentwise. Nerve levels and fiber products all live here.

struct VecHash {
  std::size_t operator()(const IdxVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Idx x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline std::string tupleLabel(const FinGroup& base, const IdxVec& tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += base.elements[tuple[i]];
  }
  s += ")";
  return s;
}

struct TupleGroup {
  GroupPtr group;
  GroupPtr base;
  std::vector<IdxVec> tuples;  // group element index -> component indices in base
  std::unordered_map<IdxVec, Idx, VecHash> index;

  Idx indexOf(const IdxVec& t) const {
    auto it = index.find(t);
    if (it == index.end()) fail(Err::Internal, "tuple not in carrier");
    return it->second;
  }
};

// `tuples` must be closed under componentwise product and contain the
// identity tuple; enumeration order is preserved.
inline TupleGroup buildTupleGroup(GroupPtr base, std::vector<IdxVec> tuples, const Caps& caps = {}) {
  const std::size_t n = tuples.size();
  if (n == 0) fail(Err::Internal, "empty tuple carrier");
  if (n > caps.max_table_order)
    fail(Err::SizeCapExceeded,
         "carrier of order " + std::to_string(n) + " exceeds table cap " +
             std::to_string(caps.max_table_order));
  TupleGroup tg;
  tg.base = base;
  tg.tuples = std::move(tuples);
  tg.index.reserve(n * 2);
  for (Idx i = 0; i < n; ++i) {
    if (!tg.index.emplace(tg.tuples[i], i).second) fail(Err::Internal, "duplicate tuple");
  }
  const std::size_t len = tg.tuples[0].size();
  std::vector<std::string> labels(n);
  IdxVec table(n * n);
  IdxVec prod(len);
  for (Idx a = 0; a < n; ++a) {
    labels[a] = tupleLabel(*base, tg.tuples[a]);
    for (Idx b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < len; ++k) prod[k] = base->mul(tg.tuples[a][k], tg.tuples[b][k]);
      auto it = tg.index.find(prod);
      if (it == tg.index.end()) fail(Err::Internal, "tuple carrier not closed under product");
      table[a * n + b] = it->second;
    }
  }
  IdxVec id(len, base->identity);
  auto it = tg.index.find(id);
  if (it == tg.index.end()) fail(Err::Internal, "tuple carrier lacks identity");
  tg.group = makeGroup(std::move(labels), std::move(table), it->second);
  return tg;
}

// ---------------------------------------------------------------------------
// Fiber products

struct FiberProduct {
  GroupPtr group;  // pairs (a,b) with f(a) = g(b)
  GroupHom pr1;
  GroupHom pr2;
  std::vector<std::array<Idx, 2>> pairs;
};

inline FiberProduct fiberProduct(const GroupHom& f, const GroupHom& g, const Caps& caps = {}) {
  if (f.target != g.target && f.target->elements != g.target->elements)
    fail(Err::InvalidInput, "fiber product legs have different targets");
  const std::size_t na = f.source->size(), nb = g.source->size();
  if (na * nb > caps.max_scan)
    fail(Err::SizeCapExceeded, "fiber product would scan " + std::to_string(na * nb) + " pairs");
  std::vector<std::array<Idx, 2>> pairs;
  for (Idx a = 0; a < na; ++a)
    for (Idx b = 0; b < nb; ++b)
      if (f.map[a] == g.map[b]) pairs.push_back({a, b});
  const std::size_t n = pairs.size();
  if (n > caps.max_table_order)
    fail(Err::SizeCapExceeded, "fiber product carrier of order " + std::to_string(n) +
                                   " exceeds table cap");
  std::vector<Idx> lookup(na * nb, ~Idx{0});
  for (Idx i = 0; i < n; ++i) lookup[pairs[i][0] * nb + pairs[i][1]] = i;
  std::vector<std::string> labels(n);
  IdxVec table(n * n), m1(n), m2(n);
  for (Idx i = 0; i < n; ++i) {
    labels[i] = "(" + f.source->elements[pairs[i][0]] + "," + g.source->elements[pairs[i][1]] + ")";
    m1[i] = pairs[i][0];
    m2[i] = pairs[i][1];
    for (Idx j = 0; j < n; ++j) {
      Idx a = f.source->mul(pairs[i][0], pairs[j][0]);
      Idx b = g.source->mul(pairs[i][1], pairs[j][1]);
      table[i * n + j] = lookup[a * nb + b];
    }
  }
  Idx id = lookup[f.source->identity * nb + g.source->identity];
  FiberProduct fp;
  fp.group = makeGroup(std::move(labels), std::move(table), id);
  fp.pr1 = GroupHom{fp.group, f.source, std::move(m1)};
  fp.pr2 = GroupHom{fp.group, g.source, std::move(m2)};
  fp.pairs = std::move(pairs);
  return fp;
}

inline GroupPtr directProduct(GroupPtr a, GroupPtr b, const Caps& caps = {}) {
  GroupPtr triv = makeGroup({"e"}, {0}, 0);
  GroupHom fa{a, triv, IdxVec(a->size(), 0)};
  GroupHom fb{b, triv, IdxVec(b->size(), 0)};
  return fiberProduct(fa, fb, caps).group;
}

// ---------------------------------------------------------------------------
// Actions and semidirect products

struct GroupAction {
  GroupPtr group;   // P, acting
  GroupPtr module;  // M, acted on
  IdxVec act;       // act[p*|M|+m]

  Idx operator()(Idx p, Idx m) const { return act[p * module->size() + m]; }
};

inline ValidationReport validateAction(const GroupAction& a) {
  ValidationReport r;
  const std::size_t np = a.group->size(), nm = a.module->size();
  if (a.act.size() != np * nm) {
    r.add("action table is not |P| x |M|");
    return r;
  }
  for (Idx v : a.act)
    if (v >= nm) {
      r.add("action entry out of range");
      return r;
    }
  for (Idx m = 0; m < nm; ++m)
    if (a(a.group->identity, m) != m) {
      r.add("act(e,m) != m at m=" + a.module->elements[m]);
      break;
    }
  for (Idx p = 0; p < np; ++p)
    for (Idx q = 0; q < np; ++q)
      for (Idx m = 0; m < nm; ++m)
        if (a(a.group->mul(p, q), m) != a(p, a(q, m))) {
          r.add("act(pq,m) != act(p,act(q,m)) at p=" + a.group->elements[p] +
                ", q=" + a.group->elements[q]);
          p = q = static_cast<Idx>(np);
          break;
        }
  for (Idx p = 0; p < np; ++p) {
    std::vector<bool> seen(nm, false);
    bool mult = true;
    for (Idx m = 0; m < nm; ++m) seen[a(p, m)] = true;
    for (Idx m = 0; m < nm && mult; ++m)
      for (Idx m2 = 0; m2 < nm; ++m2)
        if (a(p, a.module->mul(m, m2)) != a.module->mul(a(p, m), a(p, m2))) {
          mult = false;
          break;
        }
    if (std::find(seen.begin(), seen.end(), false) != seen.end() || !mult) {
      r.add("act(p,-) is not an automorphism at p=" + a.group->elements[p]);
      break;
    }
  }
  return r;
}

inline GroupAction trivialAction(GroupPtr p, GroupPtr m) {
  IdxVec act(p->size() * m->size());
  for (Idx i = 0; i < p->size(); ++i)
    for (Idx j = 0; j < m->size(); ++j) act[i * m->size() + j] = j;
  return GroupAction{std::move(p), std::move(m), std::move(act)};
}

// Group on M x P with (m,p)(m',p') = (m * act(p,m'), p p').
inline GroupPtr semidirectProduct(const GroupAction& a) {
  ValidationReport v = validateAction(a);
  if (!v.ok()) fail(Err::NotAnAction, v.joined());
  const std::size_t nm = a.module->size(), np = a.group->size();
  const std::size_t n = nm * np;
  auto enc = [&](Idx m, Idx p) { return m * np + p; };
  std::vector<std::string> labels(n);
  IdxVec table(n * n);
  for (Idx m = 0; m < nm; ++m)
    for (Idx p = 0; p < np; ++p) {
      labels[enc(m, p)] = "(" + a.module->elements[m] + "," + a.group->elements[p] + ")";
      for (Idx m2 = 0; m2 < nm; ++m2)
        for (Idx p2 = 0; p2 < np; ++p2)
          table[enc(m, p) * n + enc(m2, p2)] =
              enc(a.module->mul(m, a(p, m2)), a.group->mul(p, p2));
    }
  return makeGroup(std::move(labels), std::move(table),
                   enc(a.module->identity, a.group->identity));
}

// ---------------------------------------------------------------------------
// Isomorphism search: backtracking over generator images with element-order
// pruning. Deterministic given input ordering.

inline std::multiset<std::size_t> orderProfile(const FinGroup& g) {
  std::multiset<std::size_t> p;
  for (Idx a = 0; a < g.size(); ++a) p.insert(g.elementOrder(a));
  return p;
}

namespace detail {

inline IdxVec minimalGenerators(const FinGroup& g) {
  IdxVec gens;
  GroupPtr self = std::make_shared<FinGroup>(g);
  Subgroup cur = trivialSubgroup(self);
  while (cur.size() < g.size()) {
    for (Idx a = 0; a < g.size(); ++a)
      if (!cur.contains(a)) {
        gens.push_back(a);
        break;
      }
    cur = subgroupGenerated(self, gens);
  }
  return gens;
}

// Close a partial map under the hom law; returns false on conflict.
inline bool closePartial(const FinGroup& a, const FinGroup& b, IdxVec& f) {
  constexpr Idx kUnset = ~Idx{0};
  bool changed = true;
  while (changed) {
    changed = false;
    for (Idx x = 0; x < a.size(); ++x) {
      if (f[x] == kUnset) continue;
      for (Idx y = 0; y < a.size(); ++y) {
        if (f[y] == kUnset) continue;
        Idx xy = a.mul(x, y);
        Idx im = b.mul(f[x], f[y]);
        if (f[xy] == kUnset) {
          f[xy] = im;
          changed = true;
        } else if (f[xy] != im) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool extendIso(const FinGroup& a, const FinGroup& b, const IdxVec& gens, std::size_t k,
                      const std::vector<std::size_t>& orders_b, IdxVec& f) {
  constexpr Idx kUnset = ~Idx{0};
  if (k == gens.size()) {
    // closure defines f on <gens> = all of a; check bijectivity
    std::vector<bool> hit(b.size(), false);
    for (Idx x = 0; x < a.size(); ++x) {
      if (f[x] == kUnset || hit[f[x]]) return false;
      hit[f[x]] = true;
    }
    return true;
  }
  Idx g = gens[k];
  if (f[g] != kUnset) return extendIso(a, b, gens, k + 1, orders_b, f);
  std::size_t ord = a.elementOrder(g);
  for (Idx cand = 0; cand < b.size(); ++cand) {
    if (orders_b[cand] != ord) continue;
    IdxVec trial = f;
    trial[g] = cand;
    if (closePartial(a, b, trial) && extendIso(a, b, gens, k + 1, orders_b, trial)) {
      f = std::move(trial);
      return true;
    }
  }
  return false;
}

}  // namespace detail

inline std::optional<GroupHom> findIsomorphism(GroupPtr a, GroupPtr b, const Caps& caps = {}) {
  if (a->size() > caps.max_iso_order)
    fail(Err::SizeCapExceeded, "isomorphism search above cap: order " + std::to_string(a->size()));
  if (a->size() != b->size()) return std::nullopt;
  if (orderProfile(*a) != orderProfile(*b)) return std::nullopt;
  constexpr Idx kUnset = ~Idx{0};
  IdxVec f(a->size(), kUnset);
  f[a->identity] = b->identity;
  IdxVec gens = detail::minimalGenerators(*a);
  std::vector<std::size_t> orders_b(b->size());
  for (Idx x = 0; x < b->size(); ++x) orders_b[x] = b->elementOrder(x);
  if (!detail::extendIso(*a, *b, gens, 0, orders_b, f)) return std::nullopt;
  return GroupHom{a, b, std::move(f)};
}

inline bool isomorphic(GroupPtr a, GroupPtr b, const Caps& caps = {}) {
  return findIsomorphism(std::move(a), std::move(b), caps).has_value();
}

// Is the given map a bijective homomorphism already?
inline bool isIsoHom(const GroupHom& f) {
  if (f.source->size() != f.target->size()) return false;
  std::vector<bool> hit(f.target->size(), false);
  for (Idx v : f.map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return homLawHolds(f);
}

}  // namespace t3::grp
