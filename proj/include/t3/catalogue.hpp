#pragma once

// Small-group zoo for fixtures and a structure recognizer for reports.

#include <functional>

#include "t3/grp.hpp"

namespace t3::grp {

inline GroupPtr trivialGroup() { return makeGroup({"e"}, {0}, 0); }

inline GroupPtr cyclicGroup(std::size_t n) {
  std::vector<std::string> labels(n);
  IdxVec table(n * n);
  for (Idx a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (Idx b = 0; b < n; ++b) table[a * n + b] = static_cast<Idx>((a + b) % n);
  }
  return makeGroup(std::move(labels), std::move(table), 0);
}

// Permutations of {0..k-1} in lexicographic order, composed left-to-right:
// (p*q)(i) = p(q(i)).
inline GroupPtr symmetricGroup(std::size_t k) {
  std::vector<IdxVec> perms;
  IdxVec p(k);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::unordered_map<IdxVec, Idx, VecHash> at;
  for (Idx i = 0; i < perms.size(); ++i) at[perms[i]] = i;
  const std::size_t n = perms.size();
  std::vector<std::string> labels(n);
  IdxVec table(n * n);
  for (Idx a = 0; a < n; ++a) {
    std::string s;
    for (Idx v : perms[a]) s += std::to_string(v);
    labels[a] = s;
    for (Idx b = 0; b < n; ++b) {
      IdxVec c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      table[a * n + b] = at[c];
    }
  }
  return makeGroup(std::move(labels), std::move(table), 0);
}

inline GroupPtr s3() { return symmetricGroup(3); }

inline GroupPtr kleinFour() { return directProduct(cyclicGroup(2), cyclicGroup(2)); }

// Dihedral group of order 2n: r^n = s^2 = e, s r s = r^-1.
inline GroupPtr dihedralGroup(std::size_t n) {
  const std::size_t sz = 2 * n;
  auto enc = [&](Idx rot, Idx flip) { return flip * static_cast<Idx>(n) + rot; };
  std::vector<std::string> labels(sz);
  IdxVec table(sz * sz);
  for (Idx f = 0; f < 2; ++f)
    for (Idx r = 0; r < n; ++r) {
      labels[enc(r, f)] = (f ? "sr" : "r") + std::to_string(r);
      for (Idx f2 = 0; f2 < 2; ++f2)
        for (Idx r2 = 0; r2 < n; ++r2) {
          // (r^a s^f)(r^b s^g) = r^(a + b*(-1)^f) s^(f+g)
          Idx rr = static_cast<Idx>(f ? (r + n - r2 % n) % n : (r + r2) % n);
          table[enc(r, f) * sz + enc(r2, f2)] = enc(rr, (f + f2) % 2);
        }
    }
  return makeGroup(std::move(labels), std::move(table), enc(0, 0));
}

inline GroupPtr quaternionGroup() {
  // 1,-1,i,-i,j,-j,k,-k
  const std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto neg = [](Idx a) { return a ^ 1u; };
  auto base = [](Idx a) { return a >> 1; };  // 0:1, 1:i, 2:j, 3:k
  auto sign = [](Idx a) { return a & 1u; };
  // base multiplication with sign: i*j=k, j*k=i, k*i=j
  auto mulBase = [](Idx x, Idx y, Idx& s) {
    if (x == 0) { s = 0; return y; }
    if (y == 0) { s = 0; return x; }
    if (x == y) { s = 1; return Idx{0}; }
    // remaining: distinct nonzero
    static const Idx prod[4][4] = {{0,0,0,0},{0,0,3,2},{0,3,0,1},{0,2,1,0}};
    static const Idx sg[4][4] = {{0,0,0,0},{0,0,0,1},{0,1,0,0},{0,0,1,0}};
    s = sg[x][y];
    return prod[x][y];
  };
  IdxVec table(64);
  for (Idx a = 0; a < 8; ++a)
    for (Idx b = 0; b < 8; ++b) {
      Idx s = 0;
      Idx p = mulBase(base(a), base(b), s);
      Idx r = p * 2 + ((sign(a) + sign(b) + s) % 2);
      table[a * 8 + b] = r;
    }
  return makeGroup(labels, std::move(table), 0);
}

inline GroupPtr renamed(GroupPtr g, const std::string& prefix) {
  std::vector<std::string> labels(g->size());
  for (Idx i = 0; i < g->size(); ++i) labels[i] = prefix + std::to_string(i);
  return makeGroup(std::move(labels), IdxVec(g->table), g->identity);
}

// ---------------------------------------------------------------------------
// Structure recognition for reports: "1", "Z/n", products of cyclics via
// invariant factors, a short catalogue of small nonabelian groups, otherwise
// the order alone.

namespace detail {

inline std::vector<std::vector<std::size_t>> divisorChains(std::size_t n, std::size_t lo) {
  // factorizations n = n1 * n2 * ... with lo <= n1 | n2 | ... (each >= 2)
  std::vector<std::vector<std::size_t>> out;
  if (n == 1) {
    out.push_back({});
    return out;
  }
  for (std::size_t d = lo; d <= n; ++d) {
    if (n % d) continue;
    for (auto rest : divisorChains(n / d, d)) {
      // require divisibility chain d | next
      if (!rest.empty() && rest.front() % d != 0) continue;
      rest.insert(rest.begin(), d);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

}  // namespace detail

inline std::string structureName(const FinGroup& g, const Caps& caps = {}) {
  const std::size_t n = g.size();
  if (n == 1) return "1";
  GroupPtr self = std::make_shared<FinGroup>(g);
  if (g.isAbelian()) {
    if (n > caps.max_iso_order) return "abelian order " + std::to_string(n);
    for (const auto& chain : detail::divisorChains(n, 2)) {
      GroupPtr cand = cyclicGroup(chain[0]);
      for (std::size_t i = 1; i < chain.size(); ++i)
        cand = directProduct(cand, cyclicGroup(chain[i]));
      if (isomorphic(self, cand, caps)) {
        std::string s;
        for (std::size_t i = 0; i < chain.size(); ++i) {
          if (i) s += " x ";
          s += "Z/" + std::to_string(chain[i]);
        }
        return s;
      }
    }
    return "abelian order " + std::to_string(n);
  }
  if (n <= caps.max_iso_order) {
    const std::vector<std::pair<std::string, std::function<GroupPtr()>>> zoo = {
        {"S3", [] { return s3(); }},          {"D4", [] { return dihedralGroup(4); }},
        {"Q8", [] { return quaternionGroup(); }}, {"D5", [] { return dihedralGroup(5); }},
        {"D6", [] { return dihedralGroup(6); }},  {"D7", [] { return dihedralGroup(7); }},
        {"S4", [] { return symmetricGroup(4); }},
    };
    for (const auto& [name, make] : zoo) {
      GroupPtr cand = make();
      if (cand->size() == n && isomorphic(self, cand, caps)) return name;
    }
  }
  return "nonabelian order " + std::to_string(n);
}

}  // namespace t3::grp
