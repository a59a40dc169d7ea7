#pragma once

// Truncated simplicial and bisimplicial groups, the Moore complex and its
// homotopy groups, diagonals, levelwise maps and weak equivalences.
//
// Conventions, fixed once for the whole project:
//   * a truncation level L stores dimensions 0..L inclusive;
//   * the Moore complex is N_n = /\_{i>=1} ker d_i with boundary d_0;
//   * homotopy groups come out as groups with canonical coset labels
//     (cosets ordered by minimal representative), so runs are bit-identical.

#include "t3/grp.hpp"

namespace t3::sgrp {

using grp::FinGroup;
using grp::GroupHom;
using grp::GroupPtr;
using grp::Subgroup;

struct TruncSimpGroup {
  int trunc = 0;
  std::vector<GroupPtr> levels;               // 0..trunc
  std::vector<std::vector<IdxVec>> faces;     // faces[n][i]: level n -> n-1, 1<=n<=trunc, 0<=i<=n
  std::vector<std::vector<IdxVec>> degs;      // degs[n][i]:  level n -> n+1, 0<=n<trunc, 0<=i<=n

  const IdxVec& face(int n, int i) const { return faces[n][i]; }
  const IdxVec& deg(int n, int i) const { return degs[n][i]; }
  GroupHom faceHom(int n, int i) const { return GroupHom{levels[n], levels[n - 1], faces[n][i]}; }
  GroupHom degHom(int n, int i) const { return GroupHom{levels[n], levels[n + 1], degs[n][i]}; }
};

inline IdxVec composeMaps(const IdxVec& second, const IdxVec& first) {
  IdxVec out(first.size());
  for (std::size_t a = 0; a < first.size(); ++a) out[a] = second[first[a]];
  return out;
}

inline IdxVec identityMap(std::size_t n) {
  IdxVec m(n);
  std::iota(m.begin(), m.end(), 0u);
  return m;
}

inline ValidationReport validateSimp(const TruncSimpGroup& h) {
  ValidationReport r;
  const int L = h.trunc;
  if (static_cast<int>(h.levels.size()) != L + 1) {
    r.add("level count does not match truncation");
    return r;
  }
  auto checkHom = [&](const IdxVec& m, GroupPtr s, GroupPtr t, const std::string& what) {
    GroupHom f{s, t, m};
    if (m.size() != s->size() || !grp::homLawHolds(f)) r.add(what + " is not a homomorphism");
  };
  for (int n = 1; n <= L; ++n) {
    if (static_cast<int>(h.faces[n].size()) != n + 1) r.add("face count wrong at level " + std::to_string(n));
    for (int i = 0; i <= n; ++i)
      checkHom(h.faces[n][i], h.levels[n], h.levels[n - 1],
               "face d" + std::to_string(i) + " at level " + std::to_string(n));
  }
  for (int n = 0; n < L; ++n) {
    if (static_cast<int>(h.degs[n].size()) != n + 1) r.add("degeneracy count wrong at level " + std::to_string(n));
    for (int i = 0; i <= n; ++i)
      checkHom(h.degs[n][i], h.levels[n], h.levels[n + 1],
               "degeneracy s" + std::to_string(i) + " at level " + std::to_string(n));
  }
  if (!r.ok()) return r;
  auto ident = [&](int n) { return identityMap(h.levels[n]->size()); };
  // d_i d_j = d_{j-1} d_i (i<j)
  for (int n = 2; n <= L; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (composeMaps(h.face(n - 1, i), h.face(n, j)) !=
            composeMaps(h.face(n - 1, j - 1), h.face(n, i)))
          r.add("d" + std::to_string(i) + " d" + std::to_string(j) + " != d" +
                std::to_string(j - 1) + " d" + std::to_string(i) + " at level " + std::to_string(n));
  // s_i s_j = s_{j+1} s_i (i<=j)
  for (int n = 0; n + 2 <= L; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (composeMaps(h.deg(n + 1, i), h.deg(n, j)) !=
            composeMaps(h.deg(n + 1, j + 1), h.deg(n, i)))
          r.add("s" + std::to_string(i) + " s" + std::to_string(j) + " != s" +
                std::to_string(j + 1) + " s" + std::to_string(i) + " at level " + std::to_string(n));
  // d_i s_j relations
  for (int n = 0; n < L; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        IdxVec lhs = composeMaps(h.face(n + 1, i), h.deg(n, j));
        IdxVec rhs;
        if (i < j)
          rhs = n >= 1 ? composeMaps(h.deg(n - 1, j - 1), h.face(n, i)) : IdxVec{};
        else if (i == j || i == j + 1)
          rhs = ident(n);
        else
          rhs = n >= 1 ? composeMaps(h.deg(n - 1, j), h.face(n, i - 1)) : IdxVec{};
        if (!rhs.empty() && lhs != rhs)
          r.add("d" + std::to_string(i) + " s" + std::to_string(j) + " identity fails at level " +
                std::to_string(n));
      }
  return r;
}

inline TruncSimpGroup makeSimp(int trunc, std::vector<GroupPtr> levels,
                               std::vector<std::vector<IdxVec>> faces,
                               std::vector<std::vector<IdxVec>> degs) {
  TruncSimpGroup h{trunc, std::move(levels), std::move(faces), std::move(degs)};
  ValidationReport r = validateSimp(h);
  if (!r.ok()) fail(Err::NotSimplicial, r.joined());
  return h;
}

inline TruncSimpGroup constantSimpGroup(GroupPtr g, int L) {
  TruncSimpGroup h;
  h.trunc = L;
  h.levels.assign(L + 1, g);
  IdxVec id = identityMap(g->size());
  h.faces.resize(L + 1);
  h.degs.resize(L + 1);
  for (int n = 1; n <= L; ++n) h.faces[n].assign(n + 1, id);
  for (int n = 0; n < L; ++n) h.degs[n].assign(n + 1, id);
  return h;
}

inline TruncSimpGroup truncate(const TruncSimpGroup& h, int L) {
  if (L > h.trunc) fail(Err::TruncationTooShallow, "cannot extend a truncation");
  TruncSimpGroup out;
  out.trunc = L;
  out.levels.assign(h.levels.begin(), h.levels.begin() + L + 1);
  out.faces.assign(h.faces.begin(), h.faces.begin() + L + 1);
  out.degs.assign(h.degs.begin(), h.degs.begin() + L);
  out.degs.resize(L + 1);
  return out;
}

inline TruncSimpGroup productSimp(const TruncSimpGroup& a, const TruncSimpGroup& b,
                                  const Caps& caps = {}) {
  if (a.trunc != b.trunc) fail(Err::InvalidInput, "product of different truncations");
  TruncSimpGroup out;
  out.trunc = a.trunc;
  std::vector<std::vector<std::array<Idx, 2>>> pairs(a.trunc + 1);
  for (int n = 0; n <= a.trunc; ++n) {
    GroupPtr triv = grp::makeGroup({"e"}, {0}, 0);
    auto fp = grp::fiberProduct(GroupHom{a.levels[n], triv, IdxVec(a.levels[n]->size(), 0)},
                                GroupHom{b.levels[n], triv, IdxVec(b.levels[n]->size(), 0)}, caps);
    out.levels.push_back(fp.group);
    pairs[n] = fp.pairs;
  }
  auto paired = [&](int n, const IdxVec& fa, const IdxVec& fb, int m) {
    // map on pairs level n -> level m, componentwise
    IdxVec out_map(pairs[n].size());
    const std::size_t nb = b.levels[m]->size();
    std::vector<Idx> lookup(a.levels[m]->size() * nb);
    for (Idx i = 0; i < pairs[m].size(); ++i)
      lookup[pairs[m][i][0] * nb + pairs[m][i][1]] = i;
    for (Idx i = 0; i < pairs[n].size(); ++i)
      out_map[i] = lookup[fa[pairs[n][i][0]] * nb + fb[pairs[n][i][1]]];
    return out_map;
  };
  out.faces.resize(a.trunc + 1);
  out.degs.resize(a.trunc + 1);
  for (int n = 1; n <= a.trunc; ++n)
    for (int i = 0; i <= n; ++i)
      out.faces[n].push_back(paired(n, a.faces[n][i], b.faces[n][i], n - 1));
  for (int n = 0; n < a.trunc; ++n)
    for (int i = 0; i <= n; ++i)
      out.degs[n].push_back(paired(n, a.degs[n][i], b.degs[n][i], n + 1));
  return out;
}

// ---------------------------------------------------------------------------
// Moore complex and homotopy groups

struct MooreComplex {
  std::vector<Subgroup> terms;      // N_n, subgroup of level n
  std::vector<GroupHom> boundaries; // boundaries[n]: level n -> level n-1 (d_0), n >= 1
};

inline MooreComplex mooreComplexOf(const TruncSimpGroup& h) {
  MooreComplex mc;
  mc.terms.push_back(grp::fullSubgroup(h.levels[0]));
  mc.boundaries.emplace_back();  // unused slot 0
  for (int n = 1; n <= h.trunc; ++n) {
    Subgroup nn = grp::fullSubgroup(h.levels[n]);
    for (int i = 1; i <= n; ++i)
      nn = grp::intersect(nn, grp::kernelOf(h.faceHom(n, i)));
    mc.terms.push_back(nn);
    mc.boundaries.push_back(h.faceHom(n, 0));
  }
  // d d = 1 on Moore terms, and im(d) normal in the next kernel down
  for (int n = 2; n <= h.trunc; ++n)
    for (Idx x : mc.terms[n].members) {
      Idx y = mc.boundaries[n].map[x];
      if (mc.boundaries[n - 1].map[y] != h.levels[n - 2]->identity)
        fail(Err::Internal, "Moore boundary does not square to the identity");
    }
  return mc;
}

// pi_n = ker(d_0 | N_n) / d_0(N_{n+1}); for n=0 this is level0 / d_0(N_1).
inline GroupPtr mooreHomotopy(const TruncSimpGroup& h, int n) {
  if (n < 0 || n + 1 > h.trunc)
    fail(Err::TruncationTooShallow,
         "homotopy in dimension " + std::to_string(n) + " needs truncation level >= " +
             std::to_string(n + 1));
  MooreComplex mc = mooreComplexOf(h);
  Subgroup cycles = n == 0 ? mc.terms[0]
                           : grp::intersect(mc.terms[n], grp::kernelOf(mc.boundaries[n]));
  Subgroup bdry = grp::imageOfSubgroup(mc.boundaries[n + 1], mc.terms[n + 1]);
  if (!std::includes(cycles.members.begin(), cycles.members.end(), bdry.members.begin(),
                     bdry.members.end()))
    fail(Err::Internal, "Moore boundaries are not cycles");
  return grp::subquotient(cycles, bdry).group;
}

// ---------------------------------------------------------------------------
// Levelwise maps of simplicial groups

struct SimpMap {
  TruncSimpGroup source;
  TruncSimpGroup target;
  std::vector<IdxVec> maps;  // one per level 0..min trunc

  int trunc() const { return static_cast<int>(maps.size()) - 1; }
};

inline ValidationReport validateSimpMap(const SimpMap& f) {
  ValidationReport r;
  const int L = std::min(f.source.trunc, f.target.trunc);
  if (f.trunc() != L) {
    r.add("map level count does not match the common truncation");
    return r;
  }
  for (int n = 0; n <= L; ++n) {
    GroupHom fn{f.source.levels[n], f.target.levels[n], f.maps[n]};
    if (f.maps[n].size() != f.source.levels[n]->size() || !grp::homLawHolds(fn))
      r.add("level " + std::to_string(n) + " map is not a homomorphism");
  }
  if (!r.ok()) return r;
  for (int n = 1; n <= L; ++n)
    for (int i = 0; i <= n; ++i)
      if (composeMaps(f.target.faces[n][i], f.maps[n]) !=
          composeMaps(f.maps[n - 1], f.source.faces[n][i]))
        r.add("map does not commute with face d" + std::to_string(i) + " at level " +
              std::to_string(n));
  for (int n = 0; n < L; ++n)
    for (int i = 0; i <= n; ++i)
      if (composeMaps(f.target.degs[n][i], f.maps[n]) !=
          composeMaps(f.maps[n + 1], f.source.degs[n][i]))
        r.add("map does not commute with degeneracy s" + std::to_string(i) + " at level " +
              std::to_string(n));
  return r;
}

// The homomorphism pi_n(f) between canonical Moore homotopy groups.
struct InducedMooreMap {
  GroupPtr source;
  GroupPtr target;
  IdxVec map;
  bool iso = false;
};

inline InducedMooreMap inducedOnMoore(const SimpMap& f, int n) {
  const TruncSimpGroup& X = f.source;
  const TruncSimpGroup& Y = f.target;
  auto cyclesAndBdry = [n](const TruncSimpGroup& h) {
    MooreComplex mc = mooreComplexOf(h);
    Subgroup cycles = n == 0 ? mc.terms[0]
                             : grp::intersect(mc.terms[n], grp::kernelOf(mc.boundaries[n]));
    Subgroup bdry = grp::imageOfSubgroup(mc.boundaries[n + 1], mc.terms[n + 1]);
    return std::make_pair(cycles, bdry);
  };
  auto [zx, bx] = cyclesAndBdry(X);
  auto [zy, by] = cyclesAndBdry(Y);
  grp::Subquotient qx = grp::subquotient(zx, bx);
  grp::Subquotient qy = grp::subquotient(zy, by);
  InducedMooreMap out;
  out.source = qx.group;
  out.target = qy.group;
  out.map.resize(qx.group->size());
  for (Idx c = 0; c < qx.group->size(); ++c) {
    Idx rep = qx.representative[c];
    Idx img = f.maps[n][rep];
    if (!zy.contains(img)) fail(Err::Internal, "induced map does not preserve cycles");
    out.map[c] = qy.coset_of_parent[img];
  }
  GroupHom asHom{out.source, out.target, out.map};
  if (!grp::homLawHolds(asHom)) fail(Err::Internal, "induced map on homotopy is not a hom");
  out.iso = grp::isIsoHom(asHom);
  return out;
}

// True iff the induced maps on Moore homotopy are isomorphisms in dimensions
// 0..L-1, where L is the common truncation level.
inline bool isWeakEquivalenceSimp(const SimpMap& f) {
  ValidationReport r = validateSimpMap(f);
  if (!r.ok()) fail(Err::NotSimplicial, r.joined());
  const int L = std::min(f.source.trunc, f.target.trunc);
  for (int n = 0; n < L; ++n)
    if (!inducedOnMoore(f, n).iso) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Spine (Segal) maps of a simplicial group

// Composite face map extracting the edge (k-1,k) from an n-simplex, 1<=k<=n.
inline IdxVec edgeMap(const TruncSimpGroup& h, int n, int k) {
  IdxVec m = identityMap(h.levels[n]->size());
  for (int l = n; l > k; --l) m = composeMaps(h.face(l, l), m);
  for (int l = k; l > 1; --l) m = composeMaps(h.face(l, 0), m);
  return m;
}

struct SegalMapSimp {
  grp::TupleGroup target;  // n-fold fiber product of level 1 over level 0
  GroupHom map;            // level n -> target
  bool iso = false;
};

// The Segal map at level n >= 2: x |-> (edge_1 x, ..., edge_n x), landing in
// tuples with face0(u_k) = face1(u_{k+1}).
inline SegalMapSimp segalMapSimp(const TruncSimpGroup& h, int n, const Caps& caps = {}) {
  if (n < 2 || n > h.trunc) fail(Err::InvalidInput, "Segal index out of range");
  const IdxVec& tgt = h.face(1, 0);
  const IdxVec& src = h.face(1, 1);
  const std::size_t n1 = h.levels[1]->size();
  std::vector<IdxVec> tuples;
  tuples.push_back({});
  for (int k = 0; k < n; ++k) {
    std::vector<IdxVec> next;
    if (tuples.size() * n1 > caps.max_scan)
      fail(Err::SizeCapExceeded, "Segal target enumeration exceeds scan cap");
    for (const IdxVec& t : tuples)
      for (Idx u = 0; u < n1; ++u) {
        if (!t.empty() && tgt[t.back()] != src[u]) continue;
        IdxVec e = t;
        e.push_back(u);
        next.push_back(std::move(e));
      }
    tuples = std::move(next);
  }
  SegalMapSimp out{grp::buildTupleGroup(h.levels[1], std::move(tuples), caps), GroupHom{}, false};
  std::vector<IdxVec> edges(n + 1);
  for (int k = 1; k <= n; ++k) edges[k] = edgeMap(h, n, k);
  IdxVec m(h.levels[n]->size());
  IdxVec t(n);
  for (Idx x = 0; x < m.size(); ++x) {
    for (int k = 1; k <= n; ++k) t[k - 1] = edges[k][x];
    m[x] = out.target.indexOf(t);
  }
  out.map = GroupHom{h.levels[n], out.target.group, std::move(m)};
  out.iso = grp::isIsoHom(out.map);
  return out;
}

// ---------------------------------------------------------------------------
// Bisimplicial groups

struct TruncBisimpGroup {
  int trunc = 0;
  std::vector<std::vector<GroupPtr>> levels;  // [p][q]
  // hfaces[p][q][i]: (p,q) -> (p-1,q), p>=1, 0<=i<=p; similarly the rest.
  std::vector<std::vector<std::vector<IdxVec>>> hfaces, vfaces, hdegs, vdegs;

  GroupPtr level(int p, int q) const { return levels[p][q]; }
};

// Row p as a simplicial group in the second index.
inline TruncSimpGroup rowOf(const TruncBisimpGroup& b, int p) {
  TruncSimpGroup h;
  h.trunc = b.trunc;
  h.levels = b.levels[p];
  h.faces.resize(b.trunc + 1);
  h.degs.resize(b.trunc + 1);
  for (int q = 1; q <= b.trunc; ++q) h.faces[q] = b.vfaces[p][q];
  for (int q = 0; q < b.trunc; ++q) h.degs[q] = b.vdegs[p][q];
  return h;
}

inline TruncBisimpGroup transposeBisimp(const TruncBisimpGroup& b) {
  TruncBisimpGroup t;
  t.trunc = b.trunc;
  const int L = b.trunc;
  auto resize3 = [&](auto& v) {
    v.resize(L + 1);
    for (auto& row : v) row.resize(L + 1);
  };
  t.levels.resize(L + 1);
  for (auto& row : t.levels) row.resize(L + 1);
  resize3(t.hfaces);
  resize3(t.vfaces);
  resize3(t.hdegs);
  resize3(t.vdegs);
  for (int p = 0; p <= L; ++p)
    for (int q = 0; q <= L; ++q) {
      t.levels[p][q] = b.levels[q][p];
      t.hfaces[p][q] = b.vfaces[q][p];
      t.vfaces[p][q] = b.hfaces[q][p];
      t.hdegs[p][q] = b.vdegs[q][p];
      t.vdegs[p][q] = b.hdegs[q][p];
    }
  return t;
}

inline ValidationReport validateBisimp(const TruncBisimpGroup& b) {
  ValidationReport r;
  const int L = b.trunc;
  for (int p = 0; p <= L; ++p) {
    ValidationReport rowR = validateSimp(rowOf(b, p));
    for (const auto& v : rowR.violations) r.add("row " + std::to_string(p) + ": " + v);
  }
  TruncBisimpGroup t = transposeBisimp(b);
  for (int q = 0; q <= L; ++q) {
    ValidationReport colR = validateSimp(rowOf(t, q));
    for (const auto& v : colR.violations) r.add("column " + std::to_string(q) + ": " + v);
  }
  if (!r.ok()) return r;
  // horizontal and vertical operators commute
  for (int p = 0; p <= L; ++p)
    for (int q = 0; q <= L; ++q) {
      if (p >= 1 && q >= 1)
        for (int i = 0; i <= p; ++i)
          for (int j = 0; j <= q; ++j)
            if (composeMaps(b.vfaces[p - 1][q][j], b.hfaces[p][q][i]) !=
                composeMaps(b.hfaces[p][q - 1][i], b.vfaces[p][q][j]))
              r.add("h-face/v-face do not commute at (" + std::to_string(p) + "," +
                    std::to_string(q) + ")");
      if (p >= 1 && q < L)
        for (int i = 0; i <= p; ++i)
          for (int j = 0; j <= q; ++j)
            if (composeMaps(b.vdegs[p - 1][q][j], b.hfaces[p][q][i]) !=
                composeMaps(b.hfaces[p][q + 1][i], b.vdegs[p][q][j]))
              r.add("h-face/v-degeneracy do not commute at (" + std::to_string(p) + "," +
                    std::to_string(q) + ")");
      if (p < L && q >= 1)
        for (int i = 0; i <= p; ++i)
          for (int j = 0; j <= q; ++j)
            if (composeMaps(b.vfaces[p + 1][q][j], b.hdegs[p][q][i]) !=
                composeMaps(b.hdegs[p][q - 1][i], b.vfaces[p][q][j]))
              r.add("h-degeneracy/v-face do not commute at (" + std::to_string(p) + "," +
                    std::to_string(q) + ")");
      if (p < L && q < L)
        for (int i = 0; i <= p; ++i)
          for (int j = 0; j <= q; ++j)
            if (composeMaps(b.vdegs[p + 1][q][j], b.hdegs[p][q][i]) !=
                composeMaps(b.hdegs[p][q + 1][i], b.vdegs[p][q][j]))
              r.add("h-degeneracy/v-degeneracy do not commute at (" + std::to_string(p) + "," +
                    std::to_string(q) + ")");
    }
  return r;
}

// level n = b(n,n); operators are composites of one horizontal and one
// vertical operator with the same index.
inline TruncSimpGroup diagonalOf(const TruncBisimpGroup& b) {
  TruncSimpGroup h;
  h.trunc = b.trunc;
  for (int n = 0; n <= b.trunc; ++n) h.levels.push_back(b.levels[n][n]);
  h.faces.resize(b.trunc + 1);
  h.degs.resize(b.trunc + 1);
  for (int n = 1; n <= b.trunc; ++n)
    for (int i = 0; i <= n; ++i) {
      IdxVec hv = composeMaps(b.vfaces[n - 1][n][i], b.hfaces[n][n][i]);
      IdxVec vh = composeMaps(b.hfaces[n][n - 1][i], b.vfaces[n][n][i]);
      if (hv != vh) fail(Err::Internal, "diagonal faces do not commute");
      h.faces[n].push_back(std::move(hv));
    }
  for (int n = 0; n < b.trunc; ++n)
    for (int i = 0; i <= n; ++i) {
      IdxVec hv = composeMaps(b.vdegs[n + 1][n][i], b.hdegs[n][n][i]);
      IdxVec vh = composeMaps(b.hdegs[n][n + 1][i], b.vdegs[n][n][i]);
      if (hv != vh) fail(Err::Internal, "diagonal degeneracies do not commute");
      h.degs[n].push_back(std::move(hv));
    }
  ValidationReport r = validateSimp(h);
  if (!r.ok()) fail(Err::Internal, "diagonal is not simplicial: " + r.joined());
  return h;
}

}  // namespace t3::sgrp
