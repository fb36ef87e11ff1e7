#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "tormap/torusmap.hpp"

namespace tormap::symmetry {

using torusmap::FlagSystem;
using torusmap::ToroidalMap;

namespace detail {

// Propagate the base-flag assignment src0 -> img0 through the involutions.
// A connected flag system admits at most one equivariant extension; returns
// nullopt on the first conflict.  `src` and `dst` may be the same system.
inline std::optional<std::vector<int>> extend(const FlagSystem& src,
                                              const FlagSystem& dst, int src0,
                                              int img0) {
  if (src.n != dst.n) return std::nullopt;
  std::vector<int> perm(src.n, -1);
  std::vector<int> stack{src0};
  perm[src0] = img0;
  const std::vector<int>* sgen[3] = {&src.s0, &src.s1, &src.s2};
  const std::vector<int>* dgen[3] = {&dst.s0, &dst.s1, &dst.s2};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int g = 0; g < 3; ++g) {
      int y = (*sgen[g])[x];
      int iy = (*dgen[g])[perm[x]];
      if (perm[y] < 0) {
        perm[y] = iy;
        stack.push_back(y);
      } else if (perm[y] != iy) {
        return std::nullopt;
      }
    }
  }
  return perm;  // automatically bijective on a connected system
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

// The full automorphism group as explicit flag permutations.  Intended for
// small maps (tests, oracles); orbit computation streams instead.
inline std::vector<std::vector<int>> automorphisms(const FlagSystem& fs) {
  std::vector<std::vector<int>> out;
  for (int img = 0; img < fs.n; ++img)
    if (auto p = detail::extend(fs, fs, 0, img)) out.push_back(std::move(*p));
  return out;
}

struct OrbitReport {
  long long aut_order = 0;
  std::vector<std::vector<int>> vertex_orbits;
  std::vector<std::vector<int>> edge_orbits;
  std::vector<std::vector<int>> face_orbits;
  int edge_orbit_count = 0;
};

// Orbits of vertices/edges/faces under Aut, computed by streaming the
// successful base-flag propagations through union-find; no permutation list
// is retained, so 40000-flag maps stay well within memory.
inline OrbitReport orbit_report(const ToroidalMap& m) {
  FlagSystem fs = torusmap::flag_system(m);
  detail::UnionFind uv((int)m.vertices.size());
  detail::UnionFind ue((int)m.edges.size());
  detail::UnionFind uf((int)m.faces.size());

  OrbitReport rep;
  for (int img = 0; img < fs.n; ++img) {
    auto p = detail::extend(fs, fs, 0, img);
    if (!p) continue;
    ++rep.aut_order;
    const std::vector<int>& perm = *p;
    for (int f = 0; f < fs.n; ++f) {
      uv.unite(fs.vertex_of[f], fs.vertex_of[perm[f]]);
      ue.unite(fs.edge_of[f], fs.edge_of[perm[f]]);
      uf.unite(fs.face_of[f], fs.face_of[perm[f]]);
    }
  }

  auto collect = [](detail::UnionFind& u) {
    std::vector<std::vector<int>> orbits;
    std::vector<int> slot((int)u.parent.size(), -1);
    for (int i = 0; i < (int)u.parent.size(); ++i) {
      int r = u.find(i);
      if (slot[r] < 0) {
        slot[r] = (int)orbits.size();
        orbits.emplace_back();
      }
      orbits[slot[r]].push_back(i);
    }
    return orbits;  // parts led by their least id, in id order
  };
  rep.vertex_orbits = collect(uv);
  rep.edge_orbits = collect(ue);
  rep.face_orbits = collect(uf);
  rep.edge_orbit_count = (int)rep.edge_orbits.size();
  return rep;
}

inline int edge_orbit_count(const ToroidalMap& m) {
  return orbit_report(m).edge_orbit_count;
}

inline bool is_edge_transitive(const ToroidalMap& m) {
  return orbit_report(m).edge_orbit_count == 1;
}

inline bool flag_isomorphic(const FlagSystem& a, const FlagSystem& b) {
  if (a.n != b.n) return false;
  for (int img = 0; img < b.n; ++img)
    if (detail::extend(a, b, 0, img)) return true;
  return false;
}

inline bool map_isomorphic(const ToroidalMap& m1, const ToroidalMap& m2) {
  if (m1.num_edges() != m2.num_edges() ||
      m1.num_vertices() != m2.num_vertices() ||
      m1.num_faces() != m2.num_faces())
    return false;
  return flag_isomorphic(torusmap::flag_system(m1), torusmap::flag_system(m2));
}

}  // namespace tormap::symmetry
