#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tormap/lattice.hpp"
#include "tormap/mat2.hpp"
#include "tormap/tiling.hpp"

namespace tormap::torusmap {

struct singular_lattice : std::domain_error {
  singular_lattice() : std::domain_error("quotient lattice is singular") {}
};

// Finite toroidal map: quotient of a periodic tiling by a finite-index
// integer lattice (or a combinatorial derivative such as the dual).
struct ToroidalMap {
  tilings::TilingType tiling{};
  Mat2 lattice;
  bool from_dual = false;  // true when built as the combinatorial dual

  struct Vertex {
    int cell = 0;   // cell-vertex id in the source tiling
    Vec2 residue;   // representative of the class in Z^2 / lattice
  };
  struct Edge {
    int v1 = 0, v2 = 0;
    int cell = 0;
    Vec2 residue;
  };
  struct WalkStep {
    int edge = 0;
    int dir = 0;  // 0: traversed v1 -> v2, 1: reversed
  };

  std::vector<Vertex> vertices;  // provenance; empty for derived maps
  std::vector<Edge> edges;
  std::vector<std::vector<WalkStep>> faces;
  bool polyhedral = false;

  long long num_vertices() const { return (long long)vertices.size(); }
  long long num_edges() const { return (long long)edges.size(); }
  long long num_faces() const { return (long long)faces.size(); }
};

// Residue system of Z^2 modulo the column lattice of k, indexed through the
// Hermite form [[a,0],[b,d]]: representatives (x, y), 0 <= x < a, 0 <= y < d.
struct ResidueBox {
  lattice::HermiteForm h;

  explicit ResidueBox(const Mat2& k) : h(lattice::hnf(k).form) {}

  long long size() const { return h.index(); }

  Vec2 reduce(Vec2 v) const {
    long long m = v.x / h.a;
    if (v.x % h.a < 0) --m;
    long long x = v.x - m * h.a;
    long long y = (v.y - m * h.b) % h.d;
    if (y < 0) y += h.d;
    return {x, y};
  }

  long long index_of(Vec2 v) const {
    Vec2 r = reduce(v);
    return r.x * h.d + r.y;
  }

  Vec2 representative(long long idx) const { return {idx / h.d, idx % h.d}; }
};

bool validate_polyhedral(const ToroidalMap& m);

// The quotient complex tiling / k.  Cells are (cell id, residue) pairs with
// deterministic numbering: id = cell * |det k| + residue index.
inline ToroidalMap quotient(const tilings::PeriodicTiling& t, const Mat2& k) {
  if (k.det() == 0) throw singular_lattice();
  ResidueBox box(k);
  long long n = box.size();

  ToroidalMap m;
  m.tiling = t.type;
  m.lattice = k;

  m.vertices.reserve(t.cell_vertices.size() * n);
  for (const auto& cv : t.cell_vertices)
    for (long long r = 0; r < n; ++r)
      m.vertices.push_back({cv.id, box.representative(r)});

  m.edges.reserve(t.cell_edges.size() * n);
  for (std::size_t e = 0; e < t.cell_edges.size(); ++e) {
    const auto& ce = t.cell_edges[e];
    for (long long r = 0; r < n; ++r) {
      Vec2 rep = box.representative(r);
      long long v1 = ce.v1 * n + r;
      long long v2 = ce.v2 * n + box.index_of(rep + ce.shift);
      m.edges.push_back({(int)v1, (int)v2, (int)e, rep});
    }
  }

  m.faces.reserve(t.cell_faces.size() * n);
  for (const auto& walk : t.cell_faces) {
    for (long long r = 0; r < n; ++r) {
      Vec2 rep = box.representative(r);
      std::vector<ToroidalMap::WalkStep> w;
      w.reserve(walk.size());
      for (const auto& slot : walk) {
        long long e = slot.edge * n + box.index_of(rep + slot.shift);
        w.push_back({(int)e, slot.dir});
      }
      m.faces.push_back(std::move(w));
    }
  }

  m.polyhedral = validate_polyhedral(m);
  return m;
}

inline ToroidalMap quotient(tilings::TilingType t, const Mat2& k) {
  return quotient(tilings::build_tiling(t), k);
}

// The cyclic vertex walk of a face: the start vertex of each step.
inline std::vector<int> face_vertices(const ToroidalMap& m,
                                      const std::vector<ToroidalMap::WalkStep>& walk) {
  std::vector<int> vs;
  vs.reserve(walk.size());
  for (const auto& s : walk) {
    const auto& e = m.edges[s.edge];
    vs.push_back(s.dir == 0 ? e.v1 : e.v2);
  }
  return vs;
}

// Polyhedral maps: no loops, no multi-edges, simple face boundaries, and any
// two distinct faces meet in the empty set, one vertex, or one edge.
inline bool validate_polyhedral(const ToroidalMap& m) {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : m.edges) {
    if (e.v1 == e.v2) return false;
    auto key = std::minmax(e.v1, e.v2);
    if (!seen.insert(key).second) return false;
  }

  std::vector<std::vector<int>> fverts, fedges;
  for (const auto& walk : m.faces) {
    std::vector<int> vs = face_vertices(m, walk);
    std::vector<int> sorted_vs = vs;
    std::sort(sorted_vs.begin(), sorted_vs.end());
    if (std::adjacent_find(sorted_vs.begin(), sorted_vs.end()) !=
        sorted_vs.end())
      return false;  // face boundary revisits a vertex
    std::vector<int> es;
    for (const auto& s : walk) es.push_back(s.edge);
    std::sort(es.begin(), es.end());
    fverts.push_back(std::move(sorted_vs));
    fedges.push_back(std::move(es));
  }

  auto count_common = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j])
        ++i;
      else if (b[j] < a[i])
        ++j;
      else
        ++c, ++i, ++j;
    }
    return c;
  };

  for (std::size_t i = 0; i < m.faces.size(); ++i) {
    for (std::size_t j = i + 1; j < m.faces.size(); ++j) {
      std::size_t se = count_common(fedges[i], fedges[j]);
      std::size_t sv = count_common(fverts[i], fverts[j]);
      bool ok = (se == 0 && sv <= 1) || (se == 1 && sv == 2);
      if (!ok) return false;
    }
  }
  return true;
}

struct disconnected : std::domain_error {
  disconnected() : std::domain_error("flag system is not connected") {}
};

// Flags are (edge, end, side) triples, id = 4*edge + 2*end + side, so that
// |flags| = 4E.  s0 flips the end (vertex), s2 flips the side (face), s1
// walks to the adjacent corner of the same face.
struct FlagSystem {
  int n = 0;
  std::vector<int> s0, s1, s2;
  std::vector<int> vertex_of, edge_of, face_of;
};

inline FlagSystem flag_system(const ToroidalMap& m) {
  int ne = (int)m.edges.size();
  FlagSystem fs;
  fs.n = 4 * ne;
  fs.s0.resize(fs.n);
  fs.s1.assign(fs.n, -1);
  fs.s2.resize(fs.n);
  fs.vertex_of.resize(fs.n);
  fs.edge_of.resize(fs.n);
  fs.face_of.assign(fs.n, -1);

  auto flag = [](int e, int end, int side) { return 4 * e + 2 * end + side; };

  // Each edge appears in exactly two face slots; they define its two sides.
  std::vector<std::array<std::pair<int, int>, 2>> slots(ne);  // (face, pos)
  std::vector<int> nslots(ne, 0);
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    const auto& walk = m.faces[f];
    for (std::size_t p = 0; p < walk.size(); ++p) {
      int e = walk[p].edge;
      if (nslots[e] >= 2)
        throw std::logic_error("edge used more than twice in face walks");
      slots[e][nslots[e]++] = {(int)f, (int)p};
    }
  }
  for (int e = 0; e < ne; ++e)
    if (nslots[e] != 2)
      throw std::logic_error("edge not used exactly twice in face walks");

  auto side_of_slot = [&](int e, int f, int p) {
    return (slots[e][0] == std::pair{f, p}) ? 0 : 1;
  };

  for (int e = 0; e < ne; ++e) {
    for (int end = 0; end < 2; ++end) {
      for (int side = 0; side < 2; ++side) {
        int id = flag(e, end, side);
        fs.s0[id] = flag(e, 1 - end, side);
        fs.s2[id] = flag(e, end, 1 - side);
        fs.vertex_of[id] = end == 0 ? m.edges[e].v1 : m.edges[e].v2;
        fs.edge_of[id] = e;
        fs.face_of[id] = slots[e][side].first;
      }
    }
  }

  // s1: within each face walk, consecutive steps meet at a corner; the flag
  // at the head of step p pairs with the flag at the tail of step p+1.
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    const auto& walk = m.faces[f];
    int len = (int)walk.size();
    for (int p = 0; p < len; ++p) {
      const auto& cur = walk[p];
      const auto& nxt = walk[(p + 1) % len];
      int head = flag(cur.edge, 1 - cur.dir,
                      side_of_slot(cur.edge, (int)f, p));
      int tail = flag(nxt.edge, nxt.dir,
                      side_of_slot(nxt.edge, (int)f, (p + 1) % len));
      fs.s1[head] = tail;
      fs.s1[tail] = head;
    }
  }
  for (int i = 0; i < fs.n; ++i)
    if (fs.s1[i] < 0 || fs.s1[i] == i)
      throw std::logic_error("face walks do not close into an involution");

  // Connectivity of <s0, s1, s2>.
  std::vector<char> vis(fs.n, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int cnt = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++cnt;
    for (int y : {fs.s0[x], fs.s1[x], fs.s2[x]}) {
      if (!vis[y]) {
        vis[y] = 1;
        stack.push_back(y);
      }
    }
  }
  if (cnt != fs.n) throw disconnected();
  return fs;
}

namespace detail {
// Label the orbits of the permutations in `gens` by least flag id.
inline std::vector<int> orbit_labels(int n,
                                     const std::vector<const std::vector<int>*>& gens,
                                     int* count = nullptr) {
  std::vector<int> label(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    std::vector<int> stack{i};
    label[i] = next;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto* g : gens) {
        int y = (*g)[x];
        if (label[y] < 0) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}
}  // namespace detail

// Rebuild a map from a flag system: vertices, edges, faces are the orbits of
// <s1,s2>, <s0,s2>, <s0,s1>.  Provenance fields are inherited from `like`.
inline ToroidalMap map_from_flag_system(const FlagSystem& fs,
                                        const ToroidalMap& like) {
  int nv = 0, ne = 0, nf = 0;
  auto vlab = detail::orbit_labels(fs.n, {&fs.s1, &fs.s2}, &nv);
  auto elab = detail::orbit_labels(fs.n, {&fs.s0, &fs.s2}, &ne);
  auto flab = detail::orbit_labels(fs.n, {&fs.s0, &fs.s1}, &nf);

  ToroidalMap m;
  m.tiling = like.tiling;
  m.lattice = like.lattice;
  m.from_dual = like.from_dual;

  m.vertices.resize(nv);  // no cell/residue provenance for derived maps
  m.edges.assign(ne, {});
  std::vector<int> edge_rep(ne, -1);  // least flag of each edge orbit
  for (int i = 0; i < fs.n; ++i) {
    int e = elab[i];
    if (edge_rep[e] < 0) {
      edge_rep[e] = i;
      m.edges[e].v1 = vlab[i];
      m.edges[e].v2 = vlab[fs.s0[i]];
    }
  }

  std::vector<int> face_start(nf, -1);
  for (int i = 0; i < fs.n; ++i)
    if (face_start[flab[i]] < 0) face_start[flab[i]] = i;

  m.faces.resize(nf);
  for (int f = 0; f < nf; ++f) {
    int cur = face_start[f];
    do {
      int e = elab[cur];
      int r = edge_rep[e];
      // dir 0 iff cur sits at the v1 end: the orbit splits as
      // {r, s2 r} (end of r) vs {s0 r, s0 s2 r}.
      int dir = (cur == r || cur == fs.s2[r]) ? 0 : 1;
      m.faces[f].push_back({e, dir});
      cur = fs.s1[fs.s0[cur]];
    } while (cur != face_start[f]);
  }

  m.polyhedral = validate_polyhedral(m);
  return m;
}

// Combinatorial dual: swap the vertex- and face-changing involutions.
inline ToroidalMap dual_map(const ToroidalMap& m) {
  FlagSystem fs = flag_system(m);
  std::swap(fs.s0, fs.s2);
  std::swap(fs.vertex_of, fs.face_of);
  ToroidalMap like = m;
  if (auto d = tilings::dual_tiling(m.tiling); d && !m.from_dual) {
    like.tiling = *d;
    like.from_dual = false;
  } else {
    like.from_dual = !m.from_dual;
  }
  like.vertices.clear();
  return map_from_flag_system(fs, like);
}

// Face sizes and vertex degrees, shared by symbol and type inspection.
inline std::vector<int> vertex_degrees(const ToroidalMap& m) {
  std::vector<int> deg(m.vertices.size(), 0);
  for (const auto& e : m.edges) {
    ++deg[e.v1];
    ++deg[e.v2];
  }
  return deg;
}

// The common edge symbol (m,l;u,v), or nullopt when edges disagree.
inline std::optional<tilings::EdgeSymbol> edge_symbol_of(const ToroidalMap& m) {
  std::vector<int> deg = vertex_degrees(m);
  std::vector<std::array<int, 2>> fsz(m.edges.size(), {0, 0});
  std::vector<int> cnt(m.edges.size(), 0);
  for (const auto& walk : m.faces)
    for (const auto& s : walk) fsz[s.edge][cnt[s.edge]++ % 2] = (int)walk.size();

  std::optional<tilings::EdgeSymbol> sym;
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    auto [fm, fl] = std::minmax(fsz[e][0], fsz[e][1]);
    auto [du, dv] = std::minmax(deg[m.edges[e].v1], deg[m.edges[e].v2]);
    tilings::EdgeSymbol s{fm, fl, du, dv};
    if (!sym)
      sym = s;
    else if (*sym != s)
      return std::nullopt;
  }
  return sym;
}

// Canonical form of a cyclic face-size sequence: the lexicographically least
// rotation over both orientations, rendered as "a.b.c".
inline std::string canonical_type_string(std::vector<int> cyc) {
  auto render = [](const std::vector<int>& c, int start) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += '.';
      s += std::to_string(c[(start + i) % c.size()]);
    }
    return s;
  };
  std::string best;
  for (int refl = 0; refl < 2; ++refl) {
    for (std::size_t st = 0; st < cyc.size(); ++st) {
      std::string s = render(cyc, (int)st);
      if (best.empty() || s < best) best = s;
    }
    std::reverse(cyc.begin(), cyc.end());
  }
  return best;
}

inline std::string canonical_type_string(const std::string& dotted) {
  std::vector<int> cyc;
  std::size_t pos = 0;
  while (pos < dotted.size()) {
    std::size_t used = 0;
    cyc.push_back(std::stoi(dotted.substr(pos), &used));
    pos += used;
    if (pos < dotted.size() && dotted[pos] == '.') ++pos;
  }
  return canonical_type_string(std::move(cyc));
}

// The cyclic face-size sequence around each vertex, as a canonical string
// (lexicographically least rotation over both orientations).
inline std::vector<std::string> vertex_types(const ToroidalMap& m) {
  FlagSystem fs = flag_system(m);
  std::vector<int> fsize((std::size_t)m.faces.size());
  for (std::size_t f = 0; f < m.faces.size(); ++f)
    fsize[f] = (int)m.faces[f].size();

  std::vector<int> first_flag(m.vertices.size(), -1);
  for (int i = 0; i < fs.n; ++i)
    if (first_flag[fs.vertex_of[i]] < 0) first_flag[fs.vertex_of[i]] = i;

  std::vector<std::string> out(m.vertices.size());
  for (std::size_t v = 0; v < m.vertices.size(); ++v) {
    std::vector<int> cyc;
    int start = first_flag[v];
    int cur = start;
    do {
      cyc.push_back(fsize[fs.face_of[cur]]);
      cur = fs.s1[fs.s2[cur]];  // next face around the vertex
      if ((int)cyc.size() > fs.n)
        throw std::logic_error("vertex rotation does not close");
    } while (cur != start);
    out[v] = canonical_type_string(std::move(cyc));
  }
  return out;
}

}  // namespace tormap::torusmap
