#pragma once

#include <cstdio>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tormap/lattice.hpp"
#include "tormap/mat2.hpp"
#include "tormap/tiling_data.hpp"

namespace tormap::tilings {

enum class TilingType {
  t_3_6,        // 3^6
  t_4_4,        // 4^4
  t_6_3,        // 6^3
  t_3_6_3_6,    // 3.6.3.6
  t_rhombille,  // rhombille, edge symbol (4,4;3,6)
  t_3_12_2,     // 3.12^2
  t_3_4_6_4,    // 3.4.6.4
  t_4_6_12,     // 4.6.12
  t_4_8_2,      // 4.8^2
  t_3_3_4_2,    // 3^3.4^2
  t_3_2_4_3_4,  // 3^2.4.3.4
  t_3_4_6,      // 3^4.6
};

inline constexpr TilingType k_all_types[] = {
    TilingType::t_3_6,     TilingType::t_4_4,       TilingType::t_6_3,
    TilingType::t_3_6_3_6, TilingType::t_rhombille, TilingType::t_3_12_2,
    TilingType::t_3_4_6_4, TilingType::t_4_6_12,    TilingType::t_4_8_2,
    TilingType::t_3_3_4_2, TilingType::t_3_2_4_3_4, TilingType::t_3_4_6,
};

namespace detail {
// k_all_tilings in tiling_data.hpp is emitted in the same order as the enum:
// 3^6, 4^4, 6^3, 3.6.3.6, rhombille, 3.12^2, 3.4.6.4, 4.6.12, 4.8^2,
// 3^3.4^2, 3^2.4.3.4, 3^4.6.
inline const data::RawTiling& raw(TilingType t) {
  return *data::k_all_tilings[static_cast<int>(t)];
}
}  // namespace detail

inline std::string tag(TilingType t) { return detail::raw(t).tag; }

inline std::optional<TilingType> type_from_tag(std::string_view s) {
  for (TilingType t : k_all_types)
    if (s == detail::raw(t).tag) return t;
  return std::nullopt;
}

// An edge's two incident face sizes and two incident vertex valences,
// normalized so m <= l and u <= v.
struct EdgeSymbol {
  int m = 0, l = 0;  // face sizes
  int u = 0, v = 0;  // vertex valences

  friend bool operator==(const EdgeSymbol&, const EdgeSymbol&) = default;

  std::string str() const {
    return "(" + std::to_string(m) + "," + std::to_string(l) + ";" +
           std::to_string(u) + "," + std::to_string(v) + ")";
  }
};

// Exact rational coordinate component, kept in lowest terms with den > 0.
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Frac&, const Frac&) = default;
  friend Frac operator+(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Frac operator*(long long s, const Frac& f) {
    return Frac(s * f.num, f.den);
  }

  long long floor() const {
    return num >= 0 ? num / den : -((-num + den - 1) / den);
  }
};

// -x reduced into [0, 1): the action of the point rotation chi = -I on a
// fundamental-cell coordinate.
inline Frac negate_mod_one(const Frac& f) {
  long long n = (-f.num) % f.den;
  if (n < 0) n += f.den;
  return Frac(n, f.den);
}

struct CellVertex {
  int id = 0;
  Frac x, y;  // coordinates in the (basis_a, basis_b) frame, in [0, 1)
  std::string vertex_type;
};

struct CellEdge {
  int v1 = 0, v2 = 0;  // v2 lives in the cell translated by shift
  Vec2 shift;
};

// One step of an oriented face walk: edge id, direction (0 = as stored,
// 1 = reversed), and the cell shift the edge copy lives in.
struct FaceSlot {
  int edge = 0;
  int dir = 0;
  Vec2 shift;
};

struct PeriodicTiling {
  TilingType type;
  std::string tag;
  std::string vertex_type;  // empty when the tiling is not semi-equivelar
  std::vector<CellVertex> cell_vertices;
  std::vector<CellEdge> cell_edges;
  std::vector<std::vector<FaceSlot>> cell_faces;
  std::vector<Mat2> point_group;  // in the (basis_a, basis_b) frame
  std::string point_group_name;
  int plane_edge_orbit_count = 0;
  std::optional<EdgeSymbol> edge_symbol;
  std::optional<TilingType> dual;
  std::optional<std::pair<TilingType, Mat2>> assoc_equivelar;
  // Metadata only: (p + q*sqrt(basis_surd)) / den per component, when the
  // Cartesian basis has a closed form in a single quadratic field.
  int basis_surd = 0;
  data::RawBasisVec basis_ax{}, basis_ay{}, basis_bx{}, basis_by{};
};

inline PeriodicTiling build_tiling(TilingType t) {
  const data::RawTiling& r = detail::raw(t);
  PeriodicTiling p;
  p.type = t;
  p.tag = r.tag;
  p.vertex_type = r.vertex_type;
  for (int i = 0; i < r.num_vertices; ++i) {
    const data::RawVertex& v = r.vertices[i];
    p.cell_vertices.push_back({i, Frac(v.xn, v.xd), Frac(v.yn, v.yd), v.type});
  }
  for (int i = 0; i < r.num_edges; ++i) {
    const data::RawEdge& e = r.edges[i];
    p.cell_edges.push_back({e.v1, e.v2, Vec2{e.sx, e.sy}});
  }
  const data::RawSlot* slot = r.face_slots;
  for (int f = 0; f < r.num_faces; ++f) {
    std::vector<FaceSlot> walk;
    for (int j = 0; j < r.face_sizes[f]; ++j, ++slot)
      walk.push_back({slot->edge, slot->dir, Vec2{slot->sx, slot->sy}});
    p.cell_faces.push_back(std::move(walk));
  }
  p.point_group_name = r.point_group;
  p.point_group = lattice::named_point_group(r.point_group);
  p.plane_edge_orbit_count = r.plane_edge_orbits;
  if (r.edge_symbol[0] != '\0') {
    EdgeSymbol s;
    std::sscanf(r.edge_symbol, "%d,%d,%d,%d", &s.m, &s.l, &s.u, &s.v);
    p.edge_symbol = s;
  }
  if (r.dual_tag[0] != '\0') p.dual = *type_from_tag(r.dual_tag);
  if (r.assoc_tag[0] != '\0')
    p.assoc_equivelar = {*type_from_tag(r.assoc_tag), Mat2::identity()};
  p.basis_surd = r.basis_surd;
  p.basis_ax = r.ax;
  p.basis_ay = r.ay;
  p.basis_bx = r.bx;
  p.basis_by = r.by;
  return p;
}

// Orbit count of the plane tiling's edges under the group generated by the
// lattice translations and the given integer point matrices, computed
// exactly on the fundamental cell through the rational coordinates.
inline int plane_edge_orbits_under(const PeriodicTiling& t,
                                   const std::vector<Mat2>& mats) {
  struct Pt {
    Frac x, y;
    Vec2 off;
  };
  auto coord = [&](int v) -> std::pair<Frac, Frac> {
    return {t.cell_vertices[v].x, t.cell_vertices[v].y};
  };
  auto apply = [&](const Mat2& m, Frac x, Frac y, Vec2 off) -> Pt {
    Frac qx = (m.a * x + m.c * y) + Frac(m.a * off.x + m.c * off.y, 1);
    Frac qy = (m.b * x + m.d * y) + Frac(m.b * off.x + m.d * off.y, 1);
    long long fx = qx.floor(), fy = qy.floor();
    return {qx - Frac(fx, 1), qy - Frac(fy, 1), {fx, fy}};
  };
  auto vertex_at = [&](const Frac& x, const Frac& y) -> int {
    for (const auto& v : t.cell_vertices)
      if (v.x == x && v.y == y) return v.id;
    throw std::logic_error("point matrix is not a symmetry of " + t.tag);
  };

  std::vector<int> parent(t.cell_edges.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = (int)i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t e = 0; e < t.cell_edges.size(); ++e) {
    const auto& ce = t.cell_edges[e];
    auto [x1, y1] = coord(ce.v1);
    auto [x2, y2] = coord(ce.v2);
    for (const Mat2& m : mats) {
      Pt p1 = apply(m, x1, y1, {0, 0});
      Pt p2 = apply(m, x2, y2, ce.shift);
      int w1 = vertex_at(p1.x, p1.y);
      int w2 = vertex_at(p2.x, p2.y);
      Vec2 s = p2.off - p1.off;
      int image = -1;
      for (std::size_t f = 0; f < t.cell_edges.size(); ++f) {
        const auto& cf = t.cell_edges[f];
        if ((cf.v1 == w1 && cf.v2 == w2 && cf.shift == s) ||
            (cf.v1 == w2 && cf.v2 == w1 && cf.shift == Vec2{-s.x, -s.y})) {
          image = (int)f;
          break;
        }
      }
      if (image < 0)
        throw std::logic_error("edge image not found in " + t.tag);
      int a = find((int)e), b = find(image);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::set<int> roots;
  for (std::size_t e = 0; e < parent.size(); ++e) roots.insert(find((int)e));
  return (int)roots.size();
}

inline bool is_edge_homogeneous(TilingType t) {
  return detail::raw(t).edge_symbol[0] != '\0';
}

// Duality is defined (and used) only on the five edge-homogeneous tilings.
inline std::optional<TilingType> dual_tiling(TilingType t) {
  const data::RawTiling& r = detail::raw(t);
  if (r.dual_tag[0] == '\0') return std::nullopt;
  return type_from_tag(r.dual_tag);
}

// The equivelar tiling underlying a semi-equivelar one, together with the
// basis-change matrix; all twelve bases were chosen so the translation
// lattices coincide, making the matrix the identity.
inline std::optional<std::pair<TilingType, Mat2>> associated_equivelar(
    TilingType t) {
  const data::RawTiling& r = detail::raw(t);
  if (r.assoc_tag[0] == '\0') return std::nullopt;
  return std::pair{*type_from_tag(r.assoc_tag), Mat2::identity()};
}

}  // namespace tormap::tilings
