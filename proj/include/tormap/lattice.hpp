#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "tormap/mat2.hpp"

namespace tormap::lattice {

struct singular_matrix : std::domain_error {
  singular_matrix() : std::domain_error("matrix is singular") {}
};

struct not_sublattice : std::domain_error {
  not_sublattice() : std::domain_error("columns are not contained in the base lattice") {}
};

// Lower-triangular Hermite form [[a, 0], [b, d]]: columns (a, b) and (0, d),
// with a, d > 0 and 0 <= b < d.
struct HermiteForm {
  long long a = 1;
  long long b = 0;
  long long d = 1;

  long long index() const { return a * d; }
  Mat2 matrix() const { return {a, 0, b, d}; }

  friend bool operator==(const HermiteForm&, const HermiteForm&) = default;
  friend bool operator<(const HermiteForm& h, const HermiteForm& k) {
    return std::tie(h.a, h.b, h.d) < std::tie(k.a, k.b, k.d);
  }
};

struct HnfResult {
  HermiteForm form;
  Mat2 u;  // unimodular, with input * u == form.matrix()
};

// Hermite normal form by unimodular column operations (right multiplication).
inline HnfResult hnf(Mat2 m) {
  if (m.det() == 0) throw singular_matrix();
  Mat2 u = Mat2::identity();
  auto swap_cols = [&] {
    m = m * Mat2{0, 1, 1, 0};
    u = u * Mat2{0, 1, 1, 0};
  };
  auto add_col2_to_col1 = [&](long long k) {  // col1 += k * col2
    m = m * Mat2{1, 0, k, 1};
    u = u * Mat2{1, 0, k, 1};
  };
  // Euclid on the first row until it becomes (g, 0).
  while (m.c != 0) {
    if (m.a == 0 || std::abs(m.c) < std::abs(m.a)) swap_cols();
    if (m.c == 0) break;
    long long q = m.c / m.a;
    // col2 -= q * col1
    m = m * Mat2{1, -q, 0, 1};
    u = u * Mat2{1, -q, 0, 1};
  }
  // Make the diagonal positive (negating a column is unimodular).
  if (m.a < 0) {
    m = m * Mat2{-1, 0, 0, 1};
    u = u * Mat2{-1, 0, 0, 1};
  }
  if (m.d < 0) {
    m = m * Mat2{1, 0, 0, -1};
    u = u * Mat2{1, 0, 0, -1};
  }
  // Reduce b into [0, d): col1 += k * col2 leaves the first row fixed.
  long long k = -(m.b / m.d);
  add_col2_to_col1(k);
  if (m.b < 0) add_col2_to_col1(1);
  return {HermiteForm{m.a, m.b, m.d}, u};
}

// All index-n sublattices of Z^2, one Hermite form per lattice; there are
// sigma(n) = sum of divisors of n, ordered lexicographically by (d, b).
inline std::vector<HermiteForm> sublattices_of_index(long long n) {
  if (n < 1) throw std::invalid_argument("index must be positive");
  std::vector<HermiteForm> out;
  for (long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    for (long long b = 0; b < d; ++b) out.push_back({n / d, b, d});
  }
  return out;
}

inline long long sigma(long long n) {
  long long s = 0;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

// True iff every column of l is an integer combination of the columns of k.
inline bool is_sublattice(const Mat2& l, const Mat2& k) {
  long long dk = k.det();
  if (dk == 0 || l.det() == 0) throw singular_matrix();
  // adj(k) * l must be divisible by det(k).
  Mat2 adj{k.d, -k.c, -k.b, k.a};
  Mat2 p = adj * l;
  return p.a % dk == 0 && p.b % dk == 0 && p.c % dk == 0 && p.d % dk == 0;
}

// [k : l] = |det l| / |det k| when l is a sublattice of k.
inline long long quotient_index(const Mat2& k, const Mat2& l) {
  if (!is_sublattice(l, k)) throw not_sublattice();
  return std::abs(l.det()) / std::abs(k.det());
}

// Coordinates of l's columns in the basis of k (integral when l <= k).
inline Mat2 coords_in(const Mat2& k, const Mat2& l) {
  if (!is_sublattice(l, k)) throw not_sublattice();
  long long dk = k.det();
  Mat2 adj{k.d, -k.c, -k.b, k.a};
  Mat2 p = adj * l;
  return {p.a / dk, p.c / dk, p.b / dk, p.d / dk};
}

// Lexicographically least hnf(g * m) over the point group: constant on
// orbits of the relation m1 = A * m2 * B with A in g0 and B unimodular.
inline HermiteForm canonical_under_pointgroup(const Mat2& m,
                                              const std::vector<Mat2>& g0) {
  if (m.det() == 0) throw singular_matrix();
  bool have = false;
  HermiteForm best;
  for (const Mat2& a : g0) {
    HermiteForm h = hnf(a * m).form;
    if (!have || h < best) {
      best = h;
      have = true;
    }
  }
  if (!have) best = hnf(m).form;
  return best;
}

// The sigma(n) Hermite representatives of n-sheeted covers; deliberately not
// merged under any point group.
inline std::vector<HermiteForm> paper_cover_classes(long long n) {
  return sublattices_of_index(n);
}

// Closure of a generating set of integer matrices under multiplication.
inline std::vector<Mat2> group_closure(std::vector<Mat2> gens) {
  std::vector<Mat2> elems{Mat2::identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const Mat2& g : gens) {
        Mat2 p = elems[i] * g;
        if (std::find(elems.begin(), elems.end(), p) == elems.end()) {
          elems.push_back(p);
          grew = true;
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

// Point groups in the translation basis, named as in the tiling tables.
inline std::vector<Mat2> named_point_group(const std::string& name) {
  if (name == "D6") return group_closure({{0, -1, 1, 1}, {-1, -1, 0, 1}});
  if (name == "D4") return group_closure({{0, 1, -1, 0}, {-1, 0, 0, 1}});
  if (name == "Z6") return group_closure({{0, -1, 1, 1}});
  if (name == "Z4") return group_closure({{0, 1, -1, 0}});
  if (name == "D2") return group_closure({{-1, 0, 0, -1}, {-1, -1, 0, 1}});
  throw std::invalid_argument("unknown point group: " + name);
}

}  // namespace tormap::lattice
