#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "tormap/lattice.hpp"
#include "tormap/symmetry.hpp"
#include "tormap/torusmap.hpp"

namespace tormap::covers {

using torusmap::ToroidalMap;

struct CoverDescriptor {
  Mat2 base_lattice;             // K, in the tiling basis
  Mat2 cover_lattice;            // L <= K, in the tiling basis
  long long sheets = 1;          // [K : L] = |det L| / |det K|
  lattice::HermiteForm hnf_in_K; // L in the (gamma, delta) basis of K
};

inline CoverDescriptor make_descriptor(const Mat2& k,
                                       const lattice::HermiteForm& h) {
  CoverDescriptor d;
  d.base_lattice = k;
  d.cover_lattice = k * h.matrix();
  d.sheets = h.index();
  d.hnf_in_K = h;
  return d;
}

// All n-sheeted covers of X: one per index-n sublattice of K, so exactly
// sigma(n) descriptors, in (a, b, d)-lexicographic Hermite order.
inline std::vector<CoverDescriptor> covers_of(const ToroidalMap& x,
                                              long long n) {
  std::vector<lattice::HermiteForm> forms = lattice::sublattices_of_index(n);
  std::sort(forms.begin(), forms.end());
  std::vector<CoverDescriptor> out;
  out.reserve(forms.size());
  for (const auto& h : forms) out.push_back(make_descriptor(x.lattice, h));
  return out;
}

// The n-sheeted cover by L_n = <gamma^n, delta>.
inline CoverDescriptor stretch_cover(const ToroidalMap& x, long long n) {
  return make_descriptor(x.lattice, lattice::HermiteForm{n, 0, 1});
}

// The symmetric cover L = <gamma^m, delta^m> = m * K with m = |det K|.
// Every point-group image of L lands inside K (A(mK) <= m Z^2 <= K), so the
// construction always yields a genuine cover; note that L itself has the
// same point-group stabilizer as K, so the cover's orbit count matches the
// base's (see report.hpp for the discussion of the stated orbit reduction).
inline CoverDescriptor symmetric_cover(const ToroidalMap& x) {
  long long m = std::abs(x.lattice.det());
  return make_descriptor(x.lattice, lattice::HermiteForm{m, 0, m});
}

inline ToroidalMap realize(const ToroidalMap& x, const CoverDescriptor& d) {
  return torusmap::quotient(x.tiling, d.cover_lattice);
}

// Vertex projection of the covering realize(d) -> x by residue reduction;
// out[cover vertex] = base vertex.
inline std::vector<int> covering_projection(const ToroidalMap& base,
                                            const ToroidalMap& cover) {
  torusmap::ResidueBox box(base.lattice);
  long long n = box.size();
  std::vector<int> out;
  out.reserve(cover.vertices.size());
  for (const auto& v : cover.vertices)
    out.push_back((int)(v.cell * n + box.index_of(v.residue)));
  return out;
}

// Least-sheet cover with exactly k edge orbits, ties broken by Hermite
// order; nullopt when the sheet budget is exhausted (not a nonexistence
// claim).
inline std::optional<CoverDescriptor> minimal_k_orbital_cover(
    const ToroidalMap& x, int k, long long max_sheets) {
  for (long long n = 1; n <= max_sheets; ++n) {
    for (const auto& d : covers_of(x, n)) {
      ToroidalMap y = realize(x, d);
      if (symmetry::orbit_report(y).edge_orbit_count == k) return d;
    }
  }
  return std::nullopt;
}

struct Classification {
  std::vector<CoverDescriptor> paper_classes;          // exactly sigma(n)
  std::vector<std::vector<CoverDescriptor>> merged_classes;  // by isomorphism
};

// Hermite classification (the sigma(n) count) side by side with the coarser
// grouping of the realized maps under flag isomorphism.
inline Classification classify_covers(const ToroidalMap& x, long long n) {
  Classification c;
  c.paper_classes = covers_of(x, n);
  std::vector<ToroidalMap> reps;
  for (const auto& d : c.paper_classes) {
    ToroidalMap y = realize(x, d);
    bool placed = false;
    for (std::size_t g = 0; g < c.merged_classes.size(); ++g) {
      if (symmetry::map_isomorphic(reps[g], y)) {
        c.merged_classes[g].push_back(d);
        placed = true;
        break;
      }
    }
    if (!placed) {
      c.merged_classes.push_back({d});
      reps.push_back(std::move(y));
    }
  }
  return c;
}

}  // namespace tormap::covers
