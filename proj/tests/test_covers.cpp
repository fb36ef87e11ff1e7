#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "tormap/covers.hpp"
#include "tormap/lattice.hpp"
#include "tormap/symmetry.hpp"
#include "tormap/torusmap.hpp"

using namespace tormap;
using covers::CoverDescriptor;
using torusmap::ToroidalMap;
using tilings::TilingType;

TEST_CASE("covers_of enumerates sigma(n) sublattices of the base") {
  ToroidalMap x = torusmap::quotient(TilingType::t_3_6, Mat2{5, 0, 0, 3});
  for (long long n = 1; n <= 8; ++n) {
    auto ds = covers::covers_of(x, n);
    CHECK((long long)ds.size() == lattice::sigma(n));
    std::set<lattice::HermiteForm> forms;
    for (const auto& d : ds) {
      CHECK(d.sheets == n);
      CHECK(d.base_lattice == x.lattice);
      CHECK(lattice::is_sublattice(d.cover_lattice, x.lattice));
      CHECK(lattice::quotient_index(x.lattice, d.cover_lattice) == n);
      forms.insert(d.hnf_in_K);
    }
    CHECK(forms.size() == ds.size());
  }
}

TEST_CASE("realized covers have n times the cells of the base") {
  ToroidalMap x = torusmap::quotient(TilingType::t_4_8_2, Mat2{3, 0, 0, 4});
  for (const auto& d : covers::covers_of(x, 3)) {
    ToroidalMap y = covers::realize(x, d);
    CHECK(y.vertices.size() == 3 * x.vertices.size());
    CHECK(y.edges.size() == 3 * x.edges.size());
    CHECK(y.faces.size() == 3 * x.faces.size());
  }
}

TEST_CASE("covering projection is n-to-1 and adjacency preserving") {
  ToroidalMap x = torusmap::quotient(TilingType::t_3_6, Mat2{5, 0, 0, 3});
  for (const auto& d : covers::covers_of(x, 4)) {
    ToroidalMap y = covers::realize(x, d);
    std::vector<int> proj = covers::covering_projection(x, y);
    REQUIRE(proj.size() == y.vertices.size());
    std::map<int, int> fibre;
    for (int b : proj) ++fibre[b];
    CHECK((long long)fibre.size() == (long long)x.vertices.size());
    for (auto& [b, cnt] : fibre) CHECK(cnt == 4);
    // Edges project to edges.
    std::set<std::pair<int, int>> base_edges;
    for (const auto& e : x.edges) base_edges.insert(std::minmax(e.v1, e.v2));
    for (const auto& e : y.edges)
      CHECK(base_edges.count(std::minmax(proj[e.v1], proj[e.v2])) == 1);
  }
}

TEST_CASE("stretch cover shape") {
  ToroidalMap x = torusmap::quotient(TilingType::t_6_3, Mat2{5, 0, 0, 3});
  for (long long n = 1; n <= 6; ++n) {
    CoverDescriptor d = covers::stretch_cover(x, n);
    CHECK(d.sheets == n);
    CHECK(d.hnf_in_K == (lattice::HermiteForm{n, 0, 1}));
    CHECK(d.cover_lattice == x.lattice * Mat2{n, 0, 0, 1});
  }
}

TEST_CASE("symmetric cover scales the base lattice by its determinant") {
  ToroidalMap x = torusmap::quotient(TilingType::t_3_6, Mat2{2, 0, 1, 3});
  CoverDescriptor d = covers::symmetric_cover(x);
  CHECK(d.sheets == 36);
  CHECK(d.cover_lattice == Mat2{12, 0, 6, 18});
  // The scaled lattice m*K is contained in every point-group image domain:
  // A(m*K) is a sublattice of m*Z^2, itself a sublattice of K.
  for (const Mat2& a : lattice::named_point_group("D6")) {
    Mat2 image = a * d.cover_lattice;
    CHECK(lattice::is_sublattice(image, Mat2{6, 0, 0, 6}));
    CHECK(lattice::is_sublattice(image, x.lattice));
  }
}

TEST_CASE("minimal k-orbital cover scans sheet counts in order") {
  ToroidalMap x = torusmap::quotient(TilingType::t_3_6, Mat2{5, 0, 0, 3});
  REQUIRE(symmetry::edge_orbit_count(x) == 3);
  auto d1 = covers::minimal_k_orbital_cover(x, 3, 4);
  REQUIRE(d1.has_value());
  CHECK(d1->sheets == 1);  // the base itself already has 3 orbits
  auto d2 = covers::minimal_k_orbital_cover(x, 2, 6);
  REQUIRE(d2.has_value());
  CHECK(d2->sheets > 1);
  ToroidalMap y = covers::realize(x, *d2);
  CHECK(symmetry::edge_orbit_count(y) == 2);
  // Budget exhaustion reports nothing rather than guessing.
  CHECK(!covers::minimal_k_orbital_cover(x, 7, 3).has_value());
}

TEST_CASE("classification refines the Hermite classes") {
  ToroidalMap x = torusmap::quotient(TilingType::t_3_6, Mat2{3, 0, 0, 3});
  for (long long n : {2LL, 3LL}) {
    auto c = covers::classify_covers(x, n);
    CHECK((long long)c.paper_classes.size() == lattice::sigma(n));
    std::size_t merged_total = 0;
    for (const auto& g : c.merged_classes) {
      CHECK(!g.empty());
      merged_total += g.size();
    }
    CHECK(merged_total == c.paper_classes.size());
    CHECK(c.merged_classes.size() <= c.paper_classes.size());
  }
}

TEST_CASE("isomorphic covers land in one merged class") {
  // Over 3I the 2-sheeted covers [[2,0],[0,1]] and [[1,0],[0,2]] in the
  // base frame differ by a lattice symmetry, so their maps are isomorphic.
  ToroidalMap x = torusmap::quotient(TilingType::t_3_6, Mat2{3, 0, 0, 3});
  auto c = covers::classify_covers(x, 2);
  REQUIRE(c.paper_classes.size() == 3);
  CHECK(c.merged_classes.size() < 3);
}
