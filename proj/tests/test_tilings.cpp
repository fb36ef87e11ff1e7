#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tormap/tiling.hpp"

using namespace tormap::tilings;
using tormap::Mat2;

namespace {

struct CellCounts {
  std::size_t v, e, f;
};

// Fundamental-domain sizes, from the face degree sums of each vertex type.
const std::map<std::string, CellCounts> kExpectedCounts = {
    {"3^6", {1, 3, 2}},       {"4^4", {1, 2, 1}},
    {"6^3", {2, 3, 1}},       {"3.6.3.6", {3, 6, 3}},
    {"rhombille", {3, 6, 3}}, {"3.12^2", {6, 9, 3}},
    {"3.4.6.4", {6, 12, 6}},  {"4.6.12", {12, 18, 6}},
    {"4.8^2", {4, 6, 2}},     {"3^3.4^2", {2, 5, 3}},
    {"3^2.4.3.4", {4, 10, 6}}, {"3^4.6", {6, 15, 9}},
};

}  // namespace

TEST_CASE("registry round-trips tags") {
  std::set<std::string> seen;
  for (TilingType t : k_all_types) {
    std::string s = tag(t);
    CHECK(seen.insert(s).second);
    auto back = type_from_tag(s);
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  CHECK(seen.size() == 12);
  CHECK(!type_from_tag("5^4").has_value());
}

TEST_CASE("cell sizes and torus Euler characteristic") {
  for (TilingType t : k_all_types) {
    PeriodicTiling p = build_tiling(t);
    const CellCounts& c = kExpectedCounts.at(p.tag);
    CHECK(p.cell_vertices.size() == c.v);
    CHECK(p.cell_edges.size() == c.e);
    CHECK(p.cell_faces.size() == c.f);
    // One fundamental domain on the torus: V - E + F = 0.
    CHECK((long long)c.v - (long long)c.e + (long long)c.f == 0);
  }
}

TEST_CASE("face slots use each cell edge exactly twice") {
  for (TilingType t : k_all_types) {
    PeriodicTiling p = build_tiling(t);
    std::vector<int> used(p.cell_edges.size(), 0);
    for (const auto& face : p.cell_faces)
      for (const auto& slot : face) {
        REQUIRE(slot.edge >= 0);
        REQUIRE(slot.edge < (int)p.cell_edges.size());
        ++used[slot.edge];
      }
    for (int u : used) CHECK(u == 2);  // every edge borders two face slots
  }
}

TEST_CASE("vertex coordinates are distinct and in the unit cell") {
  for (TilingType t : k_all_types) {
    PeriodicTiling p = build_tiling(t);
    std::set<std::pair<std::pair<long long, long long>,
                       std::pair<long long, long long>>>
        coords;
    for (const auto& v : p.cell_vertices) {
      CHECK(v.x.num >= 0);
      CHECK(v.x.num < v.x.den);
      CHECK(v.y.num >= 0);
      CHECK(v.y.num < v.y.den);
      CHECK(coords.insert({{v.x.num, v.x.den}, {v.y.num, v.y.den}}).second);
    }
  }
}

TEST_CASE("edge homogeneity flag matches the edge-symbol presence") {
  std::set<std::string> homog{"3^6", "4^4", "6^3", "3.6.3.6", "rhombille"};
  for (TilingType t : k_all_types) {
    PeriodicTiling p = build_tiling(t);
    CHECK(is_edge_homogeneous(t) == (homog.count(p.tag) == 1));
    CHECK(p.edge_symbol.has_value() == is_edge_homogeneous(t));
  }
}

TEST_CASE("semi-equivelar tilings carry their vertex type") {
  std::map<std::string, std::string> types = {
      {"3^6", "3.3.3.3.3.3"},       {"4^4", "4.4.4.4"},
      {"6^3", "6.6.6"},             {"3.6.3.6", "3.6.3.6"},
      {"rhombille", ""},            {"3.12^2", "3.12.12"},
      {"3.4.6.4", "3.4.6.4"},       {"4.6.12", "4.6.12"},
      {"4.8^2", "4.8.8"},           {"3^3.4^2", "3.3.3.4.4"},
      {"3^2.4.3.4", "3.3.4.3.4"},   {"3^4.6", "3.3.3.3.6"},
  };
  for (TilingType t : k_all_types) {
    PeriodicTiling p = build_tiling(t);
    CHECK(p.vertex_type == types.at(p.tag));
  }
}

TEST_CASE("duality pairs in the registry") {
  auto p36 = build_tiling(TilingType::t_3_6);
  REQUIRE(p36.dual.has_value());
  CHECK(tag(*p36.dual) == "6^3");
  auto p63 = build_tiling(TilingType::t_6_3);
  REQUIRE(p63.dual.has_value());
  CHECK(tag(*p63.dual) == "3^6");
  auto p44 = build_tiling(TilingType::t_4_4);
  REQUIRE(p44.dual.has_value());
  CHECK(tag(*p44.dual) == "4^4");
  auto pk = build_tiling(TilingType::t_3_6_3_6);
  REQUIRE(pk.dual.has_value());
  CHECK(tag(*pk.dual) == "rhombille");
}

TEST_CASE("associated equivelar tilings") {
  std::map<std::string, std::string> assoc = {
      {"3.12^2", "3^6"}, {"3.4.6.4", "3^6"}, {"4.6.12", "3^6"},
      {"3^4.6", "3^6"},  {"3^2.4.3.4", "4^4"}, {"4.8^2", "4^4"},
      {"3^3.4^2", "4^4"},
  };
  for (TilingType t : k_all_types) {
    auto a = associated_equivelar(t);
    auto it = assoc.find(tag(t));
    if (it == assoc.end()) {
      CHECK(!a.has_value());
    } else {
      REQUIRE(a.has_value());
      CHECK(tag(a->first) == it->second);
      CHECK(a->second == Mat2::identity());
    }
  }
}

TEST_CASE("point groups are symmetries of the stored labels where exact") {
  // The stored rational edge labels admit an exact orbit computation under
  // the full stored point group for these tags; counts are pinned.
  std::map<std::string, int> exact = {
      {"3^3.4^2", 3}, {"3^2.4.3.4", 3}, {"3^4.6", 3}};
  for (auto& [name, want] : exact) {
    TilingType t = *type_from_tag(name);
    PeriodicTiling p = build_tiling(t);
    CHECK(plane_edge_orbits_under(p, p.point_group) == want);
  }
}

TEST_CASE("edge-homogeneous declared plane orbits under the half-turn") {
  std::vector<Mat2> chi_only{Mat2::identity(), Mat2{-1, 0, 0, -1}};
  std::map<std::string, int> declared = {{"3^6", 3},
                                         {"4^4", 2},
                                         {"6^3", 3},
                                         {"3.6.3.6", 3},
                                         {"rhombille", 3}};
  for (auto& [name, want] : declared) {
    PeriodicTiling p = build_tiling(*type_from_tag(name));
    CHECK(p.plane_edge_orbit_count == want);
    CHECK(plane_edge_orbits_under(p, chi_only) == want);
  }
}

TEST_CASE("non-symmetry matrices are rejected") {
  PeriodicTiling p = build_tiling(TilingType::t_4_4);
  // A shear is never a symmetry of the square tiling's edge labels.
  std::vector<Mat2> shear{Mat2::identity(), Mat2{1, 1, 0, 1}};
  CHECK_THROWS_AS(plane_edge_orbits_under(p, shear), std::logic_error);
}
