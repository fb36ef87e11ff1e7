#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "tormap/lattice.hpp"
#include "tormap/mat2.hpp"

using tormap::Mat2;
using tormap::Vec2;
namespace lat = tormap::lattice;

namespace {

// Independent oracle: all lattice points of <columns of M> inside a box.
std::set<std::pair<long long, long long>> points_in_box(const Mat2& m,
                                                        long long r) {
  std::set<std::pair<long long, long long>> pts;
  for (long long s = -3 * r; s <= 3 * r; ++s)
    for (long long t = -3 * r; t <= 3 * r; ++t) {
      Vec2 p{m.a * s + m.c * t, m.b * s + m.d * t};
      if (std::abs(p.x) <= r && std::abs(p.y) <= r) pts.insert({p.x, p.y});
    }
  return pts;
}

// Independent oracle: index-n subgroups of Z^2 by brute force over
// lower-triangular generator pairs, deduplicated by their point sets.
long long count_subgroups_brute(long long n) {
  std::set<std::set<std::pair<long long, long long>>> seen;
  for (long long a = 1; a <= n; ++a) {
    if (n % a) continue;
    long long d = n / a;
    for (long long b = 0; b < d; ++b)
      seen.insert(points_in_box(Mat2{a, 0, b, d}, 2 * n));
  }
  return (long long)seen.size();
}

}  // namespace

TEST_CASE("hnf of a worked example has the right lattice") {
  // [[3,1],[0,2]] and its Hermite form span the same point set.
  Mat2 m{3, 1, 0, 2};
  auto r = lat::hnf(m);
  CHECK(r.form.a == 1);
  CHECK(r.form.b == 2);
  CHECK(r.form.d == 6);
  CHECK(points_in_box(m, 8) == points_in_box(r.form.matrix(), 8));
  CHECK(std::abs(r.u.det()) == 1);
  CHECK(m * r.u == r.form.matrix());
}

TEST_CASE("hnf is invariant under unimodular column operations") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long long> coef(-9, 9);
  int tried = 0;
  while (tried < 300) {
    Mat2 m{coef(rng), coef(rng), coef(rng), coef(rng)};
    if (m.det() == 0) continue;
    ++tried;
    // Random unimodular U as a word in shears and the swap.
    Mat2 u = Mat2::identity();
    for (int i = 0; i < 4; ++i) {
      long long k = coef(rng);
      u = u * Mat2{1, k, 0, 1};
      u = u * Mat2{0, -1, 1, 0};
    }
    REQUIRE(std::abs(u.det()) == 1);
    CHECK(lat::hnf(m * u).form == lat::hnf(m).form);
  }
}

TEST_CASE("hnf output shape") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> coef(-20, 20);
  for (int i = 0; i < 200;) {
    Mat2 m{coef(rng), coef(rng), coef(rng), coef(rng)};
    if (m.det() == 0) continue;
    ++i;
    auto h = lat::hnf(m).form;
    CHECK(h.a > 0);
    CHECK(h.d > 0);
    CHECK(h.b >= 0);
    CHECK(h.b < h.d);
    CHECK(h.index() == std::abs(m.det()));
  }
}

TEST_CASE("singular input is rejected") {
  CHECK_THROWS_AS(lat::hnf(Mat2{2, 4, 1, 2}), lat::singular_matrix);
  CHECK_THROWS_AS(lat::sublattices_of_index(0), std::invalid_argument);
}

TEST_CASE("sublattice enumeration matches brute-force subgroup count") {
  for (long long n = 1; n <= 12; ++n) {
    auto forms = lat::sublattices_of_index(n);
    CHECK((long long)forms.size() == lat::sigma(n));
    CHECK((long long)forms.size() == count_subgroups_brute(n));
    std::set<lat::HermiteForm> dedup(forms.begin(), forms.end());
    CHECK(dedup.size() == forms.size());
    for (const auto& h : forms) CHECK(h.index() == n);
  }
}

TEST_CASE("sigma is the divisor sum") {
  long long expected[] = {1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28};
  for (long long n = 1; n <= 12; ++n) CHECK(lat::sigma(n) == expected[n - 1]);
}

TEST_CASE("is_sublattice and quotient_index agree with the point sets") {
  Mat2 k{2, 0, 1, 3};
  Mat2 l{12, 0, 6, 18};  // 6 * k
  CHECK(lat::is_sublattice(l, k));
  CHECK(!lat::is_sublattice(k, l));
  CHECK(lat::quotient_index(k, l) == 36);
  CHECK_THROWS_AS(lat::coords_in(l, k), lat::not_sublattice);
  Mat2 c = lat::coords_in(k, l);  // l = k * c
  CHECK(k * c == l);
  CHECK(std::abs(c.det()) == 36);
}

TEST_CASE("canonical form is constant on point-group orbits") {
  std::vector<Mat2> group = lat::named_point_group("D6");
  REQUIRE(group.size() == 12);
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> coef(-6, 6);
  for (int i = 0; i < 100;) {
    Mat2 m{coef(rng), coef(rng), coef(rng), coef(rng)};
    if (m.det() == 0) continue;
    ++i;
    auto canon = lat::canonical_under_pointgroup(m, group);
    for (const Mat2& g : group)
      CHECK(lat::canonical_under_pointgroup(g * m, group) == canon);
  }
}

TEST_CASE("named point groups close under multiplication") {
  for (const char* name : {"D6", "D4", "Z6", "Z4", "D2"}) {
    auto mats = lat::named_point_group(name);
    std::set<Mat2> elems(mats.begin(), mats.end());
    CHECK(elems.size() == mats.size());  // no duplicates
    for (const Mat2& g : elems)
      for (const Mat2& h : elems) CHECK(elems.count(g * h) == 1);
  }
}

TEST_CASE("group_closure reproduces D6 from its generators") {
  std::vector<Mat2> gens{Mat2{0, -1, 1, 1}, Mat2{-1, -1, 0, 1}};
  auto closure = lat::group_closure(gens);
  CHECK(closure.size() == 12);
  auto d6 = lat::named_point_group("D6");
  std::set<Mat2> expect(d6.begin(), d6.end());
  std::set<Mat2> got(closure.begin(), closure.end());
  CHECK(got == expect);
}

TEST_CASE("paper_cover_classes counts Hermite forms per index") {
  for (long long n = 1; n <= 10; ++n)
    CHECK((long long)lat::paper_cover_classes(n).size() == lat::sigma(n));
}
