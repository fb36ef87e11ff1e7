#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "tormap/report.hpp"

using namespace tormap;
using report::Finding;

TEST_CASE("check and record statuses") {
  CHECK(report::check("c", "e", "o", true).status == "pass");
  CHECK(report::check("c", "e", "o", false).status == "fail");
  CHECK(report::record("c", "e", "o").status == "recorded");
  CHECK(report::any_failed({report::check("c", "e", "o", false)}));
  CHECK(!report::any_failed({report::record("c", "e", "o")}));
}

TEST_CASE("single findings pass") {
  CHECK(report::sigma_counts_finding().status == "pass");
  CHECK(report::sharpness_finding().status == "pass");
  CHECK(report::two_orbit_square_finding().status == "pass");
  CHECK(report::hnf_random_finding().status == "pass");
  CHECK(report::canonical_random_finding().status == "pass");
}

TEST_CASE("bound findings at a small index") {
  Finding f = report::bound_finding(tilings::TilingType::t_3_6, 9, true);
  CHECK(f.status == "pass");
  CHECK(f.claim == "thm:no-of-orbits.3^6");
  // The two tags with the relocated half-turn report their sweeps as
  // recorded deviations rather than failures.
  Finding g = report::bound_finding(tilings::TilingType::t_3_3_4_2, 6, false);
  CHECK(g.status == "recorded");
  Finding h = report::bound_finding(tilings::TilingType::t_3_4_6, 6, false);
  CHECK(h.status == "recorded");
}

TEST_CASE("verify_bounds covers the requested tags") {
  std::vector<tilings::TilingType> tags{tilings::TilingType::t_3_6,
                                        tilings::TilingType::t_4_4};
  auto fs = report::verify_bounds(tags, 9, false);
  REQUIRE(fs.size() == 2);
  CHECK(!report::any_failed(fs));
}

TEST_CASE("reproduce at the default sweep depths has no failures") {
  auto fs = report::reproduce();
  CHECK(!report::any_failed(fs));
  std::set<std::string> claims;
  for (const auto& f : fs) {
    CHECK((f.status == "pass" || f.status == "recorded"));
    CHECK(claims.insert(f.claim).second);  // claim ids are unique
  }
  // Spot-check the headline claims are present.
  CHECK(claims.count("thm-main3.sigma") == 1);
  CHECK(claims.count("t-5orb") == 1);
  CHECK(claims.count("orbb.monotonicity") == 1);
  CHECK(claims.count("uni.plane-orbits") == 1);
}

TEST_CASE("reproduce honors the prefix filter") {
  report::ReproduceOptions opt;
  opt.edge_bound_index = 6;
  opt.semi_bound_index = 4;
  opt.assoc_index = 2;
  opt.only = "thm-main3";  // sweep depth does not matter under this filter
  auto fs = report::reproduce(opt);
  CHECK(!fs.empty());
  for (const auto& f : fs) CHECK(f.claim.rfind("thm-main3", 0) == 0);
}
