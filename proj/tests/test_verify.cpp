#include <doctest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "minkowski/verify.hpp"

using namespace mink;

TEST_CASE("suite names") {
  CHECK(parse_suite("core") == Suite::core);
  CHECK(parse_suite("full") == Suite::full);
  CHECK(std::string(suite_name(Suite::full)) == "full");
  CHECK_THROWS_AS(parse_suite("fast"), Error);
}

TEST_CASE("core report") {
  auto rep = run_verify(Suite::core);
  CHECK(rep.checks.size() >= 25);

  std::set<std::string> ids;
  for (const auto& c : rep.checks) {
    CHECK(ids.insert(c.id).second);
    CHECK(c.pass == (c.residual <= c.tolerance));
    CHECK(c.id.find(".error") == std::string::npos);
  }

  auto crit = rep.criteria();
  REQUIRE(crit.size() == 14);
  for (int k = 1; k <= 14; ++k) CHECK(crit[k - 1].criterion == k);

  auto it = std::find_if(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return c.id == "fig2.lambda1"; });
  REQUIRE(it != rep.checks.end());
  CHECK(it->rhs == 0.25553210);
  CHECK(it->pass);

  auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["summary"]["total"] == rep.checks.size());
  CHECK(j["summary"]["failed"] == rep.failed());
  CHECK(j["criteria"].size() == 14);
  CHECK(j["checks"][0].contains("anchor"));

  // deterministic for a fixed configuration
  CHECK(run_verify(Suite::core).to_json() == rep.to_json());
}

TEST_CASE("invalid configuration is rejected before running") {
  PrecisionConfig cfg;
  cfg.matrix_dim = 4;
  CHECK_THROWS_AS(run_verify(Suite::core, cfg), Error);
}
