#include "fewdist/report.hpp"
#include "fewdist/search_oracle.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace fewdist;
using json = nlohmann::ordered_json;

namespace {

json parsed(const CommandOutput& out) {
  json doc = json::parse(out.json);
  CHECK(doc.dump(2) + "\n" == out.json);
  CHECK_FALSE(out.table.empty());
  return doc;
}

}  // namespace

TEST_CASE("method names") {
  for (const char* name : {"auto", "harmonic", "conditional", "lp", "det", "refined", "ekr", "forbidden", "packing",
                           "spherical", "oracle"}) {
    auto m = parse_bound_method(name);
    REQUIRE(m.has_value());
    CHECK(std::string(to_string(*m)) == name);
  }
  CHECK_FALSE(parse_bound_method("simplex").has_value());
}

TEST_CASE("bound command") {
  auto h6 = SpaceSpec::hamming(6);
  auto out = run_bound(h6, DistanceSet(h6, {2, 4}), BoundMethod::Lp, kDefaultNodeBudget);
  CHECK(out.status == CommandStatus::Ok);
  auto doc = parsed(out);
  CHECK(doc["command"] == "bound");
  CHECK(doc["space"]["kind"] == "hamming");
  CHECK(doc["bound"] == "16");
  CHECK(doc["floored"] == 16);
  CHECK(doc["lp_status"] == "optimal");

  auto h10 = SpaceSpec::hamming(10);
  auto best = parsed(run_bound(h10, DistanceSet(h10, {3, 7}), BoundMethod::Auto, kDefaultNodeBudget));
  CHECK(best["floored"] == 2);
  CHECK(best["best_method"] == "lp");
  auto cond = parsed(run_bound(h10, DistanceSet(h10, {3, 7}), BoundMethod::Conditional, kDefaultNodeBudget));
  CHECK(cond["floored"] == 46);
  CHECK(best["results"].size() >= 3);

  auto na = run_bound(h6, DistanceSet(h6, {5, 6}), BoundMethod::Conditional, kDefaultNodeBudget);
  CHECK(na.status == CommandStatus::Gap);
  CHECK(parsed(na)["bound"].is_null());

  CHECK_THROWS_AS(run_bound(h6, DistanceSet(h6, {2, 4}), BoundMethod::Det, kDefaultNodeBudget), InvalidArgument);
}

TEST_CASE("determinant command") {
  auto doc = parsed(run_det_bound(10, 4, {1, 2}));
  CHECK(doc["conditions"] == "met");
  CHECK(doc["bound"] == "28");
  CHECK(doc["E"] == json::array({"1/15", "7/30", "1/90"}));
  CHECK(doc["degrees"] == json::array({4, 3}));
  auto past = parsed(run_det_bound(9, 5, {2, 3, 4, 5}));
  CHECK(past["bound"] == "126/5");
  CHECK(past["floored"] == 25);
  auto failed = run_det_bound(8, 4, {1, 2});
  CHECK(failed.status == CommandStatus::Gap);
  CHECK(parsed(failed)["conditions"] == "failed");
  CHECK_THROWS_AS(run_det_bound(10, 11, {1}), InvalidArgument);
}

TEST_CASE("oracle method inside the bound command") {
  auto h4 = SpaceSpec::hamming(4);
  auto doc = parsed(run_bound(h4, DistanceSet(h4, {2}), BoundMethod::Oracle, kDefaultNodeBudget));
  CHECK(doc["floored"] == 4);
  CHECK(doc["exact"] == true);
  CHECK(doc["witness"].size() == 4);
}

TEST_CASE("exact command") {
  auto h = run_exact(SpaceSpec::hamming(10), 2);
  CHECK(h.status == CommandStatus::Ok);
  auto doc = parsed(h);
  CHECK(doc["exact"] == true);
  CHECK(doc["value"] == 46);
  auto j = parsed(run_exact(SpaceSpec::johnson(12, 5), 3));
  CHECK(j["value"] == 120);
  CHECK(j["per_set"].size() == 10);
  auto gap = run_exact(SpaceSpec::johnson(20, 7), 2);
  CHECK(gap.status == CommandStatus::Gap);
  auto g = parsed(gap);
  CHECK(g["exact"] == false);
  CHECK(g["value"].is_null());
  CHECK(g["lower"] == 105);
  CHECK(g["upper"] == 157);
}

TEST_CASE("table and appendix commands") {
  auto t = run_table1(36);
  CHECK(t.status == CommandStatus::Ok);
  CHECK(parsed(t)["all_pass"] == true);
  CHECK_THROWS_AS(run_table1(30), InvalidArgument);
  auto a = parsed(run_appendix_check(4, 2, 20));
  CHECK(a["all_ok"] == true);
  REQUIRE(a["below"].size() >= 1);
  CHECK(a["below"][0]["distances"] == json::array({1, 2}));
  CHECK(a["below"][0]["n"] == 8);
  CHECK(a["below"][0]["conditions_met"] == false);
  auto th = parsed(run_thm11(6, 12));
  CHECK(th["all_exact"] == true);
  CHECK(th["rows"].size() == 7);
}

TEST_CASE("oracle command") {
  auto out = run_oracle(SpaceSpec::johnson(8, 4), 3, kDefaultNodeBudget);
  CHECK(out.status == CommandStatus::Ok);
  auto doc = parsed(out);
  CHECK(doc["value"] == 35);
  CHECK(doc["witness_valid"] == true);
  auto tiny = run_oracle(SpaceSpec::hamming(8), 2, 2);
  CHECK(tiny.status == CommandStatus::Budget);
  CHECK(parsed(tiny)["budget_exhausted"] == true);
}

TEST_CASE("sdp-check command") {
  auto h6 = SpaceSpec::hamming(6);
  auto code = construct_parity_code(6, 2);
  auto doc = parsed(run_sdp_check(h6, code, std::nullopt, std::nullopt));
  CHECK(doc["ok"] == true);
  CHECK(doc["objective"] == "16");
  CHECK(doc["objective_matches_size"] == true);
  CHECK(doc["blocks"].size() == 4);
  auto bad = run_sdp_check(h6, code, DistanceSet(h6, {2}), std::nullopt);
  CHECK(bad.status == CommandStatus::Gap);
  CHECK(parsed(bad)["condition"] == 4);
  auto x = distribution_from_json(distribution_to_json(triple_distribution_from_code(code, h6)));
  CHECK(parsed(run_sdp_check(h6, code, std::nullopt, x))["ok"] == true);
  CHECK_THROWS_AS(run_sdp_check(SpaceSpec::hamming(7), code, std::nullopt, std::nullopt), InvalidArgument);
}
