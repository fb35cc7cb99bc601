#include "fewdist/fewdist.h"

#include <doctest.h>

#include <string>

namespace {

std::string data(const char* name) { return std::string(FEWDIST_TEST_DATA) + "/" + name; }

bool has(const fd_result* r, const std::string& needle) {
  return std::string(fd_result_json(r)).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("version and defaults") {
  CHECK(std::string(fd_version()) == "0.1.0");
  CHECK(fd_default_budget() > 0);
}

TEST_CASE("space handles") {
  fd_space* s = nullptr;
  CHECK(fd_space_hamming(6, &s) == FD_OK);
  CHECK(s != nullptr);
  CHECK(std::string(fd_last_error()).empty());
  fd_space_free(s);
  fd_space* bad = reinterpret_cast<fd_space*>(0x1);
  CHECK(fd_space_johnson(10, 7, &bad) == FD_ERR_INVALID);
  CHECK(bad == nullptr);
  CHECK_FALSE(std::string(fd_last_error()).empty());
  CHECK(fd_space_hamming(6, nullptr) == FD_ERR_INVALID);
  fd_space_free(nullptr);
}

TEST_CASE("code handles") {
  fd_code* c = nullptr;
  REQUIRE(fd_code_load_file(data("parity6_2.txt").c_str(), &c) == FD_OK);
  CHECK(fd_code_size(c) == 16);
  CHECK(fd_code_length(c) == 6);
  fd_code_free(c);
  CHECK(fd_code_load_file(data("ragged.txt").c_str(), &c) == FD_ERR_INVALID);
  CHECK(c == nullptr);
  CHECK(fd_code_load_file(data("missing.txt").c_str(), &c) == FD_ERR_INVALID);
  CHECK(fd_code_parse("01\n10\n", &c) == FD_OK);
  CHECK(fd_code_size(c) == 2);
  fd_code_free(c);
  CHECK(fd_code_parse("012\n", &c) == FD_ERR_INVALID);
  CHECK(fd_code_size(nullptr) == 0);
}

TEST_CASE("bound entry points") {
  fd_space* h6 = nullptr;
  REQUIRE(fd_space_hamming(6, &h6) == FD_OK);
  const int d[] = {2, 4};
  fd_result* r = nullptr;
  CHECK(fd_bound(h6, d, 2, "lp", fd_default_budget(), &r) == FD_OK);
  CHECK(has(r, "\"bound\": \"16\""));
  CHECK(fd_result_status(r) == FD_OK);
  CHECK(std::string(fd_result_table(r)).find("16") != std::string::npos);
  fd_result_free(r);
  CHECK(fd_bound(h6, d, 2, "nonsense", 0, &r) == FD_ERR_INVALID);
  CHECK(r == nullptr);
  CHECK(fd_bound(h6, nullptr, 2, "lp", 0, &r) == FD_ERR_INVALID);
  CHECK(fd_bound(nullptr, d, 2, "lp", 0, &r) == FD_ERR_INVALID);
  const int far[] = {2, 9};
  CHECK(fd_bound(h6, far, 2, "lp", 0, &r) == FD_ERR_INVALID);
  fd_space_free(h6);

  const int j[] = {1, 2};
  REQUIRE(fd_bound_det(10, 4, j, 2, &r) == FD_OK);
  CHECK(has(r, "\"conditions\": \"met\""));
  CHECK(has(r, "\"bound\": \"28\""));
  fd_result_free(r);
  const int top[] = {2, 3, 4, 5};
  REQUIRE(fd_bound_det(9, 5, top, 4, &r) == FD_OK);
  CHECK(has(r, "126/5"));
  fd_result_free(r);
  CHECK(fd_bound_det(8, 4, j, 2, &r) == FD_GAP);
  fd_result_free(r);
  CHECK(fd_result_status(nullptr) == FD_ERR_INVALID);
}

TEST_CASE("exact and table entry points") {
  fd_space* s = nullptr;
  fd_result* r = nullptr;
  REQUIRE(fd_space_johnson(12, 5, &s) == FD_OK);
  CHECK(fd_exact(s, 3, &r) == FD_OK);
  CHECK(has(r, "\"value\": 120"));
  fd_result_free(r);
  fd_space_free(s);
  REQUIRE(fd_space_johnson(20, 7, &s) == FD_OK);
  CHECK(fd_exact(s, 2, &r) == FD_GAP);
  fd_result_free(r);
  CHECK(fd_exact(s, 9, &r) == FD_ERR_INVALID);
  fd_space_free(s);
  CHECK(fd_table1(20, &r) == FD_ERR_INVALID);
  CHECK(fd_appendix_check(4, 2, 20, &r) == FD_OK);
  CHECK(has(r, "\"all_ok\": true"));
  fd_result_free(r);
  CHECK(fd_thm11(6, 10, &r) == FD_OK);
  fd_result_free(r);
  CHECK(fd_thm11(3, 10, &r) == FD_ERR_INVALID);
}

TEST_CASE("oracle entry point") {
  fd_space* s = nullptr;
  fd_result* r = nullptr;
  REQUIRE(fd_space_johnson(7, 3, &s) == FD_OK);
  CHECK(fd_oracle(s, 2, fd_default_budget(), &r) == FD_OK);
  CHECK(has(r, "\"value\": 15"));
  fd_result_free(r);
  fd_space_free(s);
  REQUIRE(fd_space_hamming(8, &s) == FD_OK);
  CHECK(fd_oracle(s, 2, 2, &r) == FD_BUDGET_EXHAUSTED);
  CHECK(has(r, "\"budget_exhausted\": true"));
  fd_result_free(r);
  fd_space_free(s);
}

TEST_CASE("sdp entry points") {
  fd_space* s = nullptr;
  fd_code* c = nullptr;
  fd_result* r = nullptr;
  REQUIRE(fd_space_johnson(7, 3, &s) == FD_OK);
  REQUIRE(fd_code_load_file(data("johnson7_3_prefix.txt").c_str(), &c) == FD_OK);
  CHECK(fd_sdp_check(s, c, nullptr, 0, nullptr, &r) == FD_OK);
  CHECK(has(r, "\"objective\": \"15\""));
  fd_result_free(r);

  fd_result* dist = nullptr;
  REQUIRE(fd_sdp_distribution(s, c, &dist) == FD_OK);
  CHECK(fd_sdp_check(s, c, nullptr, 0, fd_result_json(dist), &r) == FD_OK);
  fd_result_free(r);
  fd_result_free(dist);

  const int one[] = {1};
  CHECK(fd_sdp_check(s, c, one, 1, nullptr, &r) == FD_GAP);
  CHECK(has(r, "\"condition\": 4"));
  fd_result_free(r);
  CHECK(fd_sdp_check(s, c, nullptr, 0, "{not json", &r) == FD_ERR_INVALID);
  CHECK(fd_sdp_check(s, nullptr, nullptr, 0, nullptr, &r) == FD_ERR_INVALID);
  fd_code_free(c);

  REQUIRE(fd_code_load_file(data("n3_even.txt").c_str(), &c) == FD_OK);
  CHECK(fd_sdp_check(s, c, nullptr, 0, nullptr, &r) == FD_ERR_INVALID);
  fd_code_free(c);
  fd_space_free(s);
}
