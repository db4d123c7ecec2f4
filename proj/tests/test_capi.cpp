#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "seaweed.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  sw_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("root system handles") {
  sw_root_system* rs = nullptr;
  REQUIRE(sw_root_system_new('D', 4, &rs) == SW_OK);
  CHECK(sw_root_system_rank(rs) == 4);
  CHECK(sw_root_system_positive_roots(rs) == 12);
  CHECK(sw_root_system_cascade_size(rs) == 4);
  sw_root_system_free(rs);

  rs = nullptr;
  CHECK(sw_root_system_new('D', 2, &rs) == SW_ERROR_INVALID_ARGUMENT);
  CHECK(rs == nullptr);
  CHECK(std::strlen(sw_last_error()) > 0);
  CHECK(sw_root_system_new('X', 4, &rs) == SW_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("algebra handles and the Borel oracle") {
  sw_root_system* rs = nullptr;
  REQUIRE(sw_root_system_new('F', 4, &rs) == SW_OK);
  sw_algebra* alg = nullptr;
  REQUIRE(sw_algebra_new(rs, &alg) == SW_OK);
  CHECK(sw_algebra_dim(alg) == 52);

  sw_oracle_options opts;
  sw_oracle_options_init(&opts);
  CHECK(opts.trials == 8);
  CHECK(opts.coeff_bound == 10000);
  int64_t ind = -1;
  REQUIRE(sw_borel_index_oracle(alg, &opts, &ind) == SW_OK);
  CHECK(ind == 0);  // l = rk for F_4

  sw_algebra_free(alg);
  sw_root_system_free(rs);
}

TEST_CASE("gl index functions") {
  const int32_t a[] = {2, 2};
  const int32_t b[] = {4};
  int64_t v = -1;
  REQUIRE(sw_index_gl_inductive(a, 2, b, 1, &v) == SW_OK);
  CHECK(v == 2);

  sw_oracle_options opts;
  sw_oracle_options_init(&opts);
  REQUIRE(sw_index_gl_oracle(a, 2, b, 1, &opts, &v) == SW_OK);
  CHECK(v == 2);

  const int32_t bad[] = {3};
  CHECK(sw_index_gl_inductive(a, 2, bad, 1, &v) == SW_ERROR_INVALID_ARGUMENT);
  CHECK(sw_index_gl_inductive(nullptr, 0, b, 1, &v) == SW_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("standard index functions") {
  int64_t v = -1;
  const int32_t marked3[] = {3};
  REQUIRE(sw_index_standard_inductive('C', 3, marked3, 1, nullptr, -1, &v) == SW_OK);
  CHECK(v == 1);

  const int32_t marked1[] = {1};
  CHECK(sw_index_standard_inductive('D', 4, marked1, 1, nullptr, -1, &v) == SW_NOT_APPLICABLE);

  sw_oracle_options opts;
  sw_oracle_options_init(&opts);
  REQUIRE(sw_index_standard_oracle('D', 4, marked1, 1, nullptr, -1, &opts, &v) == SW_OK);
  CHECK(v == 2);

  // the so_8 minimal parabolic (Levi = {alpha_2}): index 1
  const int32_t marked134[] = {1, 3, 4};
  REQUIRE(sw_index_standard_oracle('D', 4, marked134, 3, nullptr, -1, &opts, &v) == SW_OK);
  CHECK(v == 1);
}

TEST_CASE("index reports") {
  const int32_t a[] = {2, 2};
  const int32_t b[] = {4};
  sw_oracle_options opts;
  sw_oracle_options_init(&opts);
  char* text = nullptr;
  int32_t agree = 0;
  REQUIRE(sw_index_report_gl(a, 2, b, 1, "both", &opts, "text", &text, &agree) == SW_OK);
  CHECK(agree == 1);
  const std::string report = take(text);
  CHECK(report.find("inductive: 2") != std::string::npos);
  CHECK(report.find("agree: yes") != std::string::npos);

  REQUIRE(sw_index_report_standard('B', 3, nullptr, 0, nullptr, -1, "oracle", &opts, "json", &text,
                                   &agree) == SW_OK);
  const std::string json_report = take(text);
  CHECK(json_report.find("\"oracle\": 3") != std::string::npos);  // so_7 itself, reductive

  CHECK(sw_index_report_gl(a, 2, b, 1, "sideways", &opts, "text", &text, &agree) ==
        SW_ERROR_INVALID_ARGUMENT);
  CHECK(sw_index_report_gl(a, 2, b, 1, "both", &opts, "yaml", &text, &agree) ==
        SW_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("deterministic output under a fixed seed") {
  const int32_t a[] = {1, 2, 1};
  const int32_t b[] = {2, 2};
  sw_oracle_options opts;
  sw_oracle_options_init(&opts);
  opts.seed = 12345;
  char* t1 = nullptr;
  char* t2 = nullptr;
  int32_t agree = 0;
  REQUIRE(sw_index_report_gl(a, 3, b, 2, "both", &opts, "json", &t1, &agree) == SW_OK);
  REQUIRE(sw_index_report_gl(a, 3, b, 2, "both", &opts, "json", &t2, &agree) == SW_OK);
  CHECK(take(t1) == take(t2));
}

TEST_CASE("cascade report") {
  char* text = nullptr;
  REQUIRE(sw_cascade_report('D', 4, "dot", &text) == SW_OK);
  const std::string dot = take(text);
  CHECK(dot.find("digraph cascade_D4") == 0);
  CHECK(dot.find("mu1 -> mu4") != std::string::npos);

  REQUIRE(sw_cascade_report('A', 2, "text", &text) == SW_OK);
  CHECK(take(text).find("ind_b: 1") != std::string::npos);

  CHECK(sw_cascade_report('Q', 2, "text", &text) == SW_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("counterexample report") {
  sw_oracle_options opts;
  sw_oracle_options_init(&opts);
  char* text = nullptr;
  int32_t confirmed = 0;
  REQUIRE(sw_counterexample_report('D', 4, 8, &opts, "json", &text, &confirmed) == SW_OK);
  CHECK(confirmed == 1);
  const std::string report = take(text);
  CHECK(report.find("\"dim_p\": 17") != std::string::npos);
  CHECK(report.find("\"ind_p\": 1") != std::string::npos);
  CHECK(report.find("\"verdict\": \"confirmed\"") != std::string::npos);

  CHECK(sw_counterexample_report('C', 3, 8, &opts, "text", &text, &confirmed) ==
        SW_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(sw_last_error()).find("fundamental") != std::string::npos);
}

TEST_CASE("enumerate") {
  sw_oracle_options opts;
  sw_oracle_options_init(&opts);
  char* text = nullptr;
  int32_t disagreements = -1;
  REQUIRE(sw_enumerate_gl(3, &opts, "text", 0, &text, &disagreements) == SW_OK);
  CHECK(disagreements == 0);
  CHECK(take(text).find("16 composition pairs") != std::string::npos);

  CHECK(sw_enumerate_gl(9, &opts, "text", 0, &text, &disagreements) == SW_ERROR_INVALID_ARGUMENT);
  CHECK(sw_enumerate_gl(0, &opts, "text", 0, &text, &disagreements) == SW_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("status names") {
  CHECK(std::string(sw_status_name(SW_OK)) == "ok");
  CHECK(std::string(sw_status_name(SW_ERROR_DISAGREEMENT)) == "method disagreement");
  CHECK(std::string(sw_status_name(SW_NOT_APPLICABLE)) == "not applicable");
}
