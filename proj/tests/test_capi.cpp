#include <doctest.h>

#include <json.hpp>

#include <string>

#include "superbrauer.h"

namespace {

std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string copy(text);
  sbr_free_string(text);
  return copy;
}

}  // namespace

TEST_CASE("version and error strings") {
  CHECK(std::string(sbr_version()) == "1.0.0");
  CHECK(sbr_enumerate_diagrams(-1, 0, nullptr) == SBR_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sbr_last_error()) == "bad arguments");
}

TEST_CASE("diagram enumeration over the boundary") {
  char* text = nullptr;
  REQUIRE(sbr_enumerate_diagrams(3, 3, &text) == SBR_OK);
  auto list = nlohmann::json::parse(take(text));
  CHECK(list.size() == 15);
  CHECK(list[0].at("p") == 3);
  CHECK(list[0].at("arcs").size() == 3);

  REQUIRE(sbr_enumerate_diagrams(1, 2, &text) == SBR_OK);
  CHECK(nlohmann::json::parse(take(text)).empty());
}

TEST_CASE("composition over the boundary") {
  const char* e1 = R"({"p":2,"q":2,"arcs":[[1,2],[3,4]]})";
  char* text = nullptr;
  REQUIRE(sbr_compose(-1, e1, e1, &text) == SBR_OK);
  auto result = nlohmann::json::parse(take(text));
  CHECK(result.at("delta") == -1);
  REQUIRE(result.at("terms").size() == 1);
  CHECK(result.at("terms")[0].at("coeff") == "-1");

  const char* cup = R"({"p":2,"q":0,"arcs":[[1,2]]})";
  CHECK(sbr_compose(1, cup, cup, &text) == SBR_ERR_ARITY_MISMATCH);
  CHECK(sbr_compose(1, "{broken", cup, &text) == SBR_ERR_BAD_JSON);
  const char* wrong_delta = R"({"p":2,"q":2,"delta":7,"terms":[]})";
  CHECK(sbr_compose(1, wrong_delta, e1, &text) == SBR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("kernel and verification reports") {
  sbr_report* report = nullptr;
  REQUIRE(sbr_kernel_kappa(0, 1, 2, 1, &report) == SBR_OK);
  CHECK(sbr_report_verified(report) == 1);
  char* text = nullptr;
  REQUIRE(sbr_report_json(report, &text) == SBR_OK);
  auto j = nlohmann::json::parse(take(text));
  CHECK(j.at("dims").at("kernel_dim") == 1);
  CHECK(j.at("basis").size() == 1);
  sbr_report_free(report);

  REQUIRE(sbr_verify_fft_gl(1, 1, 3, &report) == SBR_OK);
  CHECK(sbr_report_verified(report) == 1);
  CHECK(std::string(sbr_report_status(report)) == "verified");
  sbr_report_free(report);

  REQUIRE(sbr_verify_sft(1, 1, 2, 1, 20, &report) == SBR_OK);
  CHECK(sbr_report_verified(report) == 1);
  sbr_report_free(report);

  REQUIRE(sbr_verify_sft_eta(0, 1, 2, 1, &report) == SBR_OK);
  CHECK(sbr_report_verified(report) == 1);
  sbr_report_free(report);

  REQUIRE(sbr_classical("symp", 1, 2, 1, &report) == SBR_OK);
  CHECK(sbr_report_verified(report) == 1);
  sbr_report_free(report);
  CHECK(sbr_classical("bogus", 1, 2, 1, &report) ==
        SBR_ERR_INVALID_ARGUMENT);

  // Over budget: the claim is reported as skipped, not errored.
  REQUIRE(sbr_verify_sft(3, 3, 4, 1, 10, &report) == SBR_OK);
  CHECK(sbr_report_verified(report) == 0);
  CHECK(std::string(sbr_report_status(report)) == "skipped");
  sbr_report_free(report);
}

TEST_CASE("experiment sweep") {
  char* text = nullptr;
  REQUIRE(sbr_experiment_min_kernel(1, 1, 3, &text) == SBR_OK);
  auto j = nlohmann::json::parse(take(text));
  CHECK(j.at("kernel_dims").at("3") == 0);
  CHECK(j.at("first_nonzero_d").is_null());
}
