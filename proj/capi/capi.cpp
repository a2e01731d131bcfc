#include "superbrauer.h"

#include <chrono>
#include <cstring>
#include <string>

#include "superbrauer/json_io.hpp"
#include "superbrauer/kernels.hpp"
#include "superbrauer/verify.hpp"

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

sbr_status fail(sbr_status code, const std::string& message) {
  last_error = message;
  return code;
}

template <typename Fn>
sbr_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const superbrauer::BudgetError& error) {
    return fail(SBR_ERR_BUDGET_EXCEEDED, error.what());
  } catch (const nlohmann::json::exception& error) {
    return fail(SBR_ERR_BAD_JSON, error.what());
  } catch (const std::invalid_argument& error) {
    return fail(SBR_ERR_INVALID_ARGUMENT, error.what());
  } catch (const std::exception& error) {
    return fail(SBR_ERR_INTERNAL, error.what());
  } catch (...) {
    return fail(SBR_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

struct sbr_report {
  superbrauer::VerificationReport report;
  nlohmann::json extra;  // merged into the JSON view (kernel bases etc.)
};

namespace {

sbr_status make_report(superbrauer::VerificationReport report,
                       nlohmann::json extra, sbr_report** out) {
  *out = new sbr_report{std::move(report), std::move(extra)};
  return SBR_OK;
}

}  // namespace

extern "C" {

const char* sbr_version(void) { return "1.0.0"; }

const char* sbr_last_error(void) { return last_error.c_str(); }

void sbr_free_string(char* text) { delete[] text; }

sbr_status sbr_enumerate_diagrams(int p, int q, char** out_json) {
  if (!out_json || p < 0 || q < 0)
    return fail(SBR_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& diagram : superbrauer::enumerate_diagrams(p, q))
      list.push_back(superbrauer::diagram_to_json(diagram));
    *out_json = copy_string(list.dump());
    return SBR_OK;
  });
}

sbr_status sbr_compose(long long delta, const char* top_json,
                       const char* bottom_json, char** out_json) {
  if (!out_json || !top_json || !bottom_json)
    return fail(SBR_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    nlohmann::json top = nlohmann::json::parse(top_json);
    nlohmann::json bottom = nlohmann::json::parse(bottom_json);
    superbrauer::HomElement top_hom =
        superbrauer::hom_from_json(top, delta);
    superbrauer::HomElement bottom_hom =
        superbrauer::hom_from_json(bottom, delta);
    if (top_hom.delta() != delta || bottom_hom.delta() != delta)
      return fail(SBR_ERR_INVALID_ARGUMENT,
                  "input loop parameter disagrees with --delta");
    if (top_hom.p() != bottom_hom.q())
      return fail(SBR_ERR_ARITY_MISMATCH, "composition arity mismatch");
    superbrauer::HomElement result = superbrauer::compose(top_hom, bottom_hom);
    *out_json = copy_string(superbrauer::hom_to_json(result).dump());
    return SBR_OK;
  });
}

sbr_status sbr_kernel_kappa(int m, int n, int d, int include_basis,
                            sbr_report** out) {
  if (!out || m < 0 || n < 0 || d < 0)
    return fail(SBR_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    superbrauer::VerificationReport report;
    report.claim = "kernel-kappa";
    report.params = {{"m", m}, {"n", n}, {"d", d}};
    nlohmann::json extra;
    try {
      superbrauer::KernelResult kernel = superbrauer::kernel_kappa(m, n, d);
      report.status = superbrauer::VerificationReport::Status::Verified;
      report.dims["ambient_dim"] = (long long)kernel.ambient_dim;
      report.dims["kernel_dim"] = (long long)kernel.kernel_dim;
      extra = superbrauer::kernel_result_to_json(kernel, include_basis != 0);
    } catch (const superbrauer::BudgetError& error) {
      report.status = superbrauer::VerificationReport::Status::Skipped;
      report.witness = error.what();
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return make_report(std::move(report), std::move(extra), out);
  });
}

sbr_status sbr_kernel_eta(int m, int n, int d, sbr_report** out) {
  if (!out || m < 0 || n < 0 || d < 0)
    return fail(SBR_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    superbrauer::VerificationReport report;
    report.claim = "kernel-eta";
    report.params = {{"m", m}, {"n", n}, {"d", d}};
    try {
      superbrauer::KernelResult kernel = superbrauer::kernel_eta(m, n, d);
      report.status = superbrauer::VerificationReport::Status::Verified;
      report.dims["ambient_dim"] = (long long)kernel.ambient_dim;
      report.dims["kernel_dim"] = (long long)kernel.kernel_dim;
    } catch (const superbrauer::BudgetError& error) {
      report.status = superbrauer::VerificationReport::Status::Skipped;
      report.witness = error.what();
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return make_report(std::move(report), nlohmann::json(), out);
  });
}

sbr_status sbr_verify_sft(int m, int n, int d, uint64_t seed, int samples,
                          sbr_report** out) {
  if (!out || m < 0 || n < 0 || d < 0 || samples < 0)
    return fail(SBR_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    superbrauer::SftOptions options;
    options.seed = seed;
    options.samples = samples == 0 ? 200 : samples;
    return make_report(superbrauer::verify_sft(m, n, d, options),
                       nlohmann::json(), out);
  });
}

sbr_status sbr_verify_sft_eta(int m, int n, int d, uint64_t seed,
                              sbr_report** out) {
  if (!out || m < 0 || n < 0 || d < 0)
    return fail(SBR_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    superbrauer::SftOptions options;
    options.seed = seed;
    return make_report(superbrauer::verify_sft_eta(m, n, d, options),
                       nlohmann::json(), out);
  });
}

sbr_status sbr_verify_fft_gl(int m, int ell, int r, sbr_report** out) {
  if (!out || m < 0 || ell < 0 || r < 0)
    return fail(SBR_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    return make_report(superbrauer::verify_fft_gl(m, ell, r),
                       nlohmann::json(), out);
  });
}

sbr_status sbr_classical(const char* family, int mn, int d, uint64_t seed,
                         sbr_report** out) {
  if (!out || !family || mn < 0 || d < 0)
    return fail(SBR_ERR_INVALID_ARGUMENT, "bad arguments");
  std::string name(family);
  if (name != "orth" && name != "symp")
    return fail(SBR_ERR_INVALID_ARGUMENT, "family must be orth or symp");
  return guarded([&] {
    superbrauer::ClassicalResult result =
        name == "orth" ? superbrauer::classical_orthogonal(mn, d, seed)
                       : superbrauer::classical_symplectic(mn, d, seed);
    return make_report(std::move(result.report), nlohmann::json(), out);
  });
}

sbr_status sbr_experiment_min_kernel(int m, int n, int d_max,
                                     char** out_json) {
  if (!out_json || m < 0 || n < 0 || d_max < 1)
    return fail(SBR_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    superbrauer::MinKernelExperiment experiment =
        superbrauer::experiment_min_kernel(m, n, d_max);
    *out_json =
        copy_string(superbrauer::experiment_to_json(experiment).dump());
    return SBR_OK;
  });
}

int sbr_report_verified(const sbr_report* report) {
  return report && report->report.verified() ? 1 : 0;
}

const char* sbr_report_status(const sbr_report* report) {
  if (!report) return "invalid";
  thread_local std::string status;
  status = superbrauer::to_string(report->report.status);
  return status.c_str();
}

sbr_status sbr_report_json(const sbr_report* report, char** out_json) {
  if (!report || !out_json)
    return fail(SBR_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    nlohmann::json j = superbrauer::report_to_json(report->report);
    if (!report->extra.is_null())
      for (auto it = report->extra.begin(); it != report->extra.end(); ++it)
        if (!j.contains(it.key())) j[it.key()] = it.value();
    *out_json = copy_string(j.dump(2));
    return SBR_OK;
  });
}

void sbr_report_free(sbr_report* report) { delete report; }

}  // extern "C"
