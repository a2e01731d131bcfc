// Command line front end. Talks to the engine exclusively through the shared
// library's C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "superbrauer.h"

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
// Distinct code for span certificates that stalled below the proven bound;
// the claim was not falsified but is not fully verified either.
constexpr int kExitProbabilistic = 3;

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int finish_report(sbr_status status, sbr_report* report) {
  if (status != SBR_OK) {
    std::cerr << "error: " << sbr_last_error() << "\n";
    return kExitUsage;
  }
  char* json_text = nullptr;
  if (sbr_report_json(report, &json_text) != SBR_OK) {
    sbr_report_free(report);
    return fail_usage(sbr_last_error());
  }
  std::cout << json_text << "\n";
  sbr_free_string(json_text);
  std::string state = sbr_report_status(report);
  sbr_report_free(report);
  if (state == "verified") return kExitVerified;
  if (state == "verified-probabilistic") return kExitProbabilistic;
  if (state == "skipped") return kExitUsage;
  return kExitFalsified;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact diagram-calculus engine for orthosymplectic tensor "
               "invariants"};
  app.require_subcommand(1);

  // diagrams enumerate
  auto* diagrams = app.add_subcommand("diagrams", "Diagram utilities");
  diagrams->require_subcommand(1);
  auto* enumerate = diagrams->add_subcommand(
      "enumerate", "List all diagrams p -> q in canonical order");
  int en_p = 0, en_q = 0;
  bool en_json = false;
  enumerate->add_option("--p", en_p, "source points")->required();
  enumerate->add_option("--q", en_q, "target points")->required();
  enumerate->add_flag("--json", en_json, "emit a JSON array");

  // compose
  auto* compose_cmd =
      app.add_subcommand("compose", "Compose FILE1 * FILE2 (FILE2 acts "
                         "first); files hold diagram or hom-element JSON");
  long long delta = 0;
  std::string file1, file2;
  compose_cmd->add_option("--delta", delta, "loop parameter")->required();
  compose_cmd->add_option("file1", file1, "top factor")->required();
  compose_cmd->add_option("file2", file2, "bottom factor")->required();

  // kernel-kappa
  auto* kkappa = app.add_subcommand(
      "kernel-kappa", "Null space of the pairing-functional evaluation");
  int km = 0, kn = 0, kd = 0;
  std::string basis_out;
  kkappa->add_option("--m", km)->required();
  kkappa->add_option("--n", kn)->required();
  kkappa->add_option("--d", kd)->required();
  kkappa->add_option("--basis-out", basis_out,
                     "write the kernel basis (JSON) to this file");

  // kernel-eta
  auto* keta = app.add_subcommand(
      "kernel-eta", "Null space of the Brauer algebra action");
  int em = 0, en = 0, ed = 0;
  keta->add_option("--m", em)->required();
  keta->add_option("--n", en)->required();
  keta->add_option("--d", ed)->required();

  // verify-sft
  auto* vsft = app.add_subcommand(
      "verify-sft", "Certify the relations among pairing functionals");
  int sm = 0, sn = 0, sd = 0, samples = 200;
  std::uint64_t seed = 1;
  vsft->add_option("--m", sm)->required();
  vsft->add_option("--n", sn)->required();
  vsft->add_option("--d", sd)->required();
  vsft->add_option("--seed", seed, "sampling seed");
  vsft->add_option("--samples", samples, "membership samples");

  // verify-fft-gl
  auto* vfft = app.add_subcommand(
      "verify-fft-gl",
      "Symmetric group action rank against the rectangle-ideal prediction");
  int fm = 0, fell = 0, fr = 0;
  vfft->add_option("--m", fm)->required();
  vfft->add_option("--ell", fell)->required();
  vfft->add_option("--r", fr)->required();

  // classical
  auto* classical = app.add_subcommand(
      "classical", "Classical orthogonal/symplectic relation families");
  std::string family;
  int cm = -1, cn = -1, cd = 0;
  classical->add_option("--case", family, "orth or symp")->required();
  classical->add_option("--m", cm, "m (orthogonal case)");
  classical->add_option("--n", cn, "n (symplectic case)");
  classical->add_option("--d", cd)->required();

  // experiment
  auto* experiment = app.add_subcommand(
      "experiment", "Observational sweeps (no claims asserted)");
  experiment->require_subcommand(1);
  auto* min_kernel = experiment->add_subcommand(
      "min-kernel", "Kernel dimensions for d = 1..dmax");
  int xm = 0, xn = 0, xdmax = 4;
  min_kernel->add_option("--m", xm)->required();
  min_kernel->add_option("--n", xn)->required();
  min_kernel->add_option("--dmax", xdmax);

  CLI11_PARSE(app, argc, argv);

  if (*enumerate) {
    char* json_text = nullptr;
    if (sbr_enumerate_diagrams(en_p, en_q, &json_text) != SBR_OK)
      return fail_usage(sbr_last_error());
    if (en_json) {
      std::cout << json_text << "\n";
    } else {
      auto list = nlohmann::json::parse(json_text);
      for (const auto& diagram : list) {
        std::string line;
        for (const auto& arc : diagram.at("arcs")) {
          if (!line.empty()) line += " ";
          line += std::to_string(arc[0].get<int>()) + "-" +
                  std::to_string(arc[1].get<int>());
        }
        std::cout << (line.empty() ? "(empty)" : line) << "\n";
      }
    }
    sbr_free_string(json_text);
    return kExitVerified;
  }

  if (*compose_cmd) {
    std::string top, bottom;
    try {
      top = read_file(file1);
      bottom = read_file(file2);
    } catch (const CLI::ValidationError& error) {
      return fail_usage(error.what());
    }
    char* json_text = nullptr;
    if (sbr_compose(delta, top.c_str(), bottom.c_str(), &json_text) != SBR_OK)
      return fail_usage(sbr_last_error());
    std::cout << json_text << "\n";
    sbr_free_string(json_text);
    return kExitVerified;
  }

  if (*kkappa) {
    sbr_report* report = nullptr;
    sbr_status status =
        sbr_kernel_kappa(km, kn, kd, basis_out.empty() ? 0 : 1, &report);
    if (status == SBR_OK && !basis_out.empty()) {
      char* json_text = nullptr;
      if (sbr_report_json(report, &json_text) == SBR_OK) {
        auto full = nlohmann::json::parse(json_text);
        std::ofstream out(basis_out);
        if (!out) {
          sbr_free_string(json_text);
          sbr_report_free(report);
          return fail_usage("cannot write file: " + basis_out);
        }
        nlohmann::json basis_file{{"params", full.value("params", nlohmann::json())},
                                  {"ambient_dim", full.value("ambient_dim", 0)},
                                  {"kernel_dim", full.value("kernel_dim", 0)},
                                  {"diagram_order", full.value("diagram_order", nlohmann::json::array())},
                                  {"basis", full.value("basis", nlohmann::json::array())}};
        out << basis_file.dump(2) << "\n";
        sbr_free_string(json_text);
      }
    }
    return finish_report(status, report);
  }

  if (*keta) {
    sbr_report* report = nullptr;
    sbr_status status = sbr_kernel_eta(em, en, ed, &report);
    return finish_report(status, report);
  }

  if (*vsft) {
    sbr_report* report = nullptr;
    sbr_status status = sbr_verify_sft(sm, sn, sd, seed, samples, &report);
    return finish_report(status, report);
  }

  if (*vfft) {
    sbr_report* report = nullptr;
    sbr_status status = sbr_verify_fft_gl(fm, fell, fr, &report);
    return finish_report(status, report);
  }

  if (*classical) {
    int mn;
    if (family == "orth") {
      if (cm < 0) return fail_usage("classical --case orth needs --m");
      mn = cm;
    } else if (family == "symp") {
      if (cn < 0) return fail_usage("classical --case symp needs --n");
      mn = cn;
    } else {
      return fail_usage("--case must be orth or symp");
    }
    sbr_report* report = nullptr;
    sbr_status status = sbr_classical(family.c_str(), mn, cd, 1, &report);
    return finish_report(status, report);
  }

  if (*min_kernel) {
    char* json_text = nullptr;
    if (sbr_experiment_min_kernel(xm, xn, xdmax, &json_text) != SBR_OK)
      return fail_usage(sbr_last_error());
    std::cout << json_text << "\n";
    sbr_free_string(json_text);
    return kExitVerified;
  }

  return fail_usage("no subcommand handled");
}
