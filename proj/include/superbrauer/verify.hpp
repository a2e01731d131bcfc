#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superbrauer/kernels.hpp"

namespace superbrauer {

/// Structured outcome of one verification claim. Falsified reports always
/// carry a witness description.
struct VerificationReport {
  enum class Status { Verified, Falsified, Skipped, VerifiedProbabilistic };

  std::string claim;
  std::map<std::string, long long> params;
  Status status = Status::Skipped;
  std::map<std::string, long long> dims;
  std::string witness;  // empty unless falsified / skipped
  long long elapsed_ms = 0;

  bool verified() const { return status == Status::Verified; }
};

std::string to_string(VerificationReport::Status status);

struct SftOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 200;  // membership checks of streamed generators
};

/// Checks that the ideal image lies in the kernel of the functional
/// evaluation (sampled generators, exact products) and that its span reaches
/// the kernel dimension.
VerificationReport verify_sft(std::size_t m, std::size_t n, std::size_t d,
                              const SftOptions& options = {});

/// Cross-formulation check: the kernel of the Brauer algebra action has the
/// same dimension as the functional kernel, and the bent ideal span basis
/// lands in it exactly (both as coordinate vectors and as operators).
VerificationReport verify_sft_eta(std::size_t m, std::size_t n, std::size_t d,
                                  const SftOptions& options = {});

/// Rank and kernel of the symmetric group action on the r-th tensor power of
/// an (m|ell) space against the rectangle-ideal prediction.
VerificationReport verify_fft_gl(std::size_t m, std::size_t ell,
                                 std::size_t r);

struct ClassicalResult {
  VerificationReport report;
  std::vector<SparseVec> relations;  // in diagram coordinates
};

/// Orthogonal relation family: signed symmetrizations over an (m+1)-subset
/// paired against a disjoint one. Verifies membership in the kernel, spanning
/// for 2d <= 8, and vanishing for d <= m.
ClassicalResult classical_orthogonal(std::size_t m, std::size_t d,
                                     std::uint64_t seed = 1);

/// Symplectic relation family: plain symmetrizations of diagrams over a
/// (2n+1)-subset. Verifies membership, spanning for 2d <= 8, and vanishing
/// for d <= n.
ClassicalResult classical_symplectic(std::size_t n, std::size_t d,
                                     std::uint64_t seed = 1);

/// Reports kernel dimensions for d = 1..d_max and the first nonzero one.
/// Observational only; asserts nothing.
struct MinKernelExperiment {
  std::size_t m = 0, n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> kernel_dims;  // (d, dim)
  long long first_nonzero_d = -1;  // -1 if none seen
  std::size_t budget_stopped_at = 0;  // 0 if the sweep completed
  long long elapsed_ms = 0;
};
MinKernelExperiment experiment_min_kernel(std::size_t m, std::size_t n,
                                          std::size_t d_max);

}  // namespace superbrauer
