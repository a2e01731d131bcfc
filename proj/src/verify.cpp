#include "superbrauer/verify.hpp"

#include <algorithm>
#include <chrono>

#include "superbrauer/ideal_stream.hpp"
#include "superbrauer/partition.hpp"
#include "superbrauer/tensor_ops.hpp"

namespace superbrauer {

std::string to_string(VerificationReport::Status status) {
  switch (status) {
    case VerificationReport::Status::Verified:
      return "verified";
    case VerificationReport::Status::Falsified:
      return "falsified";
    case VerificationReport::Status::Skipped:
      return "skipped";
    case VerificationReport::Status::VerifiedProbabilistic:
      return "verified-probabilistic";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) value *= base;
  return value;
}

/// v interpreted over the columns of M: returns M * v via the transpose.
SparseVec column_combination(const SparseMatrix& transposed,
                             const SparseVec& v) {
  SparseVec acc;
  for (const auto& [column, coeff] : v.terms())
    acc.add_scaled(transposed.row(column), coeff);
  return acc;
}

std::vector<std::vector<std::uint32_t>> subsets_of_size(
    const std::vector<std::uint32_t>& pool, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  if (k == 0 || k > pool.size()) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<std::uint32_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[pick[i]];
    out.push_back(std::move(subset));
    std::size_t i = k;
    while (i-- > 0) {
      if (pick[i] + (k - i) < pool.size()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

void pairings_of(const std::vector<std::uint32_t>& points,
                 std::vector<BrauerDiagram::Arc>& partial,
                 std::vector<std::vector<BrauerDiagram::Arc>>& out) {
  if (points.empty()) {
    out.push_back(partial);
    return;
  }
  std::uint32_t first = points.front();
  for (std::size_t k = 1; k < points.size(); ++k) {
    std::vector<std::uint32_t> rest;
    for (std::size_t j = 1; j < points.size(); ++j)
      if (j != k) rest.push_back(points[j]);
    partial.emplace_back(first, points[k]);
    pairings_of(rest, partial, out);
    partial.pop_back();
  }
}

}  // namespace

VerificationReport verify_sft(std::size_t m, std::size_t n, std::size_t d,
                              const SftOptions& options) {
  auto start = Clock::now();
  VerificationReport report;
  report.claim = "sft-osp";
  report.params = {{"m", (long long)m}, {"n", (long long)n},
                   {"d", (long long)d}, {"seed", (long long)options.seed},
                   {"samples", (long long)options.samples}};
  try {
    check_kappa_budget(m, n, d);
    std::vector<BrauerDiagram> diagrams = enumerate_diagrams(2 * d, 0);
    SparseMatrix matrix = kappa_matrix(m, n, d);
    SparseMatrix transposed = matrix.transpose();
    std::vector<SparseVec> kernel = nullspace_basis(matrix);
    const std::size_t kernel_dim = kernel.size();

    report.dims["ambient_dim"] = (long long)diagrams.size();
    report.dims["kernel_dim"] = (long long)kernel_dim;

    // (a) Sampled generators of the ideal image must pair to zero against
    // every basis tensor, exactly.
    IdealSpanStream stream(m, n, d, options.seed);
    std::size_t samples_checked = 0;
    for (std::size_t s = 0; s < options.samples; ++s) {
      GroupAlgebraElement x = stream.next();
      SparseVec image = d0_image(x, diagrams);
      ++samples_checked;
      if (!column_combination(transposed, image).empty()) {
        report.status = VerificationReport::Status::Falsified;
        report.witness = "generator outside the kernel at sample " +
                         std::to_string(s) + " (pair " +
                         stream.last_pair().first.to_cycles() + ", " +
                         stream.last_pair().second.to_cycles() + ")";
        report.elapsed_ms = ms_since(start);
        return report;
      }
      if (stream.empty()) break;  // the zero stream needs one look only
    }
    report.dims["samples_checked"] = (long long)samples_checked;

    // (b) The ideal image span must reach the kernel dimension.
    SpanOptions span_options;
    span_options.seed = options.seed;
    span_options.upper_bound = kernel_dim;
    SpanResult span = span_d0_ideal(m, n, d, span_options);
    report.dims["span_rank"] = (long long)span.rank;
    report.dims["span_samples"] = (long long)span.samples;

    if (span.rank > kernel_dim) {
      report.status = VerificationReport::Status::Falsified;
      report.witness = "span rank exceeds kernel dimension";
    } else if (span.rank == kernel_dim) {
      report.status = VerificationReport::Status::Verified;
    } else if (span.certificate == SpanCertificate::Exhaustive) {
      report.status = VerificationReport::Status::Falsified;
      report.witness = "exhaustive span rank " + std::to_string(span.rank) +
                       " below kernel dimension " + std::to_string(kernel_dim);
    } else {
      report.status = VerificationReport::Status::VerifiedProbabilistic;
      report.witness = "span stalled at rank " + std::to_string(span.rank) +
                       " below kernel dimension " + std::to_string(kernel_dim);
    }
  } catch (const BudgetError& error) {
    report.status = VerificationReport::Status::Skipped;
    report.witness = error.what();
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_sft_eta(std::size_t m, std::size_t n, std::size_t d,
                                  const SftOptions& options) {
  auto start = Clock::now();
  VerificationReport report;
  report.claim = "sft-eta";
  report.params = {{"m", (long long)m}, {"n", (long long)n},
                   {"d", (long long)d}, {"seed", (long long)options.seed}};
  try {
    check_kappa_budget(m, n, d);
    SuperSpace space = SuperSpace::orthosymplectic(m, n);
    KernelResult kappa_kernel = kernel_kappa(m, n, d);
    KernelResult eta_kernel = kernel_eta(m, n, d);
    report.dims["kappa_kernel_dim"] = (long long)kappa_kernel.kernel_dim;
    report.dims["eta_kernel_dim"] = (long long)eta_kernel.kernel_dim;

    if (eta_kernel.kernel_dim != kappa_kernel.kernel_dim) {
      report.status = VerificationReport::Status::Falsified;
      report.witness = "kernel dimensions differ across formulations";
      report.elapsed_ms = ms_since(start);
      return report;
    }

    SpanOptions span_options;
    span_options.seed = options.seed;
    span_options.upper_bound = kappa_kernel.kernel_dim;
    SpanResult span = span_d0_ideal(m, n, d, span_options);
    report.dims["span_rank"] = (long long)span.rank;

    // Bending d times is a relabeling bijection from 2d -> 0 diagrams onto
    // d -> d diagrams; carry the span basis across it.
    std::vector<BrauerDiagram> source = enumerate_diagrams(2 * d, 0);
    std::vector<BrauerDiagram> target = enumerate_diagrams(d, d);
    std::map<BrauerDiagram, std::size_t> target_index;
    for (std::size_t i = 0; i < target.size(); ++i)
      target_index.emplace(target[i], i);
    std::vector<std::size_t> bent_index(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
      BrauerDiagram image = source[i];
      for (std::size_t k = 0; k < d; ++k) image = bend(image);
      bent_index[i] = target_index.at(image);
    }

    // Operators of the d -> d diagrams, computed once.
    std::vector<SparseMatrix> operators;
    operators.reserve(target.size());
    for (const auto& diagram : target)
      operators.push_back(eta_operator(space, diagram));

    SpanTracker eta_kernel_span(target.size());
    for (const auto& v : eta_kernel.basis) eta_kernel_span.add(v);

    for (const auto& v : span.basis) {
      SparseVec bent;
      for (const auto& [index, coeff] : v.terms())
        bent.add(bent_index[index], coeff);
      // Coordinate level: the bent vector solves the eta kernel system.
      if (!eta_kernel_span.contains(bent)) {
        report.status = VerificationReport::Status::Falsified;
        report.witness = "bent span vector outside the eta kernel basis span";
        report.elapsed_ms = ms_since(start);
        return report;
      }
      // Operator level: the corresponding combination acts as zero.
      SparseMatrix action(power(space.dim(), d), power(space.dim(), d));
      for (const auto& [index, coeff] : bent.terms()) {
        SparseMatrix term = operators[index];
        term.scale(coeff);
        action = action + term;
      }
      if (!action.is_zero()) {
        report.status = VerificationReport::Status::Falsified;
        report.witness = "bent span vector acts as a nonzero operator";
        report.elapsed_ms = ms_since(start);
        return report;
      }
    }

    if (span.rank == kappa_kernel.kernel_dim) {
      report.status = VerificationReport::Status::Verified;
    } else if (span.certificate == SpanCertificate::Exhaustive) {
      report.status = VerificationReport::Status::Falsified;
      report.witness = "exhaustive span below kernel dimension";
    } else {
      report.status = VerificationReport::Status::VerifiedProbabilistic;
      report.witness = "span stalled below kernel dimension";
    }
  } catch (const BudgetError& error) {
    report.status = VerificationReport::Status::Skipped;
    report.witness = error.what();
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_fft_gl(std::size_t m, std::size_t ell,
                                 std::size_t r) {
  auto start = Clock::now();
  VerificationReport report;
  report.claim = "fft-gl";
  report.params = {
      {"m", (long long)m}, {"ell", (long long)ell}, {"r", (long long)r}};
  try {
    SuperSpace space = SuperSpace::graded(m, ell);
    const std::size_t rows = power(space.dim(), 2 * r);
    check_row_budget(rows);
    std::vector<Permutation> perms = all_permutations(r);
    SparseMatrix matrix(rows, perms.size());
    for (std::size_t j = 0; j < perms.size(); ++j) {
      SparseVec column = permutation_action(space, perms[j], r).vectorize();
      for (const auto& [row, value] : column.terms())
        matrix.add(row, j, value);
    }
    const std::size_t matrix_rank = rank(matrix);
    const std::size_t kernel_dim = perms.size() - matrix_rank;
    Integer predicted = rectangle_ideal_dimension(m + 1, ell + 1, r);
    const bool injective_expected = r <= m * ell + m + ell;

    report.dims["group_order"] = (long long)perms.size();
    report.dims["rank"] = (long long)matrix_rank;
    report.dims["kernel_dim"] = (long long)kernel_dim;
    report.dims["predicted_kernel_dim"] = (long long)predicted.get_si();

    bool ok = Integer((unsigned long)kernel_dim) == predicted &&
              (kernel_dim == 0) == injective_expected;
    report.status = ok ? VerificationReport::Status::Verified
                       : VerificationReport::Status::Falsified;
    if (!ok) report.witness = "kernel dimension disagrees with prediction";
  } catch (const BudgetError& error) {
    report.status = VerificationReport::Status::Skipped;
    report.witness = error.what();
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

namespace {

ClassicalResult classical_family(
    bool orthogonal, std::size_t mn, std::size_t d, std::uint64_t seed) {
  auto start = Clock::now();
  ClassicalResult result;
  VerificationReport& report = result.report;
  report.claim = orthogonal ? "classical-orth" : "classical-symp";
  report.params = {{orthogonal ? "m" : "n", (long long)mn},
                   {"d", (long long)d}};
  const std::size_t m = orthogonal ? mn : 0;
  const std::size_t n = orthogonal ? 0 : mn;
  const std::size_t block = orthogonal ? mn + 1 : 2 * mn + 1;
  try {
    check_kappa_budget(m, n, d);
    std::vector<BrauerDiagram> diagrams = enumerate_diagrams(2 * d, 0);
    std::map<BrauerDiagram, std::size_t> index;
    for (std::size_t i = 0; i < diagrams.size(); ++i)
      index.emplace(diagrams[i], i);
    SparseMatrix matrix = kappa_matrix(m, n, d);
    SparseMatrix transposed = matrix.transpose();
    std::vector<SparseVec> kernel = nullspace_basis(matrix);
    report.dims["ambient_dim"] = (long long)diagrams.size();
    report.dims["kernel_dim"] = (long long)kernel.size();

    std::vector<std::uint32_t> all_points(2 * d);
    for (std::size_t i = 0; i < 2 * d; ++i)
      all_points[i] = static_cast<std::uint32_t>(i);

    if (block <= 2 * d) {
      if (orthogonal) {
        // Signed symmetrization of the pairing between two disjoint blocks,
        // over every pairing of the remaining points.
        std::vector<Permutation> sym = all_permutations(block);
        for (const auto& s_set : subsets_of_size(all_points, block)) {
          std::vector<std::uint32_t> complement;
          for (std::uint32_t point : all_points)
            if (std::find(s_set.begin(), s_set.end(), point) == s_set.end())
              complement.push_back(point);
          for (const auto& s_prime : subsets_of_size(complement, block)) {
            std::vector<std::uint32_t> rest;
            for (std::uint32_t point : complement)
              if (std::find(s_prime.begin(), s_prime.end(), point) ==
                  s_prime.end())
                rest.push_back(point);
            std::vector<std::vector<BrauerDiagram::Arc>> rest_pairings;
            std::vector<BrauerDiagram::Arc> partial;
            pairings_of(rest, partial, rest_pairings);
            for (const auto& rest_arcs : rest_pairings) {
              SparseVec relation;
              for (const Permutation& sigma : sym) {
                std::vector<BrauerDiagram::Arc> arcs = rest_arcs;
                for (std::size_t i = 0; i < block; ++i)
                  arcs.emplace_back(s_set[sigma(i)], s_prime[i]);
                relation.add(index.at(BrauerDiagram(2 * d, 0, arcs)),
                             Rational(sigma.sign()));
              }
              if (!relation.empty()) result.relations.push_back(relation);
            }
          }
        }
      } else {
        // Plain symmetrization of every diagram over one block.
        std::vector<Permutation> sym = all_permutations(block);
        for (const auto& s_set : subsets_of_size(all_points, block)) {
          for (const BrauerDiagram& diagram : diagrams) {
            SparseVec relation;
            for (const Permutation& sigma : sym) {
              std::vector<std::uint32_t> images(2 * d);
              for (std::size_t i = 0; i < 2 * d; ++i)
                images[i] = static_cast<std::uint32_t>(i);
              for (std::size_t i = 0; i < block; ++i)
                images[s_set[i]] = s_set[sigma(i)];
              StackedComposition stacked = stack_diagrams(
                  diagram,
                  permutation_diagram(Permutation::from_images(images)));
              relation.add(index.at(stacked.diagram), Rational(1));
            }
            if (!relation.empty()) result.relations.push_back(relation);
          }
        }
      }
    }
    report.dims["family_size"] = (long long)result.relations.size();

    // Membership: every relation annihilates all basis tensors, exactly.
    for (std::size_t i = 0; i < result.relations.size(); ++i) {
      if (!column_combination(transposed, result.relations[i]).empty()) {
        report.status = VerificationReport::Status::Falsified;
        report.witness = "relation " + std::to_string(i) +
                         " is not in the kernel";
        report.elapsed_ms = ms_since(start);
        return result;
      }
    }

    bool ok = true;
    if (2 * d <= 8) {
      SpanTracker tracker(diagrams.size());
      for (const auto& relation : result.relations) tracker.add(relation);
      report.dims["span_rank"] = (long long)tracker.rank();
      if (tracker.rank() != kernel.size()) {
        ok = false;
        report.witness = "relation family does not span the kernel";
      }
    }

    const std::size_t small_bound = orthogonal ? m : n;
    if (d <= small_bound) {
      if (!kernel.empty()) {
        ok = false;
        report.witness = "kernel expected to vanish for small d";
      }
      if (orthogonal && m + 1 <= 2 * d) {
        // Pushing the alternating sum over m+1 symbols through the reference
        // pairing must collapse every sampled element to zero.
        std::vector<std::uint32_t> symbols(m + 1);
        for (std::size_t i = 0; i <= m; ++i)
          symbols[i] = static_cast<std::uint32_t>(i);
        GroupAlgebraElement alternating =
            alpha_minus(2 * d, symmetric_subgroup(2 * d, symbols));
        SplitMix64 rng(seed);
        for (int trial = 0; trial < 20; ++trial) {
          Permutation p = random_permutation(2 * d, rng);
          Permutation q = random_permutation(2 * d, rng);
          GroupAlgebraElement x = GroupAlgebraElement::of(p) * alternating *
                                  GroupAlgebraElement::of(q);
          if (!d0_image(x, diagrams).empty()) {
            ok = false;
            report.witness = "alternating push-through is nonzero at trial " +
                             std::to_string(trial);
            break;
          }
        }
      }
    }

    report.status = ok ? VerificationReport::Status::Verified
                       : VerificationReport::Status::Falsified;
  } catch (const BudgetError& error) {
    report.status = VerificationReport::Status::Skipped;
    report.witness = error.what();
  }
  report.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace

ClassicalResult classical_orthogonal(std::size_t m, std::size_t d,
                                     std::uint64_t seed) {
  return classical_family(true, m, d, seed);
}

ClassicalResult classical_symplectic(std::size_t n, std::size_t d,
                                     std::uint64_t seed) {
  return classical_family(false, n, d, seed);
}

MinKernelExperiment experiment_min_kernel(std::size_t m, std::size_t n,
                                          std::size_t d_max) {
  auto start = Clock::now();
  MinKernelExperiment experiment;
  experiment.m = m;
  experiment.n = n;
  for (std::size_t d = 1; d <= d_max; ++d) {
    try {
      KernelResult kernel = kernel_kappa(m, n, d);
      experiment.kernel_dims.emplace_back(d, kernel.kernel_dim);
      if (kernel.kernel_dim > 0 && experiment.first_nonzero_d < 0)
        experiment.first_nonzero_d = static_cast<long long>(d);
    } catch (const BudgetError&) {
      experiment.budget_stopped_at = d;
      break;
    }
  }
  experiment.elapsed_ms = ms_since(start);
  return experiment;
}

}  // namespace superbrauer
