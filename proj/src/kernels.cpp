#include "superbrauer/kernels.hpp"

#include <cstdlib>
#include <map>

#include "superbrauer/ideal_stream.hpp"
#include "superbrauer/tensor_ops.hpp"

namespace superbrauer {

std::size_t max_rows_budget() {
  if (const char* env = std::getenv("SUPERBRAUER_MAX_ROWS")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
  }
  return 1000000;
}

void check_row_budget(std::size_t rows) {
  if (rows > max_rows_budget())
    throw BudgetError("evaluation matrix needs " + std::to_string(rows) +
                      " rows, over the budget of " +
                      std::to_string(max_rows_budget()) +
                      " (set SUPERBRAUER_MAX_ROWS to raise)");
}

namespace {

// Saturating power so oversized settings always trip the budget check
// instead of wrapping.
std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && value > SIZE_MAX / base) return SIZE_MAX;
    value *= base;
  }
  return value;
}

std::size_t double_factorial(std::size_t n) {
  std::size_t value = 1;
  for (std::size_t k = n; k > 1 && k <= n; k -= 2) {
    if (value > SIZE_MAX / k) return SIZE_MAX;
    value *= k;
  }
  return value;
}

}  // namespace

void check_kappa_budget(std::size_t m, std::size_t n, std::size_t d) {
  check_row_budget(power(m + 2 * n, 2 * d));
  std::size_t diagram_count = 2 * d == 0 ? 1 : double_factorial(2 * d - 1);
  if (diagram_count > max_rows_budget())
    throw BudgetError("diagram basis needs " + std::to_string(diagram_count) +
                      " columns, over the budget of " +
                      std::to_string(max_rows_budget()) +
                      " (set SUPERBRAUER_MAX_ROWS to raise)");
}

SparseMatrix kappa_matrix(std::size_t m, std::size_t n, std::size_t d) {
  check_kappa_budget(m, n, d);
  SuperSpace space = SuperSpace::orthosymplectic(m, n);
  const std::size_t rows = power(space.dim(), 2 * d);
  std::vector<BrauerDiagram> diagrams = enumerate_diagrams(2 * d, 0);
  SparseMatrix matrix(rows, diagrams.size());
  for (std::size_t j = 0; j < diagrams.size(); ++j) {
    SparseVec column = kappa_vector(space, diagrams[j]);
    for (const auto& [row, value] : column.terms()) matrix.add(row, j, value);
  }
  return matrix;
}

KernelResult kernel_kappa(std::size_t m, std::size_t n, std::size_t d) {
  SparseMatrix matrix = kappa_matrix(m, n, d);
  KernelResult result;
  result.m = m;
  result.n = n;
  result.degree = d;
  result.coord_p = 2 * d;
  result.coord_q = 0;
  result.ambient_dim = matrix.n_cols();
  result.basis = nullspace_basis(matrix);
  result.kernel_dim = result.basis.size();
  return result;
}

KernelResult kernel_eta(std::size_t m, std::size_t n, std::size_t d) {
  check_kappa_budget(m, n, d);
  SuperSpace space = SuperSpace::orthosymplectic(m, n);
  const std::size_t rows = power(space.dim(), 2 * d);
  std::vector<BrauerDiagram> diagrams = enumerate_diagrams(d, d);
  SparseMatrix matrix(rows, diagrams.size());
  for (std::size_t j = 0; j < diagrams.size(); ++j) {
    SparseVec column = eta_operator(space, diagrams[j]).vectorize();
    for (const auto& [row, value] : column.terms()) matrix.add(row, j, value);
  }
  KernelResult result;
  result.m = m;
  result.n = n;
  result.degree = d;
  result.coord_p = d;
  result.coord_q = d;
  result.ambient_dim = diagrams.size();
  result.basis = nullspace_basis(matrix);
  result.kernel_dim = result.basis.size();
  return result;
}

SparseVec d0_image(const GroupAlgebraElement& x,
                   const std::vector<BrauerDiagram>& diagram_order) {
  if (x.degree() % 2 != 0)
    throw std::invalid_argument("group algebra degree must be even");
  std::map<BrauerDiagram, std::size_t> index;
  for (std::size_t i = 0; i < diagram_order.size(); ++i)
    index.emplace(diagram_order[i], i);
  BrauerDiagram d0 = adjacent_pairing(x.degree() / 2);
  SparseVec image;
  for (const auto& [g, c] : x.terms()) {
    StackedComposition stacked = stack_diagrams(d0, permutation_diagram(g));
    image.add(index.at(stacked.diagram), c);  // permutations close no loops
  }
  return image;
}

SpanResult span_d0_ideal(std::size_t m, std::size_t n, std::size_t d,
                         const SpanOptions& options) {
  std::vector<BrauerDiagram> diagrams = enumerate_diagrams(2 * d, 0);
  SpanResult result;
  result.ambient_dim = diagrams.size();

  IdealSpanStream stream(m, n, d, options.seed);
  if (stream.empty()) {
    result.certificate = SpanCertificate::Exhaustive;
    return result;
  }

  SpanTracker tracker(diagrams.size());
  auto finish = [&](SpanCertificate certificate) {
    result.rank = tracker.rank();
    result.basis = tracker.basis();
    result.certificate = certificate;
    return result;
  };

  std::size_t stalled = 0, rotations_used = 0;
  while (result.samples < options.sample_cap) {
    GroupAlgebraElement x = stream.next();
    ++result.samples;
    bool grew = tracker.add(d0_image(x, diagrams));
    if (options.upper_bound && tracker.rank() >= *options.upper_bound)
      return finish(SpanCertificate::ReachedBound);
    stalled = grew ? 0 : stalled + 1;
    if (stalled >= options.stall_window) {
      if (rotations_used < options.seed_rotations) {
        ++rotations_used;
        stream.reseed(options.seed + rotations_used);
        stalled = 0;
        continue;
      }
      break;
    }
  }

  // Exhaustive fallback: the span of p * e * q over all pairs equals the span
  // of D' composed with e * q over all diagrams D' and permutations q, since
  // composing the reference pairing with p only moves it through the diagram
  // set.
  if (2 * d <= 6) {
    const GroupAlgebraElement& e = stream.generator();
    std::map<BrauerDiagram, std::size_t> index;
    for (std::size_t i = 0; i < diagrams.size(); ++i)
      index.emplace(diagrams[i], i);
    for (const BrauerDiagram& base : diagrams) {
      for (const Permutation& q : all_permutations(2 * d)) {
        GroupAlgebraElement x = e * GroupAlgebraElement::of(q);
        SparseVec image;
        for (const auto& [g, c] : x.terms()) {
          StackedComposition stacked =
              stack_diagrams(base, permutation_diagram(g));
          image.add(index.at(stacked.diagram), c);
        }
        tracker.add(image);
        if (options.upper_bound && tracker.rank() >= *options.upper_bound)
          return finish(SpanCertificate::ReachedBound);
      }
    }
    return finish(SpanCertificate::Exhaustive);
  }
  return finish(SpanCertificate::Stabilized);
}

}  // namespace superbrauer
