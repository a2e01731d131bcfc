#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "superbrauer/diagram.hpp"
#include "superbrauer/sparse.hpp"

namespace superbrauer {

/// Thrown when a computation would exceed the configured row budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row budget for evaluation matrices; default 10^6, overridden by the
/// environment variable SUPERBRAUER_MAX_ROWS.
std::size_t max_rows_budget();
void check_row_budget(std::size_t rows);
/// Rejects settings whose evaluation matrix (rows or diagram columns) blows
/// the budget, before anything is enumerated.
void check_kappa_budget(std::size_t m, std::size_t n, std::size_t d);

/// Evaluation matrix of the pairing functionals: rows are basis multi-indices
/// of the 2d-th tensor power of the (m|2n) space, columns run over the
/// canonical order of pairing diagrams 2d -> 0. Integer entries.
SparseMatrix kappa_matrix(std::size_t m, std::size_t n, std::size_t d);

struct KernelResult {
  std::size_t m = 0, n = 0;
  std::size_t degree = 0;                   // d
  std::size_t coord_p = 0, coord_q = 0;     // diagram coordinate arity
  std::size_t ambient_dim = 0;              // number of diagram coordinates
  std::size_t kernel_dim = 0;
  std::vector<SparseVec> basis;
};

/// Exact null space of kappa_matrix in diagram coordinates.
KernelResult kernel_kappa(std::size_t m, std::size_t n, std::size_t d);

/// Exact null space of the Brauer algebra action on the d-th tensor power,
/// in the diagram coordinates of the d -> d hom space.
KernelResult kernel_eta(std::size_t m, std::size_t n, std::size_t d);

struct SpanOptions {
  std::uint64_t seed = 1;
  std::size_t stall_window = 50;   // consecutive non-growing samples
  std::size_t seed_rotations = 2;  // extra seeds tried after a stall
  std::optional<std::size_t> upper_bound;
  std::size_t sample_cap = 200000;  // hard stop
};

enum class SpanCertificate {
  ReachedBound,  // rank hit the supplied upper bound
  Exhaustive,    // the full generating family was enumerated
  Stabilized,    // sampling stalled below the bound (probabilistic only)
};

struct SpanResult {
  std::size_t ambient_dim = 0;
  std::size_t rank = 0;
  std::vector<SparseVec> basis;
  SpanCertificate certificate = SpanCertificate::Stabilized;
  std::size_t samples = 0;
};

/// Span of the ideal generated by the rectangular symmetrizer, pushed into
/// diagram coordinates through composition with the reference pairing.
/// Terminates on the upper bound when one is supplied; otherwise samples
/// until stable, with an exhaustive fallback for 2d <= 6.
SpanResult span_d0_ideal(std::size_t m, std::size_t n, std::size_t d,
                         const SpanOptions& options = {});

/// Image of one group algebra element under composition with the reference
/// pairing, in the given diagram coordinate order.
SparseVec d0_image(const GroupAlgebraElement& x,
                   const std::vector<BrauerDiagram>& diagram_order);

}  // namespace superbrauer
