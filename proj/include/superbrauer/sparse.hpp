#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "superbrauer/rational.hpp"

namespace superbrauer {

/// Sparse vector over Q: strictly increasing indices, no stored zeros.
class SparseVec {
 public:
  using Term = std::pair<std::size_t, Rational>;

  SparseVec() = default;
  static SparseVec unit(std::size_t index);
  static SparseVec from_dense(const std::vector<Rational>& dense);

  bool empty() const { return terms_.empty(); }
  std::size_t nnz() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Leading (smallest-index) term; vector must be nonzero.
  const Term& leading() const;

  Rational get(std::size_t index) const;
  /// Accumulates `value` at `index`, dropping the entry if it cancels.
  void add(std::size_t index, const Rational& value);

  /// this += c * other (single sorted merge).
  void add_scaled(const SparseVec& other, const Rational& c);
  void scale(const Rational& c);
  void negate();

  /// Rescales to a primitive integer vector with positive leading entry.
  /// No-op on the zero vector.
  void make_primitive();

  std::vector<Rational> to_dense(std::size_t length) const;

  bool operator==(const SparseVec& other) const { return terms_ == other.terms_; }

 private:
  std::vector<Term> terms_;
};

Rational dot(const SparseVec& a, const std::vector<Rational>& dense);

/// Sparse matrix over Q, stored by rows. No explicit zeros.
class SparseMatrix {
 public:
  SparseMatrix() : n_rows_(0), n_cols_(0) {}
  SparseMatrix(std::size_t n_rows, std::size_t n_cols);
  static SparseMatrix identity(std::size_t n);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }

  Rational get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, const Rational& value);
  void add(std::size_t row, std::size_t col, const Rational& value);

  const SparseVec& row(std::size_t i) const { return rows_[i]; }
  SparseVec& row(std::size_t i) { return rows_[i]; }

  std::size_t nnz() const;
  bool is_zero() const;

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix operator+(const SparseMatrix& other) const;
  SparseMatrix operator-(const SparseMatrix& other) const;
  void scale(const Rational& c);

  /// M * x for a dense vector x of length n_cols.
  std::vector<Rational> mul_dense(const std::vector<Rational>& x) const;
  /// M * x for a sparse x (length n_cols), result sparse (length n_rows).
  SparseVec mul_sparse(const SparseVec& x) const;
  /// Row-major flattening into a vector of length n_rows * n_cols.
  SparseVec vectorize() const;

  bool operator==(const SparseMatrix& other) const;

 private:
  std::size_t n_rows_, n_cols_;
  std::vector<SparseVec> rows_;
};

/// Incremental span of vectors in Q^ambient, kept as a row-echelon basis of
/// primitive integer vectors with strictly increasing pivots. Reductions use
/// two-term integer cross-multiplication, so no fractions appear in stored
/// rows.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t ambient_dim);

  /// Adds v to the span. Returns true (and increments rank) iff v was not
  /// already in the span. Throws std::invalid_argument on an index out of
  /// range.
  bool add(SparseVec v);

  /// Membership test without inserting.
  bool contains(const SparseVec& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<SparseVec>& basis() const { return rows_; }

 private:
  SparseVec reduce(SparseVec v) const;

  std::size_t ambient_;
  std::vector<SparseVec> rows_;  // sorted by pivot index
};

/// Exact rank over Q.
std::size_t rank(const SparseMatrix& m);

/// Basis of {x : Mx = 0}. Every returned vector is primitive integer and is
/// re-verified against M before returning. Basis vectors are indexed by the
/// free columns of the echelon form, in increasing column order.
std::vector<SparseVec> nullspace_basis(const SparseMatrix& m);

}  // namespace superbrauer
