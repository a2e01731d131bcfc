#include <doctest.h>

#include "superbrauer/ideal_stream.hpp"
#include "superbrauer/kernels.hpp"
#include "superbrauer/partition.hpp"
#include "superbrauer/sparse.hpp"

using namespace superbrauer;

namespace {

// Independent dense Gaussian elimination oracle: returns (rank, nullity).
std::pair<std::size_t, std::size_t> dense_rank_nullity(
    std::vector<std::vector<Rational>> a, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rational factor = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return {rank, cols - rank};
}

std::vector<std::vector<Rational>> to_dense_rows(const SparseMatrix& m) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(m.n_rows());
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    rows.push_back(m.row(i).to_dense(m.n_cols()));
  return rows;
}

SparseMatrix random_matrix(std::size_t rows, std::size_t cols,
                           std::uint64_t seed) {
  SplitMix64 rng(seed);
  SparseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::uint64_t draw = rng.next_below(10);
      if (draw < 4) continue;  // keep it sparse-ish
      long value = static_cast<long>(rng.next_below(11)) - 5;
      if (value != 0) m.set(i, j, Rational(value));
    }
  return m;
}

}  // namespace

TEST_CASE("rational string round trips") {
  CHECK(to_string(rational_from_string("3/2")) == "3/2");
  CHECK(to_string(rational_from_string("-6/4")) == "-3/2");
  CHECK(to_string(rational_from_string("0")) == "0");
  CHECK(to_string(rational_from_string("8/2")) == "4");
  CHECK(rational_from_string("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("a/b"), std::invalid_argument);
}

TEST_CASE("sparse vector primitives") {
  SparseVec v;
  v.add(3, Rational(1, 2));
  v.add(1, Rational(-2));
  v.add(3, Rational(-1, 2));
  CHECK(v.nnz() == 1);
  CHECK(v.get(1) == Rational(-2));
  v.add(5, Rational(3, 4));
  v.make_primitive();
  // (-2, 3/4) scales to the primitive integer vector with positive leading.
  CHECK(v.get(1) == Rational(8));
  CHECK(v.get(5) == Rational(-3));

  SparseVec a = SparseVec::unit(0);
  a.add_scaled(SparseVec::unit(1), Rational(7));
  CHECK(a.get(0) == 1);
  CHECK(a.get(1) == 7);
}

TEST_CASE("rank of trivial matrices") {
  CHECK(rank(SparseMatrix(0, 0)) == 0);
  CHECK(rank(SparseMatrix::identity(3)) == 3);
  SparseMatrix zero(4, 7);
  CHECK(rank(zero) == 0);
}

TEST_CASE("nullspace of small matrices") {
  CHECK(nullspace_basis(SparseMatrix::identity(2)).empty());

  SparseMatrix row(1, 2);
  row.set(0, 0, Rational(1));
  row.set(0, 1, Rational(1));
  auto basis = nullspace_basis(row);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].get(0) == Rational(1));
  CHECK(basis[0].get(1) == Rational(-1));
}

TEST_CASE("kappa evaluation matrix ranks against the dense oracle") {
  // 729 x 15 at (m, n, d) = (1, 1, 3): full column rank.
  SparseMatrix k = kappa_matrix(1, 1, 3);
  CHECK(k.n_rows() == 729);
  CHECK(k.n_cols() == 15);
  auto [oracle_rank, oracle_nullity] = dense_rank_nullity(to_dense_rows(k), 15);
  CHECK(oracle_rank == 15);
  CHECK(rank(k) == 15);
  CHECK(nullspace_basis(k).size() == oracle_nullity);

  // 16 x 3 at (0, 1, 2): one relation.
  SparseMatrix k2 = kappa_matrix(0, 1, 2);
  CHECK(k2.n_rows() == 16);
  CHECK(k2.n_cols() == 3);
  auto [oracle_rank2, oracle_nullity2] =
      dense_rank_nullity(to_dense_rows(k2), 3);
  CHECK(oracle_nullity2 == 1);
  auto basis = nullspace_basis(k2);
  REQUIRE(basis.size() == 1);
  CHECK(rank(k2) == oracle_rank2);
  CHECK(k2.mul_sparse(basis[0]).empty());
}

TEST_CASE("rank equals transpose rank and nullity is complementary") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    SplitMix64 shape_rng(seed * 977);
    std::size_t rows = 1 + shape_rng.next_below(20);
    std::size_t cols = 1 + shape_rng.next_below(20);
    SparseMatrix m = random_matrix(rows, cols, seed);
    std::size_t r = rank(m);
    CHECK(r == rank(m.transpose()));
    auto basis = nullspace_basis(m);
    CHECK(r + basis.size() == cols);
    for (const auto& v : basis) CHECK(m.mul_sparse(v).empty());
    auto [oracle_rank, oracle_nullity] =
        dense_rank_nullity(to_dense_rows(m), cols);
    CHECK(r == oracle_rank);
    CHECK(basis.size() == oracle_nullity);
  }
}

TEST_CASE("span tracker") {
  SpanTracker tracker(2);
  CHECK(tracker.add(SparseVec::unit(0)));
  CHECK_FALSE(tracker.add(SparseVec::unit(0)));
  CHECK(tracker.rank() == 1);
  CHECK(tracker.add(SparseVec::unit(1)));
  CHECK(tracker.rank() == 2);
  CHECK(tracker.contains(SparseVec::unit(1)));
  CHECK_THROWS_AS(tracker.add(SparseVec::unit(5)), std::invalid_argument);

  // Rank via column insertion agrees with rank(M).
  for (std::uint64_t seed = 50; seed < 56; ++seed) {
    SparseMatrix m = random_matrix(9, 7, seed);
    SparseMatrix t = m.transpose();
    SpanTracker columns(m.n_rows());
    for (std::size_t j = 0; j < t.n_rows(); ++j) columns.add(t.row(j));
    CHECK(columns.rank() == rank(m));
  }
}

TEST_CASE("streamed ideal span in group algebra coordinates, small degrees") {
  struct Case {
    std::size_t m, n, d;
  };
  // Every (m, n, d) with (m+1)(2n+1) <= 2d <= 6.
  for (const Case& c : {Case{1, 1, 3}, Case{0, 1, 2}, Case{0, 1, 3},
                        Case{1, 0, 1}, Case{1, 0, 2}, Case{1, 0, 3},
                        Case{2, 0, 2}, Case{2, 0, 3}, Case{3, 0, 2},
                        Case{3, 0, 3}, Case{4, 0, 3}, Case{5, 0, 3},
                        Case{0, 2, 3}}) {
    Integer expected = ideal_dimension(c.m, c.n, c.d);
    const std::size_t degree = 2 * c.d;
    // Enumerate the group once; indices are lexicographic positions.
    std::vector<Permutation> group = all_permutations(degree);
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < group.size(); ++i) index.emplace(group[i], i);

    IdealSpanStream stream(c.m, c.n, c.d, 42);
    SpanTracker tracker(group.size());
    // The hook-length prediction is the terminator: reaching it certifies
    // the span, so only a hard sample cap guards against regressions.
    for (std::size_t samples = 0;
         samples < 20000 && Integer((unsigned long)tracker.rank()) < expected;
         ++samples) {
      GroupAlgebraElement x = stream.next();
      SparseVec v;
      for (const auto& [perm, coeff] : x.terms())
        v.add(index.at(perm), coeff);
      tracker.add(v);
    }
    CHECK(Integer((unsigned long)tracker.rank()) == expected);
  }
}

// Full-scale landmark at degree 8: rank 10780 in a 40320-dimensional space.
// Exact echelon at this size runs for hours; kept runnable but excluded from
// the default suite.
TEST_CASE("streamed ideal span reaches 10780 at (1,1,4)" * doctest::skip()) {
  const std::size_t degree = 8;
  std::vector<Permutation> group = all_permutations(degree);
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index.emplace(group[i], i);
  Integer expected = ideal_dimension(1, 1, 4);
  CHECK(expected == 10780);

  IdealSpanStream stream(1, 1, 4, 7);
  SpanTracker tracker(group.size());
  while (Integer((unsigned long)tracker.rank()) < expected) {
    GroupAlgebraElement x = stream.next();
    SparseVec v;
    for (const auto& [perm, coeff] : x.terms()) v.add(index.at(perm), coeff);
    tracker.add(v);
  }
  CHECK(Integer((unsigned long)tracker.rank()) == expected);
}
