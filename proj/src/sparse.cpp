#include "superbrauer/sparse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace superbrauer {

SparseVec SparseVec::unit(std::size_t index) {
  SparseVec v;
  v.terms_.emplace_back(index, Rational(1));
  return v;
}

SparseVec SparseVec::from_dense(const std::vector<Rational>& dense) {
  SparseVec v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.terms_.emplace_back(i, dense[i]);
  return v;
}

const SparseVec::Term& SparseVec::leading() const {
  if (terms_.empty()) throw std::logic_error("leading() on zero vector");
  return terms_.front();
}

Rational SparseVec::get(std::size_t index) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), index,
      [](const Term& t, std::size_t i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) return it->second;
  return Rational(0);
}

void SparseVec::add(std::size_t index, const Rational& value) {
  if (value == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), index,
      [](const Term& t, std::size_t i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {index, value});
  }
}

void SparseVec::add_scaled(const SparseVec& other, const Rational& c) {
  if (c == 0 || other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational s = a->second + c * b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

void SparseVec::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.second *= c;
}

void SparseVec::negate() {
  for (auto& t : terms_) t.second = -t.second;
}

void SparseVec::make_primitive() {
  if (terms_.empty()) return;
  Integer den_lcm = 1;
  for (const auto& t : terms_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.second.get_den().get_mpz_t());
  Integer num_gcd = 0;
  for (const auto& t : terms_) {
    Integer scaled_num = t.second.get_num() * (den_lcm / t.second.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            scaled_num.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (terms_.front().second < 0) factor = -factor;
  scale(factor);
}

std::vector<Rational> SparseVec::to_dense(std::size_t length) const {
  std::vector<Rational> dense(length, Rational(0));
  for (const auto& t : terms_) dense.at(t.first) = t.second;
  return dense;
}

Rational dot(const SparseVec& a, const std::vector<Rational>& dense) {
  Rational s(0);
  for (const auto& t : a.terms()) s += t.second * dense.at(t.first);
  return s;
}

SparseMatrix::SparseMatrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows), n_cols_(n_cols), rows_(n_rows) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

namespace {
void check_bounds(bool ok) {
  if (!ok) throw std::out_of_range("matrix index out of range");
}
}  // namespace

Rational SparseMatrix::get(std::size_t row, std::size_t col) const {
  check_bounds(row < n_rows_ && col < n_cols_);
  return rows_[row].get(col);
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Rational& value) {
  check_bounds(row < n_rows_ && col < n_cols_);
  Rational delta = value - rows_[row].get(col);
  rows_[row].add(col, delta);
}

void SparseMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  check_bounds(row < n_rows_ && col < n_cols_);
  rows_[row].add(col, value);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.nnz();
  return n;
}

bool SparseMatrix::is_zero() const { return nnz() == 0; }

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(n_cols_, n_rows_);
  for (std::size_t i = 0; i < n_rows_; ++i)
    for (const auto& term : rows_[i].terms())
      t.rows_[term.first].add(i, term.second);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (n_cols_ != other.n_rows_)
    throw std::invalid_argument("matrix product dimension mismatch");
  SparseMatrix result(n_rows_, other.n_cols_);
  for (std::size_t i = 0; i < n_rows_; ++i) {
    SparseVec& out = result.rows_[i];
    for (const auto& term : rows_[i].terms())
      out.add_scaled(other.rows_[term.first], term.second);
  }
  return result;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
  if (n_rows_ != other.n_rows_ || n_cols_ != other.n_cols_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  SparseMatrix result = *this;
  for (std::size_t i = 0; i < n_rows_; ++i)
    result.rows_[i].add_scaled(other.rows_[i], Rational(1));
  return result;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
  if (n_rows_ != other.n_rows_ || n_cols_ != other.n_cols_)
    throw std::invalid_argument("matrix difference dimension mismatch");
  SparseMatrix result = *this;
  for (std::size_t i = 0; i < n_rows_; ++i)
    result.rows_[i].add_scaled(other.rows_[i], Rational(-1));
  return result;
}

void SparseMatrix::scale(const Rational& c) {
  for (auto& r : rows_) r.scale(c);
}

std::vector<Rational> SparseMatrix::mul_dense(
    const std::vector<Rational>& x) const {
  if (x.size() != n_cols_)
    throw std::invalid_argument("mul_dense dimension mismatch");
  std::vector<Rational> y(n_rows_, Rational(0));
  for (std::size_t i = 0; i < n_rows_; ++i)
    for (const auto& term : rows_[i].terms())
      y[i] += term.second * x[term.first];
  return y;
}

SparseVec SparseMatrix::mul_sparse(const SparseVec& x) const {
  SparseVec y;
  for (std::size_t i = 0; i < n_rows_; ++i) {
    Rational s(0);
    auto a = rows_[i].terms().begin();
    auto b = x.terms().begin();
    while (a != rows_[i].terms().end() && b != x.terms().end()) {
      if (a->first < b->first) {
        ++a;
      } else if (b->first < a->first) {
        ++b;
      } else {
        s += a->second * b->second;
        ++a;
        ++b;
      }
    }
    if (s != 0) y.add(i, s);
  }
  return y;
}

SparseVec SparseMatrix::vectorize() const {
  SparseVec v;
  for (std::size_t i = 0; i < n_rows_; ++i)
    for (const auto& term : rows_[i].terms())
      v.add(i * n_cols_ + term.first, term.second);
  return v;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return n_rows_ == other.n_rows_ && n_cols_ == other.n_cols_ &&
         rows_ == other.rows_;
}

SpanTracker::SpanTracker(std::size_t ambient_dim) : ambient_(ambient_dim) {}

SparseVec SpanTracker::reduce(SparseVec v) const {
  for (const auto& row : rows_) {
    if (v.empty()) break;
    std::size_t pivot = row.leading().first;
    if (v.leading().first > pivot) continue;
    Rational c = v.get(pivot);
    if (c != 0) v.add_scaled(row, -c / row.leading().second);
  }
  return v;
}

bool SpanTracker::add(SparseVec v) {
  if (!v.empty() && v.terms().back().first >= ambient_)
    throw std::invalid_argument("SpanTracker: index out of range");
  v = reduce(std::move(v));
  if (v.empty()) return false;
  v.make_primitive();
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), v.leading().first,
                              [](const SparseVec& r, std::size_t p) {
                                return r.leading().first < p;
                              });
  rows_.insert(pos, std::move(v));
  return true;
}

bool SpanTracker::contains(const SparseVec& v) const {
  if (!v.empty() && v.terms().back().first >= ambient_)
    throw std::invalid_argument("SpanTracker: index out of range");
  return reduce(v).empty();
}

std::size_t rank(const SparseMatrix& m) {
  // Feed shortest rows first; this keeps the echelon basis sparse on the
  // matrices that arise here.
  std::vector<std::size_t> order(m.n_rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row(a).nnz() < m.row(b).nnz();
  });
  SpanTracker tracker(m.n_cols());
  for (std::size_t i : order) {
    if (!m.row(i).empty()) tracker.add(m.row(i));
  }
  return tracker.rank();
}

std::vector<SparseVec> nullspace_basis(const SparseMatrix& m) {
  SpanTracker tracker(m.n_cols());
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    if (!m.row(i).empty()) tracker.add(m.row(i));

  const std::vector<SparseVec>& echelon = tracker.basis();
  std::vector<bool> is_pivot(m.n_cols(), false);
  for (const auto& row : echelon) is_pivot[row.leading().first] = true;

  std::vector<SparseVec> basis;
  for (std::size_t free_col = 0; free_col < m.n_cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    // Back-substitute x[free_col] = 1 through the echelon rows.
    std::map<std::size_t, Rational> x;
    x[free_col] = Rational(1);
    for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
      std::size_t pivot = it->leading().first;
      if (pivot > free_col) continue;
      Rational s(0);
      for (const auto& term : it->terms()) {
        if (term.first == pivot) continue;
        auto found = x.find(term.first);
        if (found != x.end()) s += term.second * found->second;
      }
      if (s != 0) x[pivot] = -s / it->leading().second;
    }
    SparseVec v;
    for (const auto& [index, value] : x)
      if (value != 0) v.add(index, value);
    v.make_primitive();
    basis.push_back(std::move(v));
  }

  if (tracker.rank() + basis.size() != m.n_cols())
    throw std::logic_error("nullspace dimension mismatch");
  for (const auto& v : basis)
    if (!m.mul_sparse(v).empty())
      throw std::logic_error("nullspace vector fails exact check");
  return basis;
}

}  // namespace superbrauer
