#include "superbrauer/superspace.hpp"

#include <stdexcept>

namespace superbrauer {

SuperSpace::SuperSpace(std::size_t m, std::size_t ell, bool with_form)
    : m_(m), ell_(ell), has_form_(with_form) {
  if (!with_form) return;
  const std::size_t dim = m_ + ell_;
  eta_.assign(dim, std::vector<Rational>(dim, Rational(0)));
  eta_inv_.assign(dim, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t a = 0; a < m_; ++a) {
    eta_[a][a] = 1;
    eta_inv_[a][a] = 1;
  }
  for (std::size_t k = 0; m_ + 2 * k + 1 < dim; ++k) {
    std::size_t a = m_ + 2 * k, b = m_ + 2 * k + 1;
    eta_[a][b] = -1;
    eta_[b][a] = 1;
    // Inverse of [[0,-1],[1,0]] is [[0,1],[-1,0]].
    eta_inv_[a][b] = 1;
    eta_inv_[b][a] = -1;
  }
}

SuperSpace SuperSpace::orthosymplectic(std::size_t m, std::size_t n) {
  return SuperSpace(m, 2 * n, true);
}

SuperSpace SuperSpace::graded(std::size_t m, std::size_t ell) {
  return SuperSpace(m, ell, false);
}

std::size_t SuperSpace::n() const {
  if (!has_form_) throw std::logic_error("space carries no form");
  return ell_ / 2;
}

long long SuperSpace::loop_parameter() const {
  if (!has_form_) throw std::logic_error("space carries no form");
  return static_cast<long long>(m_) - static_cast<long long>(ell_);
}

int SuperSpace::parity(std::size_t a) const {
  if (a >= dim()) throw std::out_of_range("basis index out of range");
  return a < m_ ? 0 : 1;
}

const Rational& SuperSpace::form(std::size_t a, std::size_t b) const {
  if (!has_form_) throw std::logic_error("space carries no form");
  if (a >= dim() || b >= dim())
    throw std::out_of_range("basis index out of range");
  return eta_[a][b];
}

const std::vector<std::vector<Rational>>& SuperSpace::form_matrix() const {
  if (!has_form_) throw std::logic_error("space carries no form");
  return eta_;
}

const std::vector<std::vector<Rational>>& SuperSpace::dual_basis_matrix()
    const {
  if (!has_form_) throw std::logic_error("space carries no form");
  return eta_inv_;
}

int koszul_sign_between(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("parity sequence length mismatch");
  int total = 0;
  int b_prefix = 0;  // sum of b_j for j < i
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += a[i] * b_prefix;
    b_prefix += b[i];
  }
  return total % 2 == 0 ? 1 : -1;
}

int koszul_sign_inversions(const Permutation& sigma,
                           const std::vector<int>& parities) {
  if (sigma.degree() != parities.size())
    throw std::invalid_argument("degree does not match parity sequence");
  int total = 0;
  for (std::size_t i = 0; i < parities.size(); ++i)
    for (std::size_t j = i + 1; j < parities.size(); ++j)
      if (sigma(i) > sigma(j)) total += parities[i] * parities[j];
  return total % 2 == 0 ? 1 : -1;
}

MultiIndex MultiIndex::decode(std::size_t linear, std::size_t r,
                              std::size_t dim) {
  MultiIndex w;
  w.slots.assign(r, 0);
  for (std::size_t i = r; i-- > 0;) {
    w.slots[i] = static_cast<std::uint32_t>(linear % dim);
    linear /= dim;
  }
  return w;
}

std::size_t MultiIndex::encode(std::size_t dim) const {
  std::size_t linear = 0;
  for (std::uint32_t s : slots) linear = linear * dim + s;
  return linear;
}

std::vector<int> MultiIndex::parities(const SuperSpace& space) const {
  std::vector<int> p(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) p[i] = space.parity(slots[i]);
  return p;
}

}  // namespace superbrauer
