#include "superbrauer/group_algebra.hpp"

#include <stdexcept>

namespace superbrauer {

GroupAlgebraElement GroupAlgebraElement::unit(std::size_t degree) {
  return of(Permutation(degree));
}

GroupAlgebraElement GroupAlgebraElement::of(const Permutation& p,
                                            const Rational& coeff) {
  GroupAlgebraElement x(p.degree());
  x.add_term(p, coeff);
  return x;
}

Rational GroupAlgebraElement::coeff(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& c) {
  if (p.degree() != degree_)
    throw std::invalid_argument("group algebra degree mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::operator+(
    const GroupAlgebraElement& other) const {
  if (degree_ != other.degree_)
    throw std::invalid_argument("group algebra degree mismatch");
  GroupAlgebraElement result = *this;
  for (const auto& [p, c] : other.terms_) result.add_term(p, c);
  return result;
}

GroupAlgebraElement GroupAlgebraElement::operator-(
    const GroupAlgebraElement& other) const {
  if (degree_ != other.degree_)
    throw std::invalid_argument("group algebra degree mismatch");
  GroupAlgebraElement result = *this;
  for (const auto& [p, c] : other.terms_) result.add_term(p, -c);
  return result;
}

GroupAlgebraElement GroupAlgebraElement::operator*(
    const GroupAlgebraElement& other) const {
  if (degree_ != other.degree_)
    throw std::invalid_argument("group algebra degree mismatch");
  GroupAlgebraElement result(degree_);
  for (const auto& [p, cp] : terms_)
    for (const auto& [q, cq] : other.terms_) result.add_term(p * q, cp * cq);
  return result;
}

GroupAlgebraElement GroupAlgebraElement::operator*(
    const Rational& scalar) const {
  GroupAlgebraElement result(degree_);
  if (scalar == 0) return result;
  for (const auto& [p, c] : terms_) result.add_term(p, c * scalar);
  return result;
}

GroupAlgebraElement operator*(const Rational& scalar,
                              const GroupAlgebraElement& x) {
  return x * scalar;
}

GroupAlgebraElement GroupAlgebraElement::antipode() const {
  GroupAlgebraElement result(degree_);
  for (const auto& [p, c] : terms_) result.add_term(p.inverse(), c);
  return result;
}

GroupAlgebraElement GroupAlgebraElement::embedded(
    std::size_t new_degree) const {
  GroupAlgebraElement result(new_degree);
  for (const auto& [p, c] : terms_) result.add_term(p.embedded(new_degree), c);
  return result;
}

GroupAlgebraElement alpha_plus(std::size_t degree,
                               const std::vector<Permutation>& subset) {
  GroupAlgebraElement x(degree);
  for (const auto& h : subset) x.add_term(h, Rational(1));
  return x;
}

GroupAlgebraElement alpha_minus(std::size_t degree,
                                const std::vector<Permutation>& subset) {
  GroupAlgebraElement x(degree);
  for (const auto& h : subset) x.add_term(h, Rational(h.sign()));
  return x;
}

std::vector<Permutation> symmetric_subgroup(
    std::size_t degree, const std::vector<std::uint32_t>& symbols) {
  for (std::uint32_t s : symbols)
    if (s >= degree) throw std::invalid_argument("symbol out of range");
  std::vector<Permutation> result;
  for (const Permutation& w : all_permutations(symbols.size())) {
    Permutation p(degree);
    std::vector<std::uint32_t> images = p.images();
    for (std::size_t i = 0; i < symbols.size(); ++i)
      images[symbols[i]] = symbols[w(i)];
    result.push_back(Permutation::from_images(std::move(images)));
  }
  return result;
}

namespace {

// Direct product of the symmetric groups on the given blocks.
std::vector<Permutation> block_product(
    std::size_t degree, const std::vector<std::vector<std::uint32_t>>& blocks) {
  std::vector<Permutation> result = {Permutation(degree)};
  for (const auto& block : blocks) {
    std::vector<Permutation> factor = symmetric_subgroup(degree, block);
    std::vector<Permutation> next;
    next.reserve(result.size() * factor.size());
    for (const auto& a : result)
      for (const auto& b : factor) next.push_back(a * b);
    result = std::move(next);
  }
  return result;
}

}  // namespace

GroupAlgebraElement young_symmetrizer(std::size_t m, std::size_t ell,
                                      std::size_t r) {
  const std::size_t rows = m + 1, cols = ell + 1;
  if (r < rows * cols)
    throw std::invalid_argument("degree too small for rectangular tableau");
  // Tableau entry (i, j) holds symbol i*cols + j (0-based).
  std::vector<std::vector<std::uint32_t>> row_blocks(rows), col_blocks(cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      row_blocks[i].push_back(static_cast<std::uint32_t>(i * cols + j));
      col_blocks[j].push_back(static_cast<std::uint32_t>(i * cols + j));
    }
  GroupAlgebraElement row_sum = alpha_plus(r, block_product(r, row_blocks));
  GroupAlgebraElement col_sum = alpha_minus(r, block_product(r, col_blocks));
  return row_sum * col_sum;
}

std::vector<Permutation> hyperoctahedral_elements(std::size_t d) {
  if (d == 0) throw std::invalid_argument("degree must be positive");
  std::vector<Permutation> result;
  result.reserve((std::size_t{1} << d));
  // Pairs {2i, 2i+1} are permuted among themselves by w and flipped by the
  // sign vector s.
  for (const Permutation& w : all_permutations(d)) {
    for (std::size_t s = 0; s < (std::size_t{1} << d); ++s) {
      std::vector<std::uint32_t> images(2 * d);
      for (std::size_t i = 0; i < d; ++i) {
        std::uint32_t flip = (s >> i) & 1;
        images[2 * i] = 2 * w(i) + flip;
        images[2 * i + 1] = 2 * w(i) + 1 - flip;
      }
      result.push_back(Permutation::from_images(std::move(images)));
    }
  }
  return result;
}

GroupAlgebraElement hyperoctahedral_symmetrizer(std::size_t d) {
  std::vector<Permutation> elements = hyperoctahedral_elements(d);
  Rational inv_order(1, static_cast<unsigned long>(elements.size()));
  GroupAlgebraElement x(2 * d);
  for (const auto& p : elements) x.add_term(p, inv_order);
  return x;
}

}  // namespace superbrauer
