#pragma once

#include <map>
#include <vector>

#include "superbrauer/permutation.hpp"
#include "superbrauer/rational.hpp"

namespace superbrauer {

/// Formal rational linear combination of permutations of a fixed degree.
/// No zero coefficients are stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(std::size_t degree) : degree_(degree) {}
  static GroupAlgebraElement unit(std::size_t degree);
  static GroupAlgebraElement of(const Permutation& p,
                                const Rational& coeff = Rational(1));

  std::size_t degree() const { return degree_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Permutation& p) const;
  const std::map<Permutation, Rational>& terms() const { return terms_; }

  void add_term(const Permutation& p, const Rational& coeff);

  GroupAlgebraElement operator+(const GroupAlgebraElement& other) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& other) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& other) const;
  GroupAlgebraElement operator*(const Rational& scalar) const;
  bool operator==(const GroupAlgebraElement& other) const {
    return degree_ == other.degree_ && terms_ == other.terms_;
  }

  /// g -> g^{-1} extended linearly.
  GroupAlgebraElement antipode() const;
  /// Re-embeds every term into a larger symmetric group, fixing new symbols.
  GroupAlgebraElement embedded(std::size_t new_degree) const;

 private:
  std::size_t degree_;
  std::map<Permutation, Rational> terms_;
};

GroupAlgebraElement operator*(const Rational& scalar,
                              const GroupAlgebraElement& x);

/// Sum of the listed permutations.
GroupAlgebraElement alpha_plus(std::size_t degree,
                               const std::vector<Permutation>& subset);
/// Signed sum of the listed permutations.
GroupAlgebraElement alpha_minus(std::size_t degree,
                                const std::vector<Permutation>& subset);

/// The subgroup of Sym_degree permuting the given symbols arbitrarily while
/// fixing all others.
std::vector<Permutation> symmetric_subgroup(
    std::size_t degree, const std::vector<std::uint32_t>& symbols);

/// Unnormalized Young symmetrizer of the (m+1) x (ell+1) rectangular tableau
/// filled row by row with 1..(m+1)(ell+1), embedded in degree r (which must be
/// at least (m+1)(ell+1)). Row group summed plainly, column group with signs.
GroupAlgebraElement young_symmetrizer(std::size_t m, std::size_t ell,
                                      std::size_t r);

/// All elements of the centralizer of (12)(34)...(2d-1,2d) in Sym_{2d};
/// there are 2^d d! of them. Deterministic order.
std::vector<Permutation> hyperoctahedral_elements(std::size_t d);

/// The idempotent averaging over the hyperoctahedral group: every element
/// carries coefficient 1/(2^d d!).
GroupAlgebraElement hyperoctahedral_symmetrizer(std::size_t d);

}  // namespace superbrauer
