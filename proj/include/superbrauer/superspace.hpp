#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "superbrauer/permutation.hpp"
#include "superbrauer/rational.hpp"

namespace superbrauer {

/// A Z/2-graded space with even dimension m and odd dimension ell, in the
/// standard homogeneous basis (even indices first). When ell = 2n is even the
/// space carries the supersymmetric form: identity on the even block and
/// consecutive 2x2 blocks [[0,-1],[1,0]] on the odd block.
class SuperSpace {
 public:
  /// (m|2n) with the supersymmetric form; loop parameter m - 2n.
  static SuperSpace orthosymplectic(std::size_t m, std::size_t n);
  /// (m|ell) with parities only (no form); used for general linear checks.
  static SuperSpace graded(std::size_t m, std::size_t ell);

  std::size_t m() const { return m_; }
  std::size_t odd_dim() const { return ell_; }
  std::size_t n() const;  // ell / 2; throws unless the form is present
  std::size_t dim() const { return m_ + ell_; }
  bool has_form() const { return has_form_; }
  long long loop_parameter() const;  // m - 2n

  int parity(std::size_t a) const;  // 0 even, 1 odd

  /// (e_a, e_b); throws without a form or out of range.
  const Rational& form(std::size_t a, std::size_t b) const;
  const std::vector<std::vector<Rational>>& form_matrix() const;

  /// Row a expresses the dual vector e_a^* in the e-basis; the unique matrix
  /// with (e_a^*, e_b) equal to the Kronecker delta.
  const std::vector<std::vector<Rational>>& dual_basis_matrix() const;

 private:
  SuperSpace(std::size_t m, std::size_t ell, bool with_form);
  std::size_t m_, ell_;
  bool has_form_;
  std::vector<std::vector<Rational>> eta_, eta_inv_;
};

/// (-1)^(sum over i > j of a_i b_j) for parity sequences of equal length.
int koszul_sign_between(const std::vector<int>& a, const std::vector<int>& b);

/// (-1)^(sum over inversions (i < j, sigma(i) > sigma(j)) of p_i p_j).
int koszul_sign_inversions(const Permutation& sigma,
                           const std::vector<int>& parities);

/// Multi-index (i_1, ..., i_r) with entries in 0..dim-1, enumerated in
/// row-major order with the first slot slowest.
struct MultiIndex {
  std::vector<std::uint32_t> slots;

  static MultiIndex decode(std::size_t linear, std::size_t r, std::size_t dim);
  std::size_t encode(std::size_t dim) const;
  std::vector<int> parities(const SuperSpace& space) const;
};

}  // namespace superbrauer
