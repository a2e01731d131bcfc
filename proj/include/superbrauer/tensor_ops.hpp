#pragma once

#include <vector>

#include "superbrauer/diagram.hpp"
#include "superbrauer/sparse.hpp"
#include "superbrauer/superspace.hpp"

namespace superbrauer {

/// Square matrix with a declared parity; used for Lie superalgebra elements
/// and the endomorphism-slot arguments of the invariant forms.
struct GradedMatrix {
  std::vector<std::vector<Rational>> entries;  // entries[a][b]: e_b -> e_a
  int parity = 0;

  std::size_t dim() const { return entries.size(); }
  static GradedMatrix zero(std::size_t dim, int parity);
  static GradedMatrix identity(std::size_t dim);
};

/// Symmetric group action on the r-th tensor power: a basis tensor picks up
/// the Koszul sign of the inverse permutation's inversions among odd slots.
/// A homomorphism: action(p * q) = action(p) * action(q).
SparseMatrix permutation_action(const SuperSpace& space, const Permutation& pi,
                                std::size_t r);
/// Linear extension over a group algebra element.
SparseMatrix group_algebra_action(const SuperSpace& space,
                                  const GroupAlgebraElement& x, std::size_t r);

/// The contraction-and-reinsertion operator on slots (i, i+1) of the r-th
/// tensor power: (v, w) times the invariant 2-tensor sum_a e_a (x) e_a^*.
/// 0-based slot, 0 <= i <= r-2. Even, so no insertion signs arise.
SparseMatrix contraction_operator(const SuperSpace& space, std::size_t i,
                                  std::size_t r);

/// Brauer algebra action on the d-th tensor power: crossings act as
/// permutation_action of adjacent transpositions, contractions as
/// contraction_operator; a diagram evaluates via its normal-form word. The
/// hom element's loop parameter must equal the space's.
SparseMatrix eta_operator(const SuperSpace& space, const BrauerDiagram& d);
SparseMatrix eta_operator(const SuperSpace& space, const HomElement& x);
SparseMatrix eta_word_operator(const SuperSpace& space,
                               const GeneratorWord& word);

/// Value vector of the invariant functional attached to a pairing diagram
/// D: 2d -> 0 over all basis tensors (length dim^{2d}): a signed product of
/// form values along the arcs. Independent of the permutation representative.
SparseVec kappa_vector(const SuperSpace& space, const BrauerDiagram& diagram);

/// Matrix of the invariant bilinear pairing (dual basis tensor, permuted
/// basis tensor): rows index the dual side, columns the vector side.
SparseMatrix delta_matrix(const SuperSpace& space, const Permutation& pi,
                          std::size_t r);

/// The same invariant evaluated on d endomorphism slots and a basis
/// multi-index of length 2d; all matrices must be homogeneous.
Rational delta_end_value(const SuperSpace& space, const Permutation& pi,
                         const std::vector<GradedMatrix>& a,
                         const MultiIndex& w);

/// Homogeneous basis of the Lie superalgebra preserving the form:
/// m(m-1)/2 + n(2n+1) even elements and 2mn odd ones.
std::vector<GradedMatrix> orthosymplectic_basis(const SuperSpace& space);

/// Derivation action of a homogeneous matrix on the r-th tensor power with
/// Koszul insertion signs; a super Lie algebra homomorphism.
SparseMatrix derivation_action(const SuperSpace& space, const GradedMatrix& x,
                               std::size_t r);

}  // namespace superbrauer
