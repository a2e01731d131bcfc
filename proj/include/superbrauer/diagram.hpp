#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "superbrauer/group_algebra.hpp"
#include "superbrauer/rational.hpp"

namespace superbrauer {

/// A Brauer diagram: a perfect matching on p + q points regarded as a
/// morphism p -> q. Points are 0-based: sources 0..p-1 (bottom, left to
/// right), targets p..p+q-1 (top, left to right). Arcs are stored with the
/// smaller endpoint first, sorted by smaller endpoint.
class BrauerDiagram {
 public:
  using Arc = std::pair<std::uint32_t, std::uint32_t>;

  BrauerDiagram(std::size_t p, std::size_t q, std::vector<Arc> arcs);

  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  std::size_t points() const { return p_ + q_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::uint32_t partner(std::uint32_t point) const;

  bool operator==(const BrauerDiagram& other) const;
  bool operator<(const BrauerDiagram& other) const;

 private:
  std::size_t p_, q_;
  std::vector<Arc> arcs_;
};

/// All (p+q-1)!! diagrams p -> q in canonical order (lexicographic on the
/// sorted arc lists); empty when p + q is odd.
std::vector<BrauerDiagram> enumerate_diagrams(std::size_t p, std::size_t q);

/// Rational linear combination of diagrams sharing (p, q), tagged with the
/// integer loop parameter. No zero coefficients.
class HomElement {
 public:
  HomElement(std::size_t p, std::size_t q, long long delta)
      : p_(p), q_(q), delta_(delta) {}
  static HomElement of(const BrauerDiagram& d, long long delta,
                       const Rational& coeff = Rational(1));

  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  long long delta() const { return delta_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(const BrauerDiagram& d) const;
  const std::map<BrauerDiagram, Rational>& terms() const { return terms_; }

  void add_term(const BrauerDiagram& d, const Rational& coeff);
  HomElement operator+(const HomElement& other) const;
  HomElement operator-(const HomElement& other) const;
  HomElement operator*(const Rational& scalar) const;
  bool operator==(const HomElement& other) const;

 private:
  std::size_t p_, q_;
  long long delta_;
  std::map<BrauerDiagram, Rational> terms_;
};

/// Stacks bottom: p -> q under top: q -> t and traces arcs; each closed loop
/// contributes one factor of delta.
struct StackedComposition {
  BrauerDiagram diagram;
  std::size_t loops;
};
StackedComposition stack_diagrams(const BrauerDiagram& top,
                                  const BrauerDiagram& bottom);

HomElement compose(const BrauerDiagram& top, const BrauerDiagram& bottom,
                   long long delta);
HomElement compose(const HomElement& top, const HomElement& bottom);

/// The reference pairing 2d -> 0 with arcs {2k-1, 2k} (1-based).
BrauerDiagram adjacent_pairing(std::size_t d);

/// For a 2d -> 0 diagram D, the canonical permutation carrying the reference
/// pairing onto D: arcs sorted by smaller endpoint (a_k < b_k) give
/// a_k -> 2k-1, b_k -> 2k (1-based).
Permutation pairing_permutation(const BrauerDiagram& diagram);

/// The r -> r diagram of a permutation: source i joins target pi(i).
BrauerDiagram permutation_diagram(const Permutation& pi);

/// True iff every arc joins a source to a target.
bool is_permutation_diagram(const BrauerDiagram& diagram);
/// Inverse of permutation_diagram; throws unless is_permutation_diagram.
Permutation diagram_permutation(const BrauerDiagram& diagram);

/// Group-algebra representative e(C) * pi_D of a 2d -> 0 diagram, where e(C)
/// averages over the hyperoctahedral stabilizer of the reference pairing.
/// Independent of the choice of pi_D.
GroupAlgebraElement symmetrized_representative(const BrauerDiagram& diagram);

/// Bends the leftmost source around to become the new leftmost target:
/// an isomorphism of hom spaces p -> q onto p-1 -> q+1.
BrauerDiagram bend(const BrauerDiagram& diagram);
HomElement bend(const HomElement& element);

/// Word in the Brauer algebra generators of a fixed degree. Letters evaluate
/// left to right as categorical composition (the leftmost letter acts last).
struct GeneratorWord {
  enum class Kind { Crossing, Contraction };  // s_i resp. e_i
  struct Letter {
    Kind kind;
    std::uint32_t index;  // 0-based slot, 0 <= index <= degree-2
  };
  std::size_t degree = 0;
  std::vector<Letter> letters;
};

/// Normal form word for a d -> d diagram: a permutation, then one contraction
/// per horizontal arc pair, then another permutation. Evaluating the word in
/// any algebra satisfying the Brauer relations reproduces the diagram with no
/// loop factor. Word length is at most d^2 + d.
GeneratorWord factorize(const BrauerDiagram& diagram);

/// Evaluates a word in the diagram algebra (for round-trip checks).
HomElement evaluate_word(const GeneratorWord& word, long long delta);

/// Linear extension of pi -> permutation_diagram(pi).
HomElement hom_from_group_algebra(const GroupAlgebraElement& x,
                                  long long delta);
/// Inverse of the above; throws if a term has a horizontal arc.
GroupAlgebraElement group_algebra_from_hom(const HomElement& x);

}  // namespace superbrauer
