#include "superbrauer/tensor_ops.hpp"

#include <stdexcept>

namespace superbrauer {

GradedMatrix GradedMatrix::zero(std::size_t dim, int parity) {
  GradedMatrix x;
  x.entries.assign(dim, std::vector<Rational>(dim, Rational(0)));
  x.parity = parity;
  return x;
}

GradedMatrix GradedMatrix::identity(std::size_t dim) {
  GradedMatrix x = zero(dim, 0);
  for (std::size_t a = 0; a < dim; ++a) x.entries[a][a] = 1;
  return x;
}

namespace {

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) value *= base;
  return value;
}

}  // namespace

SparseMatrix permutation_action(const SuperSpace& space, const Permutation& pi,
                                std::size_t r) {
  if (pi.degree() != r)
    throw std::invalid_argument("permutation degree does not match power");
  const std::size_t dim = space.dim();
  const std::size_t total = power(dim, r);
  const Permutation inv = pi.inverse();
  SparseMatrix matrix(total, total);
  for (std::size_t linear = 0; linear < total; ++linear) {
    MultiIndex w = MultiIndex::decode(linear, r, dim);
    // Koszul sign of the rearrangement: one factor per inverted pair of odd
    // slots, measured on the input string.
    int sign = koszul_sign_inversions(pi, w.parities(space));
    MultiIndex image;
    image.slots.resize(r);
    for (std::size_t i = 0; i < r; ++i) image.slots[i] = w.slots[inv(i)];
    matrix.add(image.encode(dim), linear, Rational(sign));
  }
  return matrix;
}

SparseMatrix group_algebra_action(const SuperSpace& space,
                                  const GroupAlgebraElement& x,
                                  std::size_t r) {
  const std::size_t total = power(space.dim(), r);
  SparseMatrix matrix(total, total);
  for (const auto& [p, c] : x.terms()) {
    SparseMatrix term = permutation_action(space, p, r);
    term.scale(c);
    matrix = matrix + term;
  }
  return matrix;
}

SparseMatrix contraction_operator(const SuperSpace& space, std::size_t i,
                                  std::size_t r) {
  if (i + 1 >= r) throw std::invalid_argument("contraction slot out of range");
  const std::size_t dim = space.dim();
  const std::size_t total = power(dim, r);
  const auto& eta = space.form_matrix();
  const auto& dual = space.dual_basis_matrix();
  // c0 = sum_a e_a (x) e_a^*; nonzero coefficients of e_x (x) e_y in c0.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>> c0;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t y = 0; y < dim; ++y)
      if (dual[a][y] != 0) c0.push_back({{a, y}, dual[a][y]});

  SparseMatrix matrix(total, total);
  const std::size_t stride = power(dim, r - i - 2);
  for (std::size_t linear = 0; linear < total; ++linear) {
    MultiIndex w = MultiIndex::decode(linear, r, dim);
    const Rational& value = eta[w.slots[i]][w.slots[i + 1]];
    if (value == 0) continue;
    // Replace slots (i, i+1) by each term of c0.
    std::size_t base = linear - (w.slots[i] * dim + w.slots[i + 1]) * stride;
    for (const auto& [pair, coeff] : c0) {
      std::size_t image = base + (pair.first * dim + pair.second) * stride;
      matrix.add(image, linear, value * coeff);
    }
  }
  return matrix;
}

SparseMatrix eta_word_operator(const SuperSpace& space,
                               const GeneratorWord& word) {
  const std::size_t d = word.degree;
  SparseMatrix matrix = SparseMatrix::identity(power(space.dim(), d));
  for (const auto& letter : word.letters) {
    SparseMatrix factor =
        letter.kind == GeneratorWord::Kind::Crossing
            ? permutation_action(
                  space,
                  Permutation::transposition(d, letter.index, letter.index + 1),
                  d)
            : contraction_operator(space, letter.index, d);
    matrix = matrix * factor;
  }
  return matrix;
}

SparseMatrix eta_operator(const SuperSpace& space, const BrauerDiagram& d) {
  return eta_word_operator(space, factorize(d));
}

SparseMatrix eta_operator(const SuperSpace& space, const HomElement& x) {
  if (x.p() != x.q())
    throw std::invalid_argument("eta action needs a d -> d element");
  if (x.delta() != space.loop_parameter())
    throw std::invalid_argument("loop parameter does not match the space");
  const std::size_t total = power(space.dim(), x.p());
  SparseMatrix matrix(total, total);
  for (const auto& [d, c] : x.terms()) {
    SparseMatrix term = eta_operator(space, d);
    term.scale(c);
    matrix = matrix + term;
  }
  return matrix;
}

SparseVec kappa_vector(const SuperSpace& space, const BrauerDiagram& diagram) {
  if (diagram.q() != 0)
    throw std::invalid_argument("functional needs a 2d -> 0 diagram");
  const std::size_t dim = space.dim();
  const std::size_t r = diagram.p();
  const auto& eta = space.form_matrix();
  const Permutation rep = pairing_permutation(diagram);
  const Permutation inv = rep.inverse();

  // Enumerate only tensors supported on the arcs: each arc (x, y) needs a
  // nonzero form value at (w_x, w_y).
  std::vector<std::pair<std::size_t, std::size_t>> support;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      if (eta[a][b] != 0) support.push_back({a, b});

  SparseVec result;
  MultiIndex w;
  w.slots.assign(r, 0);
  std::vector<std::size_t> choice(diagram.arcs().size(), 0);
  const std::size_t arcs = diagram.arcs().size();
  std::size_t level = 0;
  while (true) {
    if (level == arcs) {
      Rational value(koszul_sign_inversions(rep, w.parities(space)));
      for (std::size_t k = 0; k < arcs; ++k) {
        const auto& arc = diagram.arcs()[k];
        value *= eta[w.slots[arc.first]][w.slots[arc.second]];
      }
      result.add(w.encode(dim), value);
      if (arcs == 0) break;
      --level;
      ++choice[level];
    } else if (choice[level] == support.size()) {
      if (level == 0) break;
      --level;
      ++choice[level];
    } else {
      const auto& arc = diagram.arcs()[level];
      w.slots[arc.first] = static_cast<std::uint32_t>(support[choice[level]].first);
      w.slots[arc.second] =
          static_cast<std::uint32_t>(support[choice[level]].second);
      ++level;
      if (level < arcs) choice[level] = 0;
    }
  }
  return result;
}

SparseMatrix delta_matrix(const SuperSpace& space, const Permutation& pi,
                          std::size_t r) {
  if (pi.degree() != r)
    throw std::invalid_argument("permutation degree does not match power");
  const std::size_t dim = space.dim();
  const std::size_t total = power(dim, r);
  const Permutation inv = pi.inverse();
  SparseMatrix matrix(total, total);
  for (std::size_t linear = 0; linear < total; ++linear) {
    MultiIndex w = MultiIndex::decode(linear, r, dim);
    std::vector<int> parities = w.parities(space);
    int sign = koszul_sign_inversions(pi, parities);
    MultiIndex image;
    image.slots.resize(r);
    std::vector<int> image_parities(r);
    for (std::size_t i = 0; i < r; ++i) {
      image.slots[i] = w.slots[inv(i)];
      image_parities[i] = parities[inv(i)];
    }
    // Pair the permuted tensor against its own dual index string.
    sign *= koszul_sign_between(image_parities, image_parities);
    matrix.add(image.encode(dim), linear, Rational(sign));
  }
  return matrix;
}

Rational delta_end_value(const SuperSpace& space, const Permutation& pi,
                         const std::vector<GradedMatrix>& a,
                         const MultiIndex& w) {
  const std::size_t r = w.slots.size();
  if (pi.degree() != r || r != 2 * a.size())
    throw std::invalid_argument("multi-index length must be twice the slots");
  const Permutation inv = pi.inverse();
  const auto& eta = space.form_matrix();

  // Parities of the permuted tensor string and of the matrix slots.
  std::vector<int> w_parities = w.parities(space);
  std::vector<int> permuted(r);
  for (std::size_t i = 0; i < r; ++i) permuted[i] = w_parities[inv(i)];

  int j_exponent = 0;
  int prefix = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    prefix += permuted[2 * k];  // parities of v_1 .. v_{2k-1}
    j_exponent += a[k].parity * prefix;
    prefix += permuted[2 * k + 1];
  }
  // J(A, v) sums [A_k] * ( [v_1] + ... + [v_{2k-1}] ).
  Rational value =
      (j_exponent % 2 == 0 ? 1 : -1) *
      Rational(koszul_sign_inversions(pi, w_parities));
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::size_t left = w.slots[inv(2 * k)], right = w.slots[inv(2 * k + 1)];
    // (e_left, A e_right) = sum_c A[c][right] (e_left, e_c)
    Rational pair_value(0);
    for (std::size_t c = 0; c < space.dim(); ++c) {
      const Rational& entry = a[k].entries[c][right];
      if (entry != 0) pair_value += eta[left][c] * entry;
    }
    value *= pair_value;
    if (value == 0) return value;
  }
  return value;
}

namespace {

std::vector<GradedMatrix> solve_form_preservers(const SuperSpace& space,
                                                int parity) {
  const std::size_t dim = space.dim();
  const auto& eta = space.form_matrix();
  // Unknowns: entries X[a][b] with parity(a) + parity(b) = parity mod 2.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      if ((space.parity(a) + space.parity(b)) % 2 == parity)
        unknowns.push_back({a, b});
  std::vector<std::vector<std::size_t>> index(
      dim, std::vector<std::size_t>(dim, SIZE_MAX));
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    index[unknowns[u].first][unknowns[u].second] = u;

  // (X e_b, e_c) + (-1)^{parity * [b]} (e_b, X e_c) = 0 for all b, c.
  SparseMatrix system(dim * dim, unknowns.size());
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t c = 0; c < dim; ++c) {
      const std::size_t row = b * dim + c;
      int sign = (parity * space.parity(b)) % 2 == 0 ? 1 : -1;
      for (std::size_t a = 0; a < dim; ++a) {
        if (index[a][b] != SIZE_MAX && eta[a][c] != 0)
          system.add(row, index[a][b], eta[a][c]);
        if (index[a][c] != SIZE_MAX && eta[b][a] != 0)
          system.add(row, index[a][c], Rational(sign) * eta[b][a]);
      }
    }

  std::vector<GradedMatrix> basis;
  for (const SparseVec& solution : nullspace_basis(system)) {
    GradedMatrix x = GradedMatrix::zero(dim, parity);
    for (const auto& [u, value] : solution.terms())
      x.entries[unknowns[u].first][unknowns[u].second] = value;
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

std::vector<GradedMatrix> orthosymplectic_basis(const SuperSpace& space) {
  std::vector<GradedMatrix> basis = solve_form_preservers(space, 0);
  std::vector<GradedMatrix> odd = solve_form_preservers(space, 1);
  basis.insert(basis.end(), odd.begin(), odd.end());
  return basis;
}

SparseMatrix derivation_action(const SuperSpace& space, const GradedMatrix& x,
                               std::size_t r) {
  if (x.dim() != space.dim())
    throw std::invalid_argument("matrix dimension does not match space");
  const std::size_t dim = space.dim();
  const std::size_t total = power(dim, r);
  SparseMatrix matrix(total, total);
  for (std::size_t linear = 0; linear < total; ++linear) {
    MultiIndex w = MultiIndex::decode(linear, r, dim);
    int parity_prefix = 0;
    std::size_t stride = total;
    for (std::size_t i = 0; i < r; ++i) {
      stride /= dim;
      int sign =
          (x.parity * parity_prefix) % 2 == 0 ? 1 : -1;  // slide past slots
      std::size_t base = linear - w.slots[i] * stride;
      for (std::size_t a = 0; a < dim; ++a) {
        const Rational& entry = x.entries[a][w.slots[i]];
        if (entry != 0) matrix.add(base + a * stride, linear, sign * entry);
      }
      parity_prefix += space.parity(w.slots[i]);
    }
  }
  return matrix;
}

}  // namespace superbrauer
