// Acceptance suite: one line per criterion, exit status 0 only if every
// criterion holds. All checks are exact; there are no tolerances anywhere.

#include <cstdio>
#include <map>
#include <vector>

#include "superbrauer/ideal_stream.hpp"
#include "superbrauer/kernels.hpp"
#include "superbrauer/tensor_ops.hpp"
#include "superbrauer/verify.hpp"

using namespace superbrauer;

namespace {

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) value *= base;
  return value;
}

bool brauer_relations_hold(const SuperSpace& s, std::size_t d) {
  const long long delta = s.loop_parameter();
  const std::size_t size = power(s.dim(), d);
  SparseMatrix id = SparseMatrix::identity(size);
  std::vector<SparseMatrix> cross, contract;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    cross.push_back(
        permutation_action(s, Permutation::transposition(d, i, i + 1), d));
    contract.push_back(contraction_operator(s, i, d));
  }
  bool ok = true;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    ok = ok && cross[i] * cross[i] == id;
    SparseMatrix scaled = contract[i];
    scaled.scale(Rational(static_cast<long>(delta)));
    ok = ok && contract[i] * contract[i] == scaled;
    ok = ok && cross[i] * contract[i] == contract[i];
    ok = ok && contract[i] * cross[i] == contract[i];
  }
  for (std::size_t i = 0; i + 2 < d; ++i) {
    ok = ok && cross[i] * cross[i + 1] * cross[i] ==
                   cross[i + 1] * cross[i] * cross[i + 1];
    ok = ok && contract[i] * contract[i + 1] * contract[i] == contract[i];
    ok = ok &&
         contract[i + 1] * contract[i] * contract[i + 1] == contract[i + 1];
    ok = ok && cross[i] * contract[i + 1] * contract[i] ==
                   cross[i + 1] * contract[i];
    ok = ok && contract[i + 1] * contract[i] * cross[i + 1] ==
                   contract[i + 1] * cross[i];
  }
  for (std::size_t i = 0; i + 1 < d; ++i)
    for (std::size_t j = i + 2; j + 1 < d; ++j) {
      ok = ok && cross[i] * cross[j] == cross[j] * cross[i];
      ok = ok && contract[i] * contract[j] == contract[j] * contract[i];
      ok = ok && cross[i] * contract[j] == contract[j] * cross[i];
      ok = ok && contract[i] * cross[j] == cross[j] * contract[i];
    }
  return ok;
}

int failures = 0;

void criterion(int number, const char* name, bool pass,
               const std::string& detail) {
  std::printf("AC%d %s %s%s%s\n", number, pass ? "PASS" : "FAIL", name,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string dims_string(const VerificationReport& r) {
  std::string out;
  for (const auto& [key, value] : r.dims) {
    if (!out.empty()) out += ", ";
    out += key + "=" + std::to_string(value);
  }
  return out;
}

}  // namespace

int main() {
  // 1. osp(1|2): no relations up to d = 3, matching positive dimensions at
  // d = 4.
  {
    VerificationReport d3 = verify_sft(1, 1, 3);
    VerificationReport d4 = verify_sft(1, 1, 4);
    bool pass = d3.verified() && d3.dims.at("kernel_dim") == 0 &&
                d3.dims.at("span_rank") == 0 && d4.verified() &&
                d4.dims.at("kernel_dim") > 0 &&
                d4.dims.at("span_rank") == d4.dims.at("kernel_dim");
    criterion(1, "osp(1|2) second fundamental theorem at d=3,4", pass,
              "d3: " + dims_string(d3) + "; d4: " + dims_string(d4));
  }

  // 2. General linear rank/kernel against the rectangle ideal.
  {
    bool pass = true;
    std::string detail;
    for (std::size_t r = 1; r <= 3; ++r) {
      VerificationReport report = verify_fft_gl(1, 1, r);
      pass = pass && report.verified() && report.dims.at("kernel_dim") == 0;
    }
    VerificationReport r4 = verify_fft_gl(1, 1, 4);
    pass = pass && r4.verified() && r4.dims.at("rank") == 20 &&
           r4.dims.at("kernel_dim") == 4;
    criterion(2, "general linear kernel at (1|1), r<=4", pass,
              "r4: " + dims_string(r4));
  }

  // 3. Brauer algebra relations as exact matrix identities.
  {
    bool pass = true;
    for (const auto& [m, n] :
         std::vector<std::pair<std::size_t, std::size_t>>{
             {1, 1}, {2, 1}, {0, 1}, {3, 0}}) {
      SuperSpace s = SuperSpace::orthosymplectic(m, n);
      for (std::size_t d = 2; d <= 4; ++d)
        pass = pass && brauer_relations_hold(s, d);
    }
    criterion(3, "Brauer relations under the tensor action", pass, "");
  }

  // 4. Derivation invariance of the pairing functionals; no odd invariants.
  {
    SuperSpace s = SuperSpace::orthosymplectic(1, 1);
    std::vector<GradedMatrix> basis = orthosymplectic_basis(s);
    bool pass = basis.size() == 5;
    for (std::size_t d = 1; d <= 3; ++d)
      for (const BrauerDiagram& D : enumerate_diagrams(2 * d, 0)) {
        SparseVec kappa = kappa_vector(s, D);
        for (const auto& x : basis) {
          SparseMatrix t = derivation_action(s, x, 2 * d).transpose();
          pass = pass && t.mul_sparse(kappa).empty();
        }
      }
    // Odd-degree invariants of the full supergroup: the derivation
    // conditions plus the even-line reflection (the even part of the group
    // is disconnected) leave nothing.
    for (std::size_t r : {1u, 3u}) {
      const std::size_t total = power(s.dim(), r);
      SparseMatrix stacked((basis.size() + 1) * total, total);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        SparseMatrix t = derivation_action(s, basis[k], r).transpose();
        for (std::size_t row = 0; row < total; ++row)
          for (const auto& [col, value] : t.row(row).terms())
            stacked.add(k * total + row, col, value);
      }
      for (std::size_t w = 0; w < total; ++w) {
        MultiIndex multi = MultiIndex::decode(w, r, s.dim());
        int flips = 0;
        for (std::uint32_t slot : multi.slots)
          if (slot == 0) ++flips;
        stacked.add(basis.size() * total + w, w,
                    Rational(flips % 2 == 0 ? 1 : -1) - 1);
      }
      pass = pass && nullspace_basis(stacked).empty();
    }
    criterion(4, "derivation invariance and odd-degree vanishing", pass, "");
  }

  // 5. Orthogonal relation family.
  {
    ClassicalResult base = classical_orthogonal(1, 2);
    bool pass = base.report.verified() &&
                base.report.dims.at("kernel_dim") == 2 &&
                base.report.dims.at("span_rank") == 2;
    std::string detail = "m1d2: " + dims_string(base.report);
    for (std::size_t m = 1; m <= 3 && pass; ++m)
      for (std::size_t d = 1; d <= m && pass; ++d) {
        ClassicalResult zero = classical_orthogonal(m, d);
        pass = pass && zero.report.verified() &&
               zero.report.dims.at("kernel_dim") == 0;
      }
    criterion(5, "orthogonal relation family", pass, detail);
  }

  // 6. Symplectic relation family.
  {
    ClassicalResult base = classical_symplectic(1, 2);
    ClassicalResult zero = classical_symplectic(1, 1);
    bool pass = base.report.verified() &&
                base.report.dims.at("kernel_dim") == 1 &&
                base.report.dims.at("span_rank") == 1 &&
                zero.report.verified() &&
                zero.report.dims.at("kernel_dim") == 0;
    criterion(6, "symplectic relation family", pass,
              "n1d2: " + dims_string(base.report));
  }

  // 7. Structural identities.
  {
    bool pass = true;
    for (const auto& [m, n] :
         std::vector<std::pair<std::size_t, std::size_t>>{
             {1, 1}, {2, 1}, {0, 1}, {3, 0}}) {
      SuperSpace s = SuperSpace::orthosymplectic(m, n);
      SparseMatrix gamma = contraction_operator(s, 0, 2);
      SparseMatrix scaled = gamma;
      scaled.scale(Rational(static_cast<long>(s.loop_parameter())));
      pass = pass && gamma * gamma == scaled;
    }

    SuperSpace s = SuperSpace::orthosymplectic(1, 1);
    for (std::size_t d = 1; d <= 2; ++d) {
      SparseMatrix projector =
          group_algebra_action(s, hyperoctahedral_symmetrizer(d), 2 * d);
      pass = pass && projector * projector == projector;
    }

    // Centralizer invariance of the bracket functional.
    for (std::size_t d = 1; d <= 3; ++d) {
      SparseVec bracket = kappa_vector(s, adjacent_pairing(d));
      for (const Permutation& sigma : hyperoctahedral_elements(d)) {
        SparseMatrix t = permutation_action(s, sigma, 2 * d).transpose();
        pass = pass && t.mul_sparse(bracket) == bracket;
      }
    }

    // Pairing adjunction for every permutation at r = 3.
    const std::size_t r = 3;
    const std::size_t total = power(s.dim(), r);
    for (const Permutation& pi : all_permutations(r)) {
      SparseMatrix action = permutation_action(s, pi, r);
      SparseMatrix rhs = delta_matrix(s, pi.inverse(), r);
      bool slide = true;
      for (std::size_t u = 0; u < total && slide; ++u)
        for (std::size_t w = 0; w < total && slide; ++w) {
          MultiIndex multi = MultiIndex::decode(w, r, s.dim());
          Rational lhs = action.get(w, u) *
                         Rational(koszul_sign_between(multi.parities(s),
                                                      multi.parities(s)));
          slide = lhs == rhs.get(u, w);
        }
      pass = pass && slide;
    }

    // Representative independence of the pairing functionals.
    for (std::size_t d = 1; d <= 2; ++d)
      for (const BrauerDiagram& D : enumerate_diagrams(2 * d, 0)) {
        SparseVec reference = kappa_vector(s, D);
        Permutation pi = pairing_permutation(D);
        for (const Permutation& sigma : hyperoctahedral_elements(d)) {
          HomElement moved = compose(adjacent_pairing(d),
                                     permutation_diagram(sigma * pi), -1);
          pass = pass && moved.term_count() == 1 &&
                 kappa_vector(s, moved.terms().begin()->first) == reference;
        }
      }

    // Factorization independence of the diagram action.
    SplitMix64 rng(77);
    std::vector<BrauerDiagram> all = enumerate_diagrams(3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      BrauerDiagram diagram = all[rng.next_below(all.size())];
      Permutation rho = random_permutation(3, rng);
      HomElement shifted =
          compose(HomElement::of(diagram, -1),
                  HomElement::of(permutation_diagram(rho), -1));
      pass = pass && shifted.term_count() == 1;
      if (!pass) break;
      SparseMatrix direct = eta_operator(s, diagram);
      SparseMatrix split = eta_operator(s, shifted.terms().begin()->first) *
                           permutation_action(s, rho.inverse(), 3);
      pass = pass && direct == split;
    }

    criterion(7, "structural identities", pass, "");
  }

  // 8. Cross-formulation: the algebra action kernel through bending.
  {
    bool pass = true;
    std::string detail;
    for (std::size_t d = 1; d <= 3; ++d) {
      KernelResult kernel = kernel_eta(1, 1, d);
      pass = pass && kernel.kernel_dim == 0;
    }
    VerificationReport d4 = verify_sft_eta(1, 1, 4);
    pass = pass && d4.verified() && d4.dims.at("eta_kernel_dim") > 0 &&
           d4.dims.at("eta_kernel_dim") == d4.dims.at("kappa_kernel_dim");
    criterion(8, "bent ideal span lands in the action kernel", pass,
              "d4: " + dims_string(d4));
  }

  if (failures == 0) {
    std::printf("acceptance: all 8 criteria hold\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
