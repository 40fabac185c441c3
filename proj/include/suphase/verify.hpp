#pragma once

// Named invariant checks grouped into suites (su2, su3, su4, pauli, gamma).
// Each check reports its worst residual against a fixed tolerance.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "suphase/complementarity.hpp"
#include "suphase/gammareal.hpp"
#include "suphase/linalg.hpp"
#include "suphase/polarphase.hpp"
#include "suphase/repmatrix.hpp"
#include "suphase/weightspace.hpp"

namespace suphase {

struct CheckResult {
  std::string suite;
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"su2", "su3", "su4", "pauli", "gamma"};
  return names;
}

/// Matrices written out for the (1,0) irrep of su(3) in the basis |100>, |010>, |001>.
namespace fundamental_su3 {
inline ComplexMatrix E12_su2_invariant() {
  ComplexMatrix e(3, 3);
  e << 0, 1, 0, -1, 0, 0, 0, 0, 1;
  return e;
}
inline ComplexMatrix E23_su2_invariant() {
  ComplexMatrix e(3, 3);
  e << 1, 0, 0, 0, 0, 1, 0, -1, 0;
  return e;
}
/// i pi/2 [[0,-1,0],[1,0,0],[0,0,0]].
inline ComplexMatrix phi12() {
  const Complex f(0.0, kPi / 2.0);
  ComplexMatrix p = ComplexMatrix::Zero(3, 3);
  p(0, 1) = -f;
  p(1, 0) = f;
  return p;
}
/// i pi/2 [[0,0,0],[0,0,-1],[0,1,0]].
inline ComplexMatrix phi23() {
  const Complex f(0.0, kPi / 2.0);
  ComplexMatrix p = ComplexMatrix::Zero(3, 3);
  p(1, 2) = -f;
  p(2, 1) = f;
  return p;
}
inline ComplexMatrix E12_complementary_simplest() {
  const Complex w = root_of_unity(1, 3), w2 = root_of_unity(2, 3);
  ComplexMatrix e = ComplexMatrix::Zero(3, 3);
  e(0, 1) = 1.0;
  e(1, 2) = w;
  e(2, 0) = w2;
  return e;
}
inline ComplexMatrix E23_complementary_simplest() {
  const Complex w = root_of_unity(1, 3), w2 = root_of_unity(2, 3);
  ComplexMatrix e = ComplexMatrix::Zero(3, 3);
  e(0, 1) = w2;
  e(1, 2) = 1.0;
  e(2, 0) = w;
  return e;
}
}  // namespace fundamental_su3

namespace detail {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string suite) : suite_(std::move(suite)) {}

  void check(std::string name, double residual, double tolerance) {
    out_.push_back({suite_, std::move(name), residual, tolerance, residual <= tolerance});
  }
  /// Boolean predicate reported with residual 0 (holds) or 1 (fails).
  void require(std::string name, bool holds) { check(std::move(name), holds ? 0.0 : 1.0, 0.0); }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckResult> out_;
};

inline std::vector<RootLabel> all_roots(int n) {
  std::vector<RootLabel> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) roots.emplace_back(i, j);
  return roots;
}

/// Polar identity and unitarity over every root and both completions.
inline std::pair<double, double> polar_and_unitarity(int n, int lambda) {
  const auto basis = enumerate_basis(n, lambda);
  double polar = 0.0, unitary = 0.0;
  for (const auto& root : all_roots(n)) {
    const ComplexMatrix c = generator_matrix(basis, root.i, root.j).matrix();
    for (auto conv : {Completion::Su2InvariantPlus, Completion::Su2InvariantPaperSign}) {
      const auto f = polar_decompose(basis, root, conv);
      polar = std::max(polar, polar_residual(c, f));
      unitary = std::max(unitary, unitarity_residual(f.e.matrix()));
    }
  }
  return {polar, unitary};
}

inline double commutation_sweep(int n, int lambda_max) {
  double worst = 0.0;
  for (int l = 0; l <= lambda_max; ++l) worst = std::max(worst, commutation_residual(generator_set(enumerate_basis(n, l))));
  return worst;
}

inline double norm_trace_identity_sweep(int n, int lambda_max) {
  double worst = 0.0;
  for (int l = 1; l <= lambda_max; ++l)
    for (auto conv : {Completion::Su2InvariantPlus, Completion::Su2InvariantPaperSign}) {
      const auto r = noncommutativity_norm(n, l, {1, 2}, {3, 1}, conv);
      worst = std::max(worst, std::abs(r.raw_norm - r.trace_identity));
    }
  return worst;
}

}  // namespace detail

inline std::vector<CheckResult> verify_su2() {
  detail::SuiteBuilder s("su2");
  double comm = 0.0, schwinger = 0.0, cyclic = 0.0, spectral = 0.0, unbiased = 0.0;
  for (int twice = 0; twice <= 30; ++twice) {
    const Spin j{twice};
    const auto m = su2_matrices(j);
    comm = std::max(comm, su2_commutation_residual(m.h, m.e_plus, m.e_minus));
    if (twice <= 16) schwinger = std::max(schwinger, schwinger_residual(j));
    if (twice <= 20) {
      const ComplexMatrix e = su2_shift_E(j);
      cyclic = std::max(cyclic, max_abs(matrix_power(e, twice + 1) - identity(e.rows())));
      spectral = std::max(spectral, dft_eigensystem_residual(e));
      const auto sys = dft_eigensystem(e);
      const double expected = 1.0 / static_cast<double>(e.rows());
      unbiased = std::max(unbiased, max_abs((sys.vectors.cwiseAbs2().array() - expected).matrix()));
    }
  }
  s.check("[h,e+-] = +-e+-, [e+,e-] = 2h for j <= 15", comm, 1e-13);
  s.check("Schwinger two-mode generators match spin-j matrices, j <= 8", schwinger, 1e-12);
  s.check("shift E^(2j+1) = 1 for 2j+1 <= 21", cyclic, 0.0);
  s.check("shift eigenvalues are (2j+1)-th roots of unity, DFT eigenvectors, 2j+1 <= 21", spectral, 1e-10);
  s.check("shift eigenvectors unbiased against |jm>, 2j+1 <= 21", unbiased, 1e-10);
  return s.take();
}

inline std::vector<CheckResult> verify_su3() {
  detail::SuiteBuilder s("su3");
  s.check("commutation relations, lambda <= 6", detail::commutation_sweep(3, 6), 1e-12);

  double dsq = 0.0, dcartan = 0.0;
  for (int l = 0; l <= 8; ++l) {
    const auto basis = enumerate_basis(3, l);
    const auto g = generator_set(basis);
    for (const auto& root : detail::all_roots(3)) {
      // On boson states D_ij^2 - D_ji^2 = n_j - n_i.
      dsq = std::max(dsq, max_abs(d_square_difference(basis, root.i, root.j) - (g.element(root.j, root.j) - g.element(root.i, root.i))));
      const ComplexMatrix d = positive_factor(g.ladder(root.i, root.j));
      for (int k = 1; k <= 2; ++k) dcartan = std::max(dcartan, max_abs(commutator(g.cartan(k), d)));
    }
  }
  s.check("D_ij^2 - D_ji^2 = C_jj - C_ii, lambda <= 8", dsq, 1e-12);
  s.check("[h_k, D_ij] = 0, lambda <= 8", dcartan, 1e-12);

  double polar = 0.0, unitary = 0.0;
  for (int l = 0; l <= 6; ++l) {
    const auto [p, u] = detail::polar_and_unitarity(3, l);
    polar = std::max(polar, p);
    unitary = std::max(unitary, u);
  }
  s.check("polar identity E D = C, lambda <= 6", polar, 1e-12);
  s.check("unitarity of completions, lambda <= 6", unitary, 1e-12);

  double formula = 0.0;
  for (int l = 1; l <= 10; ++l) {
    const auto r = noncommutativity_norm(3, l, {1, 2}, {3, 1}, Completion::Su2InvariantPlus);
    formula = std::max(formula, std::abs(r.normalized_norm - formula_su3(l).value()));
  }
  s.check("normalized ||M||^2 matches 2[2(lambda+1)-1]/d, lambda = 1..10", formula, 1e-9);
  s.check("||M||^2 = 2(d - Re Tr U), lambda <= 8", detail::norm_trace_identity_sweep(3, 8), 1e-10);

  const auto basis = enumerate_basis(3, 1);
  const ComplexMatrix e12 = su2_invariant_completion(basis, {1, 2}, Completion::Su2InvariantPaperSign).matrix();
  const ComplexMatrix e23 = su2_invariant_completion(basis, {2, 3}, Completion::Su2InvariantPaperSign).matrix();
  s.check("(1,0) su(2)-invariant E12 and E23 entrywise",
          std::max(max_abs(e12 - fundamental_su3::E12_su2_invariant()), max_abs(e23 - fundamental_su3::E23_su2_invariant())), 0.0);
  s.check("(1,0) phase operators phi12 and phi23",
          std::max(max_abs(phase_hermitian(e12) - fundamental_su3::phi12()), max_abs(phase_hermitian(e23) - fundamental_su3::phi23())),
          1e-10);
  return s.take();
}

inline std::vector<CheckResult> verify_su4() {
  detail::SuiteBuilder s("su4");
  s.check("commutation relations, lambda <= 6", detail::commutation_sweep(4, 6), 1e-12);
  double polar = 0.0, unitary = 0.0;
  for (int l = 0; l <= 4; ++l) {
    const auto [p, u] = detail::polar_and_unitarity(4, l);
    polar = std::max(polar, p);
    unitary = std::max(unitary, u);
  }
  s.check("polar identity E D = C, lambda <= 4", polar, 1e-12);
  s.check("unitarity of completions, lambda <= 4", unitary, 1e-12);
  bool edges = true;
  for (int l = 0; l <= 8; ++l) {
    const auto basis = enumerate_basis(4, l);
    for (const auto& root : detail::all_roots(4))
      edges = edges && kernel_states(basis, root).size() == static_cast<std::size_t>((l + 1) * (l + 2) / 2);
  }
  s.require("every edge holds (lambda+1)(lambda+2)/2 states, lambda <= 8", edges);
  s.check("||M||^2 = 2(d - Re Tr U), lambda <= 6", detail::norm_trace_identity_sweep(4, 6), 1e-10);
  return s.take();
}

inline std::vector<CheckResult> verify_pauli() {
  detail::SuiteBuilder s("pauli");
  const auto p = pauli_generators(3);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      s.check("X^" + std::to_string(k) + " Z^" + std::to_string(l) + " = w^" + std::to_string(k * l % 3) + " Z^" +
                  std::to_string(l) + " X^" + std::to_string(k),
              pauli_relation_residual(p, k, l), 1e-12);
  s.check("X^3 = 1", max_abs(matrix_power(p.x, 3) - identity(3)), 1e-12);
  s.check("Z^3 = 1", max_abs(matrix_power(p.z, 3) - identity(3)), 1e-12);

  double comp = 0.0, unit = 0.0;
  for (int step = 0; step < 24; ++step) {
    const double angle = 2.0 * kPi * step / 24.0 - kPi;
    comp = std::max({comp, complementarity_check(complementary_E12(angle), p.z), complementarity_check(complementary_E23(angle), p.z)});
    unit = std::max({unit, unitarity_residual(complementary_E12(angle)), unitarity_residual(complementary_E23(angle))});
  }
  s.check("Z E = w^2 E Z for the complementary families", comp, 1e-13);
  s.check("complementary families are unitary", unit, 1e-13);

  const auto sols = additivity_solve();
  double commute = 0.0, diag = 0.0, displayed = 1.0;
  for (const auto& sol : sols) {
    commute = std::max(commute, sol.commutator_residual);
    diag = std::max(diag, simultaneous_diagonalization_residual({sol.e12, sol.e23, sol.e13}));
    if (sol.simplest_nontrivial) {
      displayed = std::max({max_abs(sol.e12 - fundamental_su3::E12_complementary_simplest()),
                            max_abs(sol.e23 - fundamental_su3::E23_complementary_simplest()),
                            max_abs(sol.e13 - displayed_E13())});
    }
  }
  s.require("additivity lattice has the solutions (0,0), (2pi/3,-2pi/3), (-2pi/3,2pi/3)", sols.size() == 3);
  s.check("[E12, E23] = 0 for every additive solution", commute, 1e-12);
  s.check("additive solutions are simultaneously diagonalizable", diag, 1e-10);
  s.check("beta = 2pi/3, gamma = -2pi/3 gives the omega matrices, E13 = E12 E23", displayed, 1e-13);
  const auto simplest = std::find_if(sols.begin(), sols.end(), [](const auto& x) { return x.simplest_nontrivial; });
  s.require("omega solutions closed under products of length <= 4",
            simplest != sols.end() && closed_under_products({simplest->e12, simplest->e23, simplest->e13}, 4));
  return s.take();
}

inline std::vector<CheckResult> verify_gamma() {
  detail::SuiteBuilder s("gamma");
  double rep = 0.0, herm = 0.0, kcomm = 0.0, spectra = 0.0, srec = 0.0, phase = 0.0;
  for (int twice = 0; twice <= 60; ++twice) {
    const Spin j{twice};
    srec = std::max(srec, s_recursion_check(j));
    if (twice > 30) continue;
    const auto g = gamma_su2(j);
    rep = std::max(rep, su2_commutation_residual(g.h, g.e_plus, g.e_minus));
    herm = std::max(herm, hermitize_check(j));
    kcomm = std::max(kcomm, intertwiner_commutation_residual(j));
    spectra = std::max(spectra, casimir_spectrum_mismatch(j));
    if (twice <= 20) phase = std::max(phase, max_abs(gamma_phase_part(g) - su2_shift_E(j)));
  }
  s.check("Gamma satisfies the su(2) relations exactly, j <= 15", rep, 0.0);
  s.check("K^-1 Gamma K is the Hermitian spin-j representation, j <= 15", herm, 1e-9);
  s.check("S recursion S_{m+1}(j+m+1) = S_m(j-m), j <= 30 (relative)", srec, 1e-12);
  s.check("phase part of Gamma(e-) equals the cyclic shift, j <= 10", phase, 0.0);
  s.check("K commutes with Gamma(h), Gamma(e-)Gamma(e+), Gamma(e+)Gamma(e-), j <= 15", kcomm, 1e-10);
  s.check("spectra of Gamma(e+)Gamma(e-) and gamma(e+)gamma(e-) agree, j <= 15", spectra, 1e-9);
  double su3 = 0.0;
  for (int l = 0; l <= 4; ++l) su3 = std::max(su3, commutation_residual(gamma_su3(l).as_generator_set()));
  s.check("Gamma for su(3) satisfies the u(3) relations, lambda <= 4", su3, 1e-12);
  return s.take();
}

/// Runs one suite by name, or every suite for "all".
inline std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "su2") return verify_su2();
  if (name == "su3") return verify_su3();
  if (name == "su4") return verify_su4();
  if (name == "pauli") return verify_pauli();
  if (name == "gamma") return verify_gamma();
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace suphase
