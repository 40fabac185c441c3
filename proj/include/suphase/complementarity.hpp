#pragma once

// Generalized Pauli (clock and shift) matrices and the complementarity-based
// phase operators of the three-dimensional irrep (1,0) of su(3).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "suphase/linalg.hpp"
#include "suphase/polarphase.hpp"
#include "suphase/weightspace.hpp"

namespace suphase {

struct PauliPair {
  int d = 3;
  Complex omega;
  ComplexMatrix x;
  ComplexMatrix z;
};

/// Z = diag(w, w^2, ..., w^{d-1}, 1) and X the w-decorated cyclic matrix with
/// X(a, a+1) = w^{-a}; the wrap entry X(d-1, 0) makes the phase product 1 so
/// that X^d = 1. For d = 3 these are exactly
///   Z = diag(w, w^2, 1),  X = [[0,1,0],[0,0,w^2],[w,0,0]].
/// Only d = 3 is exercised by the su(3) construction; other d are experimental.
inline PauliPair pauli_generators(int d = 3) {
  if (d < 2) throw std::invalid_argument("pauli_generators: d must be >= 2");
  PauliPair p{d, root_of_unity(1, d), ComplexMatrix::Zero(d, d), ComplexMatrix::Zero(d, d)};
  for (int a = 0; a < d; ++a) p.z(a, a) = root_of_unity(a + 1, d);
  int exponent_sum = 0;
  for (int a = 0; a + 1 < d; ++a) {
    p.x(a, a + 1) = root_of_unity(-a, d);
    exponent_sum -= a;
  }
  p.x(d - 1, 0) = root_of_unity(-exponent_sum, d);
  return p;
}

inline ComplexMatrix matrix_power(const ComplexMatrix& m, int k) {
  ComplexMatrix out = identity(m.rows());
  for (int t = 0; t < k; ++t) out = out * m;
  return out;
}

/// ||X^k Z^l - w^{kl} Z^l X^k||.
inline double pauli_relation_residual(const PauliPair& p, int k, int l) {
  const ComplexMatrix xk = matrix_power(p.x, k);
  const ComplexMatrix zl = matrix_power(p.z, l);
  return max_abs(xk * zl - root_of_unity(k * l, p.d) * zl * xk);
}

/// Rows (0,1,0), (0,0,e^{i beta}), (e^{-i beta},0,0).
inline ComplexMatrix complementary_E12(double beta) {
  ComplexMatrix e = ComplexMatrix::Zero(3, 3);
  e(0, 1) = 1.0;
  e(1, 2) = std::polar(1.0, beta);
  e(2, 0) = std::polar(1.0, -beta);
  return e;
}

/// Rows (0,e^{i gamma},0), (0,0,1), (e^{-i gamma},0,0).
inline ComplexMatrix complementary_E23(double gamma) {
  ComplexMatrix e = ComplexMatrix::Zero(3, 3);
  e(0, 1) = std::polar(1.0, gamma);
  e(1, 2) = 1.0;
  e(2, 0) = std::polar(1.0, -gamma);
  return e;
}

/// ||Z E - w^2 E Z|| with Z the clock matrix of dimension 3.
inline double complementarity_check(const ComplexMatrix& e, const ComplexMatrix& z) {
  if (e.rows() != z.rows() || e.cols() != z.cols()) throw std::invalid_argument("complementarity_check: dimension mismatch");
  return max_abs(z * e - root_of_unity(2, 3) * e * z);
}

struct ComplementarySolution {
  double beta = 0.0;
  double gamma = 0.0;
  int beta_steps = 0;   // beta = 2 pi beta_steps / 3
  int gamma_steps = 0;  // gamma = 2 pi gamma_steps / 3, folded into {-1, 0, 1}
  ComplexMatrix e12;
  ComplexMatrix e23;
  ComplexMatrix e13;  // e12 * e23
  double commutator_residual = 0.0;
  bool simplest_nontrivial = false;
};

/// Lattice points (beta, gamma) in (2 pi / 3) Z_3 x (2 pi / 3) Z_3 meeting
/// beta + gamma = 2beta - gamma = -beta + 2gamma = 0 (mod 2 pi), which is
/// exactly [E12(beta), E23(gamma)] = 0. All nine candidates are checked.
inline std::vector<ComplementarySolution> additivity_solve() {
  std::vector<ComplementarySolution> out;
  const auto mod3 = [](int v) { return ((v % 3) + 3) % 3; };
  for (int b = -1; b <= 1; ++b) {
    for (int g = -1; g <= 1; ++g) {
      if (mod3(b + g) != 0 || mod3(2 * b - g) != 0 || mod3(-b + 2 * g) != 0) continue;
      ComplementarySolution s;
      s.beta_steps = b;
      s.gamma_steps = g;
      s.beta = 2.0 * kPi * b / 3.0;
      s.gamma = 2.0 * kPi * g / 3.0;
      s.e12 = complementary_E12(s.beta);
      s.e23 = complementary_E23(s.gamma);
      s.e13 = s.e12 * s.e23;
      s.commutator_residual = max_abs(commutator(s.e12, s.e23));
      s.simplest_nontrivial = (b == 1 && g == -1);
      out.push_back(std::move(s));
    }
  }
  return out;
}

/// The E13 displayed for beta = 2pi/3, gamma = -2pi/3: rows (0,0,1), (w^2,0,0), (0,w,0).
inline ComplexMatrix displayed_E13() {
  ComplexMatrix e = ComplexMatrix::Zero(3, 3);
  e(0, 2) = 1.0;
  e(1, 0) = root_of_unity(2, 3);
  e(2, 1) = root_of_unity(1, 3);
  return e;
}

/// Worst off-diagonal entry of Q^dagger E Q over the given commuting unitaries,
/// where Q diagonalizes a generic linear combination of them.
inline double simultaneous_diagonalization_residual(const std::vector<ComplexMatrix>& mats) {
  if (mats.empty()) return 0.0;
  ComplexMatrix mix = ComplexMatrix::Zero(mats[0].rows(), mats[0].cols());
  // Incommensurate weights separate the joint spectrum.
  const double weights[] = {1.0, std::sqrt(2.0), std::sqrt(3.0) - 0.5, std::sqrt(5.0)};
  for (std::size_t k = 0; k < mats.size(); ++k) mix += weights[k % 4] * (k + 1.0) * mats[k];
  const auto sys = normal_eigensystem(mix);
  double worst = 0.0;
  for (const auto& m : mats) {
    ComplexMatrix t = sys.vectors.adjoint() * m * sys.vectors;
    t.diagonal().setZero();
    worst = std::max(worst, max_abs(t));
  }
  return worst;
}

/// True when every row and column has exactly one non-zero entry and that
/// entry is a d-th root of unity.
inline bool is_monomial_root_of_unity(const ComplexMatrix& m, int d, double tol = 1e-12) {
  const Eigen::Index n = m.rows();
  std::vector<int> row_hits(static_cast<std::size_t>(n), 0), col_hits(static_cast<std::size_t>(n), 0);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Complex v = m(r, c);
      if (std::abs(v) < tol) continue;
      bool root = false;
      for (int k = 0; k < d && !root; ++k) root = std::abs(v - root_of_unity(k, d)) < tol;
      if (!root) return false;
      ++row_hits[static_cast<std::size_t>(r)];
      ++col_hits[static_cast<std::size_t>(c)];
    }
  }
  const auto one = [](int h) { return h == 1; };
  return std::all_of(row_hits.begin(), row_hits.end(), one) && std::all_of(col_hits.begin(), col_hits.end(), one);
}

/// Every word of length <= max_length in the generators stays monomial with
/// entries in the cube roots of unity.
inline bool closed_under_products(const std::vector<ComplexMatrix>& gens, int max_length, int d = 3) {
  std::vector<ComplexMatrix> layer{identity(gens.at(0).rows())};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<ComplexMatrix> next;
    next.reserve(layer.size() * gens.size());
    for (const auto& w : layer)
      for (const auto& g : gens) {
        ComplexMatrix p = w * g;
        if (!is_monomial_root_of_unity(p, d)) return false;
        next.push_back(std::move(p));
      }
    layer = std::move(next);
  }
  return true;
}

struct MonomialSearchResult {
  std::size_t completions_a = 0;
  std::size_t completions_b = 0;
  std::size_t pairs_checked = 0;
  std::size_t commuting_pairs = 0;
};

namespace detail {
/// Every unitary completion of C_root's partial isometry whose kernel columns
/// are sent onto the free rows with phases drawn from the phase_order-th roots of unity.
inline std::vector<ComplexMatrix> monomial_completions(const OrderedBasis& basis, const RootLabel& root, int phase_order) {
  const ComplexMatrix c = generator_matrix(basis, root.i, root.j).matrix();
  const ComplexMatrix partial = partial_isometry(c, positive_factor(c));
  const auto kernel = kernel_states(basis, root);
  std::vector<std::size_t> free_rows;
  for (Eigen::Index r = 0; r < partial.rows(); ++r)
    if (partial.row(r).norm() == 0.0) free_rows.push_back(static_cast<std::size_t>(r));

  std::vector<ComplexMatrix> out;
  std::vector<std::size_t> perm = free_rows;
  const std::size_t k = kernel.size();
  std::size_t phase_count = 1;
  for (std::size_t t = 0; t < k; ++t) phase_count *= static_cast<std::size_t>(phase_order);
  do {
    for (std::size_t code = 0; code < phase_count; ++code) {
      ComplexMatrix e = partial;
      std::size_t rest = code;
      for (std::size_t t = 0; t < k; ++t) {
        const int p = static_cast<int>(rest % static_cast<std::size_t>(phase_order));
        rest /= static_cast<std::size_t>(phase_order);
        e(static_cast<Eigen::Index>(perm[t]), static_cast<Eigen::Index>(kernel[t])) = root_of_unity(p, phase_order);
      }
      out.push_back(std::move(e));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}
}  // namespace detail

/// Exhaustive search for commuting pairs among the monomial completions of two
/// ladder operators; used to probe whether complementary-style completions of
/// (lambda, 0) can commute.
inline MonomialSearchResult commuting_monomial_completions(int lambda, const RootLabel& a, const RootLabel& b,
                                                           int phase_order = 3) {
  const OrderedBasis basis = enumerate_basis(3, lambda);
  const auto ea = detail::monomial_completions(basis, a, phase_order);
  const auto eb = detail::monomial_completions(basis, b, phase_order);
  MonomialSearchResult r{ea.size(), eb.size(), 0, 0};
  for (const auto& x : ea)
    for (const auto& y : eb) {
      ++r.pairs_checked;
      if (max_abs(commutator(x, y)) < 1e-9) ++r.commuting_pairs;
    }
  return r;
}

}  // namespace suphase
