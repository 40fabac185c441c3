#pragma once

// Matrices of the boson generators C_ij = a_i^dagger a_j and of the Cartan
// elements h_k = C_kk - C_{k+1,k+1} on a canonical OrderedBasis, plus the
// standard spin-j matrices of su(2).

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "suphase/linalg.hpp"
#include "suphase/weightspace.hpp"

namespace suphase {

/// A square matrix together with the irrep whose canonical basis it acts on.
class RepOperator {
 public:
  RepOperator(IrrepSpec irrep, ComplexMatrix matrix) : irrep_(irrep), matrix_(std::move(matrix)) {
    require_square(matrix_, "RepOperator");
    if (static_cast<std::size_t>(matrix_.rows()) != symmetric_irrep_dimension(irrep_.n, irrep_.lambda)) {
      throw std::invalid_argument("RepOperator: matrix dimension does not match irrep");
    }
  }

  const IrrepSpec& irrep() const { return irrep_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dimension() const { return matrix_.rows(); }

 private:
  IrrepSpec irrep_;
  ComplexMatrix matrix_;
};

inline RepOperator generator_matrix(const OrderedBasis& basis, int i, int j) {
  if (i == j) {
    throw std::invalid_argument("generator_matrix: i == j; use cartan_matrix or number_matrix for diagonal elements");
  }
  const RootLabel root(i, j);
  root.check_against(basis.n());
  const auto d = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& s = basis[col];
    if (auto target = s.moved(i, j)) {
      // Integer product first, one square root.
      const long long product = static_cast<long long>(s(j)) * (s(i) + 1);
      m(static_cast<Eigen::Index>(basis.index_of(*target)), static_cast<Eigen::Index>(col)) =
          std::sqrt(static_cast<double>(product));
    }
  }
  return {basis.spec(), std::move(m)};
}

/// C_kk = a_k^dagger a_k.
inline RepOperator number_matrix(const OrderedBasis& basis, int k) {
  if (k < 1 || k > basis.n()) throw std::invalid_argument("number_matrix: mode out of range");
  const auto d = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) m(r, r) = basis[static_cast<std::size_t>(r)](k);
  return {basis.spec(), std::move(m)};
}

inline RepOperator cartan_matrix(const OrderedBasis& basis, int k) {
  if (k < 1 || k > basis.n() - 1) {
    throw std::invalid_argument("cartan_matrix: k must lie in [1, " + std::to_string(basis.n() - 1) + "]");
  }
  const auto d = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const auto& s = basis[static_cast<std::size_t>(r)];
    m(r, r) = s(k) - s(k + 1);
  }
  return {basis.spec(), std::move(m)};
}

/// All C_ij (i != j), h_k and the number operators C_kk on one basis.
struct GeneratorSet {
  IrrepSpec irrep;
  std::map<RootLabel, ComplexMatrix> ladders;
  std::vector<ComplexMatrix> cartans;  // h_1 .. h_{n-1}
  std::vector<ComplexMatrix> numbers;  // C_11 .. C_nn

  int n() const { return irrep.n; }
  const ComplexMatrix& ladder(int i, int j) const { return ladders.at(RootLabel(i, j)); }
  const ComplexMatrix& cartan(int k) const { return cartans.at(static_cast<std::size_t>(k - 1)); }
  /// C_ij for any i, j including the diagonal.
  const ComplexMatrix& element(int i, int j) const {
    return i == j ? numbers.at(static_cast<std::size_t>(i - 1)) : ladder(i, j);
  }
};

inline GeneratorSet generator_set(const OrderedBasis& basis) {
  GeneratorSet g{basis.spec(), {}, {}, {}};
  const int n = basis.n();
  for (int i = 1; i <= n; ++i) {
    g.numbers.push_back(number_matrix(basis, i).matrix());
    for (int j = 1; j <= n; ++j)
      if (i != j) g.ladders.emplace(RootLabel(i, j), generator_matrix(basis, i, j).matrix());
  }
  for (int k = 1; k < n; ++k) g.cartans.push_back(cartan_matrix(basis, k).matrix());
  return g;
}

/// Max residual of [C_ij, C_kl] = delta_jk C_il - delta_il C_kj over all ladder
/// quadruples, and of [h_k, C_ij] = (root weight)_k C_ij.
inline double commutation_residual(const GeneratorSet& g) {
  const int n = g.n();
  double worst = 0.0;
  for (const auto& [a, ca] : g.ladders) {
    for (const auto& [b, cb] : g.ladders) {
      ComplexMatrix expected = ComplexMatrix::Zero(ca.rows(), ca.cols());
      if (a.j == b.i) expected += g.element(a.i, b.j);
      if (a.i == b.j) expected -= g.element(b.i, a.j);
      worst = std::max(worst, max_abs(commutator(ca, cb) - expected));
    }
    const WeightVector rw = root_weight(a, n);
    for (int k = 1; k < n; ++k) {
      worst = std::max(worst, max_abs(commutator(g.cartan(k), ca) - static_cast<double>(rw[static_cast<std::size_t>(k - 1)]) * ca));
    }
  }
  return worst;
}

/// Spin label stored as 2j so half-integers stay exact.
struct Spin {
  int twice = 0;

  static Spin from_double(double j) {
    const double t = 2.0 * j;
    if (!(t >= 0.0) || std::abs(t - std::round(t)) > 1e-12) {
      throw std::invalid_argument("Spin: 2j must be a non-negative integer");
    }
    return Spin{static_cast<int>(std::lround(t))};
  }
  double value() const { return twice / 2.0; }
  Eigen::Index dimension() const { return twice + 1; }
  /// m at basis position k; positions run from m = j down to m = -j.
  double m_at(Eigen::Index k) const { return value() - static_cast<double>(k); }
};

struct Su2Matrices {
  Spin j;
  RealMatrix h;
  RealMatrix e_plus;
  RealMatrix e_minus;
};

/// Standard Hermitian spin-j matrices on |j,j>, |j,j-1>, ..., |j,-j>.
inline Su2Matrices su2_matrices(Spin spin) {
  if (spin.twice < 0) throw std::invalid_argument("su2_matrices: invalid j");
  const Eigen::Index d = spin.dimension();
  const double j = spin.value();
  Su2Matrices s{spin, RealMatrix::Zero(d, d), RealMatrix::Zero(d, d), RealMatrix::Zero(d, d)};
  for (Eigen::Index k = 0; k < d; ++k) {
    const double m = spin.m_at(k);
    s.h(k, k) = m;
    if (k > 0) s.e_plus(k - 1, k) = std::sqrt((j - m) * (j + m + 1.0));
  }
  s.e_minus = s.e_plus.transpose();
  return s;
}

/// max of |[h, e+/-] -/+ e+/-| and |[e+, e-] - 2h|.
inline double su2_commutation_residual(const RealMatrix& h, const RealMatrix& ep, const RealMatrix& em) {
  double r = max_abs(commutator(ep, em) - 2.0 * h);
  r = std::max(r, max_abs(commutator(h, ep) - ep));
  r = std::max(r, max_abs(commutator(h, em) + em));
  return r;
}

/// su(2) at j = lambda/2 against the two-mode boson generators with
/// e+ = C_12, e- = C_21, h = h_1 / 2.
inline double schwinger_residual(Spin spin) {
  const auto s = su2_matrices(spin);
  const auto g = generator_set(enumerate_basis(2, spin.twice));
  double r = max_abs(g.ladder(1, 2) - s.e_plus.cast<Complex>());
  r = std::max(r, max_abs(g.ladder(2, 1) - s.e_minus.cast<Complex>()));
  r = std::max(r, max_abs(0.5 * g.cartan(1) - s.h.cast<Complex>()));
  return r;
}

}  // namespace suphase
