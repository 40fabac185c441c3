#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace suphase {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi;

/// Largest entry modulus, the infinity-norm used for every residual in the library.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

inline RealMatrix commutator(const RealMatrix& a, const RealMatrix& b) {
  return a * b - b * a;
}

inline ComplexMatrix identity(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

inline void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }
}

inline double unitarity_residual(const ComplexMatrix& u) {
  require_square(u, "unitarity_residual");
  return max_abs(u.adjoint() * u - identity(u.rows()));
}

inline bool is_diagonal(const ComplexMatrix& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (r != c && m(r, c) != Complex(0.0)) return false;
  return true;
}

/// Unitary diagonalization of a normal matrix through the complex Schur form.
/// For normal input the triangular factor is diagonal up to rounding; the
/// strictly upper part is discarded.
struct NormalEigensystem {
  ComplexVector values;
  ComplexMatrix vectors;  // columns, unitary
};

inline NormalEigensystem normal_eigensystem(const ComplexMatrix& m) {
  require_square(m, "normal_eigensystem");
  if (m.rows() == 0) return {};
  Eigen::ComplexSchur<ComplexMatrix> schur(m, /*computeU=*/true);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("normal_eigensystem: Schur decomposition did not converge");
  }
  return {schur.matrixT().diagonal(), schur.matrixU()};
}

/// Principal argument folded into (-pi, pi].
inline double principal_angle(Complex z) {
  double a = std::arg(z);
  if (a <= -kPi + 1e-12) a += 2.0 * kPi;
  return a;
}

/// exp(2 pi i k / d), with k reduced mod d so that k = 0 gives exactly 1.
inline Complex root_of_unity(int k, int d) {
  k = ((k % d) + d) % d;
  if (k == 0) return Complex(1.0, 0.0);
  const double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(d);
  return std::polar(1.0, angle);
}

}  // namespace suphase
