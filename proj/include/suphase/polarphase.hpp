#pragma once

// Polar decomposition C_ij = E_ij D_ij of boson ladder matrices, the
// su(2)-invariant (cyclic) completion of the partial isometry, Hermitian phase
// operators, and the group-commutator measure of non-commutativity.

#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "suphase/linalg.hpp"
#include "suphase/repmatrix.hpp"
#include "suphase/weightspace.hpp"

namespace suphase {

enum class Completion {
  Su2InvariantPlus,       // wrap entry +1: pure cyclic permutation of each string
  Su2InvariantPaperSign,  // wrap entry -1 on every string of length > 1
  RawPartial,             // no completion: kernel columns stay zero (not unitary)
};

inline std::string_view to_string(Completion c) {
  switch (c) {
    case Completion::Su2InvariantPlus: return "su2-invariant-plus";
    case Completion::Su2InvariantPaperSign: return "su2-invariant-paper-sign";
    case Completion::RawPartial: return "raw-partial";
  }
  return "?";
}

/// Relative cutoff below which eigenvalues of C^dagger C count as zero.
inline constexpr double kZeroEigenvalueCutoff = 1e-10;

/// D = sqrt(C^dagger C).
inline ComplexMatrix positive_factor(const ComplexMatrix& c) {
  require_square(c, "positive_factor");
  const ComplexMatrix gram = c.adjoint() * c;
  if (is_diagonal(gram)) {
    // Ladder matrices of a weight basis always land here.
    ComplexMatrix d = ComplexMatrix::Zero(c.rows(), c.cols());
    const double top = gram.rows() ? gram.diagonal().real().maxCoeff() : 0.0;
    const double cutoff = kZeroEigenvalueCutoff * std::max(top, 1.0);
    for (Eigen::Index k = 0; k < gram.rows(); ++k) {
      const double v = gram(k, k).real();
      d(k, k) = v > cutoff ? std::sqrt(v) : 0.0;
    }
    return d;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram);
  Eigen::VectorXd vals = eig.eigenvalues();
  const double cutoff = kZeroEigenvalueCutoff * std::max(vals.size() ? vals.maxCoeff() : 0.0, 1.0);
  for (auto& v : vals) v = v > cutoff ? std::sqrt(v) : 0.0;
  const ComplexMatrix& v = eig.eigenvectors();
  ComplexMatrix d = v * vals.cast<Complex>().asDiagonal() * v.adjoint();
  return 0.5 * (d + d.adjoint());
}

/// Columns of the positive factor's kernel (D diagonal).
inline std::vector<std::size_t> zero_columns(const ComplexMatrix& d) {
  std::vector<std::size_t> out;
  for (Eigen::Index k = 0; k < d.cols(); ++k)
    if (d.col(k).norm() == 0.0) out.push_back(static_cast<std::size_t>(k));
  return out;
}

/// C D^+ for diagonal D: the partial isometry, zero on ker D.
inline ComplexMatrix partial_isometry(const ComplexMatrix& c, const ComplexMatrix& d) {
  if (!is_diagonal(d)) throw std::invalid_argument("partial_isometry: positive factor must be diagonal");
  ComplexMatrix e = ComplexMatrix::Zero(c.rows(), c.cols());
  for (Eigen::Index k = 0; k < c.cols(); ++k)
    if (d(k, k) != Complex(0.0)) e.col(k) = c.col(k) / d(k, k);
  return e;
}

/// Cyclic successor map on every su(2)_{ij} string; the top of a string
/// (the state killed by C_ij) wraps to its bottom.
inline RepOperator su2_invariant_completion(const OrderedBasis& basis, const RootLabel& root, Completion convention) {
  const auto d = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix e = ComplexMatrix::Zero(d, d);
  const auto strings = su2_strings(basis, root);
  for (const auto& orbit : strings.orbits) {
    const std::size_t len = orbit.size();
    for (std::size_t p = 0; p + 1 < len; ++p) {
      e(static_cast<Eigen::Index>(orbit[p + 1]), static_cast<Eigen::Index>(orbit[p])) = 1.0;
    }
    const auto top = static_cast<Eigen::Index>(orbit.back());
    const auto bottom = static_cast<Eigen::Index>(orbit.front());
    switch (convention) {
      case Completion::Su2InvariantPlus: e(bottom, top) = 1.0; break;
      case Completion::Su2InvariantPaperSign: e(bottom, top) = len > 1 ? -1.0 : 1.0; break;
      case Completion::RawPartial: break;
    }
  }
  return {basis.spec(), std::move(e)};
}

struct PolarFactors {
  RepOperator e;
  RepOperator d;
  Completion convention;
  std::size_t kernel_dimension;
};

inline double polar_residual(const ComplexMatrix& c, const PolarFactors& f) {
  return max_abs(f.e.matrix() * f.d.matrix() - c);
}

/// Full polar decomposition of C_ij with the requested completion. The kernel
/// of D must coincide with kernel_states(root); the completion must agree with
/// C D^+ off the kernel.
inline PolarFactors polar_decompose(const OrderedBasis& basis, const RootLabel& root, Completion convention) {
  const RepOperator c = generator_matrix(basis, root.i, root.j);
  ComplexMatrix d = positive_factor(c.matrix());
  const auto zero_cols = zero_columns(d);
  if (zero_cols != kernel_states(basis, root)) {
    throw std::logic_error("polar_decompose: kernel of D" + root.str() + " differs from the edge states");
  }
  RepOperator e = su2_invariant_completion(basis, root, convention);
  const ComplexMatrix partial = partial_isometry(c.matrix(), d);
  std::vector<bool> in_kernel(basis.size(), false);
  for (auto k : zero_cols) in_kernel[k] = true;
  for (Eigen::Index k = 0; k < partial.cols(); ++k) {
    if (!in_kernel[static_cast<std::size_t>(k)] && max_abs(e.matrix().col(k) - partial.col(k)) > 1e-12) {
      throw std::logic_error("polar_decompose: completion disagrees with C D^+ outside the kernel");
    }
  }
  return {std::move(e), RepOperator(basis.spec(), std::move(d)), convention, zero_cols.size()};
}

/// sum_m |j,m-1><j,m| with m taken mod 2j+1, on |j,j>, ..., |j,-j>.
inline ComplexMatrix su2_shift_E(Spin spin) {
  const Eigen::Index d = spin.dimension();
  ComplexMatrix e = ComplexMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) e((k + 1) % d, k) = 1.0;
  return e;
}

/// Hermitian phi with exp(i phi) = E, eigenphases in (-pi, pi].
inline ComplexMatrix phase_hermitian(const ComplexMatrix& e) {
  require_square(e, "phase_hermitian");
  if (unitarity_residual(e) > 1e-10) {
    throw std::domain_error("phase_hermitian: matrix is not unitary; polar completion required first");
  }
  const auto sys = normal_eigensystem(e);
  Eigen::VectorXcd angles(sys.values.size());
  for (Eigen::Index k = 0; k < angles.size(); ++k) angles(k) = principal_angle(sys.values(k));
  ComplexMatrix phi = sys.vectors * angles.asDiagonal() * sys.vectors.adjoint();
  return 0.5 * (phi + phi.adjoint());
}

/// exp(i phi) for Hermitian phi.
inline ComplexMatrix exp_i_hermitian(const ComplexMatrix& phi) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(phi);
  ComplexVector phases(eig.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::polar(1.0, eig.eigenvalues()(k));
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

struct GroupCommutator {
  ComplexMatrix u;  // Ea Eb Ea^-1 Eb^-1
  ComplexMatrix m;  // u - 1
};

inline GroupCommutator group_commutator(const ComplexMatrix& ea, const ComplexMatrix& eb) {
  require_square(ea, "group_commutator");
  require_square(eb, "group_commutator");
  if (ea.rows() != eb.rows()) throw std::invalid_argument("group_commutator: dimension mismatch");
  ComplexMatrix u = ea * eb * ea.adjoint() * eb.adjoint();
  ComplexMatrix m = u - identity(u.rows());
  return {std::move(u), std::move(m)};
}

/// Exact non-negative rational, reduced.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) n = -n, d = -d;
    const long long g = std::gcd(n, d);
    return {n / g, d / g};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// 2[2(lambda+1) - 1] / (1/2 (lambda+1)(lambda+2)).
inline Rational formula_su3(int lambda) {
  if (lambda < 0) throw std::invalid_argument("formula_su3: lambda must be >= 0");
  const long long l = lambda;
  return Rational::make(2 * (2 * (l + 1) - 1) * 2, (l + 1) * (l + 2));
}

/// [2(lambda+1)(lambda+2) - (lambda+1) - 1] / ((lambda+1)(lambda+2)(lambda+3)/6).
inline Rational formula_su4(int lambda) {
  if (lambda < 0) throw std::invalid_argument("formula_su4: lambda must be >= 0");
  const long long l = lambda;
  return Rational::make((2 * (l + 1) * (l + 2) - (l + 1) - 1) * 6, (l + 1) * (l + 2) * (l + 3));
}

struct NoncommutativityReport {
  int n = 0;
  int lambda = 0;
  std::size_t dimension = 0;
  RootLabel root_a;
  RootLabel root_b;
  Completion convention = Completion::Su2InvariantPlus;
  double raw_norm = 0.0;         // Tr(M^dagger M)
  double normalized_norm = 0.0;  // raw / d
  std::optional<Rational> formula;
  std::size_t fixed_point_count = 0;
  double trace_identity = 0.0;  // 2(d - Re Tr U)
};

/// True for pairs whose generators fail to commute in the Lie algebra:
/// [C_ij, C_kl] != 0 iff j == k or i == l (excluding the opposite root).
inline bool roots_noncommuting(const RootLabel& a, const RootLabel& b) {
  if (a == b || a == b.reversed()) return false;
  return a.j == b.i || a.i == b.j;
}

inline NoncommutativityReport noncommutativity_norm(int n, int lambda, const RootLabel& a, const RootLabel& b,
                                                    Completion convention) {
  if (convention == Completion::RawPartial) {
    throw std::invalid_argument("noncommutativity_norm: needs a unitary completion");
  }
  const OrderedBasis basis = enumerate_basis(n, lambda);
  a.check_against(n);
  b.check_against(n);
  const auto fa = polar_decompose(basis, a, convention);
  const auto fb = polar_decompose(basis, b, convention);
  const auto gc = group_commutator(fa.e.matrix(), fb.e.matrix());

  NoncommutativityReport r;
  r.n = n;
  r.lambda = lambda;
  r.dimension = basis.size();
  r.root_a = a;
  r.root_b = b;
  r.convention = convention;
  r.raw_norm = (gc.m.adjoint() * gc.m).trace().real();
  r.normalized_norm = r.raw_norm / static_cast<double>(r.dimension);
  r.trace_identity = 2.0 * (static_cast<double>(r.dimension) - gc.u.trace().real());
  for (Eigen::Index k = 0; k < gc.u.rows(); ++k)
    if (std::abs(gc.u(k, k) - 1.0) < 1e-12) ++r.fixed_point_count;
  if (roots_noncommuting(a, b)) {
    if (n == 3) r.formula = formula_su3(lambda);
    if (n == 4) r.formula = formula_su4(lambda);
  }
  return r;
}

/// Least-squares slope of log(value) against log(lambda).
inline double decay_fit(std::span<const std::pair<int, double>> points) {
  if (points.size() < 4) throw std::invalid_argument("decay_fit: need at least 4 points");
  for (std::size_t a = 0; a < points.size(); ++a) {
    if (points[a].first < 2) throw std::invalid_argument("decay_fit: lambda must be >= 2");
    if (!(points[a].second > 0.0)) throw std::invalid_argument("decay_fit: values must be positive");
    for (std::size_t b = 0; b < a; ++b)
      if (points[a].first == points[b].first) throw std::invalid_argument("decay_fit: lambdas must be distinct");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [lambda, value] : points) {
    const double x = std::log(static_cast<double>(lambda));
    const double y = std::log(value);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double n = static_cast<double>(points.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double decay_fit(std::span<const NoncommutativityReport> reports) {
  std::vector<std::pair<int, double>> pts;
  pts.reserve(reports.size());
  for (const auto& r : reports) pts.emplace_back(r.lambda, r.normalized_norm);
  return decay_fit(pts);
}

/// Reports for lambda_min..lambda_max in ascending order. Work is spread over
/// `threads` workers; results are slotted by lambda so the output does not
/// depend on scheduling.
inline std::vector<NoncommutativityReport> noncommutativity_sweep(int n, int lambda_min, int lambda_max,
                                                                  const RootLabel& a, const RootLabel& b,
                                                                  Completion convention, unsigned threads = 1) {
  if (lambda_min < 0 || lambda_max < lambda_min) throw std::invalid_argument("noncommutativity_sweep: bad lambda range");
  const auto count = static_cast<std::size_t>(lambda_max - lambda_min + 1);
  std::vector<NoncommutativityReport> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        out[k] = noncommutativity_norm(n, lambda_min + static_cast<int>(k), a, b, convention);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned pool = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (pool == 1) {
    worker();
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < pool; ++t) workers.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// D_ij^2 - D_ji^2 with both positive factors computed from their own C.
inline ComplexMatrix d_square_difference(const OrderedBasis& basis, int i, int j) {
  const ComplexMatrix dij = positive_factor(generator_matrix(basis, i, j).matrix());
  const ComplexMatrix dji = positive_factor(generator_matrix(basis, j, i).matrix());
  return dij * dij - dji * dji;
}

}  // namespace suphase
