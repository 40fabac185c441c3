#pragma once

// Matrix form of the coherent-state realization Gamma on the finite invariant
// subspaces: su(2) on exp(i m phi), su(3) on exp(i (x phi_1 + y phi_2)). Gamma
// has integer ladder coefficients and is not Hermitian; the diagonal
// "square root of a binomial" K conjugates it into the standard Hermitian form.

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "suphase/linalg.hpp"
#include "suphase/polarphase.hpp"
#include "suphase/repmatrix.hpp"
#include "suphase/weightspace.hpp"

namespace suphase {

/// Gamma(h), Gamma(e+), Gamma(e-) on |j,j>, ..., |j,-j> (same ordering as su2_matrices).
struct GammaSu2 {
  Spin j;
  RealMatrix h;
  RealMatrix e_plus;   // |m> -> (j - m) |m+1>
  RealMatrix e_minus;  // |m> -> (j + m) |m-1>
};

inline GammaSu2 gamma_su2(Spin spin) {
  if (spin.twice < 0) throw std::invalid_argument("gamma_su2: invalid j");
  const Eigen::Index d = spin.dimension();
  const double j = spin.value();
  GammaSu2 g{spin, RealMatrix::Zero(d, d), RealMatrix::Zero(d, d), RealMatrix::Zero(d, d)};
  for (Eigen::Index k = 0; k < d; ++k) {
    const double m = spin.m_at(k);
    g.h(k, k) = m;
    if (k > 0) g.e_plus(k - 1, k) = j - m;
    if (k + 1 < d) g.e_minus(k + 1, k) = j + m;
  }
  return g;
}

/// ||Gamma(e+) - Gamma(e-)^dagger||; zero only for j <= 1/2.
inline double nonhermiticity_witness(const GammaSu2& g) { return max_abs(g.e_plus - g.e_minus.transpose()); }

/// Binomial coefficient C(2j, j+m) as a double; exact integers for 2j <= 40,
/// log-gamma beyond.
inline double binomial_2j(Spin spin, Eigen::Index k) {
  const int top = spin.twice;
  const int choose = static_cast<int>(k);  // j - m = k, and C(2j, j+m) = C(2j, j-m)
  if (top <= 40) {
    unsigned long long c = 1;
    const int r = std::min(choose, top - choose);
    for (int t = 1; t <= r; ++t) c = c * static_cast<unsigned long long>(top - r + t) / static_cast<unsigned long long>(t);
    return static_cast<double>(c);
  }
  const long double lg = std::lgamma(static_cast<long double>(top) + 1.0L) -
                         std::lgamma(static_cast<long double>(choose) + 1.0L) -
                         std::lgamma(static_cast<long double>(top - choose) + 1.0L);
  return static_cast<double>(std::exp(lg));
}

struct IntertwinerK {
  Spin j;
  Eigen::VectorXd diagonal;  // sqrt((2j)! / ((j+m)! (j-m)!))
  Eigen::VectorXd binomials;  // the same without the root

  RealMatrix matrix() const { return diagonal.asDiagonal(); }
  RealMatrix inverse() const { return diagonal.cwiseInverse().asDiagonal(); }
  /// S = K K^dagger, taken from the binomials so that small cases stay exact.
  const Eigen::VectorXd& s_diagonal() const { return binomials; }
};

inline IntertwinerK intertwiner(Spin spin) {
  IntertwinerK k{spin, Eigen::VectorXd(spin.dimension()), Eigen::VectorXd(spin.dimension())};
  for (Eigen::Index p = 0; p < spin.dimension(); ++p) {
    k.binomials(p) = binomial_2j(spin, p);
    k.diagonal(p) = std::sqrt(k.binomials(p));
  }
  return k;
}

/// max(||K^-1 Gamma(e-) K - gamma(e-)||, ||K^-1 Gamma(e+) K - gamma(e-)^dagger||).
inline double hermitize_check(Spin spin) {
  const auto g = gamma_su2(spin);
  const auto k = intertwiner(spin);
  const auto s = su2_matrices(spin);
  const RealMatrix em = k.inverse() * g.e_minus * k.matrix();
  const RealMatrix ep = k.inverse() * g.e_plus * k.matrix();
  return std::max(max_abs(em - s.e_minus), max_abs(ep - s.e_minus.transpose()));
}

/// max over m of |S_{m+1} (j+m+1) - S_m (j-m)| / S_m.
inline double s_recursion_check(Spin spin) {
  const auto s = intertwiner(spin).s_diagonal();
  const double j = spin.value();
  double worst = 0.0;
  // Position p holds m = j - p, so S_{m+1} sits at p - 1.
  for (Eigen::Index p = 1; p < s.size(); ++p) {
    const double m = spin.m_at(p);
    const double lhs = s(p - 1) * (j + m + 1.0);
    const double rhs = s(p) * (j - m);
    worst = std::max(worst, std::abs(lhs - rhs) / s(p));
  }
  return worst;
}

/// ||[K, Gamma(h)]||, ||[K, Gamma(e-)Gamma(e+)]||, ||[K, Gamma(e+)Gamma(e-)]||, worst of the three.
inline double intertwiner_commutation_residual(Spin spin) {
  const auto g = gamma_su2(spin);
  const RealMatrix k = intertwiner(spin).matrix();
  double r = max_abs(commutator(k, g.h));
  r = std::max(r, max_abs(commutator(k, RealMatrix(g.e_minus * g.e_plus))));
  return std::max(r, max_abs(commutator(k, RealMatrix(g.e_plus * g.e_minus))));
}

/// Gamma(E) from Gamma(e-) = Gamma(E) Gamma(D), closed cyclically: the column
/// killed by Gamma(e-) (m = -j) is sent to m = j.
inline ComplexMatrix gamma_phase_part(const GammaSu2& g) {
  const ComplexMatrix c = g.e_minus.cast<Complex>();
  const ComplexMatrix gamma_d = positive_factor(c);
  ComplexMatrix e = partial_isometry(c, gamma_d);
  const Eigen::Index d = e.rows();
  for (auto col : zero_columns(gamma_d)) {
    const auto k = static_cast<Eigen::Index>(col);
    const Eigen::Index row = (k + 1) % d;
    if (e.row(row).norm() != 0.0) throw std::logic_error("gamma_phase_part: cyclic target row already occupied");
    e(row, k) = 1.0;
  }
  return e;
}

/// Largest spectral mismatch between Gamma(e+)Gamma(e-) and its Hermitian
/// counterpart gamma(e+)gamma(e-), eigenvalues sorted.
inline double casimir_spectrum_mismatch(Spin spin) {
  const auto g = gamma_su2(spin);
  const auto s = su2_matrices(spin);
  Eigen::EigenSolver<RealMatrix> ge(g.e_plus * g.e_minus);
  Eigen::SelfAdjointEigenSolver<RealMatrix> se(s.e_plus * s.e_minus);
  std::vector<double> a, b;
  for (Eigen::Index k = 0; k < ge.eigenvalues().size(); ++k) {
    if (std::abs(ge.eigenvalues()(k).imag()) > 1e-9) return std::abs(ge.eigenvalues()(k).imag());
    a.push_back(ge.eigenvalues()(k).real());
    b.push_back(se.eigenvalues()(k));
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

/// Gamma for su(3) on the weight basis of (lambda, 0), in canonical boson order.
struct GammaSu3 {
  int lambda = 0;
  OrderedBasis basis;
  RealMatrix h1;
  RealMatrix h2;
  std::map<RootLabel, RealMatrix> ladders;
  std::vector<RealMatrix> numbers;  // C_11, C_22, C_33 read off the weights

  GeneratorSet as_generator_set() const {
    GeneratorSet g{basis.spec(), {}, {h1.cast<Complex>(), h2.cast<Complex>()}, {}};
    for (const auto& [root, m] : ladders) g.ladders.emplace(root, m.cast<Complex>());
    for (const auto& m : numbers) g.numbers.push_back(m.cast<Complex>());
    return g;
  }
};

/// Lowering partner B of a raising matrix R fixed by [R, B] = H with H diagonal.
/// R has at most one non-zero per column; B is supported on the transposed
/// pattern and is solved string by string from the top state downward.
/// Throws if the bottom-of-string equation is inconsistent.
inline RealMatrix solve_lowering(const RealMatrix& raising, const RealMatrix& cartan) {
  const Eigen::Index d = raising.rows();
  std::vector<Eigen::Index> up(static_cast<std::size_t>(d), -1), down(static_cast<std::size_t>(d), -1);
  for (Eigen::Index c = 0; c < d; ++c)
    for (Eigen::Index r = 0; r < d; ++r)
      if (raising(r, c) != 0.0) {
        if (up[static_cast<std::size_t>(c)] != -1) throw std::invalid_argument("solve_lowering: not a weight-shift matrix");
        up[static_cast<std::size_t>(c)] = r;
        down[static_cast<std::size_t>(r)] = c;
      }
  RealMatrix b = RealMatrix::Zero(d, d);
  // coefficient[s] = B(down[s], s); equation at s:
  //   R(s, down[s]) coeff[s] - coeff[up[s]] R(up[s], s) = H(s, s)
  for (Eigen::Index top = 0; top < d; ++top) {
    if (up[static_cast<std::size_t>(top)] != -1) continue;
    double carried = 0.0;  // coeff[up[s]] * R(up[s], s) for the state above
    for (Eigen::Index s = top;;) {
      const Eigen::Index below = down[static_cast<std::size_t>(s)];
      const double rhs = cartan(s, s) + carried;
      if (below == -1) {
        if (std::abs(rhs) > 1e-9) throw std::logic_error("solve_lowering: inconsistent string bottom");
        break;
      }
      const double coeff = rhs / raising(s, below);
      b(below, s) = coeff;
      carried = coeff * raising(s, below);
      s = below;
    }
  }
  return b;
}

inline GammaSu3 gamma_su3(int lambda) {
  if (lambda < 0) throw std::invalid_argument("gamma_su3: lambda must be >= 0");
  OrderedBasis basis = enumerate_basis(3, lambda);
  const auto d = static_cast<Eigen::Index>(basis.size());
  std::map<std::pair<int, int>, Eigen::Index> by_weight;
  for (Eigen::Index k = 0; k < d; ++k) {
    const auto w = weight_of(basis[static_cast<std::size_t>(k)]);
    by_weight.emplace(std::pair{w[0], w[1]}, k);
  }
  GammaSu3 g{lambda, basis, RealMatrix::Zero(d, d), RealMatrix::Zero(d, d), {}, {}};
  RealMatrix c12 = RealMatrix::Zero(d, d), c23 = RealMatrix::Zero(d, d);
  for (const auto& [w, k] : by_weight) {
    const auto [x, y] = w;
    g.h1(k, k) = x;
    g.h2(k, k) = y;
    // exp(i(2 phi1 - phi2)) (lambda + i d/dphi1 - i d/dphi2) / 3 on exp(i(x phi1 + y phi2)).
    if (auto it = by_weight.find({x + 2, y - 1}); it != by_weight.end()) c12(it->second, k) = (lambda - x + y) / 3.0;
    // exp(-i(phi1 - 2 phi2)) (lambda + i d/dphi1 + 2i d/dphi2) / 3; its weight shift is that of C_23.
    if (auto it = by_weight.find({x - 1, y + 2}); it != by_weight.end()) c23(it->second, k) = (lambda - x - 2 * y) / 3.0;
  }
  const RealMatrix c13 = commutator(c12, c23);
  const RealMatrix c21 = solve_lowering(c12, g.h1);
  const RealMatrix c32 = solve_lowering(c23, g.h2);
  const RealMatrix c31 = commutator(c32, c21);
  g.ladders.emplace(RootLabel(1, 2), c12);
  g.ladders.emplace(RootLabel(2, 3), c23);
  g.ladders.emplace(RootLabel(1, 3), c13);
  g.ladders.emplace(RootLabel(2, 1), c21);
  g.ladders.emplace(RootLabel(3, 2), c32);
  g.ladders.emplace(RootLabel(3, 1), c31);
  // n_1 = (lambda + 2x + y)/3, n_2 = (lambda - x + y)/3, n_3 = (lambda - x - 2y)/3.
  const RealMatrix lam = RealMatrix::Identity(d, d) * static_cast<double>(lambda);
  g.numbers = {(lam + 2.0 * g.h1 + g.h2) / 3.0, (lam - g.h1 + g.h2) / 3.0, (lam - g.h1 - 2.0 * g.h2) / 3.0};
  return g;
}

/// Largest |Gamma(C_12)/lambda - 1/3| coefficient over states with |x|, |y| <= window.
inline double gamma_su3_interior_deviation(int lambda, int window) {
  if (lambda < 1) throw std::invalid_argument("gamma_su3_interior_deviation: lambda must be >= 1");
  const auto g = gamma_su3(lambda);
  const RealMatrix& c12 = g.ladders.at(RootLabel(1, 2));
  double worst = 0.0;
  for (Eigen::Index k = 0; k < c12.cols(); ++k) {
    const auto w = weight_of(g.basis[static_cast<std::size_t>(k)]);
    if (std::abs(w[0]) > window || std::abs(w[1]) > window) continue;
    for (Eigen::Index r = 0; r < c12.rows(); ++r)
      if (c12(r, k) != 0.0) worst = std::max(worst, std::abs(c12(r, k) / lambda - 1.0 / 3.0));
  }
  return worst;
}

struct DftEigensystem {
  std::vector<Complex> values;  // w^k, k = 0 .. N-1
  ComplexMatrix vectors;        // column k: w^{k m} / sqrt(N), m = j - row
};

/// Closed-form eigensystem of the N-dimensional cyclic shift.
inline DftEigensystem dft_eigensystem(const ComplexMatrix& e) {
  require_square(e, "dft_eigensystem");
  const Eigen::Index n = e.rows();
  if (n == 0 || e != su2_shift_E(Spin{static_cast<int>(n) - 1})) {
    throw std::invalid_argument("dft_eigensystem: input is not the cyclic shift");
  }
  const double j = (static_cast<double>(n) - 1.0) / 2.0;
  DftEigensystem out{{}, ComplexMatrix(n, n)};
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values.push_back(root_of_unity(static_cast<int>(k), static_cast<int>(n)));
    for (Eigen::Index row = 0; row < n; ++row) {
      const double m = j - static_cast<double>(row);
      out.vectors(row, k) = std::polar(norm, 2.0 * kPi * static_cast<double>(k) * m / static_cast<double>(n));
    }
  }
  return out;
}

/// Worst of ||E v_k - w^k v_k|| and the mismatch between the closed-form
/// eigenvalues and those of a general eigensolver.
inline double dft_eigensystem_residual(const ComplexMatrix& e) {
  const auto sys = dft_eigensystem(e);
  double worst = 0.0;
  for (Eigen::Index k = 0; k < e.rows(); ++k) {
    worst = std::max(worst, max_abs(e * sys.vectors.col(k) - sys.values[static_cast<std::size_t>(k)] * sys.vectors.col(k)));
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(e, /*computeEigenvectors=*/false);
  for (Eigen::Index a = 0; a < e.rows(); ++a) {
    double nearest = 1e300;
    for (const auto& v : sys.values) nearest = std::min(nearest, std::abs(solver.eigenvalues()(a) - v));
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace suphase
