#pragma once

// Boson bases of the symmetric irreps (lambda, 0, ..., 0) of su(n), their
// weights, su(2) weight strings and the kernel ("edge") combinatorics.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace suphase {

/// Occupation numbers |n_1 ... n_n> of n boson modes.
class OccupationState {
 public:
  OccupationState() = default;
  explicit OccupationState(std::vector<int> occupations) : occ_(std::move(occupations)) {
    if (occ_.size() < 2) throw std::invalid_argument("OccupationState: need at least two modes");
    for (int v : occ_)
      if (v < 0) throw std::invalid_argument("OccupationState: negative occupation");
  }

  std::size_t level_count() const { return occ_.size(); }
  int total() const { return std::accumulate(occ_.begin(), occ_.end(), 0); }
  /// 1-based mode index, matching the generator labels C_ij.
  int operator()(int mode) const { return occ_.at(static_cast<std::size_t>(mode - 1)); }
  const std::vector<int>& occupations() const { return occ_; }

  /// The state with one boson moved from mode `from` to mode `to` (1-based);
  /// nullopt when mode `from` is empty.
  std::optional<OccupationState> moved(int to, int from) const {
    if ((*this)(from) == 0) return std::nullopt;
    OccupationState s = *this;
    ++s.occ_[static_cast<std::size_t>(to - 1)];
    --s.occ_[static_cast<std::size_t>(from - 1)];
    return s;
  }

  std::string ket() const {
    // Digits run together (|100>) unless some occupation needs two of them.
    const bool separate = std::any_of(occ_.begin(), occ_.end(), [](int v) { return v > 9; });
    std::string out = "|";
    for (std::size_t k = 0; k < occ_.size(); ++k) {
      if (k && separate) out += ",";
      out += std::to_string(occ_[k]);
    }
    return out + ">";
  }

  friend auto operator<=>(const OccupationState&, const OccupationState&) = default;

 private:
  std::vector<int> occ_;
};

/// Cartan eigenvalues (n_1 - n_2, ..., n_{n-1} - n_n).
using WeightVector = std::vector<int>;

/// Names the generator C_ij = a_i^dagger a_j (1-based, i != j).
struct RootLabel {
  int i = 1;
  int j = 2;

  RootLabel() = default;
  RootLabel(int i_, int j_) : i(i_), j(j_) {
    if (i == j) throw std::invalid_argument("RootLabel: i == j names a Cartan element, not a root");
  }

  RootLabel reversed() const { return {j, i}; }
  void check_against(int n) const {
    if (i < 1 || j < 1 || i > n || j > n) {
      throw std::invalid_argument("RootLabel (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") out of range for su(" + std::to_string(n) + ")");
    }
  }
  std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
  friend auto operator<=>(const RootLabel&, const RootLabel&) = default;
};

struct IrrepSpec {
  int n = 3;
  int lambda = 1;
  friend auto operator<=>(const IrrepSpec&, const IrrepSpec&) = default;
};

/// C(lambda + n - 1, n - 1), the dimension of (lambda, 0, ..., 0).
inline std::size_t symmetric_irrep_dimension(int n, int lambda) {
  if (n < 2 || lambda < 0) throw std::invalid_argument("symmetric_irrep_dimension: need n >= 2, lambda >= 0");
  // Multiplicative form keeps every intermediate an exact integer.
  std::size_t result = 1;
  for (int k = 1; k <= n - 1; ++k) {
    result = result * static_cast<std::size_t>(lambda + k) / static_cast<std::size_t>(k);
  }
  return result;
}

/// Canonical basis: lexicographically decreasing occupation tuples.
class OrderedBasis {
 public:
  OrderedBasis(IrrepSpec spec, std::vector<OccupationState> states) : spec_(spec), states_(std::move(states)) {
    for (std::size_t k = 0; k < states_.size(); ++k) {
      if (!index_.emplace(states_[k], k).second) {
        throw std::logic_error("OrderedBasis: duplicate state " + states_[k].ket());
      }
    }
  }

  const IrrepSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }
  int lambda() const { return spec_.lambda; }
  std::size_t size() const { return states_.size(); }
  const OccupationState& operator[](std::size_t k) const { return states_[k]; }
  const std::vector<OccupationState>& states() const { return states_; }
  auto begin() const { return states_.begin(); }
  auto end() const { return states_.end(); }

  std::optional<std::size_t> find(const OccupationState& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const OccupationState& s) const {
    auto k = find(s);
    if (!k) throw std::out_of_range("OrderedBasis: state " + s.ket() + " not in basis");
    return *k;
  }

 private:
  IrrepSpec spec_;
  std::vector<OccupationState> states_;
  std::map<OccupationState, std::size_t> index_;
};

namespace detail {
inline void enumerate_into(int modes_left, int remaining, std::vector<int>& prefix,
                           std::vector<OccupationState>& out) {
  if (modes_left == 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    prefix.push_back(v);
    enumerate_into(modes_left - 1, remaining - v, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

inline OrderedBasis enumerate_basis(int n, int lambda) {
  if (n < 2) throw std::invalid_argument("enumerate_basis: n must be >= 2");
  if (lambda < 0) throw std::invalid_argument("enumerate_basis: lambda must be >= 0");
  std::vector<OccupationState> states;
  states.reserve(symmetric_irrep_dimension(n, lambda));
  std::vector<int> prefix;
  detail::enumerate_into(n, lambda, prefix, states);
  return OrderedBasis({n, lambda}, std::move(states));
}

inline WeightVector weight_of(const OccupationState& s) {
  const auto& occ = s.occupations();
  WeightVector w(occ.size() - 1);
  for (std::size_t k = 0; k + 1 < occ.size(); ++k) w[k] = occ[k] - occ[k + 1];
  return w;
}

/// Weight of the generator C_ij under ad(h_k): e_i - e_j read as population differences.
inline WeightVector root_weight(const RootLabel& root, int n) {
  root.check_against(n);
  std::vector<int> delta(static_cast<std::size_t>(n), 0);
  delta[static_cast<std::size_t>(root.i - 1)] += 1;
  delta[static_cast<std::size_t>(root.j - 1)] -= 1;
  WeightVector w(static_cast<std::size_t>(n - 1));
  for (int k = 0; k + 1 < n; ++k) w[static_cast<std::size_t>(k)] = delta[static_cast<std::size_t>(k)] - delta[static_cast<std::size_t>(k + 1)];
  return w;
}

/// su(3) Cartesian coordinates in the plane of the root diagram.
namespace su3_geometry {
inline const std::array<double, 2> w1{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0)};
inline const std::array<double, 2> w2{0.0, std::sqrt(2.0 / 3.0)};
inline const std::array<double, 2> alpha1{std::sqrt(2.0), 0.0};
inline const std::array<double, 2> alpha2{-std::sqrt(2.0) / 2.0, std::sqrt(6.0) / 2.0};

inline double dot(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return a[0] * b[0] + a[1] * b[1];
}
}  // namespace su3_geometry

inline std::array<double, 2> cartesian_embedding(const WeightVector& w) {
  if (w.size() != 2) {
    throw std::domain_error("cartesian_embedding: embedding not defined for su(" + std::to_string(w.size() + 1) + ")");
  }
  using namespace su3_geometry;
  return {w[0] * w1[0] + w[1] * w2[0], w[0] * w1[1] + w[1] * w2[1]};
}

/// Orbits of one su(2)_{ij} subalgebra, each ordered by increasing n_i so that
/// C_ij moves position k to k + 1.
struct StringPartition {
  RootLabel root;
  std::vector<std::vector<std::size_t>> orbits;

  /// Orbit id and position of every basis index.
  std::vector<std::pair<std::size_t, std::size_t>> locate(std::size_t basis_size) const {
    std::vector<std::pair<std::size_t, std::size_t>> where(basis_size);
    for (std::size_t o = 0; o < orbits.size(); ++o)
      for (std::size_t p = 0; p < orbits[o].size(); ++p) where[orbits[o][p]] = {o, p};
    return where;
  }
};

inline StringPartition su2_strings(const OrderedBasis& basis, const RootLabel& root) {
  root.check_against(basis.n());
  StringPartition part{root, {}};
  // Key: occupations with modes i and j blanked out. Orbits appear in the
  // order of their first canonical member.
  std::map<std::vector<int>, std::size_t> orbit_of;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<int> key = basis[k].occupations();
    key[static_cast<std::size_t>(root.i - 1)] = -1;
    key[static_cast<std::size_t>(root.j - 1)] = -1;
    auto [it, fresh] = orbit_of.emplace(std::move(key), part.orbits.size());
    if (fresh) part.orbits.emplace_back();
    part.orbits[it->second].push_back(k);
  }
  for (auto& orbit : part.orbits) {
    std::sort(orbit.begin(), orbit.end(), [&](std::size_t a, std::size_t b) {
      return basis[a](root.i) < basis[b](root.i);
    });
  }
  return part;
}

/// Basis indices annihilated by C_ij, i.e. states with n_j = 0.
inline std::vector<std::size_t> kernel_states(const OrderedBasis& basis, const RootLabel& root) {
  root.check_against(basis.n());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k](root.j) == 0) out.push_back(k);
  return out;
}

struct EdgeOverlap {
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  std::size_t intersection = 0;
  std::size_t union_size = 0;
  friend bool operator==(const EdgeOverlap&, const EdgeOverlap&) = default;
};

inline EdgeOverlap edge_overlap_count(const OrderedBasis& basis, const RootLabel& a, const RootLabel& b) {
  if (a == b) throw std::invalid_argument("edge_overlap_count: roots must differ");
  const auto ka = kernel_states(basis, a);
  const auto kb = kernel_states(basis, b);
  std::vector<std::size_t> both;
  std::set_intersection(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(both));
  return {ka.size(), kb.size(), both.size(), ka.size() + kb.size() - both.size()};
}

}  // namespace suphase
