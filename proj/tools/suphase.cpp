// suphase: builds symmetric su(n) irreps, their ladder-operator phase
// operators and the non-commutativity sweeps, and writes JSON or CSV reports.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 residual breach.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "suphase/suphase.hpp"

namespace {

using suphase::cli::json;
using suphase::cli::format_double;

constexpr double kResidualLimit = 1e-10;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBreach = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 3;
  int lambda = 1;
  int from = 1;
  int to = 10;
  std::vector<std::string> roots;
  std::string convention = "plus";
  std::optional<double> beta;
  std::optional<double> gamma;
  std::string format = "json";
  std::string out;
  unsigned threads = 1;
  std::string suite = "all";
};

struct Output {
  std::string text;
  int code = kOk;
};

suphase::RootLabel parse_root(const std::string& s, int n) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("root must look like i,j: " + s);
  int i = 0, j = 0;
  try {
    std::size_t used = 0;
    i = std::stoi(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    j = std::stoi(s.substr(comma + 1), &used);
    if (used != s.size() - comma - 1) throw std::invalid_argument(s);
  } catch (const std::logic_error&) {
    throw UsageError("root must look like i,j: " + s);
  }
  suphase::RootLabel r(i, j);
  r.check_against(n);
  return r;
}

suphase::Completion parse_convention(const std::string& c) {
  if (c == "plus") return suphase::Completion::Su2InvariantPlus;
  if (c == "paper-sign") return suphase::Completion::Su2InvariantPaperSign;
  throw UsageError("convention '" + c + "' is not available here");
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void require_json(const Options& o, const std::string& command) {
  if (o.format != "json") throw UsageError(command + " only supports --format json");
}

json weight_json(const suphase::OccupationState& s) {
  json w = json::array();
  for (int c : suphase::weight_of(s)) w.push_back(c);
  return w;
}

Output cmd_basis(const Options& o) {
  const auto basis = suphase::enumerate_basis(o.n, o.lambda);
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "index,ket";
    for (int k = 1; k <= o.n; ++k) csv << ",n" << k;
    for (int k = 1; k < o.n; ++k) csv << ",w" << k;
    csv << '\n';
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& s = basis[k];
      csv << k << ',' << s.ket();
      for (int m = 1; m <= o.n; ++m) csv << ',' << s(m);
      for (int c : suphase::weight_of(s)) csv << ',' << c;
      csv << '\n';
    }
    return {csv.str(), kOk};
  }
  json env = suphase::cli::make_envelope("basis", {{"n", o.n}, {"lambda", o.lambda}});
  json states = json::array();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& s = basis[k];
    json occ = json::array();
    for (int m = 1; m <= o.n; ++m) occ.push_back(s(m));
    states.push_back({{"index", k}, {"ket", s.ket()}, {"occupations", occ}, {"weight", weight_json(s)}});
  }
  env["results"] = {{"dimension", basis.size()}, {"states", std::move(states)}};
  return {dump(env), kOk};
}

Output cmd_gens(const Options& o) {
  require_json(o, "gens");
  const auto basis = suphase::enumerate_basis(o.n, o.lambda);
  const auto g = suphase::generator_set(basis);
  const suphase::cli::MatrixSink sink("gens", o.out);
  json kets = json::array();
  for (const auto& s : basis) kets.push_back(s.ket());
  json ladders = json::object();
  for (const auto& [root, m] : g.ladders) ladders["C" + root.str()] = sink.put("C" + root.str(), m);
  json cartans = json::object();
  for (std::size_t k = 0; k < g.cartans.size(); ++k) {
    const std::string name = "h" + std::to_string(k + 1);
    cartans[name] = sink.put(name, g.cartans[k]);
  }
  const double residual = suphase::commutation_residual(g);
  json env = suphase::cli::make_envelope("gens", {{"n", o.n}, {"lambda", o.lambda}});
  env["results"] = {{"dimension", basis.size()}, {"basis", kets}, {"ladders", ladders}, {"cartans", cartans}};
  env["residuals"] = {{"commutation", residual}};
  return {dump(env), residual < kResidualLimit ? kOk : kBreach};
}

Output cmd_phases(const Options& o) {
  require_json(o, "phases");
  if (o.roots.size() != 1) throw UsageError("phases takes exactly one --root");
  const auto basis = suphase::enumerate_basis(o.n, o.lambda);
  const auto root = parse_root(o.roots.front(), o.n);
  const suphase::ComplexMatrix c = suphase::generator_matrix(basis, root.i, root.j).matrix();

  json params = {{"n", o.n}, {"lambda", o.lambda}, {"root", root.str()}, {"convention", o.convention}};
  json residuals = json::object();
  suphase::ComplexMatrix e, d;
  if (o.convention == "complementary") {
    if (o.n != 3 || o.lambda != 1) throw UsageError("complementary convention needs --n 3 --lambda 1");
    const double beta = o.beta.value_or(2.0 * suphase::kPi / 3.0);
    const double gamma = o.gamma.value_or(-2.0 * suphase::kPi / 3.0);
    const suphase::ComplexMatrix z = suphase::pauli_generators(3).z;
    if (root == suphase::RootLabel(1, 2)) {
      e = suphase::complementary_E12(beta);
      params["beta"] = beta;
      residuals["complementarity"] = suphase::complementarity_check(e, z);
    } else if (root == suphase::RootLabel(2, 3)) {
      e = suphase::complementary_E23(gamma);
      params["gamma"] = gamma;
      residuals["complementarity"] = suphase::complementarity_check(e, z);
    } else if (root == suphase::RootLabel(1, 3)) {
      e = suphase::complementary_E12(beta) * suphase::complementary_E23(gamma);
      params["beta"] = beta;
      params["gamma"] = gamma;
    } else {
      throw UsageError("complementary convention covers roots 1,2 2,3 and 1,3");
    }
    d = suphase::positive_factor(c);
  } else {
    const auto f = suphase::polar_decompose(basis, root, parse_convention(o.convention));
    e = f.e.matrix();
    d = f.d.matrix();
  }
  const suphase::ComplexMatrix phi = suphase::phase_hermitian(e);
  const double unitarity = suphase::unitarity_residual(e);
  const double polar = suphase::max_abs(e * d - c);
  const double reconstruction = suphase::max_abs(suphase::exp_i_hermitian(phi) - e);
  residuals["unitarity"] = unitarity;
  residuals["polar_identity"] = polar;
  residuals["exp_i_phi"] = reconstruction;

  const suphase::cli::MatrixSink sink("phases", o.out);
  json env = suphase::cli::make_envelope("phases", std::move(params));
  env["results"] = {{"dimension", basis.size()}, {"E", sink.put("E", e)}, {"D", sink.put("D", d)}, {"phi", sink.put("phi", phi)}};
  env["residuals"] = std::move(residuals);
  const bool ok = unitarity < kResidualLimit && polar < kResidualLimit && reconstruction < kResidualLimit;
  return {dump(env), ok ? kOk : kBreach};
}

Output cmd_sweep(const Options& o) {
  if (o.from < 0 || o.to < o.from) throw UsageError("sweep needs 0 <= --from <= --to");
  if (o.format != "json" && o.format != "csv") throw UsageError("unknown format " + o.format);
  std::vector<std::string> spec = o.roots.empty() ? std::vector<std::string>{"1,2", "3,1"} : o.roots;
  if (spec.size() != 2) throw UsageError("sweep takes two --root values");
  const auto a = parse_root(spec[0], o.n);
  const auto b = parse_root(spec[1], o.n);
  const auto conv = parse_convention(o.convention);
  const auto reports = suphase::noncommutativity_sweep(o.n, o.from, o.to, a, b, conv, std::max(1u, o.threads));

  std::vector<std::pair<int, double>> fit_points;
  double worst_identity = 0.0;
  for (const auto& r : reports) {
    worst_identity = std::max(worst_identity, std::abs(r.raw_norm - r.trace_identity));
    if (r.lambda >= 2 && r.normalized_norm > 0.0) fit_points.emplace_back(r.lambda, r.normalized_norm);
  }
  std::optional<double> slope;
  if (fit_points.size() >= 4) slope = suphase::decay_fit(fit_points);
  const int code = worst_identity < kResidualLimit ? kOk : kBreach;

  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "lambda,d,raw_norm,normalized,formula,difference,fixed_points\n";
    for (const auto& r : reports) {
      csv << r.lambda << ',' << r.dimension << ',' << format_double(r.raw_norm) << ','
          << format_double(r.normalized_norm) << ',';
      if (r.formula) csv << format_double(r.formula->value()) << ',' << format_double(r.normalized_norm - r.formula->value());
      else csv << ',';
      csv << ',' << r.fixed_point_count << '\n';
    }
    csv << "# decay_fit," << (slope ? format_double(*slope) : std::string()) << '\n';
    return {csv.str(), code};
  }

  json rows = json::array();
  for (const auto& r : reports) {
    json row = {{"lambda", r.lambda}, {"d", r.dimension}, {"raw_norm", r.raw_norm}, {"normalized", r.normalized_norm}};
    if (r.formula) {
      row["formula"] = r.formula->value();
      row["formula_exact"] = r.formula->str();
      row["difference"] = r.normalized_norm - r.formula->value();
    } else {
      row["formula"] = nullptr;
      row["formula_exact"] = nullptr;
      row["difference"] = nullptr;
    }
    row["fixed_points"] = r.fixed_point_count;
    rows.push_back(std::move(row));
  }
  json env = suphase::cli::make_envelope(
      "sweep", {{"n", o.n}, {"from", o.from}, {"to", o.to}, {"roots", {a.str(), b.str()}}, {"convention", o.convention}});
  env["results"] = {{"rows", std::move(rows)}, {"decay_fit", slope ? json(*slope) : json(nullptr)}};
  env["residuals"] = {{"trace_identity", worst_identity}};
  return {dump(env), code};
}

Output cmd_pauli(const Options& o) {
  require_json(o, "pauli");
  const int d = o.n;
  const auto p = suphase::pauli_generators(d);
  json relations = json::array();
  double worst = 0.0;
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      const double r = suphase::pauli_relation_residual(p, k, l);
      worst = std::max(worst, r);
      relations.push_back({{"k", k}, {"l", l}, {"residual", r}});
    }
  const double x_order = suphase::max_abs(suphase::matrix_power(p.x, d) - suphase::identity(d));
  const double z_order = suphase::max_abs(suphase::matrix_power(p.z, d) - suphase::identity(d));

  json params = {{"n", d}};
  json results = {{"X", suphase::cli::matrix_to_json(p.x)}, {"Z", suphase::cli::matrix_to_json(p.z)}, {"relations", relations}};
  json residuals = {{"relations", worst}, {"x_order", x_order}, {"z_order", z_order}};
  double breach = std::max({worst, x_order, z_order});

  if (d == 3) {
    const double beta = o.beta.value_or(2.0 * suphase::kPi / 3.0);
    const double gamma = o.gamma.value_or(-2.0 * suphase::kPi / 3.0);
    params["beta"] = beta;
    params["gamma"] = gamma;
    const auto e12 = suphase::complementary_E12(beta);
    const auto e23 = suphase::complementary_E23(gamma);
    const suphase::ComplexMatrix e13 = e12 * e23;
    results["E12"] = suphase::cli::matrix_to_json(e12);
    results["E23"] = suphase::cli::matrix_to_json(e23);
    results["E13"] = suphase::cli::matrix_to_json(e13);
    results["E12_E23_commutator"] = suphase::max_abs(suphase::commutator(e12, e23));
    residuals["complementarity_E12"] = suphase::complementarity_check(e12, p.z);
    residuals["complementarity_E23"] = suphase::complementarity_check(e23, p.z);
    breach = std::max({breach, residuals["complementarity_E12"].get<double>(), residuals["complementarity_E23"].get<double>()});

    json lattice = json::array();
    for (const auto& s : suphase::additivity_solve())
      lattice.push_back({{"beta_steps", s.beta_steps},
                         {"gamma_steps", s.gamma_steps},
                         {"beta", s.beta},
                         {"gamma", s.gamma},
                         {"commutator_residual", s.commutator_residual},
                         {"simplest_nontrivial", s.simplest_nontrivial}});
    results["additivity_solutions"] = std::move(lattice);

    json search = json::array();
    for (const auto& [ra, rb] : {std::pair{suphase::RootLabel(1, 2), suphase::RootLabel(2, 3)},
                                 std::pair{suphase::RootLabel(1, 2), suphase::RootLabel(3, 1)}}) {
      const auto r = suphase::commuting_monomial_completions(2, ra, rb);
      search.push_back({{"lambda", 2},
                        {"roots", {ra.str(), rb.str()}},
                        {"completions", {r.completions_a, r.completions_b}},
                        {"pairs_checked", r.pairs_checked},
                        {"commuting_pairs", r.commuting_pairs}});
    }
    results["monomial_completion_search"] = std::move(search);
  }
  json env = suphase::cli::make_envelope("pauli", std::move(params));
  env["results"] = std::move(results);
  env["residuals"] = std::move(residuals);
  return {dump(env), breach < kResidualLimit ? kOk : kBreach};
}

json real_matrix_json(const suphase::cli::MatrixSink& sink, const std::string& name, const suphase::RealMatrix& m) {
  return sink.put(name, m.cast<suphase::Complex>());
}

Output cmd_gamma(const Options& o) {
  require_json(o, "gamma");
  if (o.lambda < 0) throw UsageError("--lambda must be >= 0");
  const suphase::cli::MatrixSink sink("gamma", o.out);
  if (o.n == 2) {
    const suphase::Spin spin{o.lambda};
    const auto g = suphase::gamma_su2(spin);
    const auto k = suphase::intertwiner(spin);
    const auto phase = suphase::gamma_phase_part(g);
    json sdiag = json::array();
    for (Eigen::Index p = 0; p < k.diagonal.size(); ++p) sdiag.push_back(k.s_diagonal()(p));
    const double hermitize = suphase::hermitize_check(spin);
    const double recursion = suphase::s_recursion_check(spin);
    const double commute = suphase::intertwiner_commutation_residual(spin);
    const double shift = suphase::max_abs(phase - suphase::su2_shift_E(spin));
    json env = suphase::cli::make_envelope("gamma", {{"n", 2}, {"lambda", o.lambda}, {"j", spin.value()}});
    env["results"] = {{"dimension", spin.dimension()},
                      {"h", real_matrix_json(sink, "h", g.h)},
                      {"e_plus", real_matrix_json(sink, "e_plus", g.e_plus)},
                      {"e_minus", real_matrix_json(sink, "e_minus", g.e_minus)},
                      {"K", real_matrix_json(sink, "K", k.matrix())},
                      {"S_diagonal", std::move(sdiag)},
                      {"E", sink.put("E", phase)},
                      {"nonhermiticity", suphase::nonhermiticity_witness(g)}};
    env["residuals"] = {{"hermitize", hermitize},
                        {"s_recursion", recursion},
                        {"intertwiner_commutation", commute},
                        {"phase_part_vs_shift", shift}};
    const bool ok = hermitize < 1e-9 && recursion < 1e-12 && commute < kResidualLimit && shift < kResidualLimit;
    return {dump(env), ok ? kOk : kBreach};
  }
  if (o.n == 3) {
    const auto g = suphase::gamma_su3(o.lambda);
    json kets = json::array();
    for (const auto& s : g.basis) kets.push_back(s.ket());
    json ladders = json::object();
    for (const auto& [root, m] : g.ladders) ladders["C" + root.str()] = real_matrix_json(sink, "C" + root.str(), m);
    const double residual = suphase::commutation_residual(g.as_generator_set());
    json env = suphase::cli::make_envelope("gamma", {{"n", 3}, {"lambda", o.lambda}});
    env["results"] = {{"dimension", g.basis.size()},
                      {"basis", std::move(kets)},
                      {"h1", real_matrix_json(sink, "h1", g.h1)},
                      {"h2", real_matrix_json(sink, "h2", g.h2)},
                      {"ladders", std::move(ladders)}};
    env["residuals"] = {{"commutation", residual}};
    return {dump(env), residual < kResidualLimit ? kOk : kBreach};
  }
  throw UsageError("gamma supports --n 2 or --n 3");
}

Output cmd_verify(const Options& o) {
  if (o.format != "json" && o.format != "csv") throw UsageError("unknown format " + o.format);
  const auto checks = suphase::run_suite(o.suite);
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    std::cerr << (c.pass ? "PASS " : "FAIL ") << c.suite << ": " << c.name << " (residual " << format_double(c.residual)
              << ", tolerance " << format_double(c.tolerance) << ")\n";
  }
  const int code = all ? kOk : kVerifyFailed;
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "suite,name,residual,tolerance,status\n";
    for (const auto& c : checks)
      csv << c.suite << ",\"" << c.name << "\"," << format_double(c.residual) << ',' << format_double(c.tolerance) << ','
          << (c.pass ? "pass" : "fail") << '\n';
    return {csv.str(), code};
  }
  json rows = json::array();
  for (const auto& c : checks)
    rows.push_back({{"suite", c.suite}, {"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  json env = suphase::cli::make_envelope("verify", {{"suite", o.suite}});
  env["results"] = {{"checks", std::move(rows)}, {"passed", all}};
  double worst = 0.0;
  for (const auto& c : checks) worst = std::max(worst, c.residual / c.tolerance);
  env["residuals"] = {{"worst_residual_over_tolerance", worst}};
  return {dump(env), code};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase operators of symmetric su(n) irreps"};
  app.set_version_flag("--version", std::string(suphase::cli::kToolVersion));
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "write the report here instead of stdout");
  };
  const auto irrep = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of boson modes");
    sub->add_option("--lambda", o.lambda, "total boson number");
  };

  auto* basis = app.add_subcommand("basis", "ordered occupation basis with weights");
  irrep(basis);
  common(basis);

  auto* gens = app.add_subcommand("gens", "ladder and Cartan matrices");
  irrep(gens);
  common(gens);

  auto* phases = app.add_subcommand("phases", "polar factors E, D and the phase operator");
  irrep(phases);
  phases->add_option("--root", o.roots, "ladder operator i,j")->required();
  phases->add_option("--convention", o.convention, "plus, paper-sign or complementary")
      ->check(CLI::IsMember({"plus", "paper-sign", "complementary"}));
  phases->add_option("--beta", o.beta, "phase of E12 in radians (complementary)");
  phases->add_option("--gamma", o.gamma, "phase of E23 in radians (complementary)");
  common(phases);

  auto* sweep = app.add_subcommand("sweep", "group-commutator norms over a lambda range");
  sweep->add_option("--n", o.n, "number of boson modes");
  sweep->add_option("--from", o.from, "first lambda");
  sweep->add_option("--to", o.to, "last lambda");
  sweep->add_option("--root", o.roots, "two ladder operators i,j");
  sweep->add_option("--convention", o.convention, "plus or paper-sign")->check(CLI::IsMember({"plus", "paper-sign"}));
  sweep->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  common(sweep);

  auto* pauli = app.add_subcommand("pauli", "clock and shift matrices and the complementary solutions");
  pauli->add_option("--n", o.n, "dimension")->check(CLI::Range(2, 64));
  pauli->add_option("--beta", o.beta, "phase of E12 in radians");
  pauli->add_option("--gamma", o.gamma, "phase of E23 in radians");
  common(pauli);

  auto* gamma = app.add_subcommand("gamma", "coherent-state realization and its intertwiner");
  gamma->add_option("--n", o.n, "2 (j = lambda/2) or 3");
  gamma->add_option("--lambda", o.lambda, "total boson number");
  common(gamma);

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", o.suite, "all, su2, su3, su4, pauli or gamma")
      ->check(CLI::IsMember({"all", "su2", "su3", "su4", "pauli", "gamma"}));
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Output result;
    if (*basis) result = cmd_basis(o);
    else if (*gens) result = cmd_gens(o);
    else if (*phases) result = cmd_phases(o);
    else if (*sweep) result = cmd_sweep(o);
    else if (*pauli) result = cmd_pauli(o);
    else if (*gamma) result = cmd_gamma(o);
    else result = cmd_verify(o);
    emit(o, result.text);
    return result.code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kBreach;
  }
}
