#pragma once

// Report envelope and serialization helpers for the suphase command-line tool.
// Complex matrices are nested row arrays of [re, im] pairs; doubles are written
// in shortest round-trip form so every value survives a parse unchanged.

#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <string>
#include <system_error>

#include "json.hpp"

#include "suphase/linalg.hpp"

namespace suphase::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Matrices with more rows than this go to a side file referenced from the envelope.
inline constexpr Eigen::Index kInlineMatrixLimit = 400;

inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

inline json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename Json>
ComplexMatrix matrix_from_json(const Json& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto cols = n ? static_cast<Eigen::Index>(rows.at(0).size()) : 0;
  ComplexMatrix m(n, cols);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& z = rows.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
      m(r, c) = Complex(z.at(0).template get<double>(), z.at(1).template get<double>());
    }
  return m;
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline json make_envelope(const std::string& command, json parameters) {
  json env;
  env["tool"] = "suphase";
  env["version"] = kToolVersion;
  env["timestamp"] = utc_timestamp();
  env["command"] = command;
  env["parameters"] = std::move(parameters);
  env["results"] = json::object();
  env["residuals"] = json::object();
  return env;
}

/// Writes large matrices next to the main output and returns a reference to
/// them; small ones are returned inline.
class MatrixSink {
 public:
  MatrixSink(std::string command, std::string out_path) : command_(std::move(command)), out_(std::move(out_path)) {}

  json put(const std::string& name, const ComplexMatrix& m) const {
    if (m.rows() <= kInlineMatrixLimit) return matrix_to_json(m);
    namespace fs = std::filesystem;
    fs::path target;
    if (out_.empty()) {
      target = fs::path("suphase-" + command_ + "-" + name + ".json");
    } else {
      const fs::path base(out_);
      target = base.parent_path() / (base.stem().string() + "." + name + ".json");
    }
    std::ofstream f(target);
    if (!f) throw std::runtime_error("cannot write matrix file " + target.string());
    f << matrix_to_json(m).dump() << '\n';
    return json{{"file", target.string()}, {"dimension", m.rows()}};
  }

 private:
  std::string command_;
  std::string out_;
};

}  // namespace suphase::cli
