#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sclif/series.hpp"

namespace sclif {

struct RunConfig {
  std::string command;
  int n = 3;
  int nodes = 256;
  int terms = 60;
  double tol = 1e-8;
  std::uint64_t seed = 42;
  std::string input_path;
  std::string output_path;
  std::string format = "json";
};

struct CheckRecord {
  std::string name;
  std::string anchor;  // the identity or statement the check exercises
  double residual;
  double tol;
  bool pass;
  double ms;
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> checks;

  int passed() const;
  int failed() const;
};

std::vector<CheckRecord> verify_split(const RunConfig& cfg);
std::vector<CheckRecord> verify_cauchy(const RunConfig& cfg);
std::vector<CheckRecord> verify_kernel(const RunConfig& cfg);
std::vector<CheckRecord> verify_zeros(const RunConfig& cfg);

/// Dispatch on cfg.command ("verify-split", ..., "verify-all").
/// Throws std::invalid_argument for unknown commands.
Report run_verify(const RunConfig& cfg);

std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);

}  // namespace sclif
