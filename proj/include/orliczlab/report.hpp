// Machine-readable verification reports and the named check suites behind
// the CLI: orlicz, simplicial, poincare, bicomplex, endtoend.

#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "orliczlab/young.hpp"

namespace orliczlab {

struct CheckRecord {
  std::string id;
  double value = 0.0;      // residual or ratio
  double tolerance = 0.0;  // pass threshold (interpretation per check)
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, std::string> environment;
  std::vector<CheckRecord> checks;
  nlohmann::json extra = nlohmann::json::object();  // suite-specific payloads

  bool all_pass() const;
  /// Timing is excluded by default so reports are bit-identical across runs.
  nlohmann::json to_json(bool with_timing = false, double wall_ms = 0.0) const;
  /// Flat check table: id,value,tolerance,pass.
  std::string to_csv() const;
};

struct SuiteConfig {
  std::string mesh = "torus:m=6";
  std::string phi = "power:p=2";
  int degree = 1;
  int dim = 2;
  int refine = 0;
  unsigned seed = 0;
};

/// name in {orlicz, simplicial, poincare, bicomplex, endtoend}; throws
/// std::invalid_argument for anything else or for unresolvable configs.
VerificationReport run_suite(const std::string& name, const SuiteConfig& config);

/// Table of Luxemburg norms for each phi spec applied to one sample vector;
/// format "json" or "csv", stable column order.
std::string emit_norm_table(const std::vector<std::string>& phi_specs,
                            const Eigen::VectorXd& values, const Eigen::VectorXd& weights,
                            const std::string& format);

/// Same table for the L^phi norm of a seeded random Whitney k-form on a mesh.
std::string emit_form_norm_table(const std::vector<std::string>& phi_specs,
                                 const std::string& mesh_spec, int degree, unsigned seed,
                                 const std::string& format);

}  // namespace orliczlab
