// orliczlab command-line interface.
//
//   orliczlab orlicz norm --phi <spec> --values <csv> [--weights <csv>]
//   orliczlab verify <orlicz|simplicial|poincare|bicomplex|endtoend> [...]
//   orliczlab norm-table --phi <spec> [--phi <spec> ...] --values <csv>
//   orliczlab mesh validate --file <path>
//   orliczlab mesh info --mesh <spec>
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orliczlab/cohomology.hpp"
#include "orliczlab/report.hpp"
#include "orliczlab/spec_parse.hpp"

using namespace orliczlab;

namespace {

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz-cohomology verification lab"};
  app.require_subcommand(1);

  std::string phi_spec = "power:p=2";
  std::string mesh_spec = "torus:m=6";
  std::string values_csv, weights_csv, out_path, format = "json", file_path;
  std::vector<std::string> phi_list;
  int degree = 1, dim = 2, refine = 0;
  unsigned seed = 0;
  double tol = 1e-12;
  bool with_timing = false;

  CLI::App* orlicz = app.add_subcommand("orlicz", "Orlicz-space computations");
  CLI::App* orlicz_norm = orlicz->add_subcommand("norm", "Luxemburg norm of a sampled function");
  orlicz_norm->add_option("--phi", phi_spec, "Young function spec");
  orlicz_norm->add_option("--values", values_csv, "comma-separated sample values")->required();
  orlicz_norm->add_option("--weights", weights_csv, "comma-separated weights (default: 1)");
  orlicz_norm->add_option("--tol", tol, "relative bisection tolerance");
  orlicz_norm->add_option("--out", out_path, "write JSON here instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "orlicz|simplicial|poincare|bicomplex|endtoend")->required();
  verify->add_option("--mesh", mesh_spec, "mesh spec or JSON path");
  verify->add_option("--phi", phi_spec, "Young function spec");
  verify->add_option("--degree", degree, "form degree");
  verify->add_option("--dim", dim, "ambient dimension for the ball (2 or 3)");
  verify->add_option("--refine", refine, "extra refinement levels");
  verify->add_option("--seed", seed, "random seed (recorded in the report)");
  verify->add_option("--out", out_path, "write JSON here instead of stdout");
  verify->add_option("--format", format, "json|csv");
  verify->add_flag("--timing", with_timing, "include wall time in the report");

  CLI::App* table = app.add_subcommand("norm-table", "Luxemburg norms across Young functions");
  std::string table_mesh;
  table->add_option("--phi", phi_list, "Young function spec (repeatable)");
  table->add_option("--values", values_csv, "comma-separated sample values");
  table->add_option("--weights", weights_csv, "comma-separated weights (default: 1)");
  table->add_option("--mesh", table_mesh, "mesh spec: table of L^phi norms of a random Whitney form");
  table->add_option("--degree", degree, "form degree for --mesh tables");
  table->add_option("--seed", seed, "seed for the random form");
  table->add_option("--format", format, "json|csv");
  table->add_option("--out", out_path, "write output here instead of stdout");

  CLI::App* mesh_cmd = app.add_subcommand("mesh", "mesh utilities");
  CLI::App* mesh_validate = mesh_cmd->add_subcommand("validate", "validate a mesh JSON file");
  mesh_validate->add_option("--file", file_path, "mesh JSON path")->required();
  CLI::App* mesh_info = mesh_cmd->add_subcommand("info", "geometry and Betti summary");
  mesh_info->add_option("--mesh", mesh_spec, "mesh spec or JSON path");
  mesh_info->add_option("--out", out_path, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (orlicz_norm->parsed()) {
      const Eigen::VectorXd values = parse_csv_values(values_csv);
      Eigen::VectorXd weights = weights_csv.empty()
                                    ? Eigen::VectorXd::Ones(values.size())
                                    : parse_csv_values(weights_csv);
      const YoungFunction phi = parse_young_spec(phi_spec);
      const LuxemburgResult lr = luxemburg_detail(phi, values, DiscreteMeasure{weights}, tol);
      nlohmann::json j = {{"schema", 1},
                          {"phi", phi_spec},
                          {"norm", lr.norm},
                          {"modular_at_norm", lr.modular_at_norm},
                          {"iterations", lr.iterations}};
      write_output(j.dump(2), out_path);
      return 0;
    }
    if (verify->parsed()) {
      SuiteConfig config;
      config.mesh = mesh_spec;
      config.phi = phi_spec;
      config.degree = degree;
      config.dim = dim;
      config.refine = refine;
      config.seed = seed;
      const auto start = std::chrono::steady_clock::now();
      const VerificationReport report = run_suite(suite, config);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      write_output(format == "csv" ? report.to_csv() : report.to_json(with_timing, ms).dump(2),
                   out_path);
      return report.all_pass() ? 0 : 1;
    }
    if (table->parsed()) {
      if (!table_mesh.empty()) {
        write_output(emit_form_norm_table(phi_list, table_mesh, degree, seed, format), out_path);
        return 0;
      }
      if (values_csv.empty()) {
        std::cerr << "usage error: norm-table needs --values or --mesh\n";
        return 2;
      }
      const Eigen::VectorXd values = parse_csv_values(values_csv);
      Eigen::VectorXd weights = weights_csv.empty()
                                    ? Eigen::VectorXd::Ones(values.size())
                                    : parse_csv_values(weights_csv);
      write_output(emit_norm_table(phi_list, values, weights, format), out_path);
      return 0;
    }
    if (mesh_validate->parsed()) {
      std::ifstream in(file_path);
      if (!in) {
        std::cerr << "cannot read " << file_path << "\n";
        return 2;
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      const Mesh mesh = mesh_from_json(buffer.str());
      nlohmann::json j = {{"schema", 1}, {"valid", true},
                          {"vertices", mesh.complex.count(0)},
                          {"dimension", mesh.dim()}};
      write_output(j.dump(2), out_path);
      return 0;
    }
    if (mesh_info->parsed()) {
      const Mesh mesh = parse_mesh_spec(mesh_spec);
      const MeshGeometryStats gs = mesh.geometry();
      nlohmann::json j = {{"schema", 1},
                          {"dimension", mesh.dim()},
                          {"counts", nlohmann::json::object()},
                          {"betti", betti_numbers_exact(mesh.complex)},
                          {"max_vertex_degree", gs.combinatorial.max_vertex_degree},
                          {"incidence_bound", gs.combinatorial.incidence_bound},
                          {"max_simplex_diameter", gs.max_simplex_diameter},
                          {"bilipschitz_L", gs.bilipschitz_L},
                          {"total_volume", mesh.total_volume()}};
      for (int k = 0; k <= mesh.dim(); ++k)
        j["counts"][std::to_string(k)] = mesh.complex.count(k);
      write_output(j.dump(2), out_path);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
