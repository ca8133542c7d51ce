#include "orliczlab/spec_parse.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace orliczlab {

namespace {

// name[:k=v,...]; the value of "inner" swallows the rest of the string.
struct ParsedSpec {
  std::string name;
  std::map<std::string, std::string> args;
};

ParsedSpec split_spec(const std::string& spec) {
  ParsedSpec out;
  const auto colon = spec.find(':');
  out.name = spec.substr(0, colon);
  if (colon == std::string::npos) return out;
  std::string rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const auto eq = rest.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("spec: expected key=value in '" + rest + "'");
    const std::string key = rest.substr(0, eq);
    if (key == "inner") {
      out.args[key] = rest.substr(eq + 1);
      break;
    }
    const auto comma = rest.find(',', eq);
    out.args[key] = rest.substr(eq + 1, comma == std::string::npos ? std::string::npos
                                                                   : comma - eq - 1);
    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
  }
  return out;
}

double need_number(const ParsedSpec& s, const std::string& key) {
  const auto it = s.args.find(key);
  if (it == s.args.end())
    throw std::invalid_argument("spec '" + s.name + "': missing parameter " + key);
  return std::stod(it->second);
}

double number_or(const ParsedSpec& s, const std::string& key, double fallback) {
  const auto it = s.args.find(key);
  return it == s.args.end() ? fallback : std::stod(it->second);
}

}  // namespace

YoungFunction parse_young_spec(const std::string& spec) {
  const ParsedSpec s = split_spec(spec);
  if (s.name == "power") return make_power(need_number(s, "p"));
  if (s.name == "powerlog") return make_power_log(need_number(s, "p"), number_or(s, "kappa", 0.0));
  if (s.name == "exp") return make_exp();
  if (s.name == "scale") {
    const auto it = s.args.find("inner");
    if (it == s.args.end()) throw std::invalid_argument("spec 'scale': missing inner=<spec>");
    return scale(parse_young_spec(it->second), need_number(s, "lambda"));
  }
  throw std::invalid_argument("unknown Young-function spec '" + spec +
                              "' (expected power/powerlog/exp/scale)");
}

Mesh parse_mesh_spec(const std::string& spec) {
  if (spec == "sphere" || spec == "sphere:oct") return octahedron_mesh();
  if (spec == "sphere:icosa") return icosahedron_mesh();
  if (spec.rfind("sphere:", 0) == 0)
    throw std::invalid_argument("unknown sphere variant '" + spec + "' (oct|icosa)");
  if (spec.rfind("circle", 0) == 0 || spec.rfind("torus", 0) == 0 ||
      spec.rfind("interval", 0) == 0 || spec.rfind("ball2", 0) == 0) {
    const ParsedSpec s = split_spec(spec);
    if (s.name == "circle") return circle_mesh(static_cast<int>(number_or(s, "n", 12)));
    if (s.name == "torus") return torus_mesh(static_cast<int>(number_or(s, "m", 6)));
    if (s.name == "interval") return interval_mesh(static_cast<int>(number_or(s, "n", 8)));
    if (s.name == "ball2") return ball2_mesh(number_or(s, "h", 0.2));
  }
  // Fall back to a JSON file path.
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("unknown mesh spec or unreadable file '" + spec + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return mesh_from_json(buffer.str());
}

Eigen::VectorXd parse_csv_values(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    vals.push_back(std::stod(item));
  }
  Eigen::VectorXd out(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) out[static_cast<Eigen::Index>(i)] = vals[i];
  return out;
}

}  // namespace orliczlab
