#include "cylandau/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace cylandau::io {

namespace {
using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw IoError("malformed JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

double number_or(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw IoError(std::string(key) + " must be a number");
  return j[key].get<double>();
}
}  // namespace

CylinderConfig parse_config(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) throw IoError("config must be a JSON object");

  static const char* known[] = {"B", "R", "q", "rho", "hbar", "e", "m"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw IoError("unknown config key: " + key);
  }

  return make_config(number_or(j, "B", 1.0), number_or(j, "R", 1.0),
                     number_or(j, "q", 0.0), number_or(j, "rho", 0.0),
                     number_or(j, "hbar", 1.0), number_or(j, "e", 1.0),
                     number_or(j, "m", 1.0));
}

CylinderConfig load_config(const std::string& path) {
  return parse_config(read_file(path));
}

std::string config_to_json(const CylinderConfig& config) {
  json j{{"B", config.B},       {"R", config.R}, {"q", config.q},
         {"rho", config.rho},   {"hbar", config.hbar},
         {"e", config.e},       {"m", config.m}};
  return j.dump();
}

gauge::GaugePotential parse_potential(const std::string& json_text,
                                      const CylinderConfig& config) {
  const json j = parse_json(json_text);
  if (!j.is_object()) throw IoError("potential must be a JSON object");

  std::vector<gauge::LambdaTerm> terms;
  if (j.contains("lambda")) {
    if (!j["lambda"].is_array()) throw IoError("lambda must be an array");
    for (const auto& item : j["lambda"]) {
      if (!item.is_object()) throw IoError("lambda term must be an object");
      gauge::LambdaTerm t;
      t.coeff = number_or(item, "coeff", 0.0);
      t.frequency = number_or(item, "frequency", 0.0);
      t.poly_degree = static_cast<int>(number_or(item, "poly_degree", 0.0));
      t.gauss_width = number_or(item, "gauss_width", 0.0);
      t.y_offset = number_or(item, "y_offset", 0.0);
      const std::string angular = item.value("angular", "cos");
      if (angular == "cos") {
        t.angular = gauge::LambdaTerm::Angular::Cos;
      } else if (angular == "sin") {
        t.angular = gauge::LambdaTerm::Angular::Sin;
      } else {
        throw IoError("angular must be \"cos\" or \"sin\"");
      }
      terms.push_back(t);
    }
  }
  return gauge::make_potential(config, number_or(j, "zeta", 0.0),
                               std::move(terms));
}

gauge::GaugePotential load_potential(const std::string& path,
                                     const CylinderConfig& config) {
  return parse_potential(read_file(path), config);
}

namespace {
gauge::Loop loop_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw IoError("loop must be an object with a vertices array");
  std::vector<std::array<double, 2>> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2)
      throw IoError("loop vertex must be a [theta, y] pair");
    vertices.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return gauge::make_loop(std::move(vertices));
}
}  // namespace

gauge::Loop parse_loop(const std::string& json_text) {
  return loop_from_json(parse_json(json_text));
}

gauge::Loop load_loop(const std::string& path) {
  return parse_loop(read_file(path));
}

std::vector<gauge::Loop> parse_loop_suite(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("loops") || !j["loops"].is_array())
    throw IoError("loop suite must be an object with a loops array");
  std::vector<gauge::Loop> loops;
  for (const auto& item : j["loops"]) loops.push_back(loop_from_json(item));
  return loops;
}

std::vector<gauge::Loop> load_loop_suite(const std::string& path) {
  return parse_loop_suite(read_file(path));
}

void write_state_table(std::ostream& out, const WaveFunction& psi) {
  out << "n,y,re,im\n";
  out.precision(17);
  for (int n = psi.n_min; n <= psi.n_max(); ++n) {
    const Profile& f = psi.mode(n);
    for (int i = 0; i < psi.grid.n_points; ++i)
      out << n << ',' << psi.grid.point(i) << ',' << f[i].real() << ','
          << f[i].imag() << '\n';
  }
}

void write_eigenvalue_table(std::ostream& out,
                            const spectral::SpectrumResult& result) {
  out << "mode,level,energy\n";
  out.precision(17);
  for (const auto& [n, values] : result.per_mode)
    for (std::size_t level = 0; level < values.size(); ++level)
      out << n << ',' << level << ',' << values[level] << '\n';
}

}  // namespace cylandau::io
