// Command line surface for the cylinder Landau library: spectra, holonomies,
// gauge classification, symmetry and representation checks, ground-state
// tables and the physical step size. Every subcommand emits a JSON report
// whose numeric claims carry their tolerances; the exit code is 0 iff all
// pass flags are true.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "cylandau/config.hpp"
#include "cylandau/gauge.hpp"
#include "cylandau/grouprep.hpp"
#include "cylandau/io.hpp"
#include "cylandau/spectral.hpp"
#include "cylandau/symmetry.hpp"

using nlohmann::json;
using namespace cylandau;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Tolerances {
  std::map<std::string, double> values{
      {"eigen_rel", 1e-3},     {"projective_phase", 1e-6},
      {"rotation_comm", 1e-9}, {"axial_comm", 1e-3},
      {"unitarity", 1e-6},     {"overlap", 1e-6},
      {"cocycle", 1e-9},       {"rep_phase", 1e-12},
      {"flux_phase", 1e-9},    {"unit_modulus", 1e-12},
      {"admissible", 1e-9}};

  double at(const std::string& name) const { return values.at(name); }

  void apply_overrides(const std::string& spec) {
    std::stringstream stream(spec);
    std::string item;
    while (std::getline(stream, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw IoError("tolerance override must look like name=value");
      const std::string name = item.substr(0, eq);
      if (!values.count(name)) throw IoError("unknown tolerance: " + name);
      values[name] = std::stod(item.substr(eq + 1));
    }
  }

  json to_json() const { return json(values); }
};

struct Report {
  json body;
  bool pass = true;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Report(const std::string& command) {
    body["command"] = command;
    body["checks"] = json::array();
  }

  // value must stay at or below tolerance
  void check_below(const std::string& name, double value, double tolerance) {
    const bool ok = value <= tolerance;
    body["checks"].push_back({{"name", name},
                              {"value", value},
                              {"tolerance", tolerance},
                              {"pass", ok}});
    pass = pass && ok;
  }

  // value must reach at least the threshold
  void check_at_least(const std::string& name, double value, double threshold) {
    const bool ok = value >= threshold;
    body["checks"].push_back({{"name", name},
                              {"value", value},
                              {"threshold", threshold},
                              {"pass", ok}});
    pass = pass && ok;
  }

  void check_flag(const std::string& name, bool ok) {
    body["checks"].push_back({{"name", name}, {"pass", ok}});
    pass = pass && ok;
  }

  int finish(const std::string& out_path) {
    body["pass"] = pass;
    body["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                  start)
            .count();
    const std::string text = body.dump(2);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw IoError("cannot write " + out_path);
      out << text << '\n';
    }
    std::cout << text << '\n';
    return pass ? 0 : 1;
  }
};

CylinderConfig config_from(const std::string& path) {
  return path.empty() ? CylinderConfig{} : io::load_config(path);
}

json config_echo(const CylinderConfig& config) {
  return json::parse(io::config_to_json(config));
}

std::pair<int, int> parse_window(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw IoError("window must look like \"lo,hi\"");
  const int lo = std::stoi(text.substr(0, comma));
  const int hi = std::stoi(text.substr(comma + 1));
  if (hi < lo) throw IoError("window upper bound below lower bound");
  return {lo, hi};
}

// grid whose spacing divides the admissible step, so shift operators move
// states by exact sample relocation
Grid aligned_state_grid(const CylinderConfig& config, ModeWindow window) {
  const Grid raw = spectral::default_spectral_grid(config, window, 2001);
  const double step = translation_step(config);
  const int per_step = std::max(
      1, static_cast<int>(std::lround(step / raw.spacing())));
  const double h = step / per_step;
  const int n = static_cast<int>(std::ceil((raw.y_max - raw.y_min) / h)) + 1;
  return Grid{raw.y_min, raw.y_min + (n - 1) * h, n};
}

int cmd_spectrum(const std::string& config_path, const std::string& window_text,
                 int levels, int points, const std::string& out_path,
                 const std::string& csv_path, const Tolerances& tol) {
  Report report("spectrum");
  const auto config = config_from(config_path);
  report.body["config"] = config_echo(config);

  const auto [lo, hi] = parse_window(window_text);
  const ModeWindow window{lo, hi};
  const auto result = spectral::spectrum(config, window, levels, points);

  report.body["results"]["levels"] = result.levels;
  report.body["results"]["degeneracy"] = result.degeneracy;
  report.body["results"]["binning_tolerance"] = result.binning_tolerance;
  json per_mode = json::object();
  for (const auto& [n, values] : result.per_mode)
    per_mode[std::to_string(n)] = values;
  report.body["results"]["per_mode"] = per_mode;

  for (int level = 0; level < levels; ++level) {
    const double reference = config.landau_level(level);
    const double deviation =
        std::abs(result.levels[level] - reference) / reference;
    report.check_below("level_" + std::to_string(level) + "_matches_ladder",
                       deviation, tol.at("eigen_rel"));
    report.check_flag("level_" + std::to_string(level) + "_degeneracy_full",
                      result.degeneracy[level] == window.size());
  }

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw IoError("cannot write " + csv_path);
    io::write_eigenvalue_table(csv, result);
  }
  return report.finish(out_path);
}

int cmd_holonomy(const std::string& config_path, const std::string& potential_path,
                 const std::string& loop_path, int samples,
                 const std::string& out_path, const Tolerances& tol) {
  Report report("holonomy");
  const auto config = config_from(config_path);
  report.body["config"] = config_echo(config);

  const auto potential = potential_path.empty()
                             ? gauge::make_potential(config, 0.0, {})
                             : io::load_potential(potential_path, config);
  const auto loop = loop_path.empty()
                        ? gauge::circle_loop(0.0, 1)
                        : io::load_loop(loop_path);

  const auto phase = gauge::holonomy(potential, loop, samples);
  report.body["results"]["zeta"] = potential.zeta;
  report.body["results"]["winding"] = loop.winding();
  report.body["results"]["phase_re"] = phase.real();
  report.body["results"]["phase_im"] = phase.imag();
  report.body["results"]["phase_arg"] = std::arg(phase);
  report.check_below("unit_modulus", std::abs(std::abs(phase) - 1.0),
                     tol.at("unit_modulus"));
  return report.finish(out_path);
}

int cmd_classify(const std::string& config_path, const std::string& potential_path,
                 const std::string& out_path) {
  Report report("classify");
  const auto config = config_from(config_path);
  report.body["config"] = config_echo(config);

  const auto potential = potential_path.empty()
                             ? gauge::make_potential(config, 0.0, {})
                             : io::load_potential(potential_path, config);
  const auto cls = gauge::classify(potential);
  report.body["results"]["zeta"] = potential.zeta;
  report.body["results"]["zeta_mod"] = cls.zeta_mod;
  report.body["results"]["period"] = cls.period;
  return report.finish(out_path);
}

int cmd_symmetry_check(const std::string& config_path, double phi, int k,
                       double requested_shift, bool has_requested_shift,
                       long seed, const std::string& out_path,
                       const Tolerances& tol) {
  Report report("symmetry-check");
  const auto config = config_from(config_path);
  report.body["config"] = config_echo(config);
  report.body["seed"] = seed;

  const int margin = std::abs(k) + 1;
  const ModeWindow window{-2 - margin, 2 + margin};
  const Grid grid = aligned_state_grid(config, window);

  std::mt19937_64 rng(static_cast<unsigned long long>(seed));
  const auto psi = normalize(random_state(config.q, {-2, 2}, grid, rng));

  const double deviation = symmetry::projective_phase_deviation(config, phi, k, psi);
  const auto expected = std::polar(1.0, k * phi);
  report.body["results"]["phi"] = phi;
  report.body["results"]["k"] = k;
  report.body["results"]["expected_phase_re"] = expected.real();
  report.body["results"]["expected_phase_im"] = expected.imag();
  report.check_below("projective_phase_deviation", deviation,
                     tol.at("projective_phase"));

  std::vector<WaveFunction> states{psi};
  report.check_below(
      "rotation_commutation",
      symmetry::commutation_residual(config, symmetry::SymmetryOp::rotation(phi),
                                     states),
      tol.at("rotation_comm"));
  report.check_below(
      "axial_commutation",
      symmetry::commutation_residual(
          config, symmetry::SymmetryOp::axial_shift(k), states),
      tol.at("axial_comm"));

  const double rot_norm = norm(symmetry::apply_rotation(config, phi, psi));
  const double shift_norm = norm(symmetry::apply_axial_shift(config, k, psi));
  report.check_below("rotation_unitarity", std::abs(rot_norm - 1.0),
                     tol.at("unitarity"));
  report.check_below("axial_unitarity", std::abs(shift_norm - 1.0),
                     tol.at("unitarity"));

  if (has_requested_shift) {
    const double steps = requested_shift * config.mu();
    json verdict;
    verdict["requested_shift"] = requested_shift;
    verdict["shift_times_mu"] = steps;
    verdict["phase_mismatch"] =
        symmetry::axial_phase_mismatch(config, requested_shift);
    const bool admissible =
        std::abs(steps - std::round(steps)) <= tol.at("admissible");
    verdict["admissible"] = admissible;
    verdict["nearest_lower"] = std::floor(steps) * translation_step(config);
    verdict["nearest_upper"] = std::ceil(steps) * translation_step(config);
    verdict["nearest"] = std::round(steps) * translation_step(config);
    report.body["results"]["admissibility"] = verdict;
  }
  return report.finish(out_path);
}

int cmd_rep_check(double nu, int cutoff, const std::vector<double>& lambdas,
                  long seed, const std::string& out_path, const Tolerances& tol) {
  using namespace cylandau::grouprep;
  Report report("rep-check");
  report.body["seed"] = seed;
  report.body["results"]["nu"] = nu;
  report.body["results"]["cutoff"] = cutoff;

  const double flux_mismatch = 2.0 * std::abs(std::sin(std::numbers::pi * nu));
  report.check_below("flux_quantization", flux_mismatch, tol.at("flux_phase"));

  std::mt19937_64 rng(static_cast<unsigned long long>(seed));

  const std::vector<double> eta_samples{0.5, 1.0 / 3.0, std::sqrt(2.0) / 2.0};
  json obstruction = json::array();
  for (const double lambda : lambdas) {
    const double violation = cylinder_obstruction(lambda, eta_samples);
    obstruction.push_back({{"lambda", lambda}, {"violation", violation}});
    if (lambda == 0.0) {
      report.check_below("obstruction_vanishes_at_zero", violation, 1e-12);
    } else {
      report.check_at_least("obstruction_detected_lambda_" +
                                std::to_string(lambda),
                            violation, 1e-3);
    }
  }
  report.body["results"]["obstruction"] = obstruction;

  const CommutatorFunction plane = PlaneLambda{1.0};
  const auto plane_report =
      check_cocycle_laws(plane, sample_triples(plane, 200, rng));
  report.check_below("plane_cocycle_laws", plane_report.max_deviation(),
                     tol.at("cocycle"));

  if (flux_mismatch <= tol.at("flux_phase")) {
    const int nu_int = static_cast<int>(std::lround(nu));
    const CommutatorFunction percyl = PeriodicCylinderNu{nu_int};
    const auto percyl_report =
        check_cocycle_laws(percyl, sample_triples(percyl, 200, rng));
    report.check_below("periodic_cylinder_cocycle_laws",
                       percyl_report.max_deviation(), tol.at("cocycle"));

    double worst_circle = 0.0, worst_sequence = 0.0;
    for (int i = 1; i <= 4; ++i)
      for (int m = -2; m <= 2; ++m) {
        const double theta = 1.3 * i;
        worst_circle = std::max(
            worst_circle, interior_commutator_deviation(RepSpace::FourierCircle,
                                                        nu_int, theta, m, cutoff));
        worst_sequence = std::max(
            worst_sequence, interior_commutator_deviation(RepSpace::SequenceZ,
                                                          nu_int, theta, m, cutoff));
      }
    report.check_below("rep_circle_interior_commutators", worst_circle,
                       tol.at("rep_phase"));
    report.check_below("rep_sequence_interior_commutators", worst_sequence,
                       tol.at("rep_phase"));

    double worst_assoc = 0.0;
    for (const auto& [g, h, kk] : sample_triples(percyl, 100, rng)) {
      const ExtensionElement a{g, std::polar(1.0, 0.3)};
      const ExtensionElement b{h, std::polar(1.0, -0.9)};
      const ExtensionElement c{kk, std::polar(1.0, 1.7)};
      const auto left = extension_multiply(percyl, extension_multiply(percyl, a, b), c);
      const auto right = extension_multiply(percyl, a, extension_multiply(percyl, b, c));
      worst_assoc = std::max(worst_assoc, std::abs(left.s - right.s));
    }
    report.check_below("extension_associativity", worst_assoc, 1e-12);
  }
  return report.finish(out_path);
}

int cmd_groundstate(const std::string& config_path, int n, int points,
                    const std::string& out_path, const Tolerances& tol) {
  Report report("groundstate");
  const auto config = config_from(config_path);
  report.body["config"] = config_echo(config);

  const Grid grid =
      make_grid(spectral::mode_center(config, n), 13.0 * config.sigma(), points);
  const auto analytic = spectral::analytic_ground_state(config, n, grid);
  const auto numeric =
      spectral::eigensolve(spectral::mode_hamiltonian(config, n, grid), 1);

  WaveFunction numeric_state = WaveFunction::zero(config.q, {n, n}, grid);
  for (int i = 0; i < grid.n_points; ++i)
    numeric_state.mode(n)[i] = numeric.vectors[0][i];

  const double overlap = std::abs(inner_product(analytic, numeric_state));
  report.check_at_least("analytic_numeric_overlap", overlap,
                        1.0 - tol.at("overlap"));

  int peak = 0;
  const auto& f = analytic.mode(n);
  for (int i = 0; i < grid.n_points; ++i)
    if (std::abs(f[i]) > std::abs(f[peak])) peak = i;
  const double expected_peak = spectral::mode_center(config, n);
  report.body["results"]["peak_y"] = grid.point(peak);
  report.body["results"]["expected_peak_y"] = expected_peak;
  report.check_below("peak_location_error",
                     std::abs(grid.point(peak) - expected_peak), grid.spacing());
  report.body["results"]["ground_energy"] = numeric.values[0];

  if (!out_path.empty()) {
    std::ofstream csv(out_path);
    if (!csv) throw IoError("cannot write " + out_path);
    io::write_state_table(csv, analytic);
  }
  return report.finish("");
}

int cmd_step_size(double b_gauss, double r_cm, const std::string& out_path) {
  Report report("step-size");
  const double step = physical_step_size({b_gauss, r_cm});
  report.body["results"]["B_gauss"] = b_gauss;
  report.body["results"]["R_cm"] = r_cm;
  report.body["results"]["step_size_cm"] = step;
  return report.finish(out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum mechanics of a charged particle on a cylinder in a "
               "uniform radial magnetic field"};
  app.require_subcommand(1);

  std::string config_path, out_path, csv_path, potential_path, loop_path;
  std::string window_text = "-3,3";
  std::string tolerance_overrides;
  long seed = 12345;
  int levels = 4, points = 2001, samples = 64, cutoff = 16, mode_n = 0, k = 1;
  double phi = std::numbers::pi, nu = 1.0;
  double requested_shift = 0.0, b_gauss = 1.0, r_cm = 1.0;
  std::vector<double> lambdas{0.0, 0.5, 1.0, 2.0};

  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_option("--tolerance-overrides", tolerance_overrides,
                 "Comma separated name=value tolerance overrides");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Landau levels and degeneracies");
  spectrum_cmd->add_option("--config", config_path, "Config JSON path");
  spectrum_cmd->add_option("--window", window_text, "Mode window \"lo,hi\"");
  spectrum_cmd->add_option("--levels", levels, "Levels per mode");
  spectrum_cmd->add_option("--points", points, "Grid points");
  spectrum_cmd->add_option("--out", out_path, "Report JSON path");
  spectrum_cmd->add_option("--csv", csv_path, "Eigenvalue CSV path");

  auto* holonomy_cmd = app.add_subcommand("holonomy", "Holonomy of a potential along a loop");
  holonomy_cmd->add_option("--config", config_path, "Config JSON path");
  holonomy_cmd->add_option("--potential", potential_path, "Potential JSON path");
  holonomy_cmd->add_option("--loop", loop_path, "Loop JSON path");
  holonomy_cmd->add_option("--samples", samples, "Quadrature samples per segment");
  holonomy_cmd->add_option("--out", out_path, "Report JSON path");

  auto* classify_cmd = app.add_subcommand("classify", "Gauge class of a potential");
  classify_cmd->add_option("--config", config_path, "Config JSON path");
  classify_cmd->add_option("--potential", potential_path, "Potential JSON path");
  classify_cmd->add_option("--out", out_path, "Report JSON path");

  auto* symmetry_cmd = app.add_subcommand("symmetry-check",
                                          "Projective phase law and commutation");
  symmetry_cmd->add_option("--config", config_path, "Config JSON path");
  symmetry_cmd->add_option("--phi", phi, "Rotation angle");
  symmetry_cmd->add_option("--k", k, "Axial steps");
  auto* shift_opt =
      symmetry_cmd->add_option("--shift", requested_shift,
                               "Arbitrary shift length for the admissibility verdict");
  symmetry_cmd->add_option("--out", out_path, "Report JSON path");

  auto* rep_cmd = app.add_subcommand("rep-check",
                                     "Cocycle laws, obstruction, quantization, "
                                     "truncated representations");
  rep_cmd->add_option("--nu", nu, "Central charge (flux per slice)");
  rep_cmd->add_option("--cutoff", cutoff, "Fourier window cutoff");
  rep_cmd->add_option("--lambda", lambdas, "Obstruction sweep values");
  rep_cmd->add_option("--out", out_path, "Report JSON path");

  auto* ground_cmd = app.add_subcommand("groundstate", "Ground-state profile table");
  ground_cmd->add_option("--config", config_path, "Config JSON path");
  ground_cmd->add_option("--n", mode_n, "Angular mode index");
  ground_cmd->add_option("--points", points, "Grid points");
  ground_cmd->add_option("--out", out_path, "Profile CSV path");

  auto* step_cmd = app.add_subcommand("step-size", "Physical axial step in cm");
  step_cmd->add_option("--b-gauss", b_gauss, "Field in gauss");
  step_cmd->add_option("--r-cm", r_cm, "Radius in centimeters");
  step_cmd->add_option("--out", out_path, "Report JSON path");

  // let the global --seed / --tolerance-overrides appear after the subcommand
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    Tolerances tol;
    tol.apply_overrides(tolerance_overrides);

    if (spectrum_cmd->parsed())
      return cmd_spectrum(config_path, window_text, levels, points, out_path,
                          csv_path, tol);
    if (holonomy_cmd->parsed())
      return cmd_holonomy(config_path, potential_path, loop_path, samples,
                          out_path, tol);
    if (classify_cmd->parsed())
      return cmd_classify(config_path, potential_path, out_path);
    if (symmetry_cmd->parsed())
      return cmd_symmetry_check(config_path, phi, k, requested_shift,
                                shift_opt->count() > 0, seed, out_path, tol);
    if (rep_cmd->parsed())
      return cmd_rep_check(nu, cutoff, lambdas, seed, out_path, tol);
    if (ground_cmd->parsed())
      return cmd_groundstate(config_path, mode_n, points, out_path, tol);
    if (step_cmd->parsed())
      return cmd_step_size(b_gauss, r_cm, out_path);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 1;
}
