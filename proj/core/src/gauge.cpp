#include "cylandau/gauge.hpp"

#include <cmath>
#include <numbers>

namespace cylandau::gauge {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double y_factor(const LambdaTerm& t, double y) {
  const double u = y - t.y_offset;
  double p = 1.0;
  for (int k = 0; k < t.poly_degree; ++k) p *= u;
  return p * std::exp(-t.gauss_width * u * u);
}

double y_factor_derivative(const LambdaTerm& t, double y) {
  const double u = y - t.y_offset;
  double p = 1.0;  // u^(d-1)
  for (int k = 0; k + 1 < t.poly_degree; ++k) p *= u;
  const double poly_part = (t.poly_degree > 0) ? t.poly_degree * p : 0.0;
  const double gauss_part = -2.0 * t.gauss_width * u * (t.poly_degree > 0 ? p * u : 1.0);
  return (poly_part + gauss_part) * std::exp(-t.gauss_width * u * u);
}

double angular(const LambdaTerm& t, double theta) {
  const double x = t.frequency * theta;
  return t.angular == LambdaTerm::Angular::Cos ? std::cos(x) : std::sin(x);
}

double angular_derivative(const LambdaTerm& t, double theta) {
  const double x = t.frequency * theta;
  return t.angular == LambdaTerm::Angular::Cos ? -t.frequency * std::sin(x)
                                               : t.frequency * std::cos(x);
}

void require_closed(const Loop& loop) {
  if (loop.vertices.size() < 2) throw OpenLoop("loop needs at least 2 vertices");
  const auto& first = loop.vertices.front();
  const auto& last = loop.vertices.back();
  const double dtheta = last[0] - first[0];
  const double w = std::round(dtheta / kTwoPi);
  if (std::abs(last[1] - first[1]) > 1e-9)
    throw OpenLoop("loop endpoints differ in y");
  if (std::abs(dtheta - w * kTwoPi) > 1e-9)
    throw OpenLoop("loop endpoints differ by a non-multiple of 2 pi in theta");
}
}  // namespace

double GaugePotential::lambda_value(double theta, double y) const {
  double s = 0.0;
  for (const auto& t : lambda) s += t.coeff * angular(t, theta) * y_factor(t, y);
  return s;
}

double GaugePotential::a_theta(double theta, double y) const {
  double s = zeta - config.B * config.R * y;
  for (const auto& t : lambda)
    s += t.coeff * angular_derivative(t, theta) * y_factor(t, y);
  return s;
}

double GaugePotential::a_y(double theta, double y) const {
  double s = 0.0;
  for (const auto& t : lambda)
    s += t.coeff * angular(t, theta) * y_factor_derivative(t, y);
  return s;
}

int Loop::winding() const {
  return static_cast<int>(
      std::round((vertices.back()[0] - vertices.front()[0]) / kTwoPi));
}

Loop make_loop(std::vector<std::array<double, 2>> vertices) {
  Loop loop{std::move(vertices)};
  require_closed(loop);
  return loop;
}

Loop circle_loop(double y, int winding, double theta_start) {
  return Loop{{{theta_start, y}, {theta_start + winding * kTwoPi, y}}};
}

bool same_class(const GaugeClass& a, const GaugeClass& b, double tol) {
  const double d = std::abs(a.zeta_mod - b.zeta_mod);
  const double circular = std::min(d, a.period - d);
  return circular <= tol * a.period;
}

GaugePotential make_potential(const CylinderConfig& config, double zeta,
                              std::vector<LambdaTerm> lambda) {
  for (const auto& t : lambda) {
    if (t.frequency != std::rint(t.frequency))
      throw NonIntegerWinding("Lambda angular frequency must be an integer");
    if (t.gauss_width < 0.0)
      throw NonPositiveParameter("Gaussian width must be non-negative");
  }
  return GaugePotential{config, zeta, std::move(lambda)};
}

GaugePotential apply_gauge_transformation(const GaugePotential& a, int m,
                                          std::vector<LambdaTerm> extra) {
  GaugePotential out = make_potential(a.config, a.zeta, a.lambda);
  out.zeta += m * a.config.hbar / a.config.e;
  for (auto& t : extra) {
    if (t.frequency != std::rint(t.frequency))
      throw NonIntegerWinding("Lambda angular frequency must be an integer");
    out.lambda.push_back(t);
  }
  return out;
}

std::complex<double> holonomy(const GaugePotential& a, const Loop& loop,
                              int samples_per_segment) {
  require_closed(loop);
  if (samples_per_segment < 2)
    throw TooFewPoints("holonomy needs at least 2 samples per segment");
  int n = samples_per_segment;
  if (n % 2 != 0) ++n;  // composite Simpson needs an even interval count

  double integral = 0.0;
  for (std::size_t s = 0; s + 1 < loop.vertices.size(); ++s) {
    const double theta0 = loop.vertices[s][0], y0 = loop.vertices[s][1];
    const double dtheta = loop.vertices[s + 1][0] - theta0;
    const double dy = loop.vertices[s + 1][1] - y0;
    const double dt = 1.0 / n;

    auto integrand = [&](double t) {
      const double theta = theta0 + t * dtheta;
      const double y = y0 + t * dy;
      return a.a_theta(theta, y) * dtheta + a.a_y(theta, y) * dy;
    };

    double acc = integrand(0.0) + integrand(1.0);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * integrand(i * dt);
    integral += acc * dt / 3.0;
  }
  return std::polar(1.0, a.config.e / a.config.hbar * integral);
}

GaugeClass classify(const GaugePotential& a) {
  const double period = a.config.hbar / a.config.e;
  double zeta_mod = std::fmod(a.zeta, period);
  if (zeta_mod < 0.0) zeta_mod += period;
  return GaugeClass{zeta_mod, period, a.config.B, a.config.R};
}

EquivalenceReport holonomically_equivalent(const GaugePotential& a,
                                           const GaugePotential& b,
                                           const std::vector<Loop>& suite,
                                           int samples_per_segment,
                                           double tol) {
  bool has_winding = false;
  for (const auto& loop : suite)
    if (loop.winding() != 0) has_winding = true;
  if (!has_winding)
    throw InsufficientLoopSuite(
        "loop suite has no winding loop; contractible loops cannot resolve zeta");

  EquivalenceReport report;
  report.tolerance = tol;
  for (const auto& loop : suite) {
    const auto ha = holonomy(a, loop, samples_per_segment);
    const auto hb = holonomy(b, loop, samples_per_segment);
    const double d = std::abs(ha - hb);
    report.loops.push_back({loop.winding(), d});
    report.max_phase_distance = std::max(report.max_phase_distance, d);
  }
  report.equivalent = report.max_phase_distance <= tol;
  return report;
}

GaugePotential translate_potential(const GaugePotential& a, double ell) {
  GaugePotential out = a;
  out.zeta += a.config.B * a.config.R * ell;
  for (auto& t : out.lambda) t.y_offset += ell;
  return out;
}

bool is_symmetry_translation(const CylinderConfig& config, double ell) {
  const double steps = ell * config.mu();
  return std::abs(steps - std::round(steps)) <= 1e-9;
}

std::vector<Loop> default_loop_suite() {
  std::vector<Loop> suite;
  suite.push_back(make_loop({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}));
  suite.push_back(circle_loop(0.0, 1));
  suite.push_back(circle_loop(0.37, 1));
  suite.push_back(circle_loop(0.0, 2));
  suite.push_back(circle_loop(0.37, 2));
  return suite;
}

}  // namespace cylandau::gauge
