#include "cylandau/grouprep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cylandau::grouprep {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double x) {
  double a = std::fmod(x, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// |e^{ix} - 1| without cancellation.
double phase_distance_from_one(double x) {
  return 2.0 * std::abs(std::sin(0.5 * x));
}

[[noreturn]] void kind_mismatch() {
  throw KindMismatch("group element variant does not match the operation");
}
}  // namespace

GroupElement plane_vec(double x1, double x2) { return PlaneVec{x1, x2}; }

GroupElement cyl_elem(double theta, double eta) {
  return CylElem{wrap_angle(theta), eta};
}

GroupElement per_cyl_elem(double phi, int m) {
  return PerCylElem{wrap_angle(phi), m};
}

GroupElement add(const GroupElement& g, const GroupElement& h) {
  if (auto* a = std::get_if<PlaneVec>(&g)) {
    auto* b = std::get_if<PlaneVec>(&h);
    if (!b) kind_mismatch();
    return PlaneVec{a->x1 + b->x1, a->x2 + b->x2};
  }
  if (auto* a = std::get_if<CylElem>(&g)) {
    auto* b = std::get_if<CylElem>(&h);
    if (!b) kind_mismatch();
    return CylElem{wrap_angle(a->theta + b->theta), a->eta + b->eta};
  }
  auto* a = std::get_if<PerCylElem>(&g);
  auto* b = std::get_if<PerCylElem>(&h);
  if (!a || !b) kind_mismatch();
  return PerCylElem{wrap_angle(a->phi + b->phi), a->m + b->m};
}

GroupElement negate(const GroupElement& g) {
  if (auto* a = std::get_if<PlaneVec>(&g)) return PlaneVec{-a->x1, -a->x2};
  if (auto* a = std::get_if<CylElem>(&g))
    return CylElem{wrap_angle(-a->theta), -a->eta};
  const auto& a = std::get<PerCylElem>(g);
  return PerCylElem{wrap_angle(-a.phi), -a.m};
}

std::complex<double> eval_commutator(const CommutatorFunction& cf,
                                     const GroupElement& g,
                                     const GroupElement& h) {
  if (auto* plane = std::get_if<PlaneLambda>(&cf)) {
    auto* a = std::get_if<PlaneVec>(&g);
    auto* b = std::get_if<PlaneVec>(&h);
    if (!a || !b) kind_mismatch();
    return std::polar(1.0, plane->lambda * (a->x1 * b->x2 - a->x2 * b->x1));
  }
  if (auto* percyl = std::get_if<PeriodicCylinderNu>(&cf)) {
    auto* a = std::get_if<PerCylElem>(&g);
    auto* b = std::get_if<PerCylElem>(&h);
    if (!a || !b) kind_mismatch();
    return std::polar(1.0, percyl->nu * (b->m * a->phi - a->m * b->phi));
  }
  const auto& cand = std::get<CylinderCandidate>(cf);
  auto* a = std::get_if<CylElem>(&g);
  auto* b = std::get_if<CylElem>(&h);
  if (!a || !b) kind_mismatch();
  return std::polar(1.0, cand.lambda * (a->theta * b->eta - b->theta * a->eta));
}

double CocycleReport::max_deviation() const {
  return std::max({max_left_additivity, max_right_additivity, max_antisymmetry});
}

CocycleReport check_cocycle_laws(
    const CommutatorFunction& cf,
    const std::vector<std::array<GroupElement, 3>>& triples) {
  CocycleReport report;
  report.triples = static_cast<int>(triples.size());
  for (const auto& [g, h, k] : triples) {
    const auto cgk = eval_commutator(cf, g, k);
    const auto chk = eval_commutator(cf, h, k);
    const auto cgh = eval_commutator(cf, g, h);
    const auto chg = eval_commutator(cf, h, g);
    const auto cghk = eval_commutator(cf, add(g, h), k);
    const auto cg_hk = eval_commutator(cf, g, add(h, k));

    report.max_left_additivity =
        std::max(report.max_left_additivity, std::abs(cghk - cgk * chk));
    report.max_right_additivity =
        std::max(report.max_right_additivity, std::abs(cg_hk - cgh * cgk));
    report.max_antisymmetry =
        std::max(report.max_antisymmetry, std::abs(cgh * chg - 1.0));
  }
  return report;
}

std::vector<std::array<GroupElement, 3>> sample_triples(
    const CommutatorFunction& cf, int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_int_distribution<int> small_int(-3, 3);

  auto element = [&]() -> GroupElement {
    if (std::holds_alternative<PlaneLambda>(cf))
      return plane_vec(box(rng), box(rng));
    if (std::holds_alternative<PeriodicCylinderNu>(cf))
      return per_cyl_elem(angle(rng), small_int(rng));
    // wraparound-prone angles with a mix of rational and irrational eta
    const double eta = (small_int(rng) > 0) ? 0.5 * small_int(rng) : box(rng);
    return cyl_elem(angle(rng), eta);
  };

  std::vector<std::array<GroupElement, 3>> triples;
  triples.reserve(count);
  for (int i = 0; i < count; ++i)
    triples.push_back({element(), element(), element()});
  return triples;
}

double cylinder_obstruction(double lambda,
                            const std::vector<double>& eta_samples) {
  double worst = 0.0;
  for (const double eta : eta_samples)
    worst = std::max(worst, phase_distance_from_one(lambda * kTwoPi * eta));
  return worst;
}

bool flux_quantization_check(double nu, double tol) {
  return phase_distance_from_one(kTwoPi * nu) <= tol;
}

double extension_cocycle(const CommutatorFunction& cf, const GroupElement& g,
                         const GroupElement& h) {
  if (auto* plane = std::get_if<PlaneLambda>(&cf)) {
    const auto& a = std::get<PlaneVec>(g);
    const auto& b = std::get<PlaneVec>(h);
    return 0.5 * plane->lambda * (a.x1 * b.x2 - a.x2 * b.x1);
  }
  if (auto* percyl = std::get_if<PeriodicCylinderNu>(&cf)) {
    const auto& a = std::get<PerCylElem>(g);
    const auto& b = std::get<PerCylElem>(h);
    // one-sided splitting: the half-alpha choice is not available here
    return double(percyl->nu) * b.m * a.phi;
  }
  const auto& cand = std::get<CylinderCandidate>(cf);
  const auto& a = std::get<CylElem>(g);
  const auto& b = std::get<CylElem>(h);
  return 0.5 * cand.lambda * (a.theta * b.eta - b.theta * a.eta);
}

ExtensionElement extension_multiply(const CommutatorFunction& cf,
                                    const ExtensionElement& a,
                                    const ExtensionElement& b) {
  const double beta = extension_cocycle(cf, a.g, b.g);
  return ExtensionElement{add(a.g, b.g),
                          std::polar(1.0, beta) * a.s * b.s};
}

ExtensionElement extension_inverse(const CommutatorFunction& cf,
                                   const ExtensionElement& a) {
  const GroupElement neg = negate(a.g);
  const double beta = extension_cocycle(cf, a.g, neg);
  return ExtensionElement{neg, std::polar(1.0, -beta) * std::conj(a.s)};
}

RepMatrix rep_identity(int N) {
  RepMatrix u{N, std::vector<std::complex<double>>((2 * N + 1) * (2 * N + 1))};
  for (int n = -N; n <= N; ++n) u.at(n, n) = 1.0;
  return u;
}

RepMatrix rep_multiply(const RepMatrix& a, const RepMatrix& b) {
  RepMatrix c{a.N, std::vector<std::complex<double>>(a.a.size())};
  const int d = a.dim();
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const auto aik = a.a[i * d + k];
      if (aik == std::complex<double>{}) continue;
      for (int j = 0; j < d; ++j) c.a[i * d + j] += aik * b.a[k * d + j];
    }
  return c;
}

RepMatrix rep_circle(int nu, const PerCylElem& element, int N) {
  const int shift = nu * element.m;
  if (std::abs(shift) > N)
    throw WindowOverflow("index shift nu*m exceeds the Fourier cutoff");
  RepMatrix u{N, std::vector<std::complex<double>>((2 * N + 1) * (2 * N + 1))};
  for (int n = -N; n <= N; ++n) {
    const int target = n + shift;
    if (target < -N || target > N) continue;  // column leaves the window
    u.at(target, n) = std::polar(1.0, target * element.phi);
  }
  return u;
}

RepMatrix rep_sequence(int nu, const PerCylElem& element, int N) {
  if (std::abs(element.m) > N)
    throw WindowOverflow("index shift m exceeds the sequence cutoff");
  RepMatrix u{N, std::vector<std::complex<double>>((2 * N + 1) * (2 * N + 1))};
  for (int n = -N; n <= N; ++n) {
    const int target = n - element.m;
    if (target < -N || target > N) continue;
    u.at(target, n) = std::polar(1.0, -double(nu) * target * element.phi);
  }
  return u;
}

RepMatrix rep_matrix(const TruncatedRep& rep, const PerCylElem& element) {
  return rep.space == RepSpace::FourierCircle
             ? rep_circle(rep.nu, element, rep.N)
             : rep_sequence(rep.nu, element, rep.N);
}

double unitarity_defect(const RepMatrix& u, int interior_margin) {
  const int lo = -u.N + interior_margin;
  const int hi = u.N - interior_margin;
  double acc = 0.0;
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j) {
      std::complex<double> dot{0.0, 0.0};
      for (int k = -u.N; k <= u.N; ++k) dot += std::conj(u.at(k, i)) * u.at(k, j);
      const std::complex<double> expect = (i == j) ? 1.0 : 0.0;
      acc += std::norm(dot - expect);
    }
  return std::sqrt(acc);
}

double interior_commutator_deviation(RepSpace space, int nu, double theta,
                                     int m, int N) {
  const PerCylElem rot{wrap_angle(theta), 0};
  const PerCylElem step{0.0, m};
  const auto build = (space == RepSpace::FourierCircle) ? rep_circle : rep_sequence;
  const RepMatrix ug = build(nu, rot, N);
  const RepMatrix uh = build(nu, step, N);
  const RepMatrix gh = rep_multiply(ug, uh);
  const RepMatrix hg = rep_multiply(uh, ug);

  const std::complex<double> c = eval_commutator(
      PeriodicCylinderNu{nu}, per_cyl_elem(theta, 0), per_cyl_elem(0.0, m));

  const int travel = (space == RepSpace::FourierCircle) ? std::abs(nu * m)
                                                        : std::abs(m);
  double worst = 0.0;
  for (int n = -N + travel; n <= N - travel; ++n) {
    double acc = 0.0;
    for (int r = -N; r <= N; ++r) acc += std::norm(gh.at(r, n) - c * hg.at(r, n));
    worst = std::max(worst, std::sqrt(acc));
  }
  return worst;
}

namespace {
void require_same_q(const CylinderConfig& config, const WaveFunction& psi) {
  if (std::abs(config.q - psi.q) > 1e-12)
    throw IncompatibleStates("state quasi-periodicity differs from the config");
}

void require_shift_fits(const WaveFunction& psi, double shift) {
  double lost2 = 0.0;
  double total2 = 0.0;
  for (const auto& f : psi.modes) {
    const double r = profile_norm(f, psi.grid);
    const double loss = shift_norm_loss(f, psi.grid, shift);
    lost2 += (loss * r) * (loss * r);
    total2 += r * r;
  }
  if (total2 > 0.0 && std::sqrt(lost2 / total2) > 1e-6)
    throw GridOverflow("shifted state support leaves the grid");
}
}  // namespace

WaveFunction cylinder_group_action(const CylinderConfig& config, int nu,
                                   double phi, int m, const WaveFunction& psi) {
  require_same_q(config, psi);
  require_shift_fits(psi, double(m));

  WaveFunction out = psi;
  out.n_min = psi.n_min + nu * m;
  for (int n = psi.n_min; n <= psi.n_max(); ++n) {
    Profile f = shifted_profile(psi.mode(n), psi.grid, double(m));
    const auto phase = std::polar(1.0, n * phi);
    for (auto& v : f) v *= phase;
    out.modes[n - psi.n_min] = std::move(f);
  }
  return out;
}

WaveFunction heisenberg_action(const CylinderConfig& config, int nu, double xi,
                               double eta, const WaveFunction& psi) {
  require_same_q(config, psi);
  require_shift_fits(psi, eta);

  WaveFunction out = psi;
  for (int n = psi.n_min; n <= psi.n_max(); ++n) {
    Profile f = shifted_profile(psi.mode(n), psi.grid, eta);
    const auto mode_phase = std::polar(1.0, (n + config.q) * xi);
    for (int i = 0; i < psi.grid.n_points; ++i)
      f[i] *= mode_phase * std::polar(1.0, nu * xi * psi.grid.point(i));
    out.modes[n - psi.n_min] = std::move(f);
  }
  return out;
}

PlaneState make_plane_gaussian(double half_width, int n_points) {
  const Grid g = make_grid(0.0, half_width, n_points);
  PlaneState s{g, g, std::vector<std::complex<double>>(
                         std::size_t(n_points) * n_points)};
  double norm2 = 0.0;
  for (int ix = 0; ix < n_points; ++ix)
    for (int iy = 0; iy < n_points; ++iy) {
      const double x = g.point(ix), y = g.point(iy);
      const std::complex<double> v =
          std::complex<double>(1.0 + 0.3 * x, 0.2 * y) *
          std::exp(-0.5 * (x * x + y * y));
      s.at(ix, iy) = v;
      norm2 += g.weight(ix) * g.weight(iy) * std::norm(v);
    }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& v : s.values) v *= scale;
  return s;
}

double plane_norm(const PlaneState& s) {
  double acc = 0.0;
  for (int ix = 0; ix < s.gx.n_points; ++ix)
    for (int iy = 0; iy < s.gy.n_points; ++iy)
      acc += s.gx.weight(ix) * s.gy.weight(iy) * std::norm(s.at(ix, iy));
  return std::sqrt(acc);
}

PlaneState plane_translation(double lambda, std::array<double, 2> x,
                             bool second_slot, const PlaneState& psi) {
  const int nx = psi.gx.n_points, ny = psi.gy.n_points;
  PlaneState out = psi;

  // shift the first coordinate
  for (int iy = 0; iy < ny; ++iy) {
    Profile column(nx);
    for (int ix = 0; ix < nx; ++ix) column[ix] = psi.at(ix, iy);
    column = shifted_profile(column, psi.gx, x[0]);
    for (int ix = 0; ix < nx; ++ix) out.at(ix, iy) = column[ix];
  }
  // then the second
  for (int ix = 0; ix < nx; ++ix) {
    Profile row(ny);
    for (int iy = 0; iy < ny; ++iy) row[iy] = out.at(ix, iy);
    row = shifted_profile(row, psi.gy, x[1]);
    for (int iy = 0; iy < ny; ++iy) out.at(ix, iy) = row[iy];
  }
  // phase e^{+-i (lambda/2) x ^ w}
  const double sign = second_slot ? -1.0 : 1.0;
  for (int ix = 0; ix < nx; ++ix)
    for (int iy = 0; iy < ny; ++iy) {
      const double w1 = psi.gx.point(ix), w2 = psi.gy.point(iy);
      out.at(ix, iy) *=
          std::polar(1.0, sign * 0.5 * lambda * (x[0] * w2 - x[1] * w1));
    }
  return out;
}

PlaneRepReport plane_commutator_check(
    double lambda, const std::vector<std::array<std::array<double, 2>, 2>>& pairs,
    const PlaneState& psi) {
  PlaneRepReport report;
  report.lambda = lambda;
  const double base = plane_norm(psi);

  for (const auto& [x, xp] : pairs) {
    const double wedge = x[0] * xp[1] - x[1] * xp[0];
    const std::complex<double> expected = std::polar(1.0, -lambda * wedge);

    const PlaneState ab = plane_translation(lambda, x, false,
                                            plane_translation(lambda, xp, false, psi));
    const PlaneState ba = plane_translation(lambda, xp, false,
                                            plane_translation(lambda, x, false, psi));
    PlaneState diff = ab;
    for (std::size_t i = 0; i < diff.values.size(); ++i)
      diff.values[i] -= expected * ba.values[i];
    const double dev = plane_norm(diff) / base;

    const PlaneState cross_ab = plane_translation(
        lambda, x, false, plane_translation(lambda, xp, true, psi));
    const PlaneState cross_ba = plane_translation(
        lambda, xp, true, plane_translation(lambda, x, false, psi));
    PlaneState cross = cross_ab;
    for (std::size_t i = 0; i < cross.values.size(); ++i)
      cross.values[i] -= cross_ba.values[i];
    const double cross_dev = plane_norm(cross) / base;

    report.pairs.push_back({x, xp, expected, dev, cross_dev});
    report.max_commutator_deviation =
        std::max(report.max_commutator_deviation, dev);
    report.max_cross_commutation =
        std::max(report.max_cross_commutation, cross_dev);
  }
  return report;
}

}  // namespace cylandau::grouprep
