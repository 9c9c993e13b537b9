#include "cylandau/wavefunction.hpp"

#include <algorithm>
#include <cmath>

namespace cylandau {

namespace {
constexpr double kInvSqrtTwoPi = 0.3989422804014326779;  // (2 pi)^{-1/2}

double canonical_q(double q) { return q - std::floor(q); }

void require_compatible(const WaveFunction& a, const WaveFunction& b) {
  if (std::abs(canonical_q(a.q) - canonical_q(b.q)) > 1e-12)
    throw IncompatibleStates("quasi-periodicity parameters differ");
  if (!(a.grid == b.grid))
    throw IncompatibleStates("states live on different grids");
}
}  // namespace

Grid make_grid(double center, double half_width, int n_points) {
  if (!(half_width > 0.0))
    throw NonPositiveParameter("grid half_width must be positive");
  if (n_points < 3) throw TooFewPoints("grid needs at least 3 points");
  return Grid{center - half_width, center + half_width, n_points};
}

WaveFunction WaveFunction::zero(double q, ModeWindow window, const Grid& grid) {
  WaveFunction psi;
  psi.q = canonical_q(q);
  psi.n_min = window.lo;
  psi.modes.assign(window.size(), Profile(grid.n_points, Complex{0.0, 0.0}));
  psi.grid = grid;
  return psi;
}

double profile_norm(const Profile& f, const Grid& grid) {
  double s = 0.0;
  for (int i = 0; i < grid.n_points; ++i) s += grid.weight(i) * std::norm(f[i]);
  return std::sqrt(s);
}

Complex profile_inner(const Profile& f, const Profile& g, const Grid& grid) {
  Complex s{0.0, 0.0};
  for (int i = 0; i < grid.n_points; ++i)
    s += grid.weight(i) * std::conj(f[i]) * g[i];
  return s;
}

Complex inner_product(const WaveFunction& psi, const WaveFunction& chi) {
  require_compatible(psi, chi);
  Complex s{0.0, 0.0};
  const int lo = std::max(psi.n_min, chi.n_min);
  const int hi = std::min(psi.n_max(), chi.n_max());
  for (int n = lo; n <= hi; ++n)
    s += profile_inner(psi.mode(n), chi.mode(n), psi.grid);
  return s;
}

double norm(const WaveFunction& psi) {
  double s = 0.0;
  for (const auto& f : psi.modes) {
    const double r = profile_norm(f, psi.grid);
    s += r * r;
  }
  return std::sqrt(s);
}

WaveFunction normalize(const WaveFunction& psi) {
  const double r = norm(psi);
  if (!(r > 0.0)) throw ZeroState("cannot normalize the zero state");
  WaveFunction out = psi;
  for (auto& f : out.modes)
    for (auto& v : f) v /= r;
  return out;
}

Complex evaluate(const WaveFunction& psi, double theta, double y) {
  const Grid& g = psi.grid;
  const double h = g.spacing();
  const double slack = 1e-9 * h;
  if (y < g.y_min - slack || y > g.y_max + slack)
    throw OutOfGrid("evaluation point outside the axial grid");

  const double t = std::clamp((y - g.y_min) / h, 0.0, double(g.n_points - 1));
  const int i = std::min(static_cast<int>(t), g.n_points - 2);
  const double frac = t - i;

  Complex value{0.0, 0.0};
  for (int n = psi.n_min; n <= psi.n_max(); ++n) {
    const Profile& f = psi.mode(n);
    const Complex fy = (1.0 - frac) * f[i] + frac * f[i + 1];
    value += std::polar(1.0, (n + psi.q) * theta) * fy;
  }
  return kInvSqrtTwoPi * value;
}

Profile shifted_profile(const Profile& f, const Grid& grid, double shift) {
  const int n = grid.n_points;
  const double h = grid.spacing();
  const double steps = shift / h;
  const long k = std::lround(steps);
  Profile out(n, Complex{0.0, 0.0});

  if (std::abs(steps - double(k)) < 1e-9) {
    // exact sample relocation
    for (long i = 0; i < n; ++i) {
      const long j = i + k;
      if (j >= 0 && j < n) out[i] = f[j];
    }
    return out;
  }

  const long k0 = static_cast<long>(std::floor(steps));
  const double frac = steps - double(k0);
  for (long i = 0; i < n; ++i) {
    const long j = i + k0;
    const Complex a = (j >= 0 && j < n) ? f[j] : Complex{0.0, 0.0};
    const Complex b = (j + 1 >= 0 && j + 1 < n) ? f[j + 1] : Complex{0.0, 0.0};
    out[i] = (1.0 - frac) * a + frac * b;
  }
  return out;
}

double shift_norm_loss(const Profile& f, const Grid& grid, double shift) {
  const double total = profile_norm(f, grid);
  if (!(total > 0.0)) return 0.0;
  // Samples of f below y_min + shift (shift > 0) or above y_max + shift
  // (shift < 0) are never read back; their mass is lost.
  double lost = 0.0;
  for (int i = 0; i < grid.n_points; ++i) {
    const double y = grid.point(i);
    if ((shift > 0.0 && y < grid.y_min + shift) ||
        (shift < 0.0 && y > grid.y_max + shift))
      lost += grid.weight(i) * std::norm(f[i]);
  }
  return std::sqrt(lost) / total;
}

WaveFunction random_state(double q, ModeWindow window, const Grid& grid,
                          std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> width(0.6, 1.4);

  WaveFunction psi = WaveFunction::zero(q, window, grid);
  const double mid = 0.5 * (grid.y_min + grid.y_max);
  const double span = 0.1 * (grid.y_max - grid.y_min);

  for (auto& f : psi.modes) {
    const double c = mid + span * unit(rng);
    const double s = width(rng);
    const Complex a0{unit(rng), unit(rng)};
    const Complex a1{0.3 * unit(rng), 0.3 * unit(rng)};
    const Complex a2{0.1 * unit(rng), 0.1 * unit(rng)};
    for (int i = 0; i < grid.n_points; ++i) {
      const double u = (grid.point(i) - c) / s;
      f[i] = (a0 + a1 * u + a2 * (u * u)) * std::exp(-0.5 * u * u);
    }
  }
  return normalize(psi);
}

}  // namespace cylandau
