#include "cylandau/spectral.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cylandau::spectral {

namespace {
constexpr double kCoverageSigmas = 12.0;

// central first difference with zero ghost values
Profile central_difference(const Profile& f, double h) {
  const int n = static_cast<int>(f.size());
  Profile out(n);
  for (int i = 0; i < n; ++i) {
    const Complex prev = (i > 0) ? f[i - 1] : Complex{};
    const Complex next = (i + 1 < n) ? f[i + 1] : Complex{};
    out[i] = (next - prev) / (2.0 * h);
  }
  return out;
}

// H_n applied to a full-grid profile (Dirichlet ends via zero ghosts)
Profile apply_mode_hamiltonian(const CylinderConfig& config, int n,
                               const Grid& grid, const Profile& f) {
  const double h = grid.spacing();
  const double kin = config.hbar * config.hbar / (2.0 * config.m * h * h);
  const double eb = config.e * config.B;
  const double pot_scale = eb * eb / (2.0 * config.m);
  const double yn = mode_center(config, n);

  const int np = grid.n_points;
  Profile out(np);
  for (int i = 0; i < np; ++i) {
    const Complex prev = (i > 0) ? f[i - 1] : Complex{};
    const Complex next = (i + 1 < np) ? f[i + 1] : Complex{};
    const double dy = grid.point(i) - yn;
    out[i] = kin * (2.0 * f[i] - prev - next) + pot_scale * dy * dy * f[i];
  }
  return out;
}
}  // namespace

double mode_center(const CylinderConfig& config, int n) {
  return config.rho - (n + config.q) / config.mu();
}

ModeHamiltonian mode_hamiltonian(const CylinderConfig& config, int n,
                                 const Grid& grid) {
  const double yn = mode_center(config, n);
  const double sigma = config.sigma();
  const double slack = 1e-12 * (grid.y_max - grid.y_min);
  if (grid.y_min > yn - kCoverageSigmas * sigma + slack ||
      grid.y_max < yn + kCoverageSigmas * sigma - slack)
    throw GridTooNarrow("grid does not cover the mode center +- 12 sigma");

  const double h = grid.spacing();
  const double kin = config.hbar * config.hbar / (2.0 * config.m * h * h);
  const double eb = config.e * config.B;
  const double pot_scale = eb * eb / (2.0 * config.m);

  ModeHamiltonian hn;
  hn.n = n;
  hn.y_center = yn;
  hn.grid = grid;
  hn.off = -kin;
  hn.diag.resize(grid.n_points - 2);
  for (int i = 0; i < grid.n_points - 2; ++i) {
    const double dy = grid.point(i + 1) - yn;
    hn.diag[i] = 2.0 * kin + pot_scale * dy * dy;
  }
  return hn;
}

EigenSolution eigensolve(const ModeHamiltonian& h, int k_levels) {
  const int dim = static_cast<int>(h.diag.size());
  if (k_levels < 1 || k_levels > dim)
    throw NonPositiveParameter("k_levels must be in [1, interior size]");

  std::vector<double> d = h.diag;
  std::vector<double> e(dim > 1 ? dim - 1 : 0, h.off);
  std::vector<double> w(dim);
  std::vector<double> z(std::size_t(dim) * k_levels);
  std::vector<lapack_int> isuppz(2 * std::size_t(k_levels));
  lapack_int found = 0;

  const lapack_int info = LAPACKE_dstevr(
      LAPACK_COL_MAJOR, 'V', 'I', dim, d.data(), e.data(), 0.0, 0.0, 1,
      k_levels, 0.0, &found, w.data(), z.data(), dim, isuppz.data());
  if (info != 0 || found < k_levels)
    throw ConvergenceFailure("tridiagonal eigensolver failed to converge");

  const double inv_sqrt_h = 1.0 / std::sqrt(h.grid.spacing());
  EigenSolution out;
  out.values.assign(w.begin(), w.begin() + k_levels);
  out.vectors.resize(k_levels);
  for (int k = 0; k < k_levels; ++k) {
    auto& v = out.vectors[k];
    v.assign(h.grid.n_points, 0.0);
    for (int i = 0; i < dim; ++i) v[i + 1] = z[std::size_t(k) * dim + i] * inv_sqrt_h;
  }
  return out;
}

Grid default_spectral_grid(const CylinderConfig& config, ModeWindow window,
                           int n_points) {
  const double lo = std::min(mode_center(config, window.lo),
                             mode_center(config, window.hi));
  const double hi = std::max(mode_center(config, window.lo),
                             mode_center(config, window.hi));
  const double pad = kCoverageSigmas * config.sigma();
  return Grid{lo - pad, hi + pad, n_points};
}

SpectrumResult spectrum(const CylinderConfig& config, ModeWindow window,
                        int k_levels, int n_points) {
  const Grid grid = default_spectral_grid(config, window, n_points);

  SpectrumResult result;
  result.binning_tolerance = 1e-6 * config.e * config.B / config.m;
  for (int n = window.lo; n <= window.hi; ++n) {
    const auto solution = eigensolve(mode_hamiltonian(config, n, grid), k_levels);
    result.per_mode[n] = solution.values;
  }

  for (int level = 0; level < k_levels; ++level) {
    double sum = 0.0;
    int count = 0;
    for (const auto& [n, values] : result.per_mode) {
      sum += values[level];
      ++count;
    }
    const double mean = sum / count;
    int degenerate = 0;
    for (const auto& [n, values] : result.per_mode)
      if (std::abs(values[level] - mean) <= result.binning_tolerance)
        ++degenerate;
    result.levels.push_back(mean);
    result.degeneracy.push_back(degenerate);
  }
  return result;
}

WaveFunction analytic_ground_state(const CylinderConfig& config, int n,
                                   const Grid& grid) {
  const double yn = mode_center(config, n);
  const double sigma = config.sigma();
  const double slack = 1e-12 * (grid.y_max - grid.y_min);
  if (grid.y_min > yn - kCoverageSigmas * sigma + slack ||
      grid.y_max < yn + kCoverageSigmas * sigma - slack)
    throw GridTooNarrow("grid does not cover the ground-state Gaussian");

  const double mu = config.mu();
  const double amplitude = std::pow(mu / (std::numbers::pi * config.R), 0.25);
  const double decay = 0.5 * mu / config.R;

  WaveFunction psi = WaveFunction::zero(config.q, {n, n}, grid);
  Profile& f = psi.mode(n);
  for (int i = 0; i < grid.n_points; ++i) {
    const double dy = grid.point(i) - yn;
    f[i] = amplitude * std::exp(-decay * dy * dy);
  }
  return psi;
}

double annihilation_residual(const CylinderConfig& config, int n,
                             const WaveFunction& psi) {
  if (psi.modes.size() != 1 || psi.n_min != n)
    throw IncompatibleStates("annihilation residual needs the single-mode state n");

  const Grid& grid = psi.grid;
  const Profile& f = psi.mode(n);
  const double yn = mode_center(config, n);
  const double sqrt_eb = std::sqrt(config.e * config.B);

  const Profile df = central_difference(f, grid.spacing());
  Profile g(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    // Q f = sqrt(eB) (y - y_n) f,  i P f = (hbar / sqrt(eB)) f'
    g[i] = sqrt_eb * (grid.point(i) - yn) * f[i] +
           config.hbar / sqrt_eb * df[i];
  }
  return profile_norm(g, grid);
}

WaveFunction apply_hamiltonian(const CylinderConfig& config,
                               const WaveFunction& psi) {
  WaveFunction out = psi;
  for (int n = psi.n_min; n <= psi.n_max(); ++n)
    out.mode(n) = apply_mode_hamiltonian(config, n, psi.grid, psi.mode(n));
  return out;
}

double energy_expectation(const CylinderConfig& config, const WaveFunction& psi) {
  const WaveFunction h_psi = apply_hamiltonian(config, psi);
  const double n2 = std::pow(norm(psi), 2);
  return inner_product(psi, h_psi).real() / n2;
}

double momentum_commutator_check(const CylinderConfig& config,
                                 const std::vector<WaveFunction>& states) {
  const double target = config.hbar * config.e * config.B * config.R;
  double worst = 0.0;

  for (const auto& psi : states) {
    WaveFunction residual = psi;
    for (int n = psi.n_min; n <= psi.n_max(); ++n) {
      const Grid& grid = psi.grid;
      const double yn = mode_center(config, n);
      const Profile& f = psi.mode(n);
      const double ebr = config.e * config.B * config.R;

      // pi_theta f = eBR (y - y_n) f ; pi_y f = -i hbar D1 f
      Profile yf(grid.n_points);
      for (int i = 0; i < grid.n_points; ++i)
        yf[i] = ebr * (grid.point(i) - yn) * f[i];

      const Profile d_f = central_difference(f, grid.spacing());
      const Profile d_yf = central_difference(yf, grid.spacing());

      Profile& r = residual.mode(n);
      const Complex minus_i_hbar{0.0, -config.hbar};
      const Complex i_target{0.0, target};
      for (int i = 0; i < grid.n_points; ++i) {
        const Complex pi_y_f = minus_i_hbar * d_f[i];
        const Complex commutator =
            ebr * (grid.point(i) - yn) * pi_y_f - minus_i_hbar * d_yf[i];
        r[i] = commutator - i_target * f[i];
      }
    }
    worst = std::max(worst, norm(residual) / norm(psi));
  }
  return worst;
}

double velocity_check(const CylinderConfig& config,
                      const std::vector<WaveFunction>& states) {
  double worst = 0.0;
  for (const auto& psi : states) {
    WaveFunction residual = psi;
    for (int n = psi.n_min; n <= psi.n_max(); ++n) {
      const Grid& grid = psi.grid;
      const Profile& f = psi.mode(n);

      Profile yf(grid.n_points);
      for (int i = 0; i < grid.n_points; ++i) yf[i] = grid.point(i) * f[i];

      const Profile h_yf = apply_mode_hamiltonian(config, n, grid, yf);
      const Profile h_f = apply_mode_hamiltonian(config, n, grid, f);
      const Profile d_f = central_difference(f, grid.spacing());

      Profile& r = residual.mode(n);
      const Complex i_unit{0.0, 1.0};
      const Complex minus_i_hbar{0.0, -config.hbar};
      for (int i = 0; i < grid.n_points; ++i) {
        const Complex lhs =
            i_unit / config.hbar * (h_yf[i] - grid.point(i) * h_f[i]);
        const Complex rhs = minus_i_hbar * d_f[i] / config.m;
        r[i] = lhs - rhs;
      }
    }
    worst = std::max(worst, norm(residual) / norm(psi));
  }
  return worst;
}

}  // namespace cylandau::spectral
