#include "cylandau/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cylandau/spectral.hpp"

namespace cylandau::symmetry {

namespace {
void require_same_q(const CylinderConfig& config, const WaveFunction& psi) {
  if (std::abs(config.q - psi.q) > 1e-12)
    throw IncompatibleStates("state quasi-periodicity differs from the config");
}
}  // namespace

SymmetryOp axial_shift_from_length(const CylinderConfig& config, double a) {
  const double steps = a * config.mu();
  const double k = std::round(steps);
  if (std::abs(steps - k) > 1e-9)
    throw NonAdmissibleTranslation(
        "axial shift length is not an integer multiple of mu^{-1}");
  return SymmetryOp::axial_shift(static_cast<int>(k));
}

double c_theta(const CylinderConfig& config) {
  return config.hbar * (config.mu() * config.rho - config.q);
}

double axial_phase_mismatch(const CylinderConfig& config, double a) {
  return 2.0 * std::abs(std::sin(std::numbers::pi * a * config.mu()));
}

WaveFunction apply_rotation(const CylinderConfig& config, double phi,
                            const WaveFunction& psi) {
  require_same_q(config, psi);
  WaveFunction out = psi;
  for (int n = psi.n_min; n <= psi.n_max(); ++n) {
    const auto phase = std::polar(1.0, n * phi);
    for (auto& v : out.mode(n)) v *= phase;
  }
  return out;
}

WaveFunction apply_axial_shift(const CylinderConfig& config, int k,
                               const WaveFunction& psi) {
  require_same_q(config, psi);
  const double shift = k * translation_step(config);

  double lost2 = 0.0, total2 = 0.0;
  for (const auto& f : psi.modes) {
    const double r = profile_norm(f, psi.grid);
    const double loss = shift_norm_loss(f, psi.grid, shift);
    lost2 += (loss * r) * (loss * r);
    total2 += r * r;
  }
  if (total2 > 0.0 && std::sqrt(lost2 / total2) > 1e-6)
    throw GridOverflow("shifted state support leaves the grid");

  WaveFunction out = psi;
  out.n_min = psi.n_min + k;
  for (std::size_t i = 0; i < psi.modes.size(); ++i)
    out.modes[i] = shifted_profile(psi.modes[i], psi.grid, shift);
  return out;
}

WaveFunction apply(const CylinderConfig& config, const SymmetryOp& op,
                   const WaveFunction& psi) {
  return op.kind == SymmetryOp::Kind::Rotation
             ? apply_rotation(config, op.phi, psi)
             : apply_axial_shift(config, op.k, psi);
}

double projective_phase_deviation(const CylinderConfig& config, double phi,
                                  int k, const WaveFunction& psi) {
  const WaveFunction uv =
      apply_rotation(config, phi, apply_axial_shift(config, k, psi));
  WaveFunction vu =
      apply_axial_shift(config, k, apply_rotation(config, phi, psi));

  const auto phase = std::polar(1.0, k * phi);
  for (auto& f : vu.modes)
    for (auto& v : f) v *= phase;

  WaveFunction diff = uv;
  for (std::size_t i = 0; i < diff.modes.size(); ++i)
    for (int j = 0; j < diff.grid.n_points; ++j)
      diff.modes[i][j] -= vu.modes[i][j];
  return norm(diff);
}

double commutation_residual(const CylinderConfig& config, const SymmetryOp& op,
                            const std::vector<WaveFunction>& states) {
  double worst = 0.0;
  for (const auto& psi : states) {
    const WaveFunction op_h = apply(config, op, spectral::apply_hamiltonian(config, psi));
    const WaveFunction h_op = spectral::apply_hamiltonian(config, apply(config, op, psi));
    WaveFunction diff = op_h;
    for (std::size_t i = 0; i < diff.modes.size(); ++i)
      for (int j = 0; j < diff.grid.n_points; ++j)
        diff.modes[i][j] -= h_op.modes[i][j];
    worst = std::max(worst, norm(diff) / norm(psi));
  }
  return worst;
}

WaveFunction fourier_eigenstate(const CylinderConfig& config, double xi,
                                ModeWindow window, const Grid& grid) {
  if (window.size() < 8)
    throw WindowTooSmall("Fourier eigenstate needs a window of at least 8 modes");

  WaveFunction psi = WaveFunction::zero(config.q, window, grid);
  for (int n = window.lo; n <= window.hi; ++n) {
    const WaveFunction ground = spectral::analytic_ground_state(config, n, grid);
    const auto coeff = std::polar(1.0, n * xi);
    Profile& f = psi.mode(n);
    const Profile& g = ground.mode(n);
    for (int i = 0; i < grid.n_points; ++i) f[i] = coeff * g[i];
  }
  return normalize(psi);
}

RedundancyReport rho_q_redundancy_check(const CylinderConfig& config,
                                        const Grid& grid, ModeWindow window,
                                        int steps) {
  CylinderConfig shifted = config;
  shifted.rho += steps * translation_step(config);

  RedundancyReport report;
  report.steps = steps;

  for (int n = window.lo; n <= window.hi; ++n) {
    const int n_shifted = n + steps;
    const WaveFunction base = spectral::analytic_ground_state(config, n, grid);
    const WaveFunction moved =
        spectral::analytic_ground_state(shifted, n_shifted, grid);

    RedundancyEntry entry;
    entry.n_base = n;
    entry.n_shifted = n_shifted;
    entry.center_base = spectral::mode_center(config, n);
    entry.center_shifted = spectral::mode_center(shifted, n_shifted);
    entry.overlap = std::abs(
        profile_inner(moved.mode(n_shifted), base.mode(n), grid));
    report.entries.push_back(entry);
    report.min_overlap = std::min(report.min_overlap, entry.overlap);
  }
  report.pass = report.min_overlap >= 1.0 - 1e-8;
  return report;
}

}  // namespace cylandau::symmetry
