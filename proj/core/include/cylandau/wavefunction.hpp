#pragma once

#include <complex>
#include <random>
#include <vector>

#include "cylandau/grid.hpp"

namespace cylandau {

using Complex = std::complex<double>;
using Profile = std::vector<Complex>;

/// Inclusive range [lo, hi] of angular mode indices.
struct ModeWindow {
  int lo = 0;
  int hi = 0;
  int size() const { return hi - lo + 1; }
};

/// Quasi-periodic state on the cylinder, stored mode-resolved:
///
///   psi(theta, y) = (2 pi)^{-1/2} sum_n e^{i (n + q) theta} f_n(y)
///
/// with each profile f_n sampled on a shared axial grid. The angular factor
/// makes psi(theta + 2 pi, y) = e^{2 pi i q} psi(theta, y) hold identically.
struct WaveFunction {
  double q = 0.0;  // canonical in [0, 1)
  int n_min = 0;   // angular index of modes.front()
  std::vector<Profile> modes;
  Grid grid;

  int n_max() const { return n_min + static_cast<int>(modes.size()) - 1; }
  ModeWindow window() const { return {n_min, n_max()}; }
  bool has_mode(int n) const { return n >= n_min && n <= n_max(); }
  Profile& mode(int n) { return modes[n - n_min]; }
  const Profile& mode(int n) const { return modes[n - n_min]; }

  static WaveFunction zero(double q, ModeWindow window, const Grid& grid);
};

/// sum_n  integral conj(f_n) g_n dy  by trapezoid rule over shared modes.
/// Throws IncompatibleStates on q or grid mismatch.
Complex inner_product(const WaveFunction& psi, const WaveFunction& chi);

double norm(const WaveFunction& psi);

/// Throws ZeroState when the norm vanishes.
WaveFunction normalize(const WaveFunction& psi);

/// Pointwise value, linear interpolation in y. Throws OutOfGrid.
Complex evaluate(const WaveFunction& psi, double theta, double y);

// -- profile helpers shared by the operator modules ------------------------

double profile_norm(const Profile& f, const Grid& grid);
Complex profile_inner(const Profile& f, const Profile& g, const Grid& grid);

/// Samples f at y + shift: exact index remap when shift is a grid multiple,
/// linear interpolation otherwise. Points outside the grid read as zero.
Profile shifted_profile(const Profile& f, const Grid& grid, double shift);

/// Relative norm of the part of f whose samples fall outside the grid after
/// the shift (what shifted_profile silently drops).
double shift_norm_loss(const Profile& f, const Grid& grid, double shift);

/// Smooth normalized test state: per mode a Gaussian bump with random
/// center, width and low-order polynomial modulation. Deterministic in rng.
WaveFunction random_state(double q, ModeWindow window, const Grid& grid,
                          std::mt19937_64& rng);

}  // namespace cylandau
