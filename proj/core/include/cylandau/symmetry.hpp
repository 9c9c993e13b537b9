#pragma once

#include <vector>

#include "cylandau/config.hpp"
#include "cylandau/wavefunction.hpp"

namespace cylandau::symmetry {

/// A symmetry of the cylinder Hamiltonian: a rotation by phi, or an axial
/// shift by an integer number of steps mu^{-1}. Arbitrary-length shifts
/// never construct this type; use axial_shift_from_length to gate them.
struct SymmetryOp {
  enum class Kind { Rotation, AxialShift };
  Kind kind = Kind::Rotation;
  double phi = 0.0;  // Rotation only
  int k = 0;         // AxialShift only

  static SymmetryOp rotation(double phi) {
    return {Kind::Rotation, phi, 0};
  }
  static SymmetryOp axial_shift(int k) {
    return {Kind::AxialShift, 0.0, k};
  }
};

/// Admissibility gate: accepts a shift of length a only when a*mu is an
/// integer (tolerance 1e-9), otherwise throws NonAdmissibleTranslation.
SymmetryOp axial_shift_from_length(const CylinderConfig& config, double a);

/// The unique rotation-generator constant that makes a full turn act as the
/// identity: hbar (mu rho - q).
double c_theta(const CylinderConfig& config);

/// The axial constant is free; fixed to zero.
constexpr double c_y() { return 0.0; }

/// |e^{2 pi i a mu} - 1|: the single-valuedness mismatch of the would-be
/// axial multiplier at theta vs theta + 2 pi. Zero exactly on admissible
/// shifts.
double axial_phase_mismatch(const CylinderConfig& config, double a);

/// Rotation by phi: mode n is multiplied by e^{i n phi}. Norm preserving.
WaveFunction apply_rotation(const CylinderConfig& config, double phi,
                            const WaveFunction& psi);

/// Axial shift by k mu^{-1}: mode n is relabeled to n + k with its profile
/// shifted by k mu^{-1}; q is unchanged. Throws GridOverflow when the
/// shifted support leaves the grid.
WaveFunction apply_axial_shift(const CylinderConfig& config, int k,
                               const WaveFunction& psi);

WaveFunction apply(const CylinderConfig& config, const SymmetryOp& op,
                   const WaveFunction& psi);

/// || U(phi) V(k) psi - e^{i k phi} V(k) U(phi) psi || for a normalized psi.
double projective_phase_deviation(const CylinderConfig& config, double phi,
                                  int k, const WaveFunction& psi);

/// max over states of ||(Op H - H Op) psi|| / ||psi||.
double commutation_residual(const CylinderConfig& config, const SymmetryOp& op,
                            const std::vector<WaveFunction>& states);

/// Normalized truncation of sum_n e^{i n xi} (ground state n) over the
/// window. Throws WindowTooSmall below 8 modes, GridTooNarrow if the grid
/// cannot hold every mode.
WaveFunction fourier_eigenstate(const CylinderConfig& config, double xi,
                                ModeWindow window, const Grid& grid);

struct RedundancyEntry {
  int n_base = 0;      // mode index at (rho, q)
  int n_shifted = 0;   // matching index at (rho + steps/mu, q)
  double center_base = 0.0;
  double center_shifted = 0.0;
  double overlap = 0.0;  // |<profile_shifted, profile_base>|
};

struct RedundancyReport {
  int steps = 0;
  double min_overlap = 1.0;
  bool pass = false;
  std::vector<RedundancyEntry> entries;
};

/// Shifting the gauge label by steps*mu^{-1} relabels the ground states:
/// the y-profile of mode n at (rho, q) reappears as mode n + steps at
/// (rho + steps mu^{-1}, q). Verified pairwise on the window overlap.
RedundancyReport rho_q_redundancy_check(const CylinderConfig& config,
                                        const Grid& grid, ModeWindow window,
                                        int steps = 1);

}  // namespace cylandau::symmetry
