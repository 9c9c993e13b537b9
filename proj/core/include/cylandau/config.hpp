#pragma once

#include <cmath>

#include "cylandau/errors.hpp"

namespace cylandau {

/// Geometry, field and constants for a charged particle on an infinite
/// cylinder with a uniform radial magnetic field.
///
/// The library works in the dimensionless default units hbar = e = m = 1
/// with lengths measured in units of R; physical_step_size() is the single
/// entry point that uses physical (Gaussian) units.
struct CylinderConfig {
  double B = 1.0;     // radial field strength
  double R = 1.0;     // cylinder radius
  double q = 0.0;     // quasi-periodicity parameter, canonical in [0, 1)
  double rho = 0.0;   // gauge-class label (a length; any real accepted)
  double hbar = 1.0;
  double e = 1.0;
  double m = 1.0;

  // Flux per unit axial length in flux quanta. Always recomputed from the
  // stored fields, never cached, so it cannot drift out of sync.
  double mu() const { return e * B * R / hbar; }

  // Width of the ground-state Gaussian profiles.
  double sigma() const { return std::sqrt(R / mu()); }

  // N-th Landau level in the stored unit system. Equals (eB/m)(N + 1/2)
  // in the default hbar = 1 units.
  double landau_level(int N) const { return hbar * e * B / m * (N + 0.5); }
};

/// Validates positivity, canonicalizes q into [0, 1).
/// Throws NonPositiveParameter if B, R, hbar, e or m is not positive.
CylinderConfig make_config(double B, double R, double q = 0.0, double rho = 0.0,
                           double hbar = 1.0, double e = 1.0, double m = 1.0);

/// The admissible axial translation step, mu^{-1}, in the config's length
/// units.
double translation_step(const CylinderConfig& config);

/// Field and radius in Gaussian units for the physical step-size estimate.
struct PhysicalInput {
  double B_gauss;
  double R_cm;
};

/// Axial step size hbar*c/(e*B*R) in centimeters, using CODATA constants.
/// Throws NonPositiveParameter unless both inputs are positive.
double physical_step_size(const PhysicalInput& input);

}  // namespace cylandau
