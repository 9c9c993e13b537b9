#include "cylandau/config.hpp"

namespace cylandau {

CylinderConfig make_config(double B, double R, double q, double rho,
                           double hbar, double e, double m) {
  if (!(B > 0.0)) throw NonPositiveParameter("field strength B must be positive");
  if (!(R > 0.0)) throw NonPositiveParameter("radius R must be positive");
  if (!(hbar > 0.0)) throw NonPositiveParameter("hbar must be positive");
  if (!(e > 0.0)) throw NonPositiveParameter("charge e must be positive");
  if (!(m > 0.0)) throw NonPositiveParameter("mass m must be positive");

  CylinderConfig config;
  config.B = B;
  config.R = R;
  config.q = q - std::floor(q);
  config.rho = rho;
  config.hbar = hbar;
  config.e = e;
  config.m = m;
  return config;
}

double translation_step(const CylinderConfig& config) {
  return 1.0 / config.mu();
}

double physical_step_size(const PhysicalInput& input) {
  if (!(input.B_gauss > 0.0))
    throw NonPositiveParameter("B_gauss must be positive");
  if (!(input.R_cm > 0.0))
    throw NonPositiveParameter("R_cm must be positive");

  // CODATA 2018, Gaussian units.
  constexpr double hbar_erg_s = 1.054571817e-27;
  constexpr double c_cm_per_s = 2.99792458e10;
  constexpr double e_statC = 4.80320471e-10;

  return hbar_erg_s * c_cm_per_s / (e_statC * input.B_gauss * input.R_cm);
}

}  // namespace cylandau
