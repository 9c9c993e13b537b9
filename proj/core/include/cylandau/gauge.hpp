#pragma once

#include <array>
#include <complex>
#include <vector>

#include "cylandau/config.hpp"

namespace cylandau::gauge {

/// One term of the single-valued gauge function
///
///   Lambda(theta, y) = sum_k  c_k * trig(j_k theta) * (y - y0)^p * e^{-a (y - y0)^2}
///
/// Integer angular frequencies j_k keep Lambda single-valued on the
/// cylinder; the y-factor (polynomial times Gaussian, a >= 0) keeps it
/// bounded.
struct LambdaTerm {
  double coeff = 0.0;
  double frequency = 0.0;  // validated to be integral
  enum class Angular { Cos, Sin };
  Angular angular = Angular::Cos;
  int poly_degree = 0;
  double gauss_width = 0.0;  // exponent coefficient a
  double y_offset = 0.0;
};

/// Gauge potential A = (zeta - B R y) d theta + d Lambda.
/// The induced field 2-form is B R d theta ^ d y for every zeta, Lambda.
struct GaugePotential {
  CylinderConfig config;
  double zeta = 0.0;
  std::vector<LambdaTerm> lambda;

  double a_theta(double theta, double y) const;
  double a_y(double theta, double y) const;
  double lambda_value(double theta, double y) const;
};

/// Piecewise-linear closed loop in the universal cover; theta is unreduced,
/// so the winding number is read off the endpoints.
struct Loop {
  std::vector<std::array<double, 2>> vertices;  // (theta, y)

  int winding() const;
};

/// Validates closure (y_end = y_start, theta_end - theta_start in 2 pi Z).
/// Throws OpenLoop otherwise.
Loop make_loop(std::vector<std::array<double, 2>> vertices);

/// Circle of constant y traversed `winding` times (single straight segment
/// in the cover).
Loop circle_loop(double y, int winding, double theta_start = 0.0);

/// Gauge equivalence class: zeta modulo hbar/e.
struct GaugeClass {
  double zeta_mod = 0.0;  // in [0, period)
  double period = 1.0;    // hbar/e
  double B = 1.0;
  double R = 1.0;
};

/// Circular comparison of class labels; tol is relative to the period.
bool same_class(const GaugeClass& a, const GaugeClass& b, double tol = 1e-9);

/// Throws NonIntegerWinding if any Lambda frequency is not an integer.
GaugePotential make_potential(const CylinderConfig& config, double zeta,
                              std::vector<LambdaTerm> lambda);

/// A -> A + m (hbar/e) d theta + d extra. Holonomies along all loops are
/// unchanged.
GaugePotential apply_gauge_transformation(const GaugePotential& a, int m,
                                          std::vector<LambdaTerm> extra);

/// exp( i (e/hbar) * loop integral of A ), composite Simpson per segment.
std::complex<double> holonomy(const GaugePotential& a, const Loop& loop,
                              int samples_per_segment = 64);

GaugeClass classify(const GaugePotential& a);

struct LoopComparison {
  int winding = 0;
  double phase_distance = 0.0;  // |h - h'|
};

struct EquivalenceReport {
  bool equivalent = false;
  double max_phase_distance = 0.0;
  double tolerance = 0.0;
  std::vector<LoopComparison> loops;
};

/// Compares holonomies along the whole suite. The suite must contain at
/// least one winding loop (contractible loops cannot resolve zeta);
/// otherwise InsufficientLoopSuite is thrown.
EquivalenceReport holonomically_equivalent(const GaugePotential& a,
                                           const GaugePotential& b,
                                           const std::vector<Loop>& suite,
                                           int samples_per_segment = 64,
                                           double tol = 1e-8);

/// Pullback under y -> y - ell; the class label moves to zeta + B R ell.
GaugePotential translate_potential(const GaugePotential& a, double ell);

/// True iff ell * mu is an integer (tolerance 1e-9): exactly the axial
/// translations that preserve the gauge class.
bool is_symmetry_translation(const CylinderConfig& config, double ell);

/// Contractible unit square plus circles at y in {0, 0.37} with windings
/// 1 and 2.
std::vector<Loop> default_loop_suite();

}  // namespace cylandau::gauge
