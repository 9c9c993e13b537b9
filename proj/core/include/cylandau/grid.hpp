#pragma once

#include "cylandau/errors.hpp"

namespace cylandau {

/// Uniform grid along the cylinder axis.
struct Grid {
  double y_min = 0.0;
  double y_max = 1.0;
  int n_points = 2;

  double spacing() const { return (y_max - y_min) / (n_points - 1); }
  double point(int i) const { return y_min + i * spacing(); }
  // Trapezoid quadrature weight of node i.
  double weight(int i) const {
    return (i == 0 || i == n_points - 1) ? 0.5 * spacing() : spacing();
  }

  bool operator==(const Grid&) const = default;
};

/// Uniform grid spanning [center - half_width, center + half_width].
/// Throws TooFewPoints for n_points < 3, NonPositiveParameter for
/// non-positive half_width.
Grid make_grid(double center, double half_width, int n_points);

}  // namespace cylandau
