#pragma once

#include <map>
#include <vector>

#include "cylandau/config.hpp"
#include "cylandau/wavefunction.hpp"

namespace cylandau::spectral {

/// Center of the mode-n Gaussian well: rho - (n + q)/mu.
double mode_center(const CylinderConfig& config, int n);

/// Restriction of the full Hamiltonian to the angular mode n:
///
///   H_n = -hbar^2/(2m) d^2/dy^2 + (eB)^2 (y - y_n)^2 / (2m)
///
/// discretized with the second-order central stencil and Dirichlet
/// boundaries, stored as a real symmetric tridiagonal matrix on the
/// interior grid points.
struct ModeHamiltonian {
  int n = 0;
  double y_center = 0.0;
  Grid grid;
  std::vector<double> diag;  // interior points, size n_points - 2
  double off = 0.0;          // constant off-diagonal value
};

/// Throws GridTooNarrow unless the grid covers y_n +- 12 sigma.
ModeHamiltonian mode_hamiltonian(const CylinderConfig& config, int n,
                                 const Grid& grid);

struct EigenSolution {
  std::vector<double> values;
  // Eigenvectors on the full grid (zeros at the Dirichlet endpoints),
  // normalized so the trapezoid integral of |v|^2 is 1.
  std::vector<std::vector<double>> vectors;
};

/// k lowest eigenpairs via LAPACK dstevr. Throws ConvergenceFailure if the
/// solver does not converge.
EigenSolution eigensolve(const ModeHamiltonian& h, int k_levels);

struct SpectrumResult {
  std::map<int, std::vector<double>> per_mode;  // n -> ascending eigenvalues
  std::vector<double> levels;                   // assembled Landau energies
  std::vector<int> degeneracy;                  // modes contributing per level
  double binning_tolerance = 0.0;
};

/// Shared grid wide enough for every mode in the window: 12 sigma beyond the
/// extreme centers.
Grid default_spectral_grid(const CylinderConfig& config, ModeWindow window,
                           int n_points = 2001);

/// Diagonalizes every mode in the window on a shared grid and assembles the
/// Landau levels with their degeneracies.
SpectrumResult spectrum(const CylinderConfig& config, ModeWindow window,
                        int k_levels, int n_points = 2001);

/// Normalized single-mode ground state with the Gaussian profile
/// (mu/(pi R))^{1/4} e^{-(mu/2R)(y - y_n)^2}. Throws GridTooNarrow.
WaveFunction analytic_ground_state(const CylinderConfig& config, int n,
                                   const Grid& grid);

/// || (Q + i P) psi || for a single-mode state, with the derivative taken by
/// central differences. Small (grid-limited) exactly on ground states.
double annihilation_residual(const CylinderConfig& config, int n,
                             const WaveFunction& psi);

/// Applies the mode Hamiltonians to every mode of the state (direct stencil,
/// Dirichlet ends).
WaveFunction apply_hamiltonian(const CylinderConfig& config,
                               const WaveFunction& psi);

/// Rayleigh quotient <psi|H|psi> / <psi|psi>.
double energy_expectation(const CylinderConfig& config, const WaveFunction& psi);

/// max over states of ||([pi_theta, pi_y] - i hbar e B R) psi|| / ||psi||
/// with pi_y discretized by central differences.
double momentum_commutator_check(const CylinderConfig& config,
                                 const std::vector<WaveFunction>& states);

/// max over states of || i[H, y] psi - (pi_y / m) psi || / ||psi||.
double velocity_check(const CylinderConfig& config,
                      const std::vector<WaveFunction>& states);

}  // namespace cylandau::spectral
