#include <doctest.h>

#include <cmath>

#include "cylandau/spectral.hpp"
#include "test_support.hpp"

using namespace cylandau;
using namespace cylandau::spectral;
namespace ts = testsupport;

namespace {
const CylinderConfig kUnit = make_config(1.0, 1.0);

WaveFunction from_vector(const CylinderConfig& config, int n, const Grid& grid,
                         const std::vector<double>& v) {
  WaveFunction psi = WaveFunction::zero(config.q, {n, n}, grid);
  for (int i = 0; i < grid.n_points; ++i) psi.mode(n)[i] = v[i];
  return psi;
}
}  // namespace

TEST_CASE("mode centers follow rho - (n+q)/mu") {
  CHECK(mode_center(kUnit, 0) == doctest::Approx(0.0));
  CHECK(mode_center(kUnit, 1) == doctest::Approx(-1.0));

  const auto offset = make_config(2.0, 1.0, 0.5, 0.0);
  CHECK(mode_center(offset, 0) == doctest::Approx(-0.25));

  const auto shifted = make_config(1.0, 1.0, 0.25, 0.7);
  CHECK(mode_center(shifted, 2) == doctest::Approx(0.7 - 2.25));
}

TEST_CASE("mode Hamiltonian is the translated oscillator") {
  const Grid grid = make_grid(0.0, 14.0, 801);
  const auto h0 = mode_hamiltonian(kUnit, 0, grid);
  CHECK(h0.y_center == doctest::Approx(0.0));
  CHECK(h0.off == doctest::Approx(-1.0 / (2.0 * grid.spacing() * grid.spacing())));
  // diagonal at the well bottom is purely kinetic
  const int mid = (grid.n_points - 2) / 2;
  CHECK(h0.diag[mid] ==
        doctest::Approx(1.0 / (grid.spacing() * grid.spacing())).epsilon(1e-9));

  const Grid wide = make_grid(-0.5, 14.0, 801);
  const auto h1 = mode_hamiltonian(kUnit, 1, wide);
  CHECK(h1.y_center == doctest::Approx(-1.0));
}

TEST_CASE("grid too narrow for the requested mode") {
  const Grid grid = make_grid(0.0, 5.0, 301);  // needs 12 sigma = 12
  CHECK_THROWS_AS(mode_hamiltonian(kUnit, 0, grid), GridTooNarrow);
  CHECK_THROWS_AS(analytic_ground_state(kUnit, 0, grid), GridTooNarrow);
}

TEST_CASE("lowest eigenvalues reproduce the oscillator ladder") {
  const Grid grid = make_grid(0.0, 12.0, 2001);
  const auto solution = eigensolve(mode_hamiltonian(kUnit, 0, grid), 3);
  REQUIRE(solution.values.size() == 3);
  CHECK(std::abs(solution.values[0] - 0.5) / 0.5 <= 1e-3);
  CHECK(std::abs(solution.values[1] - 1.5) / 1.5 <= 1e-3);
  CHECK(std::abs(solution.values[2] - 2.5) / 2.5 <= 1e-3);
}

TEST_CASE("eigenvalue error shrinks ~4x when the grid is refined") {
  const Grid coarse = make_grid(0.0, 12.0, 1001);
  const Grid fine = make_grid(0.0, 12.0, 2001);
  const double coarse_err =
      std::abs(eigensolve(mode_hamiltonian(kUnit, 0, coarse), 1).values[0] - 0.5);
  const double fine_err =
      std::abs(eigensolve(mode_hamiltonian(kUnit, 0, fine), 1).values[0] - 0.5);
  const double ratio = coarse_err / fine_err;
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("eigenvectors are orthonormal under the grid quadrature") {
  const Grid grid = make_grid(0.0, 12.0, 1201);
  const auto h = mode_hamiltonian(kUnit, 0, grid);
  const auto solution = eigensolve(h, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double dot = 0.0;
      for (int i = 0; i < grid.n_points; ++i)
        dot += grid.weight(i) * solution.vectors[a][i] * solution.vectors[b][i];
      CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) <= 1e-8);
    }
}

TEST_CASE("eigensolve input validation") {
  const Grid grid = make_grid(0.0, 12.0, 301);
  const auto h = mode_hamiltonian(kUnit, 0, grid);
  CHECK_THROWS_AS(eigensolve(h, 0), NonPositiveParameter);
  CHECK_THROWS_AS(eigensolve(h, 300), NonPositiveParameter);
}

TEST_CASE("spectrum: flat Landau levels with full degeneracy") {
  const auto result = spectrum(kUnit, {-3, 3}, 4, 1201);
  REQUIRE(result.levels.size() == 4);
  for (int level = 0; level < 4; ++level) {
    CHECK(result.degeneracy[level] == 7);
    CHECK(std::abs(result.levels[level] - (level + 0.5)) / (level + 0.5) <= 1e-3);
  }
  // per-mode eigenvalues agree across the window
  for (int level = 0; level < 4; ++level) {
    const double reference = result.per_mode.at(0)[level];
    for (const auto& [n, values] : result.per_mode)
      CHECK(std::abs(values[level] - reference) / reference <= 1e-6);
  }
}

TEST_CASE("level spacing: regression of E_N against N") {
  // slope e B / m, intercept e B / (2 m)
  for (const double b : {1.0, 2.0}) {
    const auto config = make_config(b, 1.0);
    const auto result = spectrum(config, {-1, 1}, 4, 1601);
    double sum_n = 0.0, sum_e = 0.0, sum_nn = 0.0, sum_ne = 0.0;
    const int count = static_cast<int>(result.levels.size());
    for (int level = 0; level < count; ++level) {
      sum_n += level;
      sum_e += result.levels[level];
      sum_nn += double(level) * level;
      sum_ne += level * result.levels[level];
    }
    const double slope =
        (count * sum_ne - sum_n * sum_e) / (count * sum_nn - sum_n * sum_n);
    const double intercept = (sum_e - slope * sum_n) / count;
    CHECK(std::abs(slope - b) <= 1e-3);
    CHECK(std::abs(intercept - 0.5 * b) <= 1e-3);
  }
}

TEST_CASE("spectrum is independent of rho and q") {
  const auto base = spectrum(kUnit, {-1, 1}, 3, 1201);
  const auto moved = spectrum(make_config(1.0, 1.0, 0.0, 1.7), {-1, 1}, 3, 1201);
  const auto twisted = spectrum(make_config(1.0, 1.0, 0.65, 0.0), {-1, 1}, 3, 1201);
  for (int level = 0; level < 3; ++level) {
    CHECK(std::abs(moved.levels[level] - base.levels[level]) /
              base.levels[level] <= 1e-6);
    CHECK(std::abs(twisted.levels[level] - base.levels[level]) /
              base.levels[level] <= 1e-6);
  }
}

TEST_CASE("analytic ground state matches the numeric ground state") {
  for (const auto& config :
       {kUnit, make_config(1.0, 1.0, 0.25, 0.4), make_config(3.0, 1.0, 0.7, -0.2)}) {
    for (int n = -1; n <= 1; ++n) {
      const Grid grid = make_grid(mode_center(config, n), 13.0, 1501);
      const auto analytic = analytic_ground_state(config, n, grid);
      CHECK(std::abs(norm(analytic) - 1.0) <= 1e-6);

      const auto numeric = eigensolve(mode_hamiltonian(config, n, grid), 1);
      const auto numeric_state = from_vector(config, n, grid, numeric.vectors[0]);
      const double overlap = std::abs(inner_product(analytic, numeric_state));
      CHECK(overlap >= 1.0 - 1e-6);
    }
  }
}

TEST_CASE("ground states of different modes are orthogonal") {
  const auto config = make_config(1.0, 1.0, 0.25, 0.0);
  const Grid grid = default_spectral_grid(config, {-1, 1}, 1201);
  const auto a = analytic_ground_state(config, 0, grid);
  const auto b = analytic_ground_state(config, 1, grid);
  CHECK(inner_product(a, b) == Complex{0.0, 0.0});
}

TEST_CASE("ground-state peak sits at rho - q/mu") {
  const auto config = make_config(2.0, 1.0, 0.3, 0.5);
  const Grid grid = make_grid(mode_center(config, 0), 12.0, 2001);
  const auto psi = analytic_ground_state(config, 0, grid);
  int peak = 0;
  for (int i = 0; i < grid.n_points; ++i)
    if (std::abs(psi.mode(0)[i]) > std::abs(psi.mode(0)[peak])) peak = i;
  const double expected = config.rho - config.q / config.mu();
  CHECK(std::abs(grid.point(peak) - expected) <= grid.spacing());
}

TEST_CASE("annihilation residual") {
  const Grid grid = make_grid(0.0, 12.0, 2001);

  const auto ground = analytic_ground_state(kUnit, 0, grid);
  CHECK(annihilation_residual(kUnit, 0, ground) <= 1e-3);

  // first excited state: ladder algebra gives || (Q+iP) psi_1 || = sqrt(2)
  const auto solution = eigensolve(mode_hamiltonian(kUnit, 0, grid), 2);
  const auto excited = from_vector(kUnit, 0, grid, solution.vectors[1]);
  CHECK(annihilation_residual(kUnit, 0, excited) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-2));

  const auto zero = WaveFunction::zero(0.0, {0, 0}, grid);
  CHECK(annihilation_residual(kUnit, 0, zero) == 0.0);
}

TEST_CASE("kinetic momentum commutator equals i hbar e B R") {
  auto gen = ts::rng(41);
  const Grid grid = make_grid(0.0, 12.0, 2001);
  std::vector<WaveFunction> states;
  states.push_back(analytic_ground_state(kUnit, 0, grid));
  states.push_back(random_state(0.0, {-1, 1}, grid, gen));

  CHECK(momentum_commutator_check(kUnit, states) <= 1e-3);

  // second-order stencil: refining the grid shrinks the deviation ~4x
  const Grid coarse = make_grid(0.0, 12.0, 1001);
  const double dev_coarse = momentum_commutator_check(
      kUnit, {analytic_ground_state(kUnit, 0, coarse)});
  const double dev_fine = momentum_commutator_check(
      kUnit, {analytic_ground_state(kUnit, 0, grid)});
  CHECK(dev_coarse / dev_fine > 3.0);
  CHECK(dev_coarse / dev_fine < 5.0);

  // doubling B doubles the target value and keeps the relative check tight
  const auto strong = make_config(2.0, 1.0);
  const Grid narrow = make_grid(0.0, 12.0 * strong.sigma(), 2001);
  CHECK(momentum_commutator_check(strong,
                                  {analytic_ground_state(strong, 0, narrow)}) <=
        2e-3);
}

TEST_CASE("velocity relation i[H, y] = pi_y / m") {
  auto gen = ts::rng(42);
  const Grid grid = make_grid(0.0, 12.0, 2001);
  std::vector<WaveFunction> states;
  states.push_back(analytic_ground_state(kUnit, 0, grid));
  states.push_back(random_state(0.0, {0, 2}, grid, gen));
  CHECK(velocity_check(kUnit, states) <= 1e-3);
}

TEST_CASE("velocity relation: y-independent profile gives zero on the interior") {
  const Grid grid = make_grid(0.0, 2.0, 101);
  Profile flat(grid.n_points, Complex{1.0, 0.0});

  // both i[H, y] f and pi_y f / m vanish when f is constant
  Profile yf(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) yf[i] = grid.point(i) * flat[i];

  const double h = grid.spacing();
  for (int i = 2; i < grid.n_points - 2; ++i) {
    const Complex d2_yf = (yf[i + 1] - 2.0 * yf[i] + yf[i - 1]) / (h * h);
    const Complex d2_f = (flat[i + 1] - 2.0 * flat[i] + flat[i - 1]) / (h * h);
    const Complex lhs = d2_yf - grid.point(i) * d2_f -
                        2.0 * (flat[i + 1] - flat[i - 1]) / (2.0 * h);
    CHECK(std::abs(lhs) <= 1e-12);
    const Complex rhs = (flat[i + 1] - flat[i - 1]) / (2.0 * h);
    CHECK(std::abs(rhs) <= 1e-12);
  }
}

TEST_CASE("energy expectation invariance across analytic states") {
  const auto config = make_config(1.0, 1.0, 0.25, 0.4);
  const Grid grid = default_spectral_grid(config, {-2, 2}, 1601);
  for (int n = -2; n <= 2; ++n) {
    const auto psi = analytic_ground_state(config, n, grid);
    CHECK(energy_expectation(config, psi) ==
          doctest::Approx(0.5).epsilon(1e-4));
  }
}
