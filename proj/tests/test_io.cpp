#include <doctest.h>

#include <sstream>

#include "cylandau/io.hpp"
#include "cylandau/spectral.hpp"

using namespace cylandau;

TEST_CASE("config parsing with defaults") {
  const auto config = io::parse_config("{}");
  CHECK(config.B == 1.0);
  CHECK(config.R == 1.0);
  CHECK(config.q == 0.0);
  CHECK(config.rho == 0.0);
  CHECK(config.hbar == 1.0);
  CHECK(config.e == 1.0);
  CHECK(config.m == 1.0);

  const auto custom = io::parse_config(R"({"B":3.0,"q":1.25,"rho":-0.5})");
  CHECK(custom.B == 3.0);
  CHECK(custom.q == doctest::Approx(0.25));
  CHECK(custom.rho == -0.5);
}

TEST_CASE("config parsing rejects junk") {
  CHECK_THROWS_AS(io::parse_config("not json"), IoError);
  CHECK_THROWS_AS(io::parse_config(R"({"basis":12})"), IoError);
  CHECK_THROWS_AS(io::parse_config(R"({"B":"three"})"), IoError);
  CHECK_THROWS_AS(io::parse_config(R"({"B":-1.0})"), NonPositiveParameter);
  CHECK_THROWS_AS(io::load_config("/nonexistent/config.json"), IoError);
}

TEST_CASE("config round trip") {
  const auto config = make_config(2.0, 1.5, 0.3, 0.7, 1.0, 1.0, 2.0);
  const auto back = io::parse_config(io::config_to_json(config));
  CHECK(back.B == config.B);
  CHECK(back.R == config.R);
  CHECK(back.q == config.q);
  CHECK(back.rho == config.rho);
  CHECK(back.m == config.m);
}

TEST_CASE("potential parsing") {
  const auto config = make_config(1.0, 1.0);
  const auto a = io::parse_potential(
      R"({"zeta":0.5,"lambda":[{"coeff":1.0,"frequency":1,"angular":"sin"}]})",
      config);
  CHECK(a.zeta == 0.5);
  REQUIRE(a.lambda.size() == 1);
  CHECK(a.lambda[0].angular == gauge::LambdaTerm::Angular::Sin);
  // zeta plus d(sin theta)/d theta at the origin
  CHECK(a.a_theta(0.0, 0.0) == doctest::Approx(1.5));

  CHECK_THROWS_AS(io::parse_potential(
                      R"({"lambda":[{"coeff":1.0,"frequency":0.5}]})", config),
                  NonIntegerWinding);
  CHECK_THROWS_AS(io::parse_potential(
                      R"({"lambda":[{"coeff":1.0,"angular":"tan"}]})", config),
                  IoError);
}

TEST_CASE("loop parsing") {
  const auto loop = io::parse_loop(R"({"vertices":[[0,0],[6.283185307179586,0]]})");
  CHECK(loop.winding() == 1);

  CHECK_THROWS_AS(io::parse_loop(R"({"vertices":[[0,0],[1,1]]})"), OpenLoop);
  CHECK_THROWS_AS(io::parse_loop(R"({"vertices":"nope"})"), IoError);

  const auto suite = io::parse_loop_suite(
      R"({"loops":[{"vertices":[[0,0],[6.283185307179586,0]]},
                   {"vertices":[[0,0],[1,0],[1,1],[0,1],[0,0]]}]})");
  CHECK(suite.size() == 2);
  CHECK(suite[0].winding() == 1);
  CHECK(suite[1].winding() == 0);
}

TEST_CASE("state table export") {
  const auto config = make_config(1.0, 1.0);
  const Grid grid = make_grid(0.0, 12.0, 101);
  const auto psi = spectral::analytic_ground_state(config, 0, grid);
  std::ostringstream out;
  io::write_state_table(out, psi);
  const std::string text = out.str();
  CHECK(text.rfind("n,y,re,im\n", 0) == 0);
  // one header plus one row per grid point of the single mode
  int lines = 0;
  for (const char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + grid.n_points);
}

TEST_CASE("eigenvalue table export") {
  const auto result = spectral::spectrum(make_config(1.0, 1.0), {-1, 1}, 2, 801);
  std::ostringstream out;
  io::write_eigenvalue_table(out, result);
  const std::string text = out.str();
  CHECK(text.rfind("mode,level,energy\n", 0) == 0);
  int lines = 0;
  for (const char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + 3 * 2);
}
