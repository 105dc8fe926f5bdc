#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bergman/conformal.hpp"
#include "bergman/errors.hpp"
#include "bergman/hankel.hpp"
#include "bergman/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using bergman::Complex;
using bergman::PowerSeries;
using bergman::WeightParam;

namespace {

constexpr double kPi = std::numbers::pi;
const PowerSeries kCardioid({0.0, 2.0, 1.0});  // F(z) = 2z + z^2

PowerSeries mobius_map(Complex a, int order) {
  std::vector<Complex> c(static_cast<size_t>(order) + 1);
  c[0] = a;
  const double s = 1.0 - std::norm(a);
  Complex p = 1.0;
  for (int j = 1; j <= order; ++j) {
    c[static_cast<size_t>(j)] = -s * p;
    p *= std::conj(a);
  }
  return PowerSeries(std::move(c));
}

}  // namespace

TEST_CASE("area: coefficient identity") {
  CHECK(bergman::area(PowerSeries::monomial(1)) == kPi);
  CHECK(bergman::area(kCardioid) == doctest::Approx(6.0 * kPi).epsilon(1e-15));
  CHECK(bergman::area(PowerSeries({0.0, 1.7})) ==
        doctest::Approx(kPi * 1.7 * 1.7).epsilon(1e-15));
  CHECK_THROWS_AS(bergman::area(PowerSeries({1.0})), std::invalid_argument);
  CHECK_THROWS_AS(bergman::area(PowerSeries({0.0, 0.0, 1.0})), std::invalid_argument);
}

TEST_CASE("perimeter: trapezoid boundary length") {
  CHECK(std::abs(bergman::perimeter(PowerSeries::monomial(1)) - 2.0 * kPi) < 1e-10);
  CHECK(std::abs(bergman::perimeter(PowerSeries({0.0, 1.7})) - 2.0 * kPi * 1.7) < 1e-9);
  // boundary corner (F'(-1) = 0): second-order convergence still leaves
  // plenty of headroom at the default sampling
  CHECK(std::abs(bergman::perimeter(kCardioid, 4096) - 16.0) < 1e-4 * 16.0);
  CHECK_THROWS_AS(bergman::perimeter(PowerSeries::monomial(1), 15), std::invalid_argument);
}

TEST_CASE("ConformalDomain caches the free-function values") {
  const bergman::ConformalDomain d(kCardioid, 1024);
  CHECK(d.area() == bergman::area(kCardioid));
  CHECK(d.perimeter() == bergman::perimeter(kCardioid, 1024));
  CHECK(d.samples() == 1024);
  REQUIRE(d.boundary().size() == 1024);
  CHECK(std::abs(d.boundary()[0] - Complex(3.0, 0.0)) < 1e-14);  // F(1) = 3
  CHECK(d.map().coeff(1) == Complex(2.0));
  CHECK_THROWS_AS(bergman::ConformalDomain(PowerSeries({0.0, 0.0, 1.0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(bergman::ConformalDomain(kCardioid, 8), std::invalid_argument);
}

TEST_CASE("isoperimetric inequality holds for univalent samples") {
  std::mt19937 rng(47u);
  for (int trial = 0; trial < 6; ++trial) {
    const PowerSeries F = oracles::random_univalent(rng, 2 + trial % 5);
    const double per = bergman::perimeter(F, 2048);
    const double ar = bergman::area(F);
    CHECK(per * per >= 4.0 * kPi * ar * (1.0 - 1e-9));
  }
}

TEST_CASE("transport_symbol: polynomial composition, recentred") {
  SUBCASE("identity map is a fixed point") {
    const PowerSeries t = bergman::transport_symbol(PowerSeries::monomial(1),
                                                    PowerSeries::monomial(1));
    REQUIRE(t.order() == 1);
    CHECK(t.coeff(0) == Complex(0.0));
    CHECK(t.coeff(1) == Complex(1.0));
  }
  SUBCASE("coordinate symbol reproduces the map exactly") {
    const PowerSeries t = bergman::transport_symbol(PowerSeries::monomial(1), kCardioid);
    REQUIRE(t.order() == 2);
    CHECK(t.coeff(0) == Complex(0.0));
    CHECK(t.coeff(1) == kCardioid.coeff(1));
    CHECK(t.coeff(2) == kCardioid.coeff(2));
  }
  SUBCASE("square of a quadratic map") {
    const PowerSeries t =
        bergman::transport_symbol(PowerSeries::monomial(2), PowerSeries({0.0, 1.0, 1.0}));
    REQUIRE(t.order() == 4);
    const std::vector<Complex> want{0.0, 0.0, 1.0, 2.0, 1.0};
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(t.coeff(k) - want[static_cast<size_t>(k)]) == 0.0);
  }
  SUBCASE("constant symbols collapse to zero") {
    const PowerSeries t = bergman::transport_symbol(PowerSeries({Complex(3.0, 1.0)}), kCardioid);
    CHECK(t.order() == 0);
    CHECK(t.coeff(0) == Complex(0.0));
  }
  SUBCASE("off-centre maps are recentred") {
    const PowerSeries t =
        bergman::transport_symbol(PowerSeries::monomial(1), PowerSeries({5.0, 1.0}));
    CHECK(t.coeff(0) == Complex(0.0));
    CHECK(t.coeff(1) == Complex(1.0));
  }
}

TEST_CASE("transport_function: unitary change of variables") {
  const PowerSeries one = PowerSeries::monomial(0);
  SUBCASE("identity map leaves constants alone") {
    const PowerSeries g = bergman::transport_function(one, PowerSeries::monomial(1),
                                                      WeightParam(0.7));
    CHECK(g.order() == 0);
    CHECK(std::abs(g.coeff(0) - Complex(1.0)) == 0.0);
  }
  SUBCASE("boundary weight takes the square root of the derivative") {
    const PowerSeries g = bergman::transport_function(one, kCardioid, WeightParam(-1.0), 3);
    const double r2 = std::sqrt(2.0);
    const std::vector<double> want{r2, r2 / 2.0, -r2 / 8.0, r2 / 16.0};
    REQUIRE(g.order() == 3);
    for (int k = 0; k <= 3; ++k)
      CHECK(std::abs(g.coeff(k) - Complex(want[static_cast<size_t>(k)])) < 1e-14);
  }
  SUBCASE("plain weight multiplies by the derivative") {
    const PowerSeries g = bergman::transport_function(one, kCardioid, WeightParam(0.0));
    REQUIRE(g.order() == 1);
    CHECK(std::abs(g.coeff(0) - Complex(2.0)) < 1e-15);
    CHECK(std::abs(g.coeff(1) - Complex(2.0)) < 1e-15);
  }
  SUBCASE("coordinate function composes with the recentred map") {
    const PowerSeries g = bergman::transport_function(PowerSeries::monomial(1), kCardioid,
                                                      WeightParam(0.0), 4);
    const std::vector<double> want{0.0, 4.0, 6.0, 2.0, 0.0};  // (2+2z)(2z+z^2)
    REQUIRE(g.order() == 4);
    for (int k = 0; k <= 4; ++k)
      CHECK(std::abs(g.coeff(k) - Complex(want[static_cast<size_t>(k)])) < 1e-13);
  }
}

TEST_CASE("norm_sq_of_one: frozen values") {
  CHECK(bergman::norm_sq_of_one(PowerSeries::monomial(1), WeightParam(1.3)) == 1.0);
  CHECK(std::abs(bergman::norm_sq_of_one(kCardioid, WeightParam(0.0)) - 6.0) < 1e-12);
  // corner map: the square-root series tail converges like n^-3, so only
  // single-precision-ish agreement is attainable at the working order
  CHECK(std::abs(bergman::norm_sq_of_one(kCardioid, WeightParam(-1.0)) - 8.0 / kPi) <
        1e-6 * (8.0 / kPi));
}

TEST_CASE("norm_sq_of_one: scaling covariance") {
  const double R = 1.7;
  const PowerSeries scaled({0.0, 2.0 * R, R});
  for (double a : {-1.0, 0.0, 1.3}) {
    const double lhs = bergman::norm_sq_of_one(scaled, WeightParam(a));
    const double rhs = std::pow(R, 2.0 + a) * bergman::norm_sq_of_one(kCardioid, WeightParam(a));
    CHECK(std::abs(lhs - rhs) < 1e-10 * rhs);
  }
}

TEST_CASE("boundary weight: transported norm equals perimeter / 2 pi") {
  std::mt19937 rng(53u);
  for (int trial = 0; trial < 6; ++trial) {
    const PowerSeries F = oracles::random_univalent(rng, 2 + trial);
    const double lhs = bergman::norm_sq_of_one(F, WeightParam(-1.0));
    const double rhs = bergman::perimeter(F, 4096) / (2.0 * kPi);
    CHECK(std::abs(lhs - rhs) <= 1e-8 * rhs);
  }
}

TEST_CASE("disk automorphisms leave the coordinate-symbol norm fixed") {
  const std::vector<Complex> centres{Complex(0.3, 0.0), Complex(0.0, 0.5), Complex(-0.4, 0.2)};
  for (const Complex& a : centres) {
    const PowerSeries F = mobius_map(a, 48);
    const PowerSeries psi = bergman::transport_symbol(PowerSeries::monomial(1), F);
    for (double al : {-1.0, 0.0, 1.0}) {
      const double got =
          bergman::operator_norm_sq(bergman::build_form(psi, WeightParam(al), 48));
      const double want = 1.0 / (2.0 + al);
      CHECK(std::abs(got - want) < 1e-5 * want);
    }
  }
}

TEST_CASE("transported_one tail check flags undecayed expansions") {
  // At order 8 the cardioid square-root series is nowhere near decayed.
  CHECK_THROWS_AS(bergman::detail::transported_one(kCardioid, WeightParam(-1.0), 8, true),
                  bergman::NonConvergenceError);
  CHECK_NOTHROW(bergman::detail::transported_one(kCardioid, WeightParam(-1.0), 8, false));
}

TEST_CASE("coefficient and polygon files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path coeff = dir / "bergman_test_coeffs.txt";
  const fs::path bad = dir / "bergman_test_bad.txt";
  const fs::path poly = dir / "bergman_test_poly.txt";

  SUBCASE("round trip with comments and blank lines") {
    std::ofstream(coeff) << "# a map\n\n0 0\n2.5 -1.0   # linear term\n\t0 3\n";
    const PowerSeries F = bergman::read_coefficient_file(coeff.string());
    REQUIRE(F.order() == 2);
    CHECK(F.coeff(0) == Complex(0.0));
    CHECK(F.coeff(1) == Complex(2.5, -1.0));
    CHECK(F.coeff(2) == Complex(0.0, 3.0));
  }
  SUBCASE("malformed lines are rejected with the line number") {
    std::ofstream(bad) << "0 0\n1 2 3\n";
    CHECK_THROWS_WITH_AS(bergman::read_coefficient_file(bad.string()),
                         doctest::Contains("line 2"), std::invalid_argument);
    std::ofstream(bad) << "0 0\nnope 1\n";
    CHECK_THROWS_AS(bergman::read_coefficient_file(bad.string()), std::invalid_argument);
    std::ofstream(bad) << "1\n";
    CHECK_THROWS_AS(bergman::read_coefficient_file(bad.string()), std::invalid_argument);
    std::ofstream(bad) << "# only a comment\n";
    CHECK_THROWS_AS(bergman::read_coefficient_file(bad.string()), std::invalid_argument);
  }
  SUBCASE("polygons need three vertices") {
    std::ofstream(poly) << "0 0\n1 0\n1 1\n0 1\n";
    const std::vector<Complex> sq = bergman::read_polygon_file(poly.string());
    REQUIRE(sq.size() == 4);
    CHECK(sq[2] == Complex(1.0, 1.0));
    std::ofstream(poly) << "0 0\n1 0\n";
    CHECK_THROWS_AS(bergman::read_polygon_file(poly.string()), std::invalid_argument);
  }
  SUBCASE("missing files") {
    CHECK_THROWS_AS(bergman::read_coefficient_file((dir / "bergman_no_such.txt").string()),
                    std::invalid_argument);
  }
  fs::remove(coeff);
  fs::remove(bad);
  fs::remove(poly);
}
