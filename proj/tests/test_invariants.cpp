#include <doctest.h>

#include <cmath>
#include <random>

#include "densitygeom/invariants.hpp"
#include "test_helpers.hpp"

using namespace densitygeom;
using densitygeom::testing::as_vector;

namespace {

// e_k as a plain sum over k-subsets; exponential but independent of the
// incremental expansion.
double subset_sum(const std::vector<double>& x, int k) {
  const int n = static_cast<int>(x.size());
  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    double prod = 1.0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) prod *= x[static_cast<std::size_t>(i)];
    total += prod;
  }
  return total;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Discriminant of t^3 - t^2 + I2 t - I3; nonnegative iff all roots are real.
double cubic_discriminant(const CasimirSet& c) {
  const double a = 1.0, b = -1.0, cc = c.I(2), d = -c.I(3);
  return 18 * a * b * cc * d - 4 * b * b * b * d + b * b * cc * cc - 4 * a * cc * cc * cc -
         27 * a * a * d * d;
}

}  // namespace

TEST_CASE("elementary_symmetric agrees with subset sums") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 1; n <= 8; ++n) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = u(rng);
    const auto e = elementary_symmetric(x);
    REQUIRE(e.size() == x.size() + 1);
    CHECK(e[0] == 1.0);
    for (int k = 1; k <= n; ++k) CHECK(std::abs(e[static_cast<std::size_t>(k)] - subset_sum(x, k)) < 1e-13);
  }
}

TEST_CASE("Newton identities invert power sums") {
  const std::vector<double> x{0.5, -0.25, 2.0, 1.5};
  std::vector<double> p(x.size());
  for (std::size_t k = 1; k <= x.size(); ++k) {
    for (double v : x) p[k - 1] += std::pow(v, static_cast<double>(k));
  }
  const auto e = newton_power_sums_to_elementary(p);
  const auto ref = elementary_symmetric(x);
  for (std::size_t k = 0; k < e.size(); ++k) CHECK(std::abs(e[k] - ref[k]) < 1e-12);
}

TEST_CASE("casimirs_from_spectrum examples") {
  SUBCASE("N = 3 centre: I2 = 1/3, I3 = 1/27") {
    const CasimirSet c = casimirs_from_spectrum(Spectrum({1.0 / 3, 1.0 / 3, 1.0 / 3}));
    CHECK(std::abs(c.I(1) - 1.0) < 1e-15);
    CHECK(std::abs(c.I(2) - 1.0 / 3) < 1e-15);
    CHECK(std::abs(c.I(3) - 1.0 / 27) < 1e-15);
  }
  SUBCASE("N = 3 pure state") {
    const CasimirSet c = casimirs_from_spectrum(Spectrum({1, 0, 0}));
    CHECK(c.I(2) == 0.0);
    CHECK(c.I(3) == 0.0);
  }
  SUBCASE("N = 3 edge midpoint") {
    const CasimirSet c = casimirs_from_spectrum(Spectrum({0.5, 0.5, 0}));
    CHECK(std::abs(c.I(2) - 0.25) < 1e-15);
    CHECK(c.I(3) == 0.0);
  }
  SUBCASE("maximally mixed closed form C(N,j)/N^j") {
    for (int n = 1; n <= 8; ++n) {
      const CasimirSet c = casimirs_from_spectrum(Spectrum(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n)));
      for (int j = 1; j <= n; ++j) {
        CAPTURE(n);
        CAPTURE(j);
        CHECK(std::abs(c.I(j) - binomial(n, j) / std::pow(n, j)) < 1e-12);
      }
    }
  }
}

TEST_CASE("casimirs_from_traces examples") {
  std::mt19937_64 rng(2);
  SUBCASE("I2 and I3 trace formulas") {
    for (int n = 3; n <= 6; ++n) {
      const DensityMatrix rho = random_density_matrix(n, 40u + n);
      const ComplexMatrix& m = rho.matrix();
      const double t1 = m.trace().real();
      const double t2 = (m * m).trace().real();
      const double t3 = (m * m * m).trace().real();
      const CasimirSet c = casimirs_from_traces(rho);
      CHECK(std::abs(c.I(2) - 0.5 * (t1 * t1 - t2)) < 1e-14);
      CHECK(std::abs(c.I(3) - (t1 * t1 * t1 + 2 * t3 - 3 * t1 * t2) / 6.0) < 1e-14);
    }
  }
  SUBCASE("N = 2: I2 = x(1-x), at most 1/4") {
    for (double x : {0.0, 0.1, 0.5, 0.8, 1.0}) {
      const CasimirSet c = casimirs_from_traces(DensityMatrix::diagonal(as_vector({x, 1 - x})));
      CHECK(std::abs(c.I(2) - x * (1 - x)) < 1e-15);
      CHECK(c.I(2) <= 0.25 + 1e-15);
    }
  }
}

TEST_CASE("property: trace route equals eigenvalue route") {
  for (int n = 2; n <= 6; ++n) {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const DensityMatrix rho = random_density_matrix(n, seed);
      const CasimirSet a = casimirs_from_traces(rho);
      const CasimirSet b = casimirs_from_spectrum(spectrum_of(rho));
      for (int k = 1; k <= n; ++k) worst = std::max(worst, std::abs(a.I(k) - b.I(k)));
    }
    CAPTURE(n);
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("property: Casimirs are nonnegative and I2 vanishes exactly on pure states") {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const DensityMatrix mixed = random_density_matrix(n, seed);
      const CasimirSet c = casimirs_from_spectrum(spectrum_of(mixed));
      for (double v : c.values) CHECK(v >= -1e-12);
      CHECK(c.I(2) > 1e-9);
      CHECK_FALSE(is_pure(mixed));

      const DensityMatrix pure = random_pure_state(n, seed);
      CHECK(std::abs(casimirs_from_traces(pure).I(2)) < 1e-12);
      CHECK(is_pure(pure));
    }
  }
}

TEST_CASE("property: Casimirs are conjugation invariant") {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const DensityMatrix rho = random_density_matrix(n, seed);
      const DensityMatrix out = conjugate(rho, random_unitary(n, rng));
      const CasimirSet a = casimirs_from_traces(rho);
      const CasimirSet b = casimirs_from_traces(out);
      for (int k = 1; k <= n; ++k) CHECK(std::abs(a.I(k) - b.I(k)) < 1e-10);
    }
  }
}

TEST_CASE("characteristic_residual") {
  SUBCASE("random states") {
    for (int n = 2; n <= 6; ++n) {
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const DensityMatrix rho = random_density_matrix(n, seed);
        CHECK(characteristic_residual(rho, casimirs_from_traces(rho)) < 1e-9);
      }
    }
  }
  SUBCASE("maximally mixed N = 4") {
    const DensityMatrix rho = DensityMatrix::maximally_mixed(4);
    CHECK(characteristic_residual(rho, casimirs_from_spectrum(spectrum_of(rho))) < 1e-12);
  }
  SUBCASE("pure projector") {
    for (int n = 2; n <= 6; ++n) {
      const DensityMatrix rho = random_pure_state(n, 3);
      CHECK(characteristic_residual(rho, casimirs_from_traces(rho)) < 1e-12);
    }
  }
  SUBCASE("wrong Casimir set is detected") {
    const DensityMatrix rho = random_density_matrix(3, 1);
    CasimirSet c = casimirs_from_traces(rho);
    c.values[1] += 0.1;
    CHECK(characteristic_residual(rho, c) > 1e-3);
    CHECK_THROWS_AS(characteristic_residual(rho, casimirs_from_traces(random_density_matrix(4, 1))),
                    std::invalid_argument);
  }
}

TEST_CASE("boundary_vanishing examples") {
  SUBCASE("face centre") {
    const Spectrum s({1.0 / 3, 1.0 / 3, 1.0 / 3, 0});
    const BoundaryStatus b = boundary_vanishing(s);
    CHECK(b.is_boundary);
    CHECK_FALSE(b.is_edge);
    const CasimirSet c = casimirs_from_spectrum(s);
    CHECK(c.I(4) == 0.0);
    CHECK(std::abs(c.I(3) - 1.0 / 27) < 1e-15);
  }
  SUBCASE("edge midpoint") {
    const Spectrum s({0.5, 0.5, 0, 0});
    const BoundaryStatus b = boundary_vanishing(s);
    CHECK(b.is_boundary);
    CHECK(b.is_edge);
    const CasimirSet c = casimirs_from_spectrum(s);
    CHECK(c.I(3) == 0.0);
    CHECK(c.I(4) == 0.0);
  }
  SUBCASE("centre") {
    for (int n = 2; n <= 8; ++n) {
      const Spectrum s(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
      const BoundaryStatus b = boundary_vanishing(s);
      CHECK_FALSE(b.is_boundary);
      CHECK_FALSE(b.is_edge);
      CHECK(std::abs(casimirs_from_spectrum(s).I(n) - std::pow(n, -n)) < 1e-15);
    }
  }
}

TEST_CASE("property: boundary flags agree with vanishing Casimirs on special points") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& [name, s] : special_points(n)) {
      CAPTURE(n);
      CAPTURE(name);
      const BoundaryStatus b = boundary_vanishing(s);
      const CasimirSet c = casimirs_from_spectrum(s);
      CHECK(b.is_boundary == (std::abs(c.I(n)) < 1e-12));
      CHECK(b.is_edge == (std::abs(c.I(n)) < 1e-12 && std::abs(c.I(n - 1)) < 1e-12));
    }
  }
}

TEST_CASE("N = 3 cubic has real roots: discriminant is nonnegative") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CasimirSet c = casimirs_from_traces(random_density_matrix(3, seed));
    CHECK(cubic_discriminant(c) >= -1e-12);
  }
  // (I2, I3) pairs not coming from a real spectrum violate it
  CasimirSet fake{3, {1.0, 0.34, 0.05}};
  CHECK(cubic_discriminant(fake) < 0.0);
}
