#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "latga/hypersphere.hpp"
#include "latga/probit.hpp"
#include "latga/rng.hpp"

using namespace latga;

namespace {

// Independent standard-normal CDF oracle: Maclaurin series for erf, good to
// ~1e-15 for the |x| <= 4 range exercised here.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x2 / static_cast<double>(n);
    const double contribution = term / static_cast<double>(2 * n + 1);
    sum += contribution;
    if (std::abs(contribution) < 1e-18 * std::abs(sum)) break;
  }
  return sum * 2.0 / std::sqrt(std::numbers::pi);
}

double normal_cdf_oracle(double x) { return 0.5 * (1.0 + erf_series(x / std::sqrt(2.0))); }

// Bisection inverse of the CDF oracle.
double probit_oracle(double q) {
  double lo = -10.0, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (normal_cdf_oracle(mid) < q ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("erf series oracle matches reference values") {
  // Spot-check the oracle itself before trusting it.
  CHECK(erf_series(1.0) == doctest::Approx(0.8427007929497149).epsilon(1e-12));
  CHECK(erf_series(0.5) == doctest::Approx(0.5204998778130465).epsilon(1e-12));
  CHECK(erf_series(-2.0) == doctest::Approx(-0.9953222650189527).epsilon(1e-12));
}

TEST_CASE("probit at the median is zero") { CHECK(probit(0.5) == 0.0); }

TEST_CASE("probit matches the bisection oracle") {
  CHECK(std::abs(probit(0.975) - 1.959964) < 1e-6);
  for (double q : {0.001, 0.01, 0.1, 0.25, 0.6, 0.9, 0.99, 0.999}) {
    CAPTURE(q);
    CHECK(std::abs(probit(q) - probit_oracle(q)) < 1e-9);
  }
}

TEST_CASE("probit is odd about the median") {
  for (double q : {0.51, 0.6, 0.75, 0.9, 0.975, 0.999}) {
    CAPTURE(q);
    CHECK(probit(q) == doctest::Approx(-probit(1.0 - q)).epsilon(1e-12));
  }
}

TEST_CASE("probit is strictly increasing on a dense grid") {
  double prev = probit(1.0 / 1001.0);
  for (int i = 2; i <= 1000; ++i) {
    const double q = static_cast<double>(i) / 1001.0;
    const double x = probit(q);
    CHECK(x > prev);
    prev = x;
  }
}

TEST_CASE("probit rejects arguments outside (0, 1)") {
  CHECK_THROWS_AS(probit(0.0), std::domain_error);
  CHECK_THROWS_AS(probit(1.0), std::domain_error);
  CHECK_THROWS_AS(probit(-0.2), std::domain_error);
}

TEST_CASE("hypersphere in 1-D alternates unit signs") {
  Rng rng(7);
  const auto s = construct_unit_hypersphere(5, 1, rng);
  REQUIRE(s.point_count() == 5);
  CHECK(s.point(0)[0] == 1.0);
  CHECK(s.point(1)[0] == -1.0);
  CHECK(s.point(2)[0] == 1.0);
  CHECK(s.point(3)[0] == -1.0);
  CHECK(s.point(4)[0] == 1.0);
}

TEST_CASE("hypersphere in 2-D places quarter turns") {
  Rng rng(7);
  const auto s = construct_unit_hypersphere(4, 2, rng);
  REQUIRE(s.point_count() == 4);
  const double expected[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(s.point(k)[0] - expected[k][0]) < 1e-15);
    CHECK(std::abs(s.point(k)[1] - expected[k][1]) < 1e-15);
  }
}

TEST_CASE("fibonacci sphere has unit norms and even spacing") {
  Rng rng(7);
  const auto s = construct_unit_hypersphere(100, 3, rng);
  REQUIRE(s.point_count() == 100);
  for (std::size_t k = 0; k < 100; ++k) {
    CHECK(std::abs(norm(s.point(k)) - 1.0) < 1e-12);
  }

  // Pairwise-distance oracle: nearest-neighbor spacing should be close to
  // uniform (coefficient of variation below 0.5).
  std::vector<double> nearest(100, 1e9);
  for (std::size_t i = 0; i < 100; ++i) {
    for (std::size_t j = 0; j < 100; ++j) {
      if (i == j) continue;
      double d2 = 0.0;
      for (std::size_t g = 0; g < 3; ++g) {
        const double d = s.point(i)[g] - s.point(j)[g];
        d2 += d * d;
      }
      nearest[i] = std::min(nearest[i], std::sqrt(d2));
    }
  }
  double mean = 0.0;
  for (double d : nearest) mean += d;
  mean /= 100.0;
  double var = 0.0;
  for (double d : nearest) var += (d - mean) * (d - mean);
  var /= 100.0;
  CHECK(std::sqrt(var) / mean < 0.5);
}

TEST_CASE("high-dimensional hypersphere points are normalized") {
  Rng rng(11);
  const auto s = construct_unit_hypersphere(50, 5, rng);
  REQUIRE(s.point_count() == 50);
  for (std::size_t k = 0; k < 50; ++k) {
    CHECK(std::abs(norm(s.point(k)) - 1.0) < 1e-12);
  }
}

TEST_CASE("rng substreams are independent of draw order") {
  Rng a(42);
  Rng b(42);
  (void)a.uniform();
  (void)a.uniform();
  // Substream derivation depends only on the path, not on consumed draws.
  CHECK(a.substream(1, 2).uniform() == b.substream(1, 2).uniform());
  CHECK(a.substream(1, 2).uniform() != a.substream(1, 3).uniform());
}

TEST_CASE("rng uniform_index covers the range without bias") {
  Rng rng(5);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[rng.uniform_index(7)];
  for (int c : counts) {
    CHECK(c > 9000);
    CHECK(c < 11000);
  }
}
