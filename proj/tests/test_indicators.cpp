#include <cmath>
#include <random>

#include <doctest.h>

#include "pcm/indicators.hpp"
#include "pcm/tools.hpp"

using namespace pcm;

namespace {

struct TriadGen {
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> log_value{std::log(1e-6),
                                                   std::log(1e6)};
  explicit TriadGen(std::uint64_t seed) : rng(seed) {}
  double value() { return std::exp(log_value(rng)); }
};

}  // namespace

TEST_CASE("kii_triad hand-checked values") {
  CHECK(kii_triad(1, 1, 1) == 0.0);
  CHECK(kii_triad(2, 5, 3) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(kii_triad(1, 2, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(kii_triad(-1, 2, 1), NonPositiveInput);
  CHECK_THROWS_AS(kii_triad(1, 0, 1), NonPositiveInput);
}

TEST_CASE("kii_triad_exp matches the closed form") {
  CHECK(kii_triad_exp(1, 1, 1) == 0.0);
  CHECK(kii_triad_exp(2, 5, 3) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(kii_triad_exp(1, 2, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("distance indicator is the unnormalized defect") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const double xn = std::pow(2.0, static_cast<double>(n));
    CHECK(distance_indicator_triad(xn, xn * xn + 1.0, xn) == 1.0);
  }
  CHECK(distance_indicator_triad(1, 2, 1) == 1.0);
  CHECK(distance_indicator_triad(10, 101, 10) == 1.0);
  CHECK(distance_indicator_triad(1, 1, 1) == 0.0);
}

TEST_CASE("relative error") {
  CHECK(relative_error_triad(1, 2, 1) == 0.5);
  CHECK(relative_error_triad(10, 101, 10) ==
        doctest::Approx(1.0 / 101.0).epsilon(1e-15));
  for (std::size_t n = 1; n <= 8; ++n) {
    const double xn = std::pow(2.0, static_cast<double>(n));
    const double y = xn * xn + 1.0;
    CHECK(relative_error_triad(xn, y, xn) ==
          doctest::Approx(1.0 / y).epsilon(1e-15));
  }
}

TEST_CASE("zero_one_indicator") {
  CHECK(zero_one_indicator(3, 6, 2, 1e-12) == 0);
  CHECK(zero_one_indicator(1, 2, 1, 1e-12) == 1);
  CHECK(zero_one_indicator(1, 1 + 1e-15, 1, 1e-12) == 0);
}

TEST_CASE("additive_kii_triad") {
  CHECK(additive_kii_triad(0, 0, 0) == 0.0);
  CHECK(additive_kii_triad(std::log(2.0), std::log(5.0), std::log(3.0)) ==
        doctest::Approx(kii_triad(2, 5, 3)).epsilon(1e-12));
  CHECK(additive_kii_triad(1, 3, 1) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(
      additive_kii_triad(std::numeric_limits<double>::infinity(), 0, 0),
      NonFiniteInput);
  SUBCASE("equals kii of the exponentiated triad") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> diff(-10.0, 10.0);
    for (int rep = 0; rep < 10000; ++rep) {
      const double x = diff(rng), y = diff(rng), z = diff(rng);
      CHECK(additive_kii_triad(x, y, z) ==
            doctest::Approx(kii_triad(std::exp(x), std::exp(y), std::exp(z)))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("kii/exp equivalence and boundedness on random triads") {
  TriadGen gen(101);
  for (int rep = 0; rep < 100000; ++rep) {
    const double x = gen.value(), y = gen.value(), z = gen.value();
    const double a = kii_triad(x, y, z);
    const double b = kii_triad_exp(x, y, z);
    CHECK(a >= 0.0);
    CHECK(a < 1.0);
    CHECK(std::abs(a - b) <= 1e-12);
  }
}

TEST_CASE("kii depends only on the ratio y/(x*z)") {
  TriadGen gen(103);
  std::uniform_real_distribution<double> scale_dist(0.1, 10.0);
  for (int rep = 0; rep < 10000; ++rep) {
    const double x = gen.value(), y = gen.value(), z = gen.value();
    // scale x and y together: q is unchanged
    const double s = scale_dist(gen.rng);
    CHECK(kii_triad(x, y, z) ==
          doctest::Approx(kii_triad(s * x, s * y, z)).epsilon(1e-12));
    // transpose symmetry
    CHECK(kii_triad(x, y, z) ==
          doctest::Approx(kii_triad(1.0 / z, 1.0 / y, 1.0 / x)).epsilon(1e-12));
  }
}

TEST_CASE("all indicators vanish exactly on consistent triads") {
  TriadGen gen(107);
  for (int rep = 0; rep < 1000; ++rep) {
    const double x = gen.value(), z = gen.value();
    const double y = x * z;
    CHECK(kii_triad(x, y, z) == 0.0);
    CHECK(kii_triad_exp(x, y, z) == 0.0);
    CHECK(distance_indicator_triad(x, y, z) == 0.0);
    CHECK(relative_error_triad(x, y, z) == 0.0);
    CHECK(zero_one_indicator(x, y, z, 0.0) == 0);
    CHECK(additive_kii_triad(std::log(x) + std::log(z), std::log(x) + std::log(z),
                             0.0) == 0.0);
  }
}

TEST_CASE("fallacy on the T_n sequence: distance flat, kii vanishing") {
  double prev_kii = 1.0;
  double prev_rel = 1.0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const double xn = std::pow(2.0, static_cast<double>(n));
    const double y = xn * xn + 1.0;
    const double expected = 1.0 / (std::pow(4.0, static_cast<double>(n)) + 1.0);
    CHECK(distance_indicator_triad(xn, y, xn) == 1.0);
    const double kii = kii_triad(xn, y, xn);
    const double rel = relative_error_triad(xn, y, xn);
    CHECK(kii == doctest::Approx(expected).epsilon(1e-12));
    CHECK(rel == doctest::Approx(expected).epsilon(1e-12));
    CHECK(kii < prev_kii);
    CHECK(rel < prev_rel);
    prev_kii = kii;
    prev_rel = rel;
  }
}

TEST_CASE("kii is strictly increasing in |ln(y/(x*z))|") {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> t_dist(0.0, 20.0);
  for (int rep = 0; rep < 10000; ++rep) {
    double t1 = t_dist(rng), t2 = t_dist(rng);
    if (t1 == t2) {
      continue;
    }
    if (t1 > t2) {
      std::swap(t1, t2);
    }
    // triads with q = e^t on both sides of 1
    const double a = kii_triad(1.0, std::exp(t1), 1.0);
    const double b = kii_triad(1.0, std::exp(t2), 1.0);
    CHECK(a < b);
    const double c = kii_triad(1.0, std::exp(-t1), 1.0);
    const double d = kii_triad(1.0, std::exp(-t2), 1.0);
    if (t1 > 0.0) {
      CHECK(c < d);
    }
  }
}

TEST_CASE("kii_matrix") {
  SUBCASE("fig2 matrix: single triad") {
    const PCMatrix m({{1, 2, 5}, {0.5, 1, 3}, {0.2, 1.0 / 3.0, 1}});
    const IndicatorReport r = kii_matrix(m);
    CHECK(r.per_triad.size() == 1);
    CHECK(r.matrix_kii == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(r.worst_i == 0);
    CHECK(r.worst_j == 1);
    CHECK(r.worst_k == 2);
    CHECK(r.consistent);
    CHECK(r.ci > 0.0);
  }
  SUBCASE("generator-reconstructed matrices have kii 0") {
    const PCMatrix m = complete_from_generators({5, {2, 0.5, 3, 1.5}});
    CHECK(kii_matrix(m).matrix_kii < 1e-12);
  }
  SUBCASE("worst triad localizes a single perturbed entry") {
    auto grid = complete_from_generators({4, {2, 3, 0.5}}).rows();
    grid[1][3] *= 2.0;  // perturb a_13 (0-based row 1, col 3)
    grid[3][1] = 1.0 / grid[1][3];
    const PCMatrix m{grid};
    const IndicatorReport r = kii_matrix(m);
    // brute force over the four triads
    double worst = -1.0;
    std::size_t wi = 0, wj = 0, wk = 0;
    for (const Triad& t : m.triads()) {
      const double v = kii_triad(t.x, t.y, t.z);
      if (v > worst) {
        worst = v;
        wi = t.i;
        wj = t.j;
        wk = t.k;
      }
    }
    CHECK(r.matrix_kii == worst);
    CHECK(r.worst_i == wi);
    CHECK(r.worst_j == wj);
    CHECK(r.worst_k == wk);
    // the perturbed pair (1,3) appears in the worst triad
    const bool has1 = r.worst_i == 1 || r.worst_j == 1 || r.worst_k == 1;
    const bool has3 = r.worst_i == 3 || r.worst_j == 3 || r.worst_k == 3;
    CHECK(has1);
    CHECK(has3);
  }
  SUBCASE("n < 3 is an error") {
    CHECK_THROWS_AS(kii_matrix(PCMatrix({{1, 2}, {0.5, 1}})), TooSmall);
  }
  SUBCASE("aggregation equals brute-force max for n <= 6") {
    std::mt19937_64 rng(113);
    std::uniform_real_distribution<double> log_ratio(std::log(1.0 / 9.0),
                                                     std::log(9.0));
    for (std::size_t n = 3; n <= 6; ++n) {
      for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> upper(n * (n - 1) / 2);
        for (double& v : upper) {
          v = std::exp(log_ratio(rng));
        }
        const PCMatrix m = PCMatrix::from_upper_triangle(n, upper);
        double brute = 0.0;
        for (const Triad& t : m.triads()) {
          brute = std::max(brute, kii_triad(t.x, t.y, t.z));
        }
        CHECK(kii_matrix(m).matrix_kii == brute);
      }
    }
  }
}

TEST_CASE("saaty_ci") {
  SUBCASE("consistent matrices have CI ~ 0") {
    CHECK(saaty_ci(PCMatrix({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) <= 1e-12);
    const PCMatrix m = complete_from_generators({4, {2, 3, 4}});
    CHECK(saaty_ci(m) < 1e-8);
  }
  SUBCASE("inconsistent 3x3 has CI > 0, cross-checked against the cubic") {
    const PCMatrix m = PCMatrix::from_upper_triangle(3, {2, 5, 3});
    const double ci = saaty_ci(m);
    CHECK(ci > 0.0);
    // For a reciprocal 3x3 the characteristic polynomial collapses to
    // lambda^3 - 3 lambda^2 - (q + 1/q - 2) with q = y/(x z); find its
    // real root >= 3 by bisection.
    const double q = 5.0 / (2.0 * 3.0);
    const double d = q + 1.0 / q - 2.0;
    auto f = [d](double lam) { return lam * lam * lam - 3.0 * lam * lam - d; };
    double lo = 3.0, hi = 4.0;
    while (f(hi) < 0.0) {
      hi += 1.0;
    }
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) < 0.0 ? lo : hi) = mid;
    }
    const double lambda_ref = 0.5 * (lo + hi);
    const double lambda_pi = ci * 2.0 + 3.0;
    CHECK(lambda_pi == doctest::Approx(lambda_ref).epsilon(1e-8));
  }
}
