#include "pcm/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pcm/errors.hpp"

namespace pcm {

namespace {

void require_positive_triad(double x, double y, double z) {
  for (double v : {x, y, z}) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw NonPositiveInput("triad values must be positive finite ratios");
    }
  }
}

// For extreme ratios 1 - min(q, 1/q) rounds up to 1.0; the indicator is
// strictly below 1 for positive entries, so cap one ulp under it.
double below_one(double v) {
  constexpr double kBelowOne = 1.0 - std::numeric_limits<double>::epsilon() / 2;
  return v >= 1.0 ? kBelowOne : v;
}

}  // namespace

double kii_triad(double x, double y, double z) {
  require_positive_triad(x, y, z);
  const double q = y / (x * z);
  return below_one(1.0 - std::min(q, 1.0 / q));
}

double kii_triad_exp(double x, double y, double z) {
  require_positive_triad(x, y, z);
  return below_one(1.0 - std::exp(-std::abs(std::log(y / (x * z)))));
}

double distance_indicator_triad(double x, double y, double z) {
  require_positive_triad(x, y, z);
  return std::abs(y - x * z);
}

double relative_error_triad(double x, double y, double z) {
  require_positive_triad(x, y, z);
  return std::abs(y - x * z) / y;
}

int zero_one_indicator(double x, double y, double z, double tol) {
  require_positive_triad(x, y, z);
  return std::abs(y - x * z) <= tol * y ? 0 : 1;
}

double additive_kii_triad(double x, double y, double z) {
  for (double v : {x, y, z}) {
    if (!std::isfinite(v)) {
      throw NonFiniteInput("additive triad values must be finite");
    }
  }
  return below_one(1.0 - std::exp(-std::abs(y - (x + z))));
}

IndicatorReport kii_matrix(const PCMatrix& m, double tolerance) {
  if (m.size() < 3) {
    throw TooSmall("inconsistency is undefined for n < 3 (no triads); n=" +
                   std::to_string(m.size()));
  }
  IndicatorReport report;
  report.tolerance = tolerance;
  report.matrix_kii = 0.0;
  report.worst_i = 0;
  report.worst_j = 1;
  report.worst_k = 2;
  bool first = true;
  for (const Triad& t : m.triads()) {
    TriadRecord rec{t.i,
                    t.j,
                    t.k,
                    t.x,
                    t.y,
                    t.z,
                    kii_triad(t.x, t.y, t.z),
                    distance_indicator_triad(t.x, t.y, t.z),
                    relative_error_triad(t.x, t.y, t.z)};
    if (first || rec.kii > report.matrix_kii) {
      report.matrix_kii = rec.kii;
      report.worst_i = t.i;
      report.worst_j = t.j;
      report.worst_k = t.k;
      first = false;
    }
    report.per_triad.push_back(rec);
  }
  report.ci = saaty_ci(m);
  report.consistent = report.matrix_kii < tolerance;
  return report;
}

double saaty_ci(const PCMatrix& m) {
  const std::size_t n = m.size();
  if (n < 3) {
    throw TooSmall("CI is undefined for n < 3");
  }
  // Power iteration; the matrix is positive, so the dominant eigenvalue
  // is real and positive (Perron-Frobenius).
  std::vector<double> v(n, 1.0 / static_cast<double>(n)), w(n, 0.0);
  double lambda = static_cast<double>(n);
  constexpr double kTol = 1e-10;
  constexpr int kMaxIter = 10000;
  for (int it = 0; it < kMaxIter; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        s += m.at(i, j) * v[j];
      }
      w[i] = s;
    }
    const double norm = std::accumulate(w.begin(), w.end(), 0.0);
    // Rayleigh-style estimate: with v normalized to sum 1, the sum of
    // M*v converges to lambda_max.
    const double next = norm;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = w[i] / norm;
    }
    if (std::abs(next - lambda) <= kTol) {
      lambda = next;
      const double ci = (lambda - static_cast<double>(n)) /
                        (static_cast<double>(n) - 1.0);
      if (ci < -1e-9) {
        throw NoConvergence("power iteration produced lambda_max below n");
      }
      return std::max(ci, 0.0);
    }
    lambda = next;
  }
  throw NoConvergence("power iteration did not converge in 10000 iterations");
}

}  // namespace pcm
