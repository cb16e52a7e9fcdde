#pragma once

#include <cstddef>
#include <vector>

#include "pcm/matrix.hpp"

namespace pcm {

// Verdict threshold for matrix-level inconsistency.
constexpr double kDefaultTolerance = 1.0 / 3.0;

// Kii for a triad (x, y, z): 1 - min(y/(x*z), x*z/y). Always in [0,1),
// zero exactly when y = x*z.
double kii_triad(double x, double y, double z);

// Equivalent exponential form: 1 - e^(-|ln(y/(x*z))|).
double kii_triad_exp(double x, double y, double z);

// The unnormalized Euclidean distance |y - x*z|. Unbounded above; kept
// here as the indicator the counter-example experiments refute.
double distance_indicator_triad(double x, double y, double z);

// Relative error |y - x*z| / y of the middle value against the product
// of the outer two.
double relative_error_triad(double x, double y, double z);

// 0 if |y - x*z| <= tol*y, else 1.
int zero_one_indicator(double x, double y, double z, double tol);

// Additive-model analog: 1 - e^(-|y - (x + z)|). Inputs are differences,
// so any finite reals are accepted.
double additive_kii_triad(double x, double y, double z);

struct TriadRecord {
  std::size_t i, j, k;
  double x, y, z;
  double kii;
  double distance;
  double relative_error;
};

struct IndicatorReport {
  std::vector<TriadRecord> per_triad;
  double matrix_kii;                      // max kii over triads, in [0,1)
  std::size_t worst_i, worst_j, worst_k;  // first triad attaining the max
  double ci;                              // eigenvalue-based baseline
  bool consistent;                        // matrix_kii < tolerance
  double tolerance;
};

// Full per-triad report with the matrix Kii (maximum over triads,
// lexicographic-first on ties). Requires n >= 3; throws TooSmall below
// that since a matrix without triads has no defined inconsistency.
IndicatorReport kii_matrix(const PCMatrix& m,
                           double tolerance = kDefaultTolerance);

// Saaty consistency index (lambda_max - n)/(n - 1), lambda_max by power
// iteration (change tolerance 1e-10, at most 10000 iterations, all-ones
// start). Clamped to 0 when within -1e-9 of it.
double saaty_ci(const PCMatrix& m);

}  // namespace pcm
