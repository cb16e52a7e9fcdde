#include "pcm/normalization.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "pcm/errors.hpp"

namespace pcm {

NormalizationMap NormalizationMap::exponential() { return {}; }

NormalizationMap NormalizationMap::logistic(double k) {
  NormalizationMap m;
  m.kind = Kind::logistic;
  m.k = k;
  return m;
}

NormalizationMap NormalizationMap::gompertz(double b, double c) {
  NormalizationMap m;
  m.kind = Kind::gompertz;
  m.b = b;
  m.c = c;
  return m;
}

double apply(const NormalizationMap& map, double t) {
  if (!std::isfinite(t)) {
    throw NonFiniteInput("normalization input must be finite");
  }
  if (t < 0.0) {
    throw NegativeInput("normalization input must be nonnegative");
  }
  double v = 0.0;
  switch (map.kind) {
    case NormalizationMap::Kind::exponential:
      v = -std::expm1(-t);
      break;
    case NormalizationMap::Kind::logistic:
      // 2/(1+e^(-k t)) - 1, shifted so 0 maps to 0 with range [0,1).
      v = 2.0 / (1.0 + std::exp(-map.k * t)) - 1.0;
      break;
    case NormalizationMap::Kind::gompertz:
      // Anchored Gompertz: (e^(-b e^(-c t)) - e^(-b)) / (1 - e^(-b)).
      v = (std::exp(-map.b * std::exp(-map.c * t)) - std::exp(-map.b)) /
          (1.0 - std::exp(-map.b));
      break;
  }
  // For huge t the analytic value rounds to 1.0; the contract is a
  // half-open range, so cap at the largest double below 1.
  constexpr double kBelowOne = 1.0 - std::numeric_limits<double>::epsilon() / 2;
  if (v >= 1.0) {
    v = kBelowOne;
  }
  return v < 0.0 ? 0.0 : v;
}

bool check_unit_interval_stability(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t s = 0; s < samples; ++s) {
    const double t = unit(rng);
    const double u = unit(rng);
    const double p = t * u;
    if (p < 0.0 || p > 1.0) {
      return false;
    }
  }
  for (std::size_t s = 0; s < samples; ++s) {
    // alpha in (0, 1]: flip the half-open draw.
    const double alpha = 1.0 - unit(rng);
    if (!((1.0 + alpha) * (1.0 + alpha) > 1.0 + alpha)) {
      return false;
    }
  }
  return true;
}

}  // namespace pcm
