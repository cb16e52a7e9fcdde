#pragma once

#include <cstdint>

namespace pcm {

// Strictly increasing maps from [0, inf) onto [0, 1), all anchored so
// that 0 maps to 0. The exponential kind is the kernel of the Kii
// exponential form.
struct NormalizationMap {
  enum class Kind { exponential, logistic, gompertz };

  Kind kind = Kind::exponential;
  double k = 1.0;  // logistic growth rate
  double b = 1.0;  // gompertz displacement
  double c = 1.0;  // gompertz rate

  static NormalizationMap exponential();
  static NormalizationMap logistic(double k = 1.0);
  static NormalizationMap gompertz(double b = 1.0, double c = 1.0);
};

// Evaluates the map at t >= 0. Result is always in [0,1), even for
// inputs like 1e300 where the analytic value rounds to 1.
double apply(const NormalizationMap& map, double t);

// Sampled witness of the closure of [0,1] under multiplication and of
// (1+a)^2 > 1+a for a in (0,1]. A demonstration harness, not a proof.
bool check_unit_interval_stability(std::size_t samples, std::uint64_t seed);

}  // namespace pcm
