#pragma once

#include <cstdint>
#include <vector>

#include "pcm/matrix.hpp"

namespace pcm {

// One row of the counter-example table: the triad (x^n, x^2n + c, x^n),
// its constant distance, and the vanishing normalized measures.
struct ConvergenceRow {
  std::size_t n;
  Triad triad;
  double distance;
  double relative_error;
  double kii;
};

// The triad (x^n, x^2n + 1, x^n) for x > 1. Throws Overflow once
// x^2n + 1 is no longer a finite double; infinity is rejected as a
// value, not saturated to.
Triad tn_triad(double x, std::size_t n);

// Rows n = 1..n_max of the counter-example: distance stays exactly 1
// while relative error and kii equal 1/(x^2n + 1) and fall to 0.
std::vector<ConvergenceRow> convergence_table(double x, std::size_t n_max);

// Same sequence with the offset 1 replaced by an arbitrary constant c:
// the distance column is c in every row, the normalized columns still
// vanish.
std::vector<ConvergenceRow> constant_offset_table(double x, double c,
                                                  std::size_t n_max);

struct StickRecord {
  Triad triad;
  double distance;
  double relative_error;       // |y - x*z| / y
  double relative_error_true;  // |y - x*z| / (x*z), against the true value
};

struct StickExample {
  StickRecord short_sticks;  // (1, 2, 1)
  StickRecord long_sticks;   // (10, 101, 10)
};

// The two stick estimations whose distances agree at 1.0 while their
// relative errors differ by two orders of magnitude.
StickExample stick_example();

struct IndicatorStats {
  double mean;
  double max;
  double rank_correlation;  // Spearman, against max relative error
};

struct MonteCarloSummary {
  std::size_t n;
  std::size_t trials;
  double perturbation;
  std::uint64_t seed;
  IndicatorStats kii;
  IndicatorStats distance;
  IndicatorStats ci;
  IndicatorStats relative_error;  // rank_correlation = 1 by construction
};

// Per trial: a consistent matrix from random generators in [1/9, 9] is
// perturbed entrywise on the upper triangle by factors uniform in
// [1/perturbation, perturbation], reciprocity restored, and all
// indicators evaluated. Each trial derives its stream from (seed, trial)
// so the result is deterministic regardless of evaluation order.
MonteCarloSummary monte_carlo_comparison(std::size_t n, std::size_t trials,
                                         double perturbation,
                                         std::uint64_t seed);

}  // namespace pcm
