#include "pcm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "pcm/indicators.hpp"
#include "pcm/tools.hpp"

namespace pcm {

Triad tn_triad(double x, std::size_t n) {
  if (!(x > 1.0) || !std::isfinite(x)) {
    throw NonPositiveInput("counter-example base must satisfy x > 1");
  }
  if (n < 1) {
    throw NonPositiveInput("counter-example index must satisfy n >= 1");
  }
  const double xn = std::pow(x, static_cast<double>(n));
  const double x2n = std::pow(x, 2.0 * static_cast<double>(n));
  if (!std::isfinite(xn) || !std::isfinite(x2n) || !std::isfinite(x2n + 1.0)) {
    throw Overflow("x^(2n) exceeds the double range for x=" +
                   std::to_string(x) + ", n=" + std::to_string(n));
  }
  return {xn, x2n + 1.0, xn, 0, 1, 2};
}

std::vector<ConvergenceRow> constant_offset_table(double x, double c,
                                                  std::size_t n_max) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw NonPositiveInput("offset constant must be positive and finite");
  }
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Triad t = tn_triad(x, n);
    t.y = t.x * t.z + c;
    if (!std::isfinite(t.y)) {
      throw Overflow("x^(2n) + c exceeds the double range at n=" +
                     std::to_string(n));
    }
    rows.push_back({n, t, distance_indicator_triad(t.x, t.y, t.z),
                    relative_error_triad(t.x, t.y, t.z),
                    kii_triad(t.x, t.y, t.z)});
  }
  return rows;
}

std::vector<ConvergenceRow> convergence_table(double x, std::size_t n_max) {
  return constant_offset_table(x, 1.0, n_max);
}

StickExample stick_example() {
  StickExample out;
  const Triad a{1.0, 2.0, 1.0, 0, 1, 2};
  const Triad b{10.0, 101.0, 10.0, 0, 1, 2};
  for (auto [record, t] : {std::pair{&out.short_sticks, a},
                           std::pair{&out.long_sticks, b}}) {
    record->triad = t;
    record->distance = distance_indicator_triad(t.x, t.y, t.z);
    record->relative_error = relative_error_triad(t.x, t.y, t.z);
    record->relative_error_true = std::abs(t.y - t.x * t.z) / (t.x * t.z);
  }
  return out;
}

namespace {

// Spearman: Pearson correlation of the (average-on-ties) rank vectors.
double rank_correlation(const std::vector<double>& a,
                        const std::vector<double>& b) {
  const std::size_t n = a.size();
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&v](std::size_t p, std::size_t q) { return v[p] < v[q]; });
    std::vector<double> r(n, 0.0);
    std::size_t s = 0;
    while (s < n) {
      std::size_t e = s;
      while (e + 1 < n && v[order[e + 1]] == v[order[s]]) {
        ++e;
      }
      const double avg = (static_cast<double>(s) + static_cast<double>(e)) / 2.0;
      for (std::size_t p = s; p <= e; ++p) {
        r[order[p]] = avg;
      }
      s = e + 1;
    }
    return r;
  };
  const std::vector<double> ra = ranks(a), rb = ranks(b);
  const double mean = (static_cast<double>(n) - 1.0) / 2.0;
  double num = 0.0, da = 0.0, db = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (ra[i] - mean) * (rb[i] - mean);
    da += (ra[i] - mean) * (ra[i] - mean);
    db += (rb[i] - mean) * (rb[i] - mean);
  }
  if (da == 0.0 || db == 0.0) {
    return 0.0;  // a constant series carries no ordering information
  }
  return num / std::sqrt(da * db);
}

IndicatorStats stats_for(const std::vector<double>& values,
                         const std::vector<double>& reference) {
  IndicatorStats s{};
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  s.max = *std::max_element(values.begin(), values.end());
  s.rank_correlation = rank_correlation(values, reference);
  return s;
}

}  // namespace

MonteCarloSummary monte_carlo_comparison(std::size_t n, std::size_t trials,
                                         double perturbation,
                                         std::uint64_t seed) {
  if (n < 3) {
    throw TooSmall("Monte Carlo comparison needs n >= 3");
  }
  if (trials < 1) {
    throw NonPositiveInput("trials must be at least 1");
  }
  if (!(perturbation >= 1.0) || !std::isfinite(perturbation)) {
    throw NonPositiveInput("perturbation factor must be >= 1");
  }
  std::vector<double> kii(trials), dist(trials), ci(trials), relerr(trials);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> gen_dist(1.0 / 9.0, 9.0);
    std::uniform_real_distribution<double> noise(1.0 / perturbation,
                                                 perturbation);
    GeneratorSet gens{n, {}};
    gens.generators.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      gens.generators.push_back(gen_dist(rng));
    }
    auto grid = complete_from_generators(gens).rows();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double factor = perturbation == 1.0 ? 1.0 : noise(rng);
        grid[i][j] *= factor;
        grid[j][i] = 1.0 / grid[i][j];
      }
    }
    const PCMatrix m{grid};
    double worst_kii = 0.0, worst_dist = 0.0, worst_rel = 0.0;
    for (const Triad& t : m.triads()) {
      worst_kii = std::max(worst_kii, kii_triad(t.x, t.y, t.z));
      worst_dist = std::max(worst_dist, distance_indicator_triad(t.x, t.y, t.z));
      worst_rel = std::max(worst_rel, relative_error_triad(t.x, t.y, t.z));
    }
    kii[trial] = worst_kii;
    dist[trial] = worst_dist;
    relerr[trial] = worst_rel;
    ci[trial] = saaty_ci(m);
  }
  MonteCarloSummary summary{};
  summary.n = n;
  summary.trials = trials;
  summary.perturbation = perturbation;
  summary.seed = seed;
  summary.kii = stats_for(kii, relerr);
  summary.distance = stats_for(dist, relerr);
  summary.ci = stats_for(ci, relerr);
  summary.relative_error = stats_for(relerr, relerr);
  return summary;
}

}  // namespace pcm
