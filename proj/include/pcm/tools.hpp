#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "pcm/indicators.hpp"
#include "pcm/matrix.hpp"

namespace pcm {

// The n-1 comparisons just above the main diagonal, g_i = a_{i,i+1},
// from which a fully consistent matrix is reconstructed.
struct GeneratorSet {
  std::size_t n;
  std::vector<double> generators;
};

// Consistent completion: a_{ik} = g_i * g_{i+1} * ... * g_{k-1} for i < k.
PCMatrix complete_from_generators(const GeneratorSet& g);

struct TreeEdge {
  std::size_t i, j;
  double ratio;  // a_ij
};

// Consistent completion from any spanning tree of known ratios:
// a_ik is the product of edge ratios (or reciprocals) along the tree
// path from i to k. Throws NotATree on a cycle or disconnection.
PCMatrix complete_from_tree(std::size_t n, const std::vector<TreeEdge>& edges);

// The three single-element replacements that each make the triad
// consistent: x_fix = y/z, y_fix = x*z, z_fix = y/x.
struct ConsistentAlternatives {
  double x_fix, y_fix, z_fix;
};
ConsistentAlternatives consistent_alternatives(const Triad& t);

enum class TriadElement { x, y, z };

struct ReductionStep {
  std::size_t step;
  std::size_t i, j, k;  // worst triad before the step
  TriadElement replaced;
  double old_value;
  double new_value;
  double kii_after;  // matrix kii after the step
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  bool converged;
  PCMatrix final_matrix;
};

// One reduction step: locates the worst triad, tries the three
// consistent replacements and keeps the one minimizing the resulting
// matrix kii. The replacement value is the geometric blend
// old^(1-blend) * fix^blend; the mirrored entry is set to its exact
// reciprocal. A consistent matrix is returned unchanged.
PCMatrix reduce_step(const PCMatrix& m, double blend = 1.0);

// Iterates reduce_step until matrix kii < tolerance or max_iter steps.
// A non-converged trace is an ordinary result, not an error.
ReductionTrace reduce(const PCMatrix& m, double tolerance = kDefaultTolerance,
                      std::size_t max_iter = 1000, double blend = 1.0);

}  // namespace pcm
