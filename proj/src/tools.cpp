#include "pcm/tools.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "pcm/errors.hpp"

namespace pcm {

PCMatrix complete_from_generators(const GeneratorSet& g) {
  if (g.n < 2 || g.generators.size() != g.n - 1) {
    throw WrongCount("expected " + std::to_string(g.n - 1) +
                     " generators for n=" + std::to_string(g.n) + ", got " +
                     std::to_string(g.generators.size()));
  }
  for (double v : g.generators) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw NonPositiveGenerator("generators must be positive finite ratios");
    }
  }
  std::vector<std::vector<double>> grid(g.n, std::vector<double>(g.n, 1.0));
  for (std::size_t i = 0; i < g.n; ++i) {
    double prod = 1.0;
    for (std::size_t k = i + 1; k < g.n; ++k) {
      prod *= g.generators[k - 1];
      grid[i][k] = prod;
      grid[k][i] = 1.0 / prod;
    }
  }
  return PCMatrix(grid);
}

PCMatrix complete_from_tree(std::size_t n, const std::vector<TreeEdge>& edges) {
  if (n < 2) {
    throw NotSquare("matrix dimension must be at least 2");
  }
  if (edges.size() != n - 1) {
    throw NotATree("a spanning tree on " + std::to_string(n) + " nodes has " +
                   std::to_string(n - 1) + " edges, got " +
                   std::to_string(edges.size()));
  }
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (const TreeEdge& e : edges) {
    if (e.i >= n || e.j >= n || e.i == e.j) {
      throw NotATree("edge (" + std::to_string(e.i) + "," +
                     std::to_string(e.j) + ") is not a valid node pair");
    }
    if (!std::isfinite(e.ratio) || e.ratio <= 0.0) {
      throw NonPositiveGenerator("edge ratios must be positive finite");
    }
    adj[e.i].push_back({e.j, e.ratio});
    adj[e.j].push_back({e.i, 1.0 / e.ratio});
  }
  // Node potentials: value[i]/value[j] = a_ij along every tree edge.
  std::vector<double> value(n, 0.0);
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> frontier;
  value[0] = 1.0;
  seen[0] = true;
  frontier.push(0);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (const auto& [v, ratio] : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        value[v] = value[u] / ratio;
        frontier.push(v);
        ++reached;
      }
    }
  }
  if (reached != n) {
    // Right edge count but unreached nodes: there must be a cycle.
    throw NotATree("edges do not connect all " + std::to_string(n) + " nodes");
  }
  std::vector<std::vector<double>> grid(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = value[i] / value[j];
      grid[i][j] = r;
      grid[j][i] = 1.0 / r;
    }
  }
  return PCMatrix(grid);
}

ConsistentAlternatives consistent_alternatives(const Triad& t) {
  return {t.y / t.z, t.x * t.z, t.y / t.x};
}

namespace {

struct Candidate {
  std::size_t row, col;  // upper-triangle position being replaced
  TriadElement element;
  double fix;
};

double matrix_kii_only(const PCMatrix& m) {
  double worst = 0.0;
  for (const Triad& t : m.triads()) {
    worst = std::max(worst, kii_triad(t.x, t.y, t.z));
  }
  return worst;
}

// Worst triad without the eigenvalue baseline; reduction only needs kii.
Triad worst_triad(const PCMatrix& m, double* kii_out) {
  Triad worst{m.at(0, 1), m.at(0, 2), m.at(1, 2), 0, 1, 2};
  double worst_kii = -1.0;
  for (const Triad& t : m.triads()) {
    const double v = kii_triad(t.x, t.y, t.z);
    if (v > worst_kii) {
      worst_kii = v;
      worst = t;
    }
  }
  *kii_out = worst_kii;
  return worst;
}

PCMatrix with_entry(const PCMatrix& m, std::size_t row, std::size_t col,
                    double value) {
  auto grid = m.rows();
  grid[row][col] = value;
  grid[col][row] = 1.0 / value;
  return PCMatrix(grid);
}

}  // namespace

PCMatrix reduce_step(const PCMatrix& m, double blend) {
  if (m.size() < 3) {
    throw TooSmall("reduction needs n >= 3");
  }
  if (blend <= 0.0 || blend > 1.0) {
    throw NegativeInput("blend must be in (0, 1]");
  }
  double current_kii = 0.0;
  const Triad worst = worst_triad(m, &current_kii);
  if (current_kii == 0.0) {
    return m;
  }
  const std::size_t i = worst.i, j = worst.j, k = worst.k;
  const ConsistentAlternatives fix = consistent_alternatives(worst);
  const Candidate candidates[] = {
      {i, j, TriadElement::x, fix.x_fix},
      {i, k, TriadElement::y, fix.y_fix},
      {j, k, TriadElement::z, fix.z_fix},
  };
  double best_kii = 0.0;
  bool have_best = false;
  PCMatrix result = m;
  for (const Candidate& c : candidates) {
    const double old_value = m.at(c.row, c.col);
    const double blended =
        std::pow(old_value, 1.0 - blend) * std::pow(c.fix, blend);
    PCMatrix trial = with_entry(m, c.row, c.col, blended);
    const double trial_kii = matrix_kii_only(trial);
    if (!have_best || trial_kii < best_kii) {
      result = std::move(trial);
      have_best = true;
      best_kii = trial_kii;
    }
  }
  return result;
}

ReductionTrace reduce(const PCMatrix& m, double tolerance,
                      std::size_t max_iter, double blend) {
  if (m.size() < 3) {
    throw TooSmall("reduction needs n >= 3");
  }
  ReductionTrace trace{{}, false, m};
  PCMatrix current = m;
  for (std::size_t step = 0; step < max_iter; ++step) {
    double before_kii = 0.0;
    const Triad before = worst_triad(current, &before_kii);
    if (before_kii < tolerance) {
      trace.converged = true;
      break;
    }
    // Full replacement of a shared entry can trade one worst triad for
    // another and enter a 2-cycle. If the step makes no strict progress
    // on the matrix kii, retry it with a halved blend: for a small
    // enough move the worst triad improves faster than any rival
    // degrades, so the maximum strictly decreases.
    PCMatrix next = reduce_step(current, blend);
    double effective_blend = blend;
    for (int halvings = 0;
         halvings < 40 && matrix_kii_only(next) >= before_kii; ++halvings) {
      effective_blend *= 0.5;
      next = reduce_step(current, effective_blend);
    }
    // Locate the changed upper-triangle entry for the trace.
    ReductionStep record{step, before.i, before.j, before.k,
                         TriadElement::z, 0.0, 0.0, 0.0};
    if (next.at(before.i, before.j) != current.at(before.i, before.j)) {
      record.replaced = TriadElement::x;
      record.old_value = current.at(before.i, before.j);
      record.new_value = next.at(before.i, before.j);
    } else if (next.at(before.i, before.k) != current.at(before.i, before.k)) {
      record.replaced = TriadElement::y;
      record.old_value = current.at(before.i, before.k);
      record.new_value = next.at(before.i, before.k);
    } else {
      record.old_value = current.at(before.j, before.k);
      record.new_value = next.at(before.j, before.k);
    }
    record.kii_after = matrix_kii_only(next);
    trace.steps.push_back(record);
    current = std::move(next);
  }
  if (!trace.converged) {
    trace.converged = matrix_kii_only(current) < tolerance;
  }
  trace.final_matrix = current;
  return trace;
}

}  // namespace pcm
