#include "pcm/matrix.hpp"

#include <cmath>
#include <string>

namespace pcm {

namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_positive_finite(double v, std::size_t i, std::size_t j) {
  if (!std::isfinite(v)) {
    throw NonPositiveEntry("entry " + cell(i, j) + " is not finite");
  }
  if (v <= 0.0) {
    throw NonPositiveEntry("entry " + cell(i, j) + " = " + std::to_string(v) +
                           " is not strictly positive");
  }
}

}  // namespace

PCMatrix::PCMatrix(const std::vector<std::vector<double>>& entries)
    : n_(entries.size()) {
  if (n_ < 2) {
    throw NotSquare("matrix dimension must be at least 2, got " +
                    std::to_string(n_));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (entries[i].size() != n_) {
      throw NotSquare("row " + std::to_string(i) + " has " +
                      std::to_string(entries[i].size()) + " entries, expected " +
                      std::to_string(n_));
    }
  }
  data_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      check_positive_finite(entries[i][j], i, j);
      data_[i * n_ + j] = entries[i][j];
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (at(i, i) != 1.0) {
      throw ReciprocityViolation("diagonal entry " + cell(i, i) +
                                 " must equal 1");
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double prod = at(i, j) * at(j, i);
      if (std::abs(prod - 1.0) > kReciprocityTol * std::max(1.0, std::abs(prod))) {
        throw ReciprocityViolation("entries " + cell(i, j) + " and " +
                                   cell(j, i) + " are not reciprocal: product " +
                                   std::to_string(prod));
      }
    }
  }
}

PCMatrix PCMatrix::from_upper_triangle(std::size_t n,
                                       const std::vector<double>& values) {
  if (n < 2) {
    throw NotSquare("matrix dimension must be at least 2, got " +
                    std::to_string(n));
  }
  const std::size_t expected = n * (n - 1) / 2;
  if (values.size() != expected) {
    throw WrongCount("expected " + std::to_string(expected) +
                     " upper-triangle values for n=" + std::to_string(n) +
                     ", got " + std::to_string(values.size()));
  }
  std::vector<std::vector<double>> grid(n, std::vector<double>(n, 1.0));
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++pos) {
      check_positive_finite(values[pos], i, j);
      grid[i][j] = values[pos];
      grid[j][i] = 1.0 / values[pos];
    }
  }
  return PCMatrix(grid);
}

std::vector<Triad> PCMatrix::triads() const {
  std::vector<Triad> out;
  if (n_ >= 3) {
    out.reserve(n_ * (n_ - 1) * (n_ - 2) / 6);
    for (std::size_t i = 0; i + 2 < n_; ++i) {
      for (std::size_t j = i + 1; j + 1 < n_; ++j) {
        for (std::size_t k = j + 1; k < n_; ++k) {
          out.push_back({at(i, j), at(i, k), at(j, k), i, j, k});
        }
      }
    }
  }
  return out;
}

bool PCMatrix::is_consistent(double tol) const {
  for (const Triad& t : triads()) {
    if (std::abs(t.y - t.x * t.z) > tol * std::abs(t.y)) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<double>> PCMatrix::rows() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      out[i][j] = at(i, j);
    }
  }
  return out;
}

AdditivePCMatrix::AdditivePCMatrix(
    const std::vector<std::vector<double>>& entries)
    : n_(entries.size()) {
  if (n_ < 2) {
    throw NotSquare("matrix dimension must be at least 2, got " +
                    std::to_string(n_));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (entries[i].size() != n_) {
      throw NotSquare("row " + std::to_string(i) + " has " +
                      std::to_string(entries[i].size()) + " entries, expected " +
                      std::to_string(n_));
    }
  }
  data_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!std::isfinite(entries[i][j])) {
        throw NonFiniteInput("entry " + cell(i, j) + " is not finite");
      }
      data_[i * n_ + j] = entries[i][j];
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (at(i, i) != 0.0) {
      throw ReciprocityViolation("diagonal entry " + cell(i, i) +
                                 " must equal 0");
    }
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (std::abs(at(i, j) + at(j, i)) > kSkewTol) {
        throw ReciprocityViolation("entries " + cell(i, j) + " and " +
                                   cell(j, i) + " are not skew-symmetric");
      }
    }
  }
}

std::vector<std::vector<double>> AdditivePCMatrix::rows() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      out[i][j] = at(i, j);
    }
  }
  return out;
}

AdditivePCMatrix to_additive(const PCMatrix& m) {
  const std::size_t n = m.size();
  // Mirror the upper triangle with exact negation so skew-symmetry is
  // not at the mercy of ln round-off on near-reciprocal pairs.
  std::vector<double> data(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::log(m.at(i, j));
      data[i * n + j] = v;
      data[j * n + i] = -v;
    }
  }
  return AdditivePCMatrix(n, std::move(data));
}

PCMatrix to_multiplicative(const AdditivePCMatrix& a) {
  const std::size_t n = a.size();
  std::vector<double> data(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::exp(a.at(i, j));
      if (!std::isfinite(v) || v <= 0.0) {
        throw NonPositiveEntry("exp of entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ") is not a positive finite ratio");
      }
      data[i * n + j] = v;
      data[j * n + i] = 1.0 / v;
    }
  }
  return PCMatrix(n, std::move(data));
}

}  // namespace pcm
