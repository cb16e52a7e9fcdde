#pragma once

#include <cstddef>
#include <vector>

#include "pcm/errors.hpp"

namespace pcm {

class AdditivePCMatrix;

// One triple (m_ij, m_ik, m_jk) for indices i < j < k, the minimal cycle
// on which inconsistency can occur.
struct Triad {
  double x = 1.0;  // m_ij
  double y = 1.0;  // m_ik
  double z = 1.0;  // m_jk
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 2;
};

// n x n multiplicative reciprocal matrix of positive ratios.
// Immutable after construction; construction validates:
//   - unit diagonal (exact),
//   - reciprocity a_ij * a_ji = 1 within 1e-12 relative,
//   - all entries strictly positive and finite.
class PCMatrix {
 public:
  static constexpr double kReciprocityTol = 1e-12;

  explicit PCMatrix(const std::vector<std::vector<double>>& entries);

  // Builds the matrix from the row-major upper triangle; the lower
  // triangle is filled with exact reciprocals, so reciprocity holds by
  // construction. Expects n*(n-1)/2 positive finite values.
  static PCMatrix from_upper_triangle(std::size_t n,
                                      const std::vector<double>& values);

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  // All C(n,3) triads in lexicographic (i,j,k) order; empty for n = 2.
  std::vector<Triad> triads() const;

  // True iff every triad satisfies |y - x*z| <= tol * |y|.
  bool is_consistent(double tol) const;

  std::vector<std::vector<double>> rows() const;

 private:
  PCMatrix(std::size_t n, std::vector<double> data)
      : n_(n), data_(std::move(data)) {}

  std::size_t n_;
  std::vector<double> data_;  // row-major

  friend PCMatrix to_multiplicative(const AdditivePCMatrix&);
};

// n x n skew-symmetric matrix of differences (the additive model of
// pairwise comparisons). Zero diagonal, entries[j][i] = -entries[i][j]
// within 1e-12 absolute.
class AdditivePCMatrix {
 public:
  static constexpr double kSkewTol = 1e-12;

  explicit AdditivePCMatrix(const std::vector<std::vector<double>>& entries);

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::vector<std::vector<double>> rows() const;

 private:
  AdditivePCMatrix(std::size_t n, std::vector<double> data)
      : n_(n), data_(std::move(data)) {}

  std::size_t n_;
  std::vector<double> data_;

  friend AdditivePCMatrix to_additive(const PCMatrix&);
};

// Elementwise ln / exp bridge between the multiplicative and additive
// models. The round trip is the identity within 1e-12 relative.
AdditivePCMatrix to_additive(const PCMatrix& m);
PCMatrix to_multiplicative(const AdditivePCMatrix& a);

}  // namespace pcm
