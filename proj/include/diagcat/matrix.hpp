#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagcat/rational.hpp"

namespace diagcat {

/// Dense row-major matrix over the rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Rational& c, ExactMatrix a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  std::size_t rank() const;
  /// Unique solution of A x = b for square invertible A; nullopt when singular.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

ExactMatrix kronecker_product(const ExactMatrix& a, const ExactMatrix& b);

/// Sparse vector indexed by flattened tensor positions.
using SparseVector = std::map<std::uint64_t, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

/// Incrementally maintained row echelon form; each row's pivot is its smallest index.
class EchelonBasis {
 public:
  /// Returns true when v was independent of the rows so far.
  bool insert(SparseVector v);
  std::size_t rank() const { return rows_.size(); }
  std::vector<std::uint64_t> pivots() const;

 private:
  std::map<std::uint64_t, SparseVector> rows_;
};

std::size_t sparse_rank(const std::vector<SparseVector>& vectors);

}  // namespace diagcat
