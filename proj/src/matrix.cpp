#include "diagcat/matrix.hpp"

#include "diagcat/errors.hpp"

namespace diagcat {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: shapes do not chain");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b.at(k, j) != 0) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum: shapes differ");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ExactMatrix operator*(const Rational& c, ExactMatrix a) {
  for (auto& x : a.data_) x *= c;
  return a;
}

std::size_t ExactMatrix::rank() const {
  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && m[piv][col] == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < cols_; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> ExactMatrix::solve(const std::vector<Rational>& b) const {
  if (rows_ != cols_ || b.size() != rows_) throw DomainError("solve needs a square system");
  std::size_t n = rows_;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = at(i, j);
    m[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

ExactMatrix kronecker_product(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return out;
}

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    auto [it, fresh] = y.try_emplace(i, a * v);
    if (!fresh) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

bool EchelonBasis::insert(SparseVector v) {
  while (!v.empty()) {
    auto [pivot, lead] = *v.begin();
    auto it = rows_.find(pivot);
    if (it == rows_.end()) {
      rows_.emplace(pivot, std::move(v));
      return true;
    }
    Rational f = -lead / it->second.begin()->second;
    axpy(v, f, it->second);
  }
  return false;
}

std::vector<std::uint64_t> EchelonBasis::pivots() const {
  std::vector<std::uint64_t> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::size_t sparse_rank(const std::vector<SparseVector>& vectors) {
  EchelonBasis basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

}  // namespace diagcat
