#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "diagcat/rational.hpp"

namespace diagcat {

/// Dense polynomial in q with exact rational coefficients.
/// Trailing zeros are always stripped, so the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly monomial(int exponent, const Rational& c = 1);
  static QPoly from_ints(const std::vector<long>& coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int exponent) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_integral() const;
  Rational at_one() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact division; throws DomainError when the remainder is nonzero.
  QPoly divide_exact(const QPoly& divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// [m]_q = 1 + q + ... + q^{m-1}.
QPoly q_integer(int m);
QPoly q_factorial(int m);
QPoly qbinomial(int m, int k);
QPoly qmultinomial(const std::vector<int>& parts);

/// Folds every exponent e onto e mod r.
QPoly reduce_mod_cyclic(const QPoly& p, int r);

}  // namespace diagcat
