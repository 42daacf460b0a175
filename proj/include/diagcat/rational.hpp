#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace diagcat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "a/b" or "-a/b"; throws DomainError on junk or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace diagcat
