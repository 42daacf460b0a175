#include "diagcat/qpoly.hpp"

#include <sstream>

#include "diagcat/errors.hpp"

namespace diagcat {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) throw DomainError("not a rational: " + s);
  Integer n(num), d(den);
  if (d == 0) throw DomainError("zero denominator: " + s);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(int exponent, const Rational& c) {
  if (exponent < 0) throw DomainError("negative exponent");
  std::vector<Rational> v(exponent + 1);
  v[exponent] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[exponent];
}

bool QPoly::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

Rational QPoly::at_one() const {
  Rational s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  int dd = divisor.degree();
  int qd = degree() - dd;
  if (qd < 0) {
    if (!is_zero()) throw DomainError("polynomial division leaves a remainder");
    return {};
  }
  std::vector<Rational> quot(qd + 1);
  const Rational& lead = divisor.coeffs_.back();
  for (int i = qd; i >= 0; --i) {
    Rational c = rem[i + dd] / lead;
    quot[i] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= c * divisor.coeffs_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw DomainError("polynomial division leaves a remainder");
  return QPoly(std::move(quot));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t e = 0; e < coeffs_.size(); ++e) {
    const Rational& c = coeffs_[e];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = mag == 1 && e != 0;
    if (!unit) os << mag.get_str();
    if (e >= 1) os << "q";
    if (e >= 2) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

QPoly q_integer(int m) {
  if (m < 0) throw DomainError("q_integer needs m >= 0");
  return QPoly(std::vector<Rational>(m, Rational(1)));
}

QPoly q_factorial(int m) {
  QPoly out = QPoly::constant(1);
  for (int i = 2; i <= m; ++i) out *= q_integer(i);
  return out;
}

QPoly qbinomial(int m, int k) {
  if (m < 0 || k < 0 || k > m) throw DomainError("qbinomial needs 0 <= k <= m");
  // Pascal-style recurrence: [m,k] = [m-1,k-1] + q^k [m-1,k].
  std::vector<QPoly> row{QPoly::constant(1)};
  for (int i = 1; i <= m; ++i) {
    std::vector<QPoly> next(i + 1);
    for (int j = 0; j <= i; ++j) {
      QPoly v;
      if (j >= 1) v += row[j - 1];
      if (j <= i - 1) v += row[j] * QPoly::monomial(j);
      next[j] = std::move(v);
    }
    row = std::move(next);
  }
  return row[k];
}

QPoly qmultinomial(const std::vector<int>& parts) {
  QPoly out = QPoly::constant(1);
  int total = 0;
  for (int p : parts) {
    if (p < 0) throw DomainError("negative part");
    total += p;
    out *= qbinomial(total, p);
  }
  return out;
}

QPoly reduce_mod_cyclic(const QPoly& p, int r) {
  if (r <= 0) throw DomainError("reduce_mod_cyclic needs r >= 1");
  std::vector<Rational> out(r);
  for (size_t e = 0; e < p.coeffs().size(); ++e) out[e % r] += p.coeffs()[e];
  return QPoly(std::move(out));
}

}  // namespace diagcat
