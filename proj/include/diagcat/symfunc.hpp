#pragma once

#include <climits>
#include <map>
#include <string>
#include <vector>

#include "diagcat/qpoly.hpp"
#include "diagcat/rational.hpp"
#include "diagcat/tableaux.hpp"

namespace diagcat {

/// Symmetric function in one or more named alphabets, stored in the tensor power-sum basis.
/// A key holds one partition per alphabet; each alphabet carries a degree cap above which
/// terms are dropped, which is how series such as H are represented.
class SymFunc {
 public:
  using Key = std::vector<Partition>;
  static constexpr int kNoCap = INT_MAX;

  SymFunc() : SymFunc(std::vector<std::string>{"X"}) {}
  explicit SymFunc(std::vector<std::string> alphabets, std::vector<int> caps = {});

  static SymFunc one(std::vector<std::string> alphabets = {"X"});
  static SymFunc constant(const Rational& c, std::vector<std::string> alphabets = {"X"});
  /// p_λ in a single alphabet.
  static SymFunc power_sum(const Partition& lambda, const std::string& alphabet = "X");

  const std::vector<std::string>& alphabets() const { return alphabets_; }
  const std::vector<int>& caps() const { return caps_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  int alphabet_index(const std::string& name) const;  // -1 when absent
  bool is_zero() const { return terms_.empty(); }

  /// Adds c·p_key, dropping it if it exceeds a cap.
  void add_term(const Key& key, const Rational& c);
  Rational coeff(const Key& key) const;
  /// Coefficient of p_λ for a univariate function.
  Rational coeff(const Partition& lambda) const { return coeff(Key{lambda}); }

  /// Same function with a tighter cap on one alphabet.
  SymFunc with_cap(const std::string& alphabet, int cap) const;
  SymFunc renamed(const std::string& from, const std::string& to) const;
  /// Re-expresses this function over a superset of its alphabets, in the given order.
  SymFunc over(const std::vector<std::string>& alphabets) const;
  /// Terms whose degree in the alphabet equals `degree`.
  SymFunc homogeneous_part(const std::string& alphabet, int degree) const;

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const Rational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
  /// Equality of term maps after aligning alphabets; caps are ignored.
  friend bool operator==(const SymFunc& a, const SymFunc& b);

  std::string to_string() const;

 private:
  std::vector<std::string> alphabets_;
  std::vector<int> caps_;
  std::map<Key, Rational> terms_;
};

enum class Basis { h, e, s };

SymFunc basis_to_p(Basis basis, const Partition& lambda, const std::string& alphabet = "X");
inline SymFunc h_fn(int r, const std::string& a = "X") { return basis_to_p(Basis::h, r ? Partition{r} : Partition{}, a); }
inline SymFunc e_fn(int r, const std::string& a = "X") { return basis_to_p(Basis::e, r ? Partition{r} : Partition{}, a); }
inline SymFunc schur(const Partition& l, const std::string& a = "X") { return basis_to_p(Basis::s, l, a); }

/// χ^λ(μ) by the Murnaghan–Nakayama rule.
Integer character_value(const Partition& lambda, const Partition& mu);
/// s_λ as Σ_μ χ^λ(μ) p_μ / z_μ; the independent route to basis_to_p(s, λ).
SymFunc schur_by_characters(const Partition& lambda, const std::string& alphabet = "X");

std::map<Partition, Rational> p_to_schur(const SymFunc& f, int degree);

SymFunc multiply(const SymFunc& f, const SymFunc& g);
SymFunc plethysm(const SymFunc& f, const SymFunc& g);
SymFunc kronecker(const SymFunc& f, const SymFunc& g);
SymFunc scalar_product(const SymFunc& f, const SymFunc& g, const std::string& alphabet);
SymFunc diagonal(const SymFunc& f, const std::string& result_alphabet = "X");
QPoly fake_degree(const SymFunc& f);

/// Σ_{j ≤ cap} h_j: the truncated series H.
SymFunc complete_series(int cap, const std::string& alphabet = "X");
/// Σ_{1 ≤ j ≤ cap} h_j.
SymFunc complete_series_plus(int cap, const std::string& alphabet = "X");
/// Σ_{1 ≤ m ≤ cap} p_1^m, the character of nonempty linear orders.
SymFunc linear_orders_plus(int cap, const std::string& alphabet = "X");

/// Named character families; all return a function of X.
SymFunc sp_matchings_character(int r, int n);
SymFunc sp_sympower_character(int r, int n, int k);
SymFunc sp_fundamental_character(int r, int n, int k);
SymFunc regular_graphs_character(int r, int k);
SymFunc sym_sets_character(int r, int n);
SymFunc sym_multiset_character(int r, int n, int k, char mode);
SymFunc gl_adjoint_character(int r, int n);
SymFunc permutations_character(int r);

struct FamilyParams {
  int r = 0, n = 0, k = 0;
  char mode = 'h';
};
/// Dispatch by family name; unknown names throw DomainError.
SymFunc invariant_character(const std::string& family, const FamilyParams& params);

bool cauchy_diagonal_identity_check(const Partition& alpha, const Partition& beta, int maxdeg);

}  // namespace diagcat
