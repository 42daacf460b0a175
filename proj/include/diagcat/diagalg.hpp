#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diagcat/diagrams.hpp"
#include "diagcat/errors.hpp"
#include "diagcat/rational.hpp"

namespace diagcat {

inline std::string kind_name(const BrauerDiagram&) { return "brauer"; }
inline std::string kind_name(const PartitionDiagram&) { return "partition"; }
inline std::string kind_name(const DirectedDiagram&) { return "directed"; }

/// Boundary data beyond (r,s) that every term must share; only directed diagrams carry any.
inline std::string boundary_words(const BrauerDiagram&) { return {}; }
inline std::string boundary_words(const PartitionDiagram&) { return {}; }
inline std::string boundary_words(const DirectedDiagram& d) { return d.domain_word() + "|" + d.codomain_word(); }

/// Finite rational combination of diagrams in one Hom(r,s), at loop value δ.
template <class D>
class DiagElement {
 public:
  DiagElement(int r, int s, Rational delta) : r_(r), s_(s), delta_(std::move(delta)) {}

  static DiagElement of(const D& d, const Rational& delta, const Rational& c = 1) {
    DiagElement e(d.r, d.s, delta);
    e.add(d, c);
    return e;
  }
  static DiagElement identity(int m, const Rational& delta) {
    return of(D::identity(m), delta);
  }

  int r() const { return r_; }
  int s() const { return s_; }
  const Rational& delta() const { return delta_; }
  const std::map<D, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const D& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const D& d, const Rational& c) {
    if (d.r != r_ || d.s != s_) throw DomainError("diagram does not lie in this Hom space");
    if (c == 0) return;
    std::string w = boundary_words(d);
    if (terms_.empty() && words_.empty()) words_ = w;
    else if (w != words_) throw DomainError("diagram boundary words differ within one element");
    auto [it, fresh] = terms_.try_emplace(d, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  DiagElement& operator+=(const DiagElement& o) {
    same_space(o);
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  DiagElement& operator-=(const DiagElement& o) {
    same_space(o);
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  DiagElement& operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [d, v] : terms_) v *= c;
    return *this;
  }
  friend DiagElement operator+(DiagElement a, const DiagElement& b) { return a += b; }
  friend DiagElement operator-(DiagElement a, const DiagElement& b) { return a -= b; }
  friend DiagElement operator*(DiagElement a, const Rational& c) { return a *= c; }
  friend DiagElement operator*(const Rational& c, DiagElement a) { return a *= c; }
  friend bool operator==(const DiagElement& a, const DiagElement& b) {
    return a.r_ == b.r_ && a.s_ == b.s_ && a.delta_ == b.delta_ && a.terms_ == b.terms_;
  }

 private:
  void same_space(const DiagElement& o) const {
    if (o.r_ != r_ || o.s_ != s_) throw DomainError("elements live in different Hom spaces");
    if (o.delta_ != delta_) throw DomainError("elements have different loop values");
  }

  int r_, s_;
  Rational delta_;
  std::string words_;
  std::map<D, Rational> terms_;
};

using BrauerElement = DiagElement<BrauerDiagram>;
using PartitionElement = DiagElement<PartitionDiagram>;
using DirectedElement = DiagElement<DirectedDiagram>;

inline Rational power(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

/// a then b; each closed loop contributes a factor δ.
template <class D>
DiagElement<D> multiply(const DiagElement<D>& a, const DiagElement<D>& b) {
  if (a.s() != b.r()) throw DomainError("multiply: Hom types do not chain");
  if (a.delta() != b.delta()) throw DomainError("multiply: loop values differ");
  DiagElement<D> out(a.r(), b.s(), a.delta());
  std::map<int, Rational> powers;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      auto comp = compose(x, y);
      auto it = powers.find(comp.loops);
      if (it == powers.end()) it = powers.emplace(comp.loops, power(a.delta(), comp.loops)).first;
      out.add(comp.diagram, cx * cy * it->second);
    }
  return out;
}

template <class D, class... Rest>
DiagElement<D> multiply(const DiagElement<D>& a, const DiagElement<D>& b, const Rest&... rest) {
  return multiply(multiply(a, b), rest...);
}

template <class D>
DiagElement<D> tensor(const DiagElement<D>& a, const DiagElement<D>& b) {
  if (a.delta() != b.delta()) throw DomainError("tensor: loop values differ");
  DiagElement<D> out(a.r() + b.r(), a.s() + b.s(), a.delta());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) out.add(tensor(x, y), cx * cy);
  return out;
}

template <class D>
DiagElement<D> star(const DiagElement<D>& a) {
  DiagElement<D> out(a.s(), a.r(), a.delta());
  for (const auto& [x, c] : a.terms()) out.add(star(x), c);
  return out;
}

/// a ⊗ id_m.
template <class D>
DiagElement<D> extend(const DiagElement<D>& a, int m = 1) {
  return tensor(a, DiagElement<D>::identity(m, a.delta()));
}

int permutation_sign(const Permutation& p);
int lds(const Permutation& p);
BrauerElement perm_embed(const Permutation& p, const Rational& delta = 0);
BrauerElement perm_antisymmetriser(int r, const Rational& delta = 0);
BrauerElement perm_symmetriser(int r, const Rational& delta = 0);

BrauerElement brauer_E_average(int m, const Rational& delta);
/// R_i(k) on the given number of strands; i is 1-based as in s_i.
BrauerElement yang_baxter_R(int i, int k, const Rational& delta, int strands);
/// (k+1)(δ+2k−2)·R_i(k), which has no pole; both sides of the braid identity carry the same factors.
BrauerElement yang_baxter_R_cleared(int i, int k, const Rational& delta, int strands);
/// Product of R_{i_p}(k_p) along a reduced word (1-based letters) for the longest element of S_{n+1}.
BrauerElement brauer_E_from_word(int n, const std::vector<int>& word, const Rational& delta);
/// Labels k_p = b_p - a_p for a reduced word; throws DomainError if the word is not reduced.
std::vector<int> crossing_labels(int strands, const std::vector<int>& word);
/// Every reduced word (1-based letters) of the longest element of S_m.
std::vector<std::vector<int>> reduced_words_of_longest(int m);

/// Closure by nested arcs: η·(a ⊗ id_m)·η*.
Rational trace(const BrauerElement& a);

/// Σ over matchings s of the points S of (s ∪ f) in D(r,s_), all coefficients 1.
BrauerElement pfaffian(int r, int s, int n, const std::vector<int>& points, const std::vector<Pair>& f,
                       const Rational& delta = 0);
/// Rewrites a modulo Pfaffians of order 2(n+1) until only (n+1)-noncrossing diagrams remain.
BrauerElement reduce_to_noncrossing(const BrauerElement& a, int n);

/// x_d by Möbius inversion over coarsenings of d.
PartitionElement partition_xd(const PartitionDiagram& d, const Rational& delta = 0);
/// All coarsenings of d (every block of d inside a block of the result), d included.
std::vector<PartitionDiagram> coarsenings(const PartitionDiagram& d);

/// Generators of the partition algebra on m strands; i is 1-based.
PartitionElement partition_s(int m, int i, const Rational& delta);
/// One block {i, i+1, i', (i+1)'}.
PartitionElement partition_h(int m, int i, const Rational& delta);
/// Singletons {i} and {i'}.
PartitionElement partition_p(int m, int i, const Rational& delta);

struct PartitionIdempotents {
  PartitionElement E;        // E(r), on r strands
  PartitionElement E_prime;  // E'(r), on r strands
};
/// The recursion starting from E'(1) = 1; throws DomainError at a pole.
PartitionIdempotents partition_idempotent_recursion(int r, const Rational& delta);

}  // namespace diagcat
