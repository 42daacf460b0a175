#include "diagcat/diagalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace diagcat {

int permutation_sign(const Permutation& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

int lds(const Permutation& p) {
  // Patience sorting on the negated sequence: longest strictly decreasing run.
  std::vector<int> tails;
  for (int v : p) {
    int x = -v;
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) tails.push_back(x);
    else *it = x;
  }
  return static_cast<int>(tails.size());
}

BrauerElement perm_embed(const Permutation& p, const Rational& delta) {
  return BrauerElement::of(BrauerDiagram::from_permutation(p), delta);
}

namespace {

Rational factorial(int m) {
  Rational f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

BrauerElement signed_average(int r, const Rational& delta, bool signed_sum) {
  BrauerElement out(r, r, delta);
  Rational w = 1 / factorial(r);
  for (const auto& p : enumerate_permutations(r))
    out.add(BrauerDiagram::from_permutation(p), signed_sum ? w * permutation_sign(p) : w);
  return out;
}

}  // namespace

BrauerElement perm_antisymmetriser(int r, const Rational& delta) { return signed_average(r, delta, true); }
BrauerElement perm_symmetriser(int r, const Rational& delta) { return signed_average(r, delta, false); }

BrauerElement brauer_E_average(int m, const Rational& delta) {
  if (m < 1) throw DomainError("brauer_E_average needs m >= 1");
  BrauerElement out(m, m, delta);
  Rational w = 1 / factorial(m);
  for (const auto& d : enumerate_brauer(m, m)) out.add(d, w);
  return out;
}

BrauerElement yang_baxter_R(int i, int k, const Rational& delta, int strands) {
  if (i < 1 || i >= strands) throw DomainError("R_i(k): index out of range");
  Rational pole_at = 2 - 2 * k;
  if (delta == pole_at) throw DomainError("R_i(k) has a pole at delta = " + to_string(pole_at));
  BrauerElement out = BrauerElement::identity(strands, delta);
  out.add(BrauerDiagram::crossing(strands, i - 1), k);
  out.add(BrauerDiagram::arc_pair(strands, i - 1), -Rational(2 * k) / (delta + 2 * k - 2));
  return out * Rational(1, k + 1);
}

BrauerElement yang_baxter_R_cleared(int i, int k, const Rational& delta, int strands) {
  if (i < 1 || i >= strands) throw DomainError("R_i(k): index out of range");
  Rational scale = delta + 2 * k - 2;
  BrauerElement out = BrauerElement::identity(strands, delta) * scale;
  out.add(BrauerDiagram::crossing(strands, i - 1), scale * k);
  out.add(BrauerDiagram::arc_pair(strands, i - 1), -2 * k);
  return out;
}

std::vector<int> crossing_labels(int strands, const std::vector<int>& word) {
  std::vector<int> at(strands);
  std::iota(at.begin(), at.end(), 1);
  std::vector<int> labels;
  for (int letter : word) {
    if (letter < 1 || letter >= strands) throw DomainError("word letter out of range");
    int a = at[letter - 1], b = at[letter];
    if (a > b) throw DomainError("word is not reduced: strings " + std::to_string(b) + " and " + std::to_string(a) + " cross twice");
    labels.push_back(b - a);
    std::swap(at[letter - 1], at[letter]);
  }
  return labels;
}

BrauerElement brauer_E_from_word(int n, const std::vector<int>& word, const Rational& delta) {
  int m = n + 1;
  if (static_cast<int>(word.size()) != m * (m - 1) / 2)
    throw DomainError("word does not have the length of the longest permutation");
  auto labels = crossing_labels(m, word);
  BrauerElement out = BrauerElement::identity(m, delta);
  for (size_t p = 0; p < word.size(); ++p) out = multiply(out, yang_baxter_R(word[p], labels[p], delta, m));
  return out;
}

std::vector<std::vector<int>> reduced_words_of_longest(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> at(m), word;
  std::iota(at.begin(), at.end(), 0);
  int target = m * (m - 1) / 2;
  std::function<void()> rec = [&] {
    if (static_cast<int>(word.size()) == target) {
      out.push_back(word);
      return;
    }
    for (int i = 1; i < m; ++i) {
      if (at[i - 1] > at[i]) continue;
      std::swap(at[i - 1], at[i]);
      word.push_back(i);
      rec();
      word.pop_back();
      std::swap(at[i - 1], at[i]);
    }
  };
  rec();
  return out;
}

Rational trace(const BrauerElement& a) {
  if (a.r() != a.s()) throw DomainError("trace needs a square element");
  int m = a.r();
  std::vector<Pair> nested;
  for (int i = 0; i < m; ++i) nested.push_back({i, 2 * m - 1 - i});
  auto eta = BrauerElement::of(BrauerDiagram::from_pairs(0, 2 * m, nested), a.delta());
  auto closed = multiply(eta, extend(a, m), star(eta));
  return closed.coeff(BrauerDiagram{0, 0, {}});
}

namespace {

std::vector<std::vector<Pair>> matchings_of(const std::vector<int>& pts) {
  std::vector<std::vector<Pair>> out;
  std::vector<Pair> cur;
  std::vector<bool> used(pts.size(), false);
  std::function<void()> rec = [&] {
    size_t a = 0;
    while (a < pts.size() && used[a]) ++a;
    if (a == pts.size()) {
      out.push_back(cur);
      return;
    }
    used[a] = true;
    for (size_t b = a + 1; b < pts.size(); ++b) {
      if (used[b]) continue;
      used[b] = true;
      cur.push_back({pts[a], pts[b]});
      rec();
      cur.pop_back();
      used[b] = false;
    }
    used[a] = false;
  };
  rec();
  return out;
}

}  // namespace

BrauerElement pfaffian(int r, int s, int n, const std::vector<int>& points, const std::vector<Pair>& f,
                       const Rational& delta) {
  if (static_cast<int>(points.size()) != 2 * (n + 1)) throw DomainError("pfaffian: need exactly 2(n+1) free points");
  std::vector<int> covered(r + s, 0);
  for (int p : points) {
    if (p < 0 || p >= r + s) throw DomainError("pfaffian: point out of range");
    ++covered[p];
  }
  for (auto [a, b] : f) {
    if (a < 0 || b < 0 || a >= r + s || b >= r + s) throw DomainError("pfaffian: point out of range");
    ++covered[a];
    ++covered[b];
  }
  for (int c : covered)
    if (c != 1) throw DomainError("pfaffian: f and the free points must partition all points");
  std::vector<int> pts = points;
  std::sort(pts.begin(), pts.end());
  BrauerElement out(r, s, delta);
  for (auto& m : matchings_of(pts)) {
    m.insert(m.end(), f.begin(), f.end());
    out.add(BrauerDiagram::from_pairs(r, s, m), 1);
  }
  return out;
}

BrauerElement reduce_to_noncrossing(const BrauerElement& a, int n) {
  if (n < 1) throw DomainError("reduce_to_noncrossing needs n >= 1");
  using Key = std::pair<int, BrauerDiagram>;
  std::map<Key, Rational> pending;
  for (const auto& [d, c] : a.terms()) pending[{crossing_pairs(d), d}] += c;
  BrauerElement out(a.r(), a.s(), a.delta());
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    auto [crossings, d] = it->first;
    Rational c = it->second;
    pending.erase(it);
    if (c == 0) continue;
    auto strands = find_j_crossing(d, n + 1);
    if (strands.empty()) {
      out.add(d, c);
      continue;
    }
    std::vector<int> pts;
    for (auto [x, y] : strands) pts.insert(pts.end(), {x, y});
    std::sort(pts.begin(), pts.end());
    std::vector<Pair> rest;
    for (auto pr : d.pairs())
      if (std::find(strands.begin(), strands.end(), pr) == strands.end()) rest.push_back(pr);
    for (auto& m : matchings_of(pts)) {
      m.insert(m.end(), rest.begin(), rest.end());
      auto e = BrauerDiagram::from_pairs(d.r, d.s, m);
      if (e == d) continue;
      int ce = crossing_pairs(e);
      if (ce >= crossings) throw InternalError("rewrite did not reduce the crossing count");
      pending[{ce, e}] -= c;
    }
  }
  return out;
}

std::vector<PartitionDiagram> coarsenings(const PartitionDiagram& d) {
  int k = d.block_count();
  std::vector<PartitionDiagram> out;
  for (const auto& merge : enumerate_setpartitions(k, k)) {
    std::vector<int> labels(d.size());
    for (int p = 0; p < d.size(); ++p) labels[p] = merge.block[d.block[p]];
    out.push_back(PartitionDiagram::from_labels(d.r, d.s, labels));
  }
  return out;
}

PartitionElement partition_xd(const PartitionDiagram& d, const Rational& delta) {
  PartitionElement out(d.r, d.s, delta);
  int k = d.block_count();
  for (const auto& merge : enumerate_setpartitions(k, k)) {
    std::vector<int> labels(d.size());
    for (int p = 0; p < d.size(); ++p) labels[p] = merge.block[d.block[p]];
    // Möbius function of the partition lattice: Π (-1)^{j-1} (j-1)! over merged groups of size j.
    Rational mu = 1;
    std::vector<int> group_size(merge.block_count(), 0);
    for (int b : merge.block) ++group_size[b];
    for (int j : group_size) {
      mu *= factorial(j - 1);
      if ((j - 1) % 2) mu = -mu;
    }
    out.add(PartitionDiagram::from_labels(d.r, d.s, labels), mu);
  }
  return out;
}

PartitionElement partition_s(int m, int i, const Rational& delta) {
  if (i < 1 || i >= m) throw DomainError("s_i: index out of range");
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[i - 1], p[i]);
  return PartitionElement::of(PartitionDiagram::from_permutation(p), delta);
}

PartitionElement partition_h(int m, int i, const Rational& delta) {
  if (i < 1 || i >= m) throw DomainError("h_i: index out of range");
  std::vector<int> labels(2 * m);
  for (int j = 0; j < m; ++j) labels[j] = labels[m + j] = j;
  labels[i] = labels[m + i] = i - 1;
  return PartitionElement::of(PartitionDiagram::from_labels(m, m, labels), delta);
}

PartitionElement partition_p(int m, int i, const Rational& delta) {
  if (i < 1 || i > m) throw DomainError("p_i: index out of range");
  std::vector<int> labels(2 * m);
  for (int j = 0; j < m; ++j) labels[j] = labels[m + j] = j;
  labels[m + i - 1] = m;
  return PartitionElement::of(PartitionDiagram::from_labels(m, m, labels), delta);
}

PartitionIdempotents partition_idempotent_recursion(int r, const Rational& delta) {
  if (r < 1) throw DomainError("partition_idempotent_recursion needs r >= 1");
  PartitionElement e_prime = PartitionElement::identity(1, delta);
  PartitionElement e = e_prime;
  for (int m = 1; m <= r; ++m) {
    Rational pole = 2 * m - 2;
    if (delta == pole) throw DomainError("E(" + std::to_string(m) + ") has a pole at delta = " + to_string(pole));
    PartitionElement middle = PartitionElement::identity(m, delta);
    if (m >= 2) middle += partition_s(m, m - 1, delta) * Rational(m - 1);
    middle -= partition_p(m, m, delta) * (1 / (delta - 2 * m + 2));
    e = multiply(e_prime, middle, e_prime) * Rational(1, m);
    if (m == r) break;
    Rational pole2 = 2 * m - 1;
    if (delta == pole2) throw DomainError("E'(" + std::to_string(m + 1) + ") has a pole at delta = " + to_string(pole2));
    PartitionElement up = extend(e);
    PartitionElement join = PartitionElement::identity(m + 1, delta) -
                            partition_h(m + 1, m, delta) * (Rational(m) * (delta - 2 * m + 2) / (delta - 2 * m + 1));
    e_prime = multiply(up, join, up);
  }
  return {e, e_prime};
}

}  // namespace diagcat
