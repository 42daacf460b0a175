#include "diagcat/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "diagcat/errors.hpp"

namespace diagcat {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void check_matching(const std::vector<int>& partner) {
  int n = static_cast<int>(partner.size());
  for (int p = 0; p < n; ++p)
    if (partner[p] < 0 || partner[p] >= n || partner[p] == p || partner[partner[p]] != p)
      throw DomainError("not a perfect matching");
}

/// Label of composite point q in the (r+s+t)-point stacking, for x's and y's own labels.
struct Stack {
  int r, s, t;
  int from_x(int p) const { return p; }
  int from_y(int p) const { return r + p; }
  bool outer(int q) const { return q < r || q >= r + s; }
  /// Composite label to the label in the result diagram.
  int result_label(int q) const { return q < r ? q : q - s; }
};

void require_chain(int s_of_x, int r_of_y) {
  if (s_of_x != r_of_y) throw DomainError("compose: arities do not chain");
}

std::vector<int> relabel_star(int r, int s) {
  // Position map from the old labels to the labels after a half turn.
  std::vector<int> to(r + s);
  for (int i = 0; i < r; ++i) to[i] = s + (r - 1 - i);
  for (int j = 0; j < s; ++j) to[r + j] = s - 1 - j;
  return to;
}

std::vector<int> tensor_map_left(int r1, int s1, int r2) {
  std::vector<int> to(r1 + s1);
  for (int i = 0; i < r1; ++i) to[i] = i;
  for (int j = 0; j < s1; ++j) to[r1 + j] = r1 + r2 + j;
  return to;
}

std::vector<int> tensor_map_right(int r1, int s1, int r2, int s2) {
  std::vector<int> to(r2 + s2);
  for (int i = 0; i < r2; ++i) to[i] = r1 + i;
  for (int j = 0; j < s2; ++j) to[r2 + j] = r1 + r2 + s1 + j;
  return to;
}

void guard(long double count, const char* what) {
  if (count > static_cast<long double>(kEnumerationLimit))
    throw ResourceError(std::string("enumeration too large: ") + what);
}

}  // namespace

long long double_factorial(int odd) {
  long long v = 1;
  for (int i = odd; i > 1; i -= 2) v *= i;
  return v;
}

long long bell_number(int m) {
  std::vector<long long> row{1};
  for (int i = 0; i < m; ++i) {
    std::vector<long long> next{row.back()};
    for (long long x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

// ---------- Brauer ----------

BrauerDiagram BrauerDiagram::from_pairs(int r, int s, const std::vector<Pair>& pairs) {
  if (r < 0 || s < 0 || (r + s) % 2) throw DomainError("Brauer diagram needs r+s even");
  BrauerDiagram d{r, s, std::vector<int>(r + s, -1)};
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= r + s || b >= r + s || d.partner[a] != -1 || d.partner[b] != -1 || a == b)
      throw DomainError("invalid pair list");
    d.partner[a] = b;
    d.partner[b] = a;
  }
  check_matching(d.partner);
  return d;
}

BrauerDiagram BrauerDiagram::identity(int m) {
  Permutation id(m);
  std::iota(id.begin(), id.end(), 0);
  return from_permutation(id);
}

BrauerDiagram BrauerDiagram::from_permutation(const Permutation& perm) {
  int m = static_cast<int>(perm.size());
  std::vector<Pair> pairs;
  for (int i = 0; i < m; ++i) pairs.push_back({i, m + perm[i]});
  return from_pairs(m, m, pairs);
}

BrauerDiagram BrauerDiagram::cup() { return from_pairs(0, 2, {{0, 1}}); }
BrauerDiagram BrauerDiagram::cap() { return from_pairs(2, 0, {{0, 1}}); }

BrauerDiagram BrauerDiagram::crossing(int m, int i) {
  if (i < 0 || i + 1 >= m) throw DomainError("crossing index out of range");
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[i], p[i + 1]);
  return from_permutation(p);
}

BrauerDiagram BrauerDiagram::arc_pair(int m, int i) {
  if (i < 0 || i + 1 >= m) throw DomainError("arc index out of range");
  std::vector<Pair> pairs{{i, i + 1}, {m + i, m + i + 1}};
  for (int j = 0; j < m; ++j)
    if (j != i && j != i + 1) pairs.push_back({j, m + j});
  return from_pairs(m, m, pairs);
}

std::vector<Pair> BrauerDiagram::pairs() const {
  std::vector<Pair> out;
  for (int p = 0; p < size(); ++p)
    if (p < partner[p]) out.push_back({p, partner[p]});
  return out;
}

Composite<BrauerDiagram> compose(const BrauerDiagram& x, const BrauerDiagram& y) {
  require_chain(x.s, y.r);
  Stack st{x.r, x.s, y.s};
  int n = x.r + x.s + y.s;
  UnionFind uf(n);
  for (auto [a, b] : x.pairs()) uf.unite(st.from_x(a), st.from_x(b));
  for (auto [a, b] : y.pairs()) uf.unite(st.from_y(a), st.from_y(b));
  std::map<int, std::vector<int>> outer_in_class;
  for (int q = 0; q < n; ++q)
    if (st.outer(q)) outer_in_class[uf.find(q)].push_back(st.result_label(q));
  std::vector<Pair> pairs;
  for (auto& [root, pts] : outer_in_class) pairs.push_back({pts[0], pts[1]});
  int loops = 0;
  std::vector<bool> seen(n, false);
  for (int q = x.r; q < x.r + x.s; ++q) {
    int root = uf.find(q);
    if (seen[root] || outer_in_class.count(root)) continue;
    seen[root] = true;
    ++loops;
  }
  return {BrauerDiagram::from_pairs(x.r, y.s, pairs), loops};
}

BrauerDiagram tensor(const BrauerDiagram& x, const BrauerDiagram& y) {
  auto lx = tensor_map_left(x.r, x.s, y.r);
  auto ly = tensor_map_right(x.r, x.s, y.r, y.s);
  std::vector<Pair> pairs;
  for (auto [a, b] : x.pairs()) pairs.push_back({lx[a], lx[b]});
  for (auto [a, b] : y.pairs()) pairs.push_back({ly[a], ly[b]});
  return BrauerDiagram::from_pairs(x.r + y.r, x.s + y.s, pairs);
}

BrauerDiagram star(const BrauerDiagram& x) {
  auto to = relabel_star(x.r, x.s);
  std::vector<Pair> pairs;
  for (auto [a, b] : x.pairs()) pairs.push_back({to[a], to[b]});
  return BrauerDiagram::from_pairs(x.s, x.r, pairs);
}

int propagating_number(const BrauerDiagram& x) {
  int c = 0;
  for (int i = 0; i < x.r; ++i) c += x.partner[i] >= x.r;
  return c;
}

int crossing_pairs(const BrauerDiagram& m) {
  auto ps = m.pairs();
  int c = 0;
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = 0; j < ps.size(); ++j) {
      auto [a1, b1] = ps[i];
      auto [a2, b2] = ps[j];
      if (a1 < a2 && a2 < b1 && b1 < b2) ++c;
    }
  return c;
}

std::vector<Pair> find_j_crossing(const BrauerDiagram& m, int j) {
  auto ps = m.pairs();  // sorted by left endpoint
  if (j <= 0) return {};
  int k = static_cast<int>(ps.size());
  std::vector<Pair> chosen;
  // Pairwise crossing strands: increasing left ends, increasing right ends, every left end before the first right end.
  std::function<bool(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == j) return true;
    for (int i = start; i < k; ++i) {
      if (k - i < j - static_cast<int>(chosen.size())) return false;
      auto [a, b] = ps[i];
      if (!chosen.empty() && (a >= chosen.front().second || b <= chosen.back().second)) continue;
      chosen.push_back(ps[i]);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0) ? chosen : std::vector<Pair>{};
}

bool has_j_crossing(const BrauerDiagram& m, int j) {
  if (j <= 0) return true;
  return !find_j_crossing(m, j).empty();
}

BrauerDiagram rotate(const BrauerDiagram& m, int shift) {
  if (m.r != 0) throw DomainError("rotate acts on D(0,k)");
  int k = m.s;
  if (k == 0) return m;
  std::vector<Pair> pairs;
  for (auto [a, b] : m.pairs()) pairs.push_back({((a + shift) % k + k) % k, ((b + shift) % k + k) % k});
  return BrauerDiagram::from_pairs(0, k, pairs);
}

// ---------- Partition ----------

PartitionDiagram PartitionDiagram::from_labels(int r, int s, const std::vector<int>& labels) {
  if (r < 0 || s < 0 || static_cast<int>(labels.size()) != r + s) throw DomainError("label count mismatch");
  PartitionDiagram d{r, s, std::vector<int>(r + s)};
  std::map<int, int> renumber;
  for (int p = 0; p < r + s; ++p) {
    auto [it, fresh] = renumber.try_emplace(labels[p], static_cast<int>(renumber.size()));
    d.block[p] = it->second;
  }
  return d;
}

PartitionDiagram PartitionDiagram::from_blocks(int r, int s, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(r + s, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("empty block");
    for (int p : blocks[b]) {
      if (p < 0 || p >= r + s || labels[p] != -1) throw DomainError("blocks do not form a set partition");
      labels[p] = static_cast<int>(b);
    }
  }
  for (int l : labels)
    if (l < 0) throw DomainError("blocks do not cover every point");
  return from_labels(r, s, labels);
}

PartitionDiagram PartitionDiagram::identity(int m) {
  Permutation id(m);
  std::iota(id.begin(), id.end(), 0);
  return from_permutation(id);
}

PartitionDiagram PartitionDiagram::from_permutation(const Permutation& perm) {
  return from_brauer(BrauerDiagram::from_permutation(perm));
}

PartitionDiagram PartitionDiagram::from_brauer(const BrauerDiagram& b) {
  std::vector<std::vector<int>> blocks;
  for (auto [x, y] : b.pairs()) blocks.push_back({x, y});
  return from_blocks(b.r, b.s, blocks);
}

int PartitionDiagram::block_count() const {
  return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
}

std::vector<std::vector<int>> PartitionDiagram::blocks() const {
  std::vector<std::vector<int>> out(block_count());
  for (int p = 0; p < size(); ++p) out[block[p]].push_back(p);
  return out;
}

Composite<PartitionDiagram> compose(const PartitionDiagram& x, const PartitionDiagram& y) {
  require_chain(x.s, y.r);
  Stack st{x.r, x.s, y.s};
  int n = x.r + x.s + y.s;
  UnionFind uf(n);
  for (const auto& b : x.blocks())
    for (size_t i = 1; i < b.size(); ++i) uf.unite(st.from_x(b[0]), st.from_x(b[i]));
  for (const auto& b : y.blocks())
    for (size_t i = 1; i < b.size(); ++i) uf.unite(st.from_y(b[0]), st.from_y(b[i]));
  std::vector<int> labels(x.r + y.s);
  std::vector<bool> has_outer(n, false);
  for (int q = 0; q < n; ++q)
    if (st.outer(q)) {
      labels[st.result_label(q)] = uf.find(q);
      has_outer[uf.find(q)] = true;
    }
  int loops = 0;
  std::vector<bool> seen(n, false);
  for (int q = x.r; q < x.r + x.s; ++q) {
    int root = uf.find(q);
    if (seen[root] || has_outer[root]) continue;
    seen[root] = true;
    ++loops;
  }
  return {PartitionDiagram::from_labels(x.r, y.s, labels), loops};
}

PartitionDiagram tensor(const PartitionDiagram& x, const PartitionDiagram& y) {
  auto lx = tensor_map_left(x.r, x.s, y.r);
  auto ly = tensor_map_right(x.r, x.s, y.r, y.s);
  std::vector<int> labels(x.size() + y.size());
  int shift = x.block_count();
  for (int p = 0; p < x.size(); ++p) labels[lx[p]] = x.block[p];
  for (int p = 0; p < y.size(); ++p) labels[ly[p]] = shift + y.block[p];
  return PartitionDiagram::from_labels(x.r + y.r, x.s + y.s, labels);
}

PartitionDiagram star(const PartitionDiagram& x) {
  auto to = relabel_star(x.r, x.s);
  std::vector<int> labels(x.size());
  for (int p = 0; p < x.size(); ++p) labels[to[p]] = x.block[p];
  return PartitionDiagram::from_labels(x.s, x.r, labels);
}

int propagating_number(const PartitionDiagram& x) {
  int c = 0;
  for (const auto& b : x.blocks()) {
    bool top = false, bottom = false;
    for (int p : b) (p < x.r ? top : bottom) = true;
    c += top && bottom;
  }
  return c;
}

PartitionDiagram rotate(const PartitionDiagram& m, int shift) {
  if (m.r != 0) throw DomainError("rotate acts on D(0,k)");
  int k = m.s;
  std::vector<int> labels(k);
  for (int p = 0; p < k; ++p) labels[((p + shift) % k + k) % k] = m.block[p];
  return PartitionDiagram::from_labels(0, k, labels);
}

// ---------- Directed ----------

DirectedDiagram DirectedDiagram::from_pairs(int r, int s, const std::vector<Pair>& ordered) {
  BrauerDiagram b = BrauerDiagram::from_pairs(r, s, ordered);
  DirectedDiagram d{r, s, b.partner, std::vector<bool>(r + s, false)};
  for (auto [from, to] : ordered) d.initial[from] = true;
  return d;
}

DirectedDiagram DirectedDiagram::from_permutation(const Permutation& perm) {
  int m = static_cast<int>(perm.size());
  std::vector<Pair> pairs;
  for (int i = 0; i < m; ++i) pairs.push_back({i, m + perm[i]});
  return from_pairs(m, m, pairs);
}

DirectedDiagram DirectedDiagram::identity(int m) {
  Permutation id(m);
  std::iota(id.begin(), id.end(), 0);
  return from_permutation(id);
}

std::vector<Pair> DirectedDiagram::ordered_pairs() const {
  std::vector<Pair> out;
  for (int p = 0; p < size(); ++p)
    if (initial[p]) out.push_back({p, partner[p]});
  return out;
}

BrauerDiagram DirectedDiagram::underlying() const { return BrauerDiagram{r, s, partner}; }

std::string DirectedDiagram::domain_word() const {
  std::string w;
  for (int i = 0; i < r; ++i) w += initial[i] ? '+' : '-';
  return w;
}

std::string DirectedDiagram::codomain_word() const {
  std::string w;
  for (int j = 0; j < s; ++j) w += initial[r + j] ? '-' : '+';
  return w;
}

Composite<DirectedDiagram> compose(const DirectedDiagram& x, const DirectedDiagram& y) {
  require_chain(x.s, y.r);
  if (x.codomain_word() != y.domain_word()) throw DomainError("compose: orientations do not chain");
  Stack st{x.r, x.s, y.s};
  int n = x.r + x.s + y.s;
  std::vector<int> next(n, -1);
  for (auto [a, b] : x.ordered_pairs()) next[st.from_x(a)] = st.from_x(b);
  for (auto [a, b] : y.ordered_pairs()) next[st.from_y(a)] = st.from_y(b);
  std::vector<bool> visited(n, false);
  std::vector<Pair> pairs;
  for (int q = 0; q < n; ++q) {
    if (!st.outer(q) || next[q] < 0) continue;
    int v = q;
    visited[v] = true;
    do {
      v = next[v];
      visited[v] = true;
    } while (!st.outer(v));
    pairs.push_back({st.result_label(q), st.result_label(v)});
  }
  Composite<DirectedDiagram> out{DirectedDiagram::from_pairs(x.r, y.s, pairs)};
  for (int q = x.r; q < x.r + x.s; ++q) {
    if (visited[q]) continue;
    // q is the leftmost point of a closed loop; it is clockwise when the strand leaves q upward.
    bool up = x.initial[q];
    for (int v = q; !visited[v]; v = next[v]) visited[v] = true;
    ++out.loops;
    ++(up ? out.loops_cw : out.loops_ccw);
  }
  return out;
}

DirectedDiagram tensor(const DirectedDiagram& x, const DirectedDiagram& y) {
  auto lx = tensor_map_left(x.r, x.s, y.r);
  auto ly = tensor_map_right(x.r, x.s, y.r, y.s);
  std::vector<Pair> pairs;
  for (auto [a, b] : x.ordered_pairs()) pairs.push_back({lx[a], lx[b]});
  for (auto [a, b] : y.ordered_pairs()) pairs.push_back({ly[a], ly[b]});
  return DirectedDiagram::from_pairs(x.r + y.r, x.s + y.s, pairs);
}

DirectedDiagram star(const DirectedDiagram& x) {
  auto to = relabel_star(x.r, x.s);
  std::vector<Pair> pairs;
  for (auto [a, b] : x.ordered_pairs()) pairs.push_back({to[a], to[b]});
  return DirectedDiagram::from_pairs(x.s, x.r, pairs);
}

int propagating_number(const DirectedDiagram& x) { return propagating_number(x.underlying()); }

// ---------- Enumeration ----------

namespace {

void matchings_rec(std::vector<int>& partner, std::vector<std::vector<int>>& out) {
  auto it = std::find(partner.begin(), partner.end(), -1);
  if (it == partner.end()) {
    out.push_back(partner);
    return;
  }
  int a = static_cast<int>(it - partner.begin());
  for (int b = a + 1; b < static_cast<int>(partner.size()); ++b) {
    if (partner[b] != -1) continue;
    partner[a] = b;
    partner[b] = a;
    matchings_rec(partner, out);
    partner[a] = partner[b] = -1;
  }
}

std::vector<std::vector<int>> all_matchings(int k) {
  if (k < 0 || k % 2) return {};
  guard(static_cast<long double>(double_factorial(k - 1)), "perfect matchings");
  std::vector<std::vector<int>> out;
  std::vector<int> partner(k, -1);
  matchings_rec(partner, out);
  return out;
}

/// Restricted growth strings of length m with at most max_blocks blocks.
std::vector<std::vector<int>> restricted_growth(int m, int max_blocks) {
  guard(static_cast<long double>(bell_number(std::min(m, 25))), "set partitions");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int used) {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= used && b < max_blocks; ++b) {
      cur.push_back(b);
      rec(std::max(used, b + 1));
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<BrauerDiagram> enumerate_matchings(int k) { return enumerate_brauer(0, k); }

std::vector<BrauerDiagram> enumerate_brauer(int r, int s) {
  if (r < 0 || s < 0) throw DomainError("negative arity");
  std::vector<BrauerDiagram> out;
  for (auto& p : all_matchings(r + s)) out.push_back(BrauerDiagram{r, s, std::move(p)});
  return out;
}

std::vector<BrauerDiagram> enumerate_noncrossing(int k, int n) {
  if (n < 1) throw DomainError("enumerate_noncrossing needs n >= 1");
  std::vector<BrauerDiagram> out;
  for (auto& m : enumerate_matchings(k))
    if (!has_j_crossing(m, n + 1)) out.push_back(std::move(m));
  return out;
}

std::vector<PartitionDiagram> enumerate_setpartitions(int r, int max_blocks) {
  if (r < 0) throw DomainError("negative size");
  std::vector<PartitionDiagram> out;
  for (auto& labels : restricted_growth(r, std::max(max_blocks, 0))) out.push_back(PartitionDiagram{0, r, labels});
  return out;
}

std::vector<PartitionDiagram> enumerate_partition_diagrams(int r, int s) {
  if (r < 0 || s < 0) throw DomainError("negative arity");
  std::vector<PartitionDiagram> out;
  for (auto& labels : restricted_growth(r + s, r + s)) out.push_back(PartitionDiagram{r, s, labels});
  return out;
}

std::vector<BrauerDiagram> enumerate_regular_diagrams(int r, int n, int k) {
  if (r < 0 || n < 1 || k < 1) throw DomainError("enumerate_regular_diagrams needs r >= 0, n >= 1, k >= 1");
  std::vector<BrauerDiagram> out;
  auto blk = [k](int p) { return p / k; };
  for (auto& m : enumerate_matchings(k * r)) {
    auto ps = m.pairs();
    bool ok = true;
    for (auto [a, b] : ps)
      if (blk(a) == blk(b)) ok = false;
    for (size_t i = 0; ok && i < ps.size(); ++i)
      for (size_t j = 0; ok && j < ps.size(); ++j) {
        auto [a1, b1] = ps[i];
        auto [a2, b2] = ps[j];
        if (!(a1 < a2 && a2 < b1 && b1 < b2)) continue;
        std::vector<int> bs{blk(a1), blk(b1), blk(a2), blk(b2)};
        std::sort(bs.begin(), bs.end());
        if (std::adjacent_find(bs.begin(), bs.end()) != bs.end()) ok = false;
      }
    if (ok && !has_j_crossing(m, n + 1)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<DirectedDiagram> enumerate_directed(int r, int s) {
  std::vector<DirectedDiagram> out;
  int pairs = (r + s) / 2;
  guard(static_cast<long double>(double_factorial(r + s - 1)) * (1LL << std::min(pairs, 40)), "directed diagrams");
  for (const auto& b : enumerate_brauer(r, s)) {
    auto ps = b.pairs();
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      std::vector<Pair> ordered;
      for (int i = 0; i < pairs; ++i) {
        auto [a, c] = ps[i];
        ordered.push_back((mask >> i) & 1 ? Pair{c, a} : Pair{a, c});
      }
      out.push_back(DirectedDiagram::from_pairs(r, s, ordered));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DirectedDiagram> enumerate_directed(const std::string& domain, const std::string& codomain) {
  int r = static_cast<int>(domain.size()), s = static_cast<int>(codomain.size());
  std::vector<DirectedDiagram> out;
  for (auto& d : enumerate_directed(r, s))
    if (d.domain_word() == domain && d.codomain_word() == codomain) out.push_back(std::move(d));
  return out;
}

std::vector<Permutation> enumerate_permutations(int m) {
  long double f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  guard(f, "permutations");
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

BrauerDiagram random_brauer(int r, int s, std::mt19937_64& rng) {
  if ((r + s) % 2) throw DomainError("Brauer diagram needs r+s even");
  std::vector<int> pts(r + s);
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<Pair> pairs;
  for (size_t i = 0; i + 1 < pts.size(); i += 2) pairs.push_back({pts[i], pts[i + 1]});
  return BrauerDiagram::from_pairs(r, s, pairs);
}

PartitionDiagram random_partition_diagram(int r, int s, std::mt19937_64& rng) {
  std::vector<int> labels(r + s);
  std::uniform_int_distribution<int> pick(0, std::max(r + s - 1, 0));
  for (auto& l : labels) l = pick(rng);
  return PartitionDiagram::from_labels(r, s, labels);
}

DirectedDiagram random_directed(int r, int s, std::mt19937_64& rng) {
  BrauerDiagram b = random_brauer(r, s, rng);
  std::vector<Pair> ordered;
  for (auto [a, c] : b.pairs()) ordered.push_back(rng() & 1 ? Pair{c, a} : Pair{a, c});
  return DirectedDiagram::from_pairs(r, s, ordered);
}

}  // namespace diagcat
