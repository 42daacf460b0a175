#include "diagcat/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "diagcat/errors.hpp"

namespace diagcat {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int j = 0; j < p[0]; ++j) {
    int c = 0;
    while (c < static_cast<int>(p.size()) && p[c] > j) ++c;
    t.push_back(c);
  }
  return t;
}

int n_statistic(const Partition& p) {
  int s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
  return s;
}

std::vector<std::vector<int>> hook_lengths(const Partition& p) {
  Partition t = transpose(p);
  std::vector<std::vector<int>> h(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) h[i].push_back((p[i] - j - 1) + (t[j] - static_cast<int>(i) - 1) + 1);
  return h;
}

Integer count_standard_tableaux(const Partition& p) {
  Integer num, den = 1;
  mpz_fac_ui(num.get_mpz_t(), partition_size(p));
  for (const auto& row : hook_lengths(p))
    for (int h : row) den *= h;
  return num / den;
}

Integer z_lambda(const Partition& p) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int x : p) ++mult[x];
  for (auto [part, m] : mult) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), m);
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), part, m);
    z *= pw * f;
  }
  return z;
}

std::vector<Partition> add_cell(const Partition& p, std::optional<int> max_length) {
  std::vector<Partition> out;
  for (size_t i = 0; i <= p.size(); ++i) {
    if (i == p.size()) {
      if (max_length && static_cast<int>(p.size()) >= *max_length) continue;
      Partition q = p;
      q.push_back(1);
      out.push_back(q);
    } else if (i == 0 || p[i - 1] > p[i]) {
      Partition q = p;
      ++q[i];
      out.push_back(q);
    }
  }
  return out;
}

std::vector<Partition> remove_cell(const Partition& p) {
  std::vector<Partition> out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
    Partition q = p;
    if (--q[i] == 0) q.pop_back();
    out.push_back(q);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

bool all_even(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
}

}  // namespace

std::vector<Partition> enumerate_partitions(int r, const PartitionFilter& filter) {
  if (r < 0) throw DomainError("enumerate_partitions needs r >= 0");
  std::vector<Partition> all;
  Partition cur;
  partitions_rec(r, r, cur, all);
  std::vector<Partition> out;
  for (auto& p : all) {
    if (filter.max_length && static_cast<int>(p.size()) > *filter.max_length) continue;
    if (filter.even_rows && !all_even(p)) continue;
    if (filter.even_columns && !all_even(transpose(p))) continue;
    out.push_back(std::move(p));
  }
  return out;
}

Partition StandardTableau::shape() const {
  Partition s;
  for (const auto& row : rows) s.push_back(static_cast<int>(row.size()));
  return s;
}

int StandardTableau::size() const { return partition_size(shape()); }

std::vector<int> StandardTableau::descents() const {
  int n = size();
  std::vector<int> row_of(n + 1);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int v : rows[i]) row_of[v] = static_cast<int>(i);
  std::vector<int> d;
  for (int i = 1; i < n; ++i)
    if (row_of[i + 1] > row_of[i]) d.push_back(i);
  return d;
}

int StandardTableau::maj() const {
  int s = 0;
  for (int d : descents()) s += d;
  return s;
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  if (!is_partition(shape)) throw DomainError("not a partition");
  int n = partition_size(shape);
  std::vector<StandardTableau> out;
  StandardTableau t;
  t.rows.assign(shape.size(), {});
  // Place 1..n in order, each into a row whose next cell is an addable corner of the filled part.
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.push_back(t);
      return;
    }
    for (size_t i = 0; i < shape.size(); ++i) {
      int len = static_cast<int>(t.rows[i].size());
      if (len >= shape[i]) continue;
      if (i > 0 && static_cast<int>(t.rows[i - 1].size()) <= len) continue;
      t.rows[i].push_back(v);
      rec(v + 1);
      t.rows[i].pop_back();
    }
  };
  rec(1);
  if (Integer(static_cast<long>(out.size())) != count_standard_tableaux(shape))
    throw InternalError("tableau count disagrees with hook length formula");
  return out;
}

QPoly fake_degree_by_maj(const Partition& shape) {
  std::vector<Rational> c;
  for (const auto& t : standard_tableaux(shape)) {
    int m = t.maj();
    if (static_cast<int>(c.size()) <= m) c.resize(m + 1);
    c[m] += 1;
  }
  return QPoly(std::move(c));
}

QPoly fake_degree_by_hooks(const Partition& shape) {
  if (!is_partition(shape)) throw DomainError("not a partition");
  QPoly num = q_factorial(partition_size(shape)) * QPoly::monomial(n_statistic(shape));
  QPoly den = QPoly::constant(1);
  for (const auto& row : hook_lengths(shape))
    for (int h : row) den *= q_integer(h);
  return num.divide_exact(den);
}

QPoly fake_degree_schur(const Partition& shape) {
  static std::mutex mu;
  static std::map<Partition, QPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(shape);
    if (it != cache.end()) return it->second;
  }
  QPoly a = fake_degree_by_maj(shape);
  QPoly b = fake_degree_by_hooks(shape);
  if (!(a == b)) throw InternalError("fake degree: maj sum and q-hook formula disagree");
  std::lock_guard lock(mu);
  cache.emplace(shape, a);
  return a;
}

std::vector<OscillatingTableau> enumerate_oscillating(int n, int r, const Partition& final_shape) {
  if (n < 1) throw DomainError("oscillating tableaux need n >= 1");
  std::vector<OscillatingTableau> out;
  OscillatingTableau cur{Partition{}};
  int target = partition_size(final_shape);
  std::function<void(int)> rec = [&](int step) {
    const Partition& last = cur.back();
    int sz = partition_size(last);
    // Prune: the remaining steps must be able to reach the target size.
    if (std::abs(sz - target) > r - step) return;
    if (step == r) {
      if (last == final_shape) out.push_back(cur);
      return;
    }
    std::vector<Partition> nexts = add_cell(last, n);
    for (auto& q : remove_cell(last)) nexts.push_back(std::move(q));
    for (auto& q : nexts) {
      cur.push_back(q);
      rec(step + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Integer count_oscillating(int n, int r, const Partition& final_shape) {
  if (n < 1) throw DomainError("oscillating tableaux need n >= 1");
  if (r < 0) return 0;
  // Count walks backwards from the final shape: ways[μ] = number of walks of the remaining length ending at it.
  std::map<Partition, Integer> ways{{final_shape, 1}};
  if (static_cast<int>(final_shape.size()) > n) return 0;
  for (int step = 0; step < r; ++step) {
    std::map<Partition, Integer> next;
    for (const auto& [shape, w] : ways) {
      for (auto& q : add_cell(shape, n)) next[q] += w;
      for (auto& q : remove_cell(shape)) next[q] += w;
    }
    ways = std::move(next);
  }
  auto it = ways.find(Partition{});
  return it == ways.end() ? Integer(0) : it->second;
}

}  // namespace diagcat
