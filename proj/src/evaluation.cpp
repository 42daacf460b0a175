#include "diagcat/evaluation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace diagcat {

namespace {

constexpr std::uint64_t kVectorLimit = 1'000'000;
constexpr std::uint64_t kColumnLimit = 10'000;

using Digits = std::vector<std::uint8_t>;
using Tensor = std::map<Digits, Rational>;

std::uint64_t checked_power(int base, int exp, std::uint64_t limit, const char* what) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= static_cast<std::uint64_t>(base);
    if (v > limit) throw ResourceError(std::string("dimension guard exceeded: ") + what);
  }
  return v;
}

Digits to_digits(std::uint64_t index, int width, int base) {
  Digits d(width);
  for (int i = width - 1; i >= 0; --i) {
    d[i] = static_cast<std::uint8_t>(index % base);
    index /= base;
  }
  return d;
}

std::uint64_t to_index(const Digits& d, int base) {
  std::uint64_t v = 0;
  for (auto x : d) v = v * base + x;
  return v;
}

Tensor to_tensor(const SparseVector& v, int width, int base) {
  Tensor t;
  for (const auto& [i, c] : v) t.emplace(to_digits(i, width, base), c);
  return t;
}

SparseVector to_sparse(const Tensor& t, int base) {
  SparseVector v;
  for (const auto& [d, c] : t)
    if (c != 0) v.emplace(to_index(d, base), c);
  return v;
}

void accumulate(Tensor& t, Digits d, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t.try_emplace(std::move(d), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

std::string params_of(const Evaluator& e) { return e.name(); }

}  // namespace

Evaluator::Evaluator(GroupKind kind, int n) : kind_(kind), n_(n) {
  if (n < 1) throw DomainError("evaluator needs n >= 1");
  dim_ = kind == GroupKind::Sp ? 2 * n : n;
  if (dim_ > 255) throw ResourceError("dimension too large");
  gram_.assign(dim_, std::vector<int>(dim_, 0));
  cogram_ = gram_;
  if (kind == GroupKind::Sp) {
    for (int i = 0; i < n; ++i) {
      gram_[i][n + i] = 1;
      gram_[n + i][i] = -1;
      cogram_[i][n + i] = -1;
      cogram_[n + i][i] = 1;
    }
  } else {
    for (int i = 0; i < dim_; ++i) gram_[i][i] = cogram_[i][i] = 1;
  }
}

Evaluator Evaluator::symmetric(int n) { return Evaluator(GroupKind::Sn, n); }
Evaluator Evaluator::symplectic(int n) { return Evaluator(GroupKind::Sp, n); }
Evaluator Evaluator::general_linear(int n) { return Evaluator(GroupKind::GL, n); }

Rational Evaluator::delta() const { return kind_ == GroupKind::Sp ? Rational(-2 * n_) : Rational(n_); }

std::string Evaluator::name() const {
  switch (kind_) {
    case GroupKind::Sn: return "S" + std::to_string(n_);
    case GroupKind::Sp: return "Sp(" + std::to_string(2 * n_) + ")";
    case GroupKind::GL: return "GL(" + std::to_string(n_) + ")";
  }
  return {};
}

void Evaluator::require(GroupKind k, const char* what) const {
  if (kind_ != k) throw DomainError(std::string(what) + " is not available for " + name());
}

SparseVector Evaluator::apply(const BrauerDiagram& d, const SparseVector& input, int layout) const {
  const int base = dim_;
  const int sign = kind_ == GroupKind::Sp ? -1 : 1;
  Tensor t = to_tensor(input, d.r, base);
  std::vector<int> labels(d.r);
  std::iota(labels.begin(), labels.end(), 0);

  auto cross = [&](int q) {
    Tensor out;
    for (const auto& [digits, c] : t) {
      Digits nd = digits;
      std::swap(nd[q], nd[q + 1]);
      accumulate(out, std::move(nd), sign == 1 ? c : Rational(-c));
    }
    t = std::move(out);
    std::swap(labels[q], labels[q + 1]);
  };
  auto cap = [&](int q) {
    Tensor out;
    for (const auto& [digits, c] : t) {
      int g = gram_[digits[q]][digits[q + 1]];
      if (g == 0) continue;
      Digits nd = digits;
      nd.erase(nd.begin() + q, nd.begin() + q + 2);
      accumulate(out, std::move(nd), c * g);
    }
    t = std::move(out);
    labels.erase(labels.begin() + q, labels.begin() + q + 2);
  };
  auto cup = [&](int q, int a, int b) {
    Tensor out;
    for (const auto& [digits, c] : t)
      for (int i = 0; i < base; ++i)
        for (int j = 0; j < base; ++j) {
          int g = cogram_[i][j];
          if (g == 0) continue;
          Digits nd = digits;
          nd.insert(nd.begin() + q, {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
          accumulate(out, std::move(nd), c * g);
        }
    t = std::move(out);
    labels.insert(labels.begin() + q, {a, b});
  };
  auto bubble_to = [&](const std::vector<int>& target) {
    for (size_t p = 0; p < target.size(); ++p) {
      int j = static_cast<int>(std::find(labels.begin(), labels.end(), target[p]) - labels.begin());
      for (int q = j - 1; q >= static_cast<int>(p); --q) cross(q);
    }
  };

  std::vector<Pair> through, caps, cups;
  for (auto [a, b] : d.pairs()) {
    if (a < d.r && b >= d.r) through.push_back({a, b});
    else if (b < d.r) caps.push_back({a, b});
    else cups.push_back({a, b});
  }
  std::sort(through.begin(), through.end(), [](Pair x, Pair y) { return x.second < y.second; });
  std::vector<int> thr_tops, arc_tops;
  for (auto [a, b] : through) thr_tops.push_back(a);
  for (auto [a, b] : caps) arc_tops.insert(arc_tops.end(), {a, b});
  std::vector<int> target = layout == 0 ? thr_tops : arc_tops;
  const auto& rest = layout == 0 ? arc_tops : thr_tops;
  target.insert(target.end(), rest.begin(), rest.end());
  bubble_to(target);
  for (size_t c = 0; c < caps.size(); ++c) cap(layout == 0 ? static_cast<int>(labels.size()) - 2 : 0);
  // The remaining strands are the through strands; relabel them by their bottom endpoints.
  for (size_t i = 0; i < through.size(); ++i) labels[i] = through[i].second;
  for (auto [a, b] : cups) cup(layout == 0 ? static_cast<int>(labels.size()) : 0, a, b);
  std::vector<int> bottoms(d.s);
  std::iota(bottoms.begin(), bottoms.end(), d.r);
  bubble_to(bottoms);
  return to_sparse(t, base);
}

namespace {

/// The 0/1 formula: indices agree within every block.
SparseVector apply_blocks(int r, int s, const std::vector<int>& block, int block_count, int base,
                          const SparseVector& input) {
  SparseVector out;
  std::vector<int> bottom_free;
  std::vector<bool> has_top(block_count, false);
  for (int p = 0; p < r; ++p) has_top[block[p]] = true;
  for (int b = 0; b < block_count; ++b)
    if (!has_top[b]) {
      bool on_bottom = false;
      for (int p = r; p < r + s; ++p) on_bottom |= block[p] == b;
      if (on_bottom) bottom_free.push_back(b);
    }
  // Blocks that touch neither side cannot occur in a diagram.
  for (const auto& [index, c] : input) {
    Digits in = to_digits(index, r, base);
    std::vector<int> value(block_count, -1);
    bool ok = true;
    for (int p = 0; p < r && ok; ++p) {
      int& v = value[block[p]];
      if (v == -1) v = in[p];
      else ok = v == in[p];
    }
    if (!ok) continue;
    std::uint64_t combos = checked_power(base, static_cast<int>(bottom_free.size()), kVectorLimit, "free blocks");
    for (std::uint64_t m = 0; m < combos; ++m) {
      std::uint64_t rem = m;
      for (int b : bottom_free) {
        value[b] = static_cast<int>(rem % base);
        rem /= base;
      }
      std::uint64_t idx = 0;
      for (int p = r; p < r + s; ++p) idx = idx * base + value[block[p]];
      auto [it, fresh] = out.try_emplace(idx, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace

SparseVector Evaluator::apply(const PartitionDiagram& d, const SparseVector& input) const {
  require(GroupKind::Sn, "partition diagrams");
  return apply_blocks(d.r, d.s, d.block, d.block_count(), dim_, input);
}

SparseVector Evaluator::apply(const DirectedDiagram& d, const SparseVector& input) const {
  require(GroupKind::GL, "directed diagrams");
  std::vector<int> block(d.size());
  int b = 0;
  for (int p = 0; p < d.size(); ++p)
    if (p < d.partner[p]) block[p] = block[d.partner[p]] = b++;
  return apply_blocks(d.r, d.s, block, b, dim_, input);
}

namespace {

template <class F>
ExactMatrix build_matrix(int base, int r, int s, F&& column) {
  std::uint64_t cols = checked_power(base, r, kColumnLimit, "matrix columns");
  std::uint64_t rows = checked_power(base, s, kVectorLimit, "matrix rows");
  if (rows * cols > 16 * kVectorLimit) throw ResourceError("dimension guard exceeded: dense matrix");
  ExactMatrix m(rows, cols);
  for (std::uint64_t c = 0; c < cols; ++c)
    for (const auto& [i, v] : column(SparseVector{{c, Rational(1)}})) m.at(i, c) = v;
  return m;
}

}  // namespace

ExactMatrix Evaluator::ev(const BrauerDiagram& d, int layout) const {
  return build_matrix(dim_, d.r, d.s, [&](const SparseVector& in) { return apply(d, in, layout); });
}

ExactMatrix Evaluator::ev(const PartitionDiagram& d) const {
  return build_matrix(dim_, d.r, d.s, [&](const SparseVector& in) { return apply(d, in); });
}

ExactMatrix Evaluator::ev(const DirectedDiagram& d) const {
  return build_matrix(dim_, d.r, d.s, [&](const SparseVector& in) { return apply(d, in); });
}

namespace {

template <class E, class Elem>
ExactMatrix ev_element(const E& e, const Elem& a) {
  if (a.delta() != e.delta())
    throw DomainError("loop value " + to_string(a.delta()) + " does not match " + e.name());
  std::uint64_t rows = checked_power(e.dim(), a.s(), kVectorLimit, "matrix rows");
  std::uint64_t cols = checked_power(e.dim(), a.r(), kColumnLimit, "matrix columns");
  ExactMatrix out(rows, cols);
  for (const auto& [d, c] : a.terms()) out = out + c * e.ev(d);
  return out;
}

}  // namespace

ExactMatrix Evaluator::ev(const BrauerElement& a) const { return ev_element(*this, a); }
ExactMatrix Evaluator::ev(const PartitionElement& a) const { return ev_element(*this, a); }
ExactMatrix Evaluator::ev(const DirectedElement& a) const { return ev_element(*this, a); }

SparseVector Evaluator::invariant(const BrauerDiagram& d, int layout) const {
  if (d.r != 0) throw DomainError("invariant needs a diagram in D(0,k)");
  checked_power(dim_, d.s, kVectorLimit, "invariant vector");
  return apply(d, SparseVector{{0, Rational(1)}}, layout);
}

SparseVector Evaluator::invariant(const PartitionDiagram& d) const {
  if (d.r != 0) throw DomainError("invariant needs a diagram in D(0,k)");
  checked_power(dim_, d.s, kVectorLimit, "invariant vector");
  return apply(d, SparseVector{{0, Rational(1)}});
}

SparseVector Evaluator::permute(const SparseVector& v, int k, const Permutation& perm) const {
  if (static_cast<int>(perm.size()) != k) throw DomainError("permutation size mismatch");
  int sign = kind_ == GroupKind::Sp ? permutation_sign(perm) : 1;
  SparseVector out;
  for (const auto& [i, c] : v) {
    Digits in = to_digits(i, k, dim_), moved(k);
    for (int p = 0; p < k; ++p) moved[perm[p]] = in[p];
    out.emplace(to_index(moved, dim_), sign == 1 ? c : Rational(-c));
  }
  return out;
}

ExactMatrix Evaluator::crossing_matrix() const {
  int d = dim_;
  ExactMatrix m(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(j * d + i, i * d + j) = kind_ == GroupKind::Sp ? -1 : 1;
  return m;
}

ExactMatrix Evaluator::cup_matrix() const {
  ExactMatrix m(dim_ * dim_, 1);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(i * dim_ + j, 0) = cogram_[i][j];
  return m;
}

ExactMatrix Evaluator::cap_matrix() const {
  ExactMatrix m(1, dim_ * dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(0, i * dim_ + j) = gram_[i][j];
  return m;
}

ExactMatrix Evaluator::unit_matrix() const {
  ExactMatrix m(dim_, 1);
  for (int i = 0; i < dim_; ++i) m.at(i, 0) = 1;
  return m;
}

ExactMatrix Evaluator::counit_matrix() const {
  ExactMatrix m(1, dim_);
  for (int i = 0; i < dim_; ++i) m.at(0, i) = 1;
  return m;
}

ExactMatrix Evaluator::split_matrix() const {
  ExactMatrix m(dim_ * dim_, dim_);
  for (int i = 0; i < dim_; ++i) m.at(i * dim_ + i, i) = 1;
  return m;
}

ExactMatrix Evaluator::merge_matrix() const {
  ExactMatrix m(dim_, dim_ * dim_);
  for (int i = 0; i < dim_; ++i) m.at(i, i * dim_ + i) = 1;
  return m;
}

SparseVector flatten(const ExactMatrix& m) {
  SparseVector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) v.emplace(i * m.cols() + j, m.at(i, j));
  return v;
}

// ---------- Relation suites ----------

namespace {

/// a then b.
ExactMatrix then(const ExactMatrix& a, const ExactMatrix& b) { return b * a; }
ExactMatrix kr(const ExactMatrix& a, const ExactMatrix& b) { return kronecker_product(a, b); }

void relation(Report& rep, const Evaluator& e, const std::string& name, const ExactMatrix& lhs, const ExactMatrix& rhs) {
  bool ok = lhs == rhs;
  rep.push_back({name, params_of(e), "equal", ok ? "equal" : "differ", ok});
}

void scalar_relation(Report& rep, const Evaluator& e, const std::string& name, const ExactMatrix& m, const Rational& want) {
  Rational got = (m.rows() == 1 && m.cols() == 1) ? m.at(0, 0) : Rational(0);
  rep.push_back({name, params_of(e), to_string(want), to_string(got), got == want && m.rows() == 1 && m.cols() == 1});
}

/// Relations shared by every evaluator, in terms of the crossing X, cup U, cap A.
void symmetric_monoidal_relations(Report& rep, const Evaluator& e, const ExactMatrix& X, const ExactMatrix& U,
                                  const ExactMatrix& A, const std::string& tag) {
  ExactMatrix I = ExactMatrix::identity(e.dim());
  ExactMatrix II = ExactMatrix::identity(e.dim() * e.dim());
  relation(rep, e, "symmetry squared" + tag, then(X, X), II);
  relation(rep, e, "braid" + tag, then(then(kr(X, I), kr(I, X)), kr(X, I)), then(then(kr(I, X), kr(X, I)), kr(I, X)));
  relation(rep, e, "zig-zag left" + tag, then(kr(U, I), kr(I, A)), I);
  relation(rep, e, "zig-zag right" + tag, then(kr(I, U), kr(A, I)), I);
  scalar_relation(rep, e, "closed loop" + tag, then(U, A), e.delta());
  relation(rep, e, "crossing after cup" + tag, then(U, X), U);
  relation(rep, e, "crossing before cap" + tag, then(X, A), A);
  relation(rep, e, "strand slides past cup" + tag, then(then(kr(U, I), kr(I, X)), kr(X, I)), kr(I, U));
  relation(rep, e, "strand slides past cap" + tag, then(then(kr(X, I), kr(I, X)), kr(A, I)), kr(I, A));
}

}  // namespace

Report relation_test_suite(const Evaluator& e) {
  Report rep;
  switch (e.kind()) {
    case GroupKind::Sp: {
      ExactMatrix X = e.ev(BrauerDiagram::crossing(2, 0));
      ExactMatrix U = e.ev(BrauerDiagram::cup());
      ExactMatrix A = e.ev(BrauerDiagram::cap());
      relation(rep, e, "crossing is minus the swap", X, e.crossing_matrix());
      relation(rep, e, "cup image", U, e.cup_matrix());
      relation(rep, e, "cap image", A, e.cap_matrix());
      symmetric_monoidal_relations(rep, e, X, U, A, "");
      break;
    }
    case GroupKind::Sn: {
      auto pd = [](int r, int s, std::vector<std::vector<int>> blocks) { return PartitionDiagram::from_blocks(r, s, blocks); };
      ExactMatrix X = e.ev(PartitionDiagram::from_permutation({1, 0}));
      ExactMatrix U = e.ev(pd(0, 2, {{0, 1}}));
      ExactMatrix A = e.ev(pd(2, 0, {{0, 1}}));
      ExactMatrix unit = e.ev(pd(0, 1, {{0}}));
      ExactMatrix counit = e.ev(pd(1, 0, {{0}}));
      ExactMatrix split = e.ev(pd(1, 2, {{0, 1, 2}}));
      ExactMatrix merge = e.ev(pd(2, 1, {{0, 1, 2}}));
      ExactMatrix I = ExactMatrix::identity(e.dim());
      relation(rep, e, "crossing is the swap", X, e.crossing_matrix());
      relation(rep, e, "unit image", unit, e.unit_matrix());
      relation(rep, e, "counit image", counit, e.counit_matrix());
      relation(rep, e, "split image", split, e.split_matrix());
      relation(rep, e, "merge image", merge, e.merge_matrix());
      symmetric_monoidal_relations(rep, e, X, U, A, "");
      relation(rep, e, "clone then merge", then(split, merge), I);
      relation(rep, e, "unit law", then(kr(unit, I), merge), I);
      relation(rep, e, "counit law", then(split, kr(counit, I)), I);
      relation(rep, e, "associativity", then(kr(merge, I), merge), then(kr(I, merge), merge));
      relation(rep, e, "coassociativity", then(split, kr(split, I)), then(split, kr(I, split)));
      relation(rep, e, "Frobenius law", then(kr(I, split), kr(merge, I)), then(merge, split));
      relation(rep, e, "merge is commutative", then(X, merge), merge);
      relation(rep, e, "split is cocommutative", then(split, X), split);
      relation(rep, e, "cup is unit then split", then(unit, split), U);
      relation(rep, e, "cap is merge then counit", then(merge, counit), A);
      scalar_relation(rep, e, "singleton loop", then(unit, counit), e.delta());
      break;
    }
    case GroupKind::GL: {
      using DD = DirectedDiagram;
      // Oriented generators; the codomain word of a cup is "-+" or "+-".
      DD cup_a = DD::from_pairs(0, 2, {{0, 1}});
      DD cup_b = DD::from_pairs(0, 2, {{1, 0}});
      DD cap_a = DD::from_pairs(2, 0, {{1, 0}});  // domain "-+"
      DD cap_b = DD::from_pairs(2, 0, {{0, 1}});  // domain "+-"
      for (auto [cup, cap, tag] : {std::tuple{cup_a, cap_a, std::string(" (-+)")}, std::tuple{cup_b, cap_b, std::string(" (+-)")}}) {
        auto loop = compose(cup, cap);
        rep.push_back({"oriented loop count" + tag, params_of(e), "1", std::to_string(loop.loops), loop.loops == 1});
        scalar_relation(rep, e, "oriented loop" + tag, then(e.ev(cup), e.ev(cap)), e.delta());
      }
      // Crossings with every sign pattern; their images are plain swaps.
      auto oriented_crossing = [](const std::string& w) {
        std::vector<Pair> pairs;
        for (int i = 0; i < 2; ++i) {
          int top = i, bottom = 2 + (1 - i);
          pairs.push_back(w[i] == '+' ? Pair{top, bottom} : Pair{bottom, top});
        }
        return DD::from_pairs(2, 2, pairs);
      };
      for (std::string w : {"++", "+-", "-+", "--"}) {
        DD x = oriented_crossing(w);
        DD back = oriented_crossing(x.codomain_word());
        relation(rep, e, "crossing is the swap (" + w + ")", e.ev(x), e.crossing_matrix());
        auto sq = compose(x, back);
        bool ident = sq.loops == 0 && sq.diagram == DD::from_pairs(2, 2, [&] {
          std::vector<Pair> straight;
          for (int i = 0; i < 2; ++i) straight.push_back(w[i] == '+' ? Pair{i, 2 + i} : Pair{2 + i, i});
          return straight;
        }());
        rep.push_back({"oriented crossing squared is the identity diagram (" + w + ")", params_of(e), "true",
                       ident ? "true" : "false", ident});
      }
      ExactMatrix X = e.crossing_matrix();
      ExactMatrix U = e.ev(cup_a), A = e.ev(cap_a);
      symmetric_monoidal_relations(rep, e, X, U, A, " (-+)");
      symmetric_monoidal_relations(rep, e, X, e.ev(cup_b), e.ev(cap_b), " (+-)");
      relation(rep, e, "crossing turns one cup into the other", then(U, X), e.ev(cup_b));
      break;
    }
  }
  return rep;
}

std::size_t invariant_span_rank(const Evaluator& e, const std::vector<BrauerDiagram>& diagrams) {
  if (diagrams.size() > kColumnLimit) throw ResourceError("too many basis columns");
  EchelonBasis basis;
  for (const auto& d : diagrams) basis.insert(e.invariant(d));
  return basis.rank();
}

std::size_t invariant_span_rank(const Evaluator& e, const std::vector<PartitionDiagram>& diagrams) {
  if (diagrams.size() > kColumnLimit) throw ResourceError("too many basis columns");
  EchelonBasis basis;
  for (const auto& d : diagrams) basis.insert(e.invariant(d));
  return basis.rank();
}

namespace {

Permutation cycle_type_representative(const Partition& lambda) {
  int k = partition_size(lambda);
  Permutation p(k);
  int start = 0;
  for (int len : lambda) {
    for (int i = 0; i < len; ++i) p[start + i] = start + (i + 1) % len;
    start += len;
  }
  return p;
}

}  // namespace

SymFunc character_on_invariant_span(const Evaluator& e, int k) {
  std::vector<SparseVector> candidates;
  if (e.kind() == GroupKind::Sp) {
    for (const auto& d : enumerate_matchings(k)) candidates.push_back(e.invariant(d));
  } else if (e.kind() == GroupKind::Sn) {
    for (const auto& d : enumerate_setpartitions(k, k)) candidates.push_back(e.invariant(d));
  } else {
    throw DomainError("character_on_invariant_span is defined for Sp and Sn evaluators");
  }
  EchelonBasis echelon;
  std::vector<SparseVector> basis;
  for (auto& v : candidates)
    if (echelon.insert(v)) basis.push_back(std::move(v));
  auto pivots = echelon.pivots();
  std::size_t dim = basis.size();
  ExactMatrix restricted(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      auto it = basis[j].find(pivots[i]);
      if (it != basis[j].end()) restricted.at(i, j) = it->second;
    }
  SymFunc out;
  for (const auto& lambda : enumerate_partitions(k)) {
    Permutation sigma = cycle_type_representative(lambda);
    Rational tr = 0;
    for (std::size_t j = 0; j < dim; ++j) {
      SparseVector w = e.permute(basis[j], k, sigma);
      std::vector<Rational> rhs(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        auto it = w.find(pivots[i]);
        if (it != w.end()) rhs[i] = it->second;
      }
      auto coords = restricted.solve(rhs);
      if (!coords) throw InternalError("invariant basis restriction is singular");
      // Confirm w really lies in the span before trusting the restricted solve.
      SparseVector rebuilt;
      for (std::size_t i = 0; i < dim; ++i) axpy(rebuilt, (*coords)[i], basis[i]);
      if (rebuilt != w) throw InternalError("permuted invariant left the invariant span");
      tr += (*coords)[j];
    }
    out.add_term({lambda}, tr / Rational(z_lambda(lambda)));
  }
  return out;
}

bool rotation_vs_long_cycle(const Evaluator& e, int k) {
  if (k <= 1) return true;
  Permutation shift(k);
  for (int i = 0; i < k; ++i) shift[i] = (i + 1) % k;
  if (e.kind() == GroupKind::Sp) {
    for (const auto& d : enumerate_matchings(k))
      if (e.permute(e.invariant(d), k, shift) != e.invariant(rotate(d))) return false;
    return true;
  }
  if (e.kind() == GroupKind::Sn) {
    for (const auto& d : enumerate_setpartitions(k, k))
      if (e.permute(e.invariant(d), k, shift) != e.invariant(rotate(d))) return false;
    return true;
  }
  throw DomainError("rotation_vs_long_cycle is defined for Sp and Sn evaluators");
}

Report fundamental_theorem_checks(const Evaluator& e, int r, int s, std::uint64_t seed) {
  Report rep;
  std::mt19937_64 rng(seed);
  std::string params = e.name() + " r=" + std::to_string(r) + " s=" + std::to_string(s);
  auto add = [&](std::string check, std::string expected, std::string got) {
    bool ok = expected == got;
    rep.push_back({std::move(check), params, std::move(expected), std::move(got), ok});
  };
  const int n = e.n();
  switch (e.kind()) {
    case GroupKind::Sp: {
      add("ev(E(n+1)) vanishes", "zero", e.ev(brauer_E_average(n + 1, e.delta())).is_zero() ? "zero" : "nonzero");
      if ((r + s) % 2 == 1) break;
      if (r + s >= 2 * (n + 1)) {
        for (int sample = 0; sample < 5; ++sample) {
          std::vector<int> pts(r + s);
          std::iota(pts.begin(), pts.end(), 0);
          std::shuffle(pts.begin(), pts.end(), rng);
          std::vector<int> free_pts(pts.begin(), pts.begin() + 2 * (n + 1));
          std::vector<Pair> f;
          for (size_t i = 2 * (n + 1); i + 1 < pts.size(); i += 2) f.push_back({pts[i], pts[i + 1]});
          auto pf = pfaffian(r, s, n, free_pts, f, e.delta());
          add("ev(Pf(f)) vanishes, sample " + std::to_string(sample + 1), "zero", e.ev(pf).is_zero() ? "zero" : "nonzero");
        }
      }
      {
        std::vector<SparseVector> images;
        for (const auto& d : enumerate_brauer(r, s)) images.push_back(flatten(e.ev(d)));
        add("rank equals number of (n+1)-noncrossing diagrams", std::to_string(enumerate_noncrossing(r + s, n).size()),
            std::to_string(sparse_rank(images)));
      }
      break;
    }
    case GroupKind::Sn: {
      std::vector<SparseVector> images;
      for (const auto& d : enumerate_partition_diagrams(r, s)) images.push_back(flatten(e.ev(d)));
      add("rank equals number of set partitions into at most n blocks",
          std::to_string(enumerate_setpartitions(r + s, n).size()), std::to_string(sparse_rank(images)));
      std::vector<PartitionDiagram> many;
      for (const auto& d : enumerate_partition_diagrams(r, s))
        if (d.block_count() > n) many.push_back(d);
      std::shuffle(many.begin(), many.end(), rng);
      if (many.size() > 20) many.resize(20);
      for (const auto& d : many)
        add("ev(x_d) vanishes for d with more than n blocks", "zero",
            e.ev(partition_xd(d, e.delta())).is_zero() ? "zero" : "nonzero");
      break;
    }
    case GroupKind::GL: {
      std::vector<SparseVector> images;
      std::size_t small_lds = 0;
      for (const auto& p : enumerate_permutations(r)) {
        images.push_back(flatten(e.ev(DirectedDiagram::from_permutation(p))));
        small_lds += lds(p) <= n;
      }
      add("permutation rank equals #{lds <= n}", std::to_string(small_lds), std::to_string(sparse_rank(images)));
      std::string word = std::string(r, '+') + std::string(s, '-');
      auto walled = enumerate_directed(word, word);
      std::vector<SparseVector> wimages;
      for (const auto& d : walled) wimages.push_back(flatten(e.ev(d)));
      std::size_t rank = sparse_rank(wimages);
      if (2 * n >= 2 * (r + s)) add("walled diagrams are independent", std::to_string(walled.size()), std::to_string(rank));
      else add("walled rank bounded by diagram count", "true", rank <= walled.size() ? "true" : "false");
      break;
    }
  }
  return rep;
}

Report sym_power_basis_check(int n, int r, int k) {
  Report rep;
  Evaluator e = Evaluator::symplectic(n);
  checked_power(e.dim(), k * r, kVectorLimit, "symmetric power tensors");
  std::string params = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " k=" + std::to_string(k);
  // The k-antisymmetriser per block; under the odd convention each permutation acts with its sign, so the
  // signs cancel and the projection is the ordinary symmetriser on every block of k factors.
  auto perms = enumerate_permutations(k);
  Rational weight = 1;
  for (int i = 2; i <= k; ++i) weight /= i;
  auto project = [&](SparseVector v) {
    for (int blk = 0; blk < r; ++blk) {
      SparseVector acc;
      for (const auto& p : perms) {
        Permutation full(k * r);
        std::iota(full.begin(), full.end(), 0);
        for (int i = 0; i < k; ++i) full[blk * k + i] = blk * k + p[i];
        axpy(acc, weight * permutation_sign(p), e.permute(v, k * r, full));
      }
      v = std::move(acc);
    }
    return v;
  };
  auto xs = enumerate_regular_diagrams(r, n, k);
  std::vector<SparseVector> images;
  for (const auto& d : xs) images.push_back(project(e.invariant(d)));
  std::size_t rank_x = sparse_rank(images);
  std::vector<SparseVector> all;
  for (const auto& d : enumerate_matchings(k * r)) all.push_back(project(e.invariant(d)));
  std::size_t rank_all = sparse_rank(all);
  SymFunc ch = sp_sympower_character(r, n, k);
  Rational dim = ch.coeff(Partition(r, 1));
  for (int i = 2; i <= r; ++i) dim *= i;
  rep.push_back({"rank of projected X(r,n,k) equals |X(r,n,k)|", params, std::to_string(xs.size()), std::to_string(rank_x),
                 rank_x == xs.size()});
  rep.push_back({"projected X(r,n,k) spans the projected invariants", params, std::to_string(rank_all),
                 std::to_string(rank_x), rank_all == rank_x});
  rep.push_back({"invariant dimension from the character", params, std::to_string(xs.size()), to_string(dim),
                 dim == Rational(static_cast<long>(xs.size()))});
  return rep;
}

}  // namespace diagcat
