#include "diagcat/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "diagcat/errors.hpp"

namespace diagcat {

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
  Partition out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<int>());
  return out;
}

std::vector<std::string> union_alphabets(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& x : b)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

/// Both operands re-expressed over the union of their alphabets, caps tightened to the minimum.
std::pair<SymFunc, SymFunc> align(const SymFunc& f, const SymFunc& g) {
  auto names = union_alphabets(f.alphabets(), g.alphabets());
  SymFunc a = f.over(names), b = g.over(names);
  for (const auto& name : names) {
    int cap = std::min(a.caps()[a.alphabet_index(name)], b.caps()[b.alphabet_index(name)]);
    a = a.with_cap(name, cap);
    b = b.with_cap(name, cap);
  }
  return {a, b};
}

}  // namespace

SymFunc::SymFunc(std::vector<std::string> alphabets, std::vector<int> caps)
    : alphabets_(std::move(alphabets)), caps_(std::move(caps)) {
  if (caps_.empty()) caps_.assign(alphabets_.size(), kNoCap);
  if (caps_.size() != alphabets_.size()) throw DomainError("cap list does not match alphabets");
  for (size_t i = 0; i < alphabets_.size(); ++i)
    for (size_t j = i + 1; j < alphabets_.size(); ++j)
      if (alphabets_[i] == alphabets_[j]) throw DomainError("repeated alphabet " + alphabets_[i]);
}

SymFunc SymFunc::one(std::vector<std::string> alphabets) { return constant(1, std::move(alphabets)); }

SymFunc SymFunc::constant(const Rational& c, std::vector<std::string> alphabets) {
  SymFunc f(std::move(alphabets));
  f.add_term(Key(f.alphabets_.size()), c);
  return f;
}

SymFunc SymFunc::power_sum(const Partition& lambda, const std::string& alphabet) {
  if (!is_partition(lambda)) throw DomainError("not a partition");
  SymFunc f({alphabet});
  f.add_term({lambda}, 1);
  return f;
}

int SymFunc::alphabet_index(const std::string& name) const {
  auto it = std::find(alphabets_.begin(), alphabets_.end(), name);
  return it == alphabets_.end() ? -1 : static_cast<int>(it - alphabets_.begin());
}

void SymFunc::add_term(const Key& key, const Rational& c) {
  if (key.size() != alphabets_.size()) throw DomainError("term arity does not match alphabets");
  if (c == 0) return;
  for (size_t i = 0; i < key.size(); ++i)
    if (partition_size(key[i]) > caps_[i]) return;
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SymFunc::coeff(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

SymFunc SymFunc::with_cap(const std::string& alphabet, int cap) const {
  int i = alphabet_index(alphabet);
  if (i < 0) throw DomainError("unknown alphabet " + alphabet);
  SymFunc out = *this;
  out.caps_[i] = std::min(cap, caps_[i]);
  std::erase_if(out.terms_, [&](const auto& kv) { return partition_size(kv.first[i]) > out.caps_[i]; });
  return out;
}

SymFunc SymFunc::renamed(const std::string& from, const std::string& to) const {
  int i = alphabet_index(from);
  if (i < 0) throw DomainError("unknown alphabet " + from);
  if (from != to && alphabet_index(to) >= 0) throw DomainError("alphabet already present: " + to);
  SymFunc out = *this;
  out.alphabets_[i] = to;
  return out;
}

SymFunc SymFunc::over(const std::vector<std::string>& names) const {
  std::vector<int> where;
  std::vector<int> caps(names.size(), kNoCap);
  for (size_t i = 0; i < names.size(); ++i) {
    int j = alphabet_index(names[i]);
    if (j >= 0) caps[i] = caps_[j];
  }
  for (const auto& a : alphabets_)
    if (std::find(names.begin(), names.end(), a) == names.end()) throw DomainError("alphabet dropped: " + a);
  SymFunc out(names, caps);
  for (const auto& [key, c] : terms_) {
    Key k(names.size());
    for (size_t i = 0; i < names.size(); ++i) {
      int j = alphabet_index(names[i]);
      if (j >= 0) k[i] = key[j];
    }
    out.terms_.emplace(std::move(k), c);
  }
  return out;
}

SymFunc SymFunc::homogeneous_part(const std::string& alphabet, int degree) const {
  int i = alphabet_index(alphabet);
  if (i < 0) throw DomainError("unknown alphabet " + alphabet);
  SymFunc out(alphabets_, caps_);
  for (const auto& [key, c] : terms_)
    if (partition_size(key[i]) == degree) out.terms_.emplace(key, c);
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  auto [a, b] = align(*this, o);
  for (const auto& [key, c] : b.terms_) a.add_term(key, c);
  return *this = std::move(a);
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  auto [a, b] = align(*this, o);
  for (const auto& [key, c] : b.terms_) a.add_term(key, -c);
  return *this = std::move(a);
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  auto names = union_alphabets(a.alphabets(), b.alphabets());
  return a.over(names).terms() == b.over(names).terms();
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (size_t i = 0; i < key.size(); ++i) {
      if (key[i].empty()) continue;
      os << "*p[";
      for (size_t j = 0; j < key[i].size(); ++j) os << (j ? "," : "") << key[i][j];
      os << "](" << alphabets_[i] << ")";
    }
  }
  return os.str();
}

namespace {

/// h_r or e_r in alphabet X via Newton's identities.
const SymFunc& newton(int r, bool elementary) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, SymFunc> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(r, elementary);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<SymFunc> seq{SymFunc::one()};
  for (int m = 1; m <= r; ++m) {
    SymFunc acc;
    for (int i = 1; i <= m; ++i) {
      Rational sign = (elementary && i % 2 == 0) ? -1 : 1;
      acc += multiply(SymFunc::power_sum({i}), seq[m - i]) * sign;
    }
    seq.push_back(acc * Rational(1, m));
  }
  return cache.emplace(key, seq[r]).first->second;
}

SymFunc jacobi_trudi(const Partition& lambda) {
  bool use_e = transpose(lambda).size() < lambda.size();
  Partition l = use_e ? transpose(lambda) : lambda;
  int len = static_cast<int>(l.size());
  SymFunc total;
  std::vector<bool> used(len, false);
  // Expand det(g_{l_i - i + j}) over permutations, skipping zero entries.
  std::function<void(int, SymFunc, int)> rec = [&](int row, SymFunc acc, int sign) {
    if (row == len) {
      total += acc * Rational(sign);
      return;
    }
    for (int j = 0; j < len; ++j) {
      if (used[j]) continue;
      int deg = l[row] - row + j;
      if (deg < 0) continue;
      // Columns already used to the right of j form inversions with this choice.
      int inv = 0;
      for (int t = j + 1; t < len; ++t) inv += used[t];
      used[j] = true;
      rec(row + 1, multiply(acc, newton(deg, use_e)), (inv % 2) ? -sign : sign);
      used[j] = false;
    }
  };
  rec(0, SymFunc::one(), 1);
  return total;
}

}  // namespace

SymFunc basis_to_p(Basis basis, const Partition& lambda, const std::string& alphabet) {
  if (!is_partition(lambda)) throw DomainError("not a partition");
  static std::mutex mu;
  static std::map<std::pair<int, Partition>, SymFunc> cache;
  auto key = std::make_pair(static_cast<int>(basis), lambda);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second.renamed("X", alphabet);
  }
  SymFunc out;
  switch (basis) {
    case Basis::h:
    case Basis::e: {
      out = SymFunc::one();
      for (int part : lambda) out = multiply(out, newton(part, basis == Basis::e));
      break;
    }
    case Basis::s:
      out = jacobi_trudi(lambda);
      break;
  }
  std::lock_guard lock(mu);
  cache.emplace(key, out);
  return out.renamed("X", alphabet);
}

Integer character_value(const Partition& lambda, const Partition& mu) {
  if (partition_size(lambda) != partition_size(mu)) throw DomainError("character_value: sizes differ");
  static std::mutex m;
  static std::map<std::pair<Partition, Partition>, Integer> cache;
  {
    std::lock_guard lock(m);
    if (auto it = cache.find({lambda, mu}); it != cache.end()) return it->second;
  }
  Integer result = 0;
  if (mu.empty()) {
    result = lambda.empty() ? 1 : 0;
  } else {
    int k = mu[0];
    Partition rest(mu.begin() + 1, mu.end());
    int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + len - 1 - i;
    for (int i = 0; i < len; ++i) {
      int nb = beta[i] - k;
      if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
      int between = 0;
      for (int b : beta)
        if (b > nb && b < beta[i]) ++between;
      std::vector<int> nbeta = beta;
      nbeta[i] = nb;
      std::sort(nbeta.rbegin(), nbeta.rend());
      Partition smaller;
      for (int j = 0; j < len; ++j)
        if (int part = nbeta[j] - (len - 1 - j); part > 0) smaller.push_back(part);
      Integer v = character_value(smaller, rest);
      result += (between % 2) ? Integer(-v) : v;
    }
  }
  std::lock_guard lock(m);
  cache.emplace(std::make_pair(lambda, mu), result);
  return result;
}

SymFunc schur_by_characters(const Partition& lambda, const std::string& alphabet) {
  SymFunc out({alphabet});
  int r = partition_size(lambda);
  for (const auto& mu : enumerate_partitions(r))
    out.add_term({mu}, Rational(character_value(lambda, mu)) / Rational(z_lambda(mu)));
  return out;
}

std::map<Partition, Rational> p_to_schur(const SymFunc& f, int degree) {
  if (f.alphabets().size() != 1) throw DomainError("p_to_schur needs a univariate function");
  for (const auto& [key, c] : f.terms())
    if (partition_size(key[0]) != degree) throw DomainError("p_to_schur: input is not homogeneous of the given degree");
  std::map<Partition, Rational> out;
  for (const auto& lambda : enumerate_partitions(degree)) {
    Rational c = 0;
    for (const auto& [key, a] : f.terms()) c += a * Rational(character_value(lambda, key[0]));
    if (c != 0) out.emplace(lambda, c);
  }
  return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  auto [a, b] = align(f, g);
  SymFunc out(a.alphabets(), a.caps());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      SymFunc::Key k(ka.size());
      bool fits = true;
      for (size_t i = 0; i < ka.size() && fits; ++i) {
        k[i] = merge_parts(ka[i], kb[i]);
        fits = partition_size(k[i]) <= a.caps()[i];
      }
      if (fits) out.add_term(k, ca * cb);
    }
  }
  return out;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
  if (f.alphabets().size() != 1) throw DomainError("plethysm: outer function must be univariate");
  // p_k ∘ g scales every part in every alphabet by k.
  std::map<int, SymFunc> scaled;
  auto scaled_by = [&](int k) -> const SymFunc& {
    auto it = scaled.find(k);
    if (it != scaled.end()) return it->second;
    SymFunc s(g.alphabets(), g.caps());
    for (const auto& [key, c] : g.terms()) {
      SymFunc::Key nk = key;
      for (auto& part : nk)
        for (auto& x : part) x *= k;
      s.add_term(nk, c);
    }
    return scaled.emplace(k, std::move(s)).first->second;
  };
  SymFunc out(g.alphabets(), g.caps());
  for (const auto& [key, c] : f.terms()) {
    SymFunc term = SymFunc::one(g.alphabets());
    for (int k : key[0]) {
      term = multiply(term, scaled_by(k));
      if (term.is_zero()) break;
    }
    out += term * c;
  }
  return out;
}

namespace {

std::optional<int> homogeneous_degree(const SymFunc& f, int idx) {
  std::optional<int> d;
  for (const auto& [key, c] : f.terms()) {
    int s = partition_size(key[idx]);
    if (d && *d != s) return std::nullopt;
    d = s;
  }
  return d;
}

}  // namespace

SymFunc kronecker(const SymFunc& f, const SymFunc& g) {
  auto names = union_alphabets(f.alphabets(), g.alphabets());
  for (const auto& name : f.alphabets()) {
    int j = g.alphabet_index(name);
    if (j < 0) continue;
    auto df = homogeneous_degree(f, f.alphabet_index(name));
    auto dg = homogeneous_degree(g, j);
    if (df && dg && *df != *dg) throw DomainError("kronecker: degree mismatch in alphabet " + name);
  }
  auto [a, b] = align(f, g);
  std::vector<bool> shared(names.size());
  for (size_t i = 0; i < names.size(); ++i)
    shared[i] = f.alphabet_index(names[i]) >= 0 && g.alphabet_index(names[i]) >= 0;
  SymFunc out(a.alphabets(), a.caps());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Rational c = ca * cb;
      SymFunc::Key k(ka.size());
      bool match = true;
      for (size_t i = 0; i < ka.size() && match; ++i) {
        if (shared[i]) {
          match = ka[i] == kb[i];
          k[i] = ka[i];
          if (match) c *= Rational(z_lambda(ka[i]));
        } else {
          k[i] = merge_parts(ka[i], kb[i]);
        }
      }
      if (match) out.add_term(k, c);
    }
  }
  return out;
}

SymFunc scalar_product(const SymFunc& f, const SymFunc& g, const std::string& alphabet) {
  int fi = f.alphabet_index(alphabet), gi = g.alphabet_index(alphabet);
  if (fi < 0 || gi < 0) throw DomainError("scalar_product: both functions must contain alphabet " + alphabet);
  auto [a, b] = align(f, g);
  int idx = a.alphabet_index(alphabet);
  std::vector<std::string> rest_names;
  std::vector<int> rest_caps;
  for (size_t i = 0; i < a.alphabets().size(); ++i) {
    if (static_cast<int>(i) == idx) continue;
    rest_names.push_back(a.alphabets()[i]);
    rest_caps.push_back(a.caps()[i]);
  }
  SymFunc out(rest_names, rest_caps);
  // Group g's terms by their partition in the paired alphabet.
  std::map<Partition, std::vector<std::pair<const SymFunc::Key*, Rational>>> by_part;
  for (const auto& [kb, cb] : b.terms()) by_part[kb[idx]].push_back({&kb, cb});
  for (const auto& [ka, ca] : a.terms()) {
    auto it = by_part.find(ka[idx]);
    if (it == by_part.end()) continue;
    Rational z(z_lambda(ka[idx]));
    for (const auto& [kb, cb] : it->second) {
      SymFunc::Key k;
      for (size_t i = 0; i < ka.size(); ++i)
        if (static_cast<int>(i) != idx) k.push_back(merge_parts(ka[i], (*kb)[i]));
      out.add_term(k, ca * cb * z);
    }
  }
  return out;
}

SymFunc diagonal(const SymFunc& f, const std::string& result_alphabet) {
  if (f.alphabets().size() != 2) throw DomainError("diagonal needs exactly two alphabets");
  SymFunc out({result_alphabet}, {std::min(f.caps()[0], f.caps()[1])});
  for (const auto& [key, c] : f.terms())
    if (key[0] == key[1]) out.add_term({key[0]}, c * Rational(z_lambda(key[0])));
  return out;
}

QPoly fake_degree(const SymFunc& f) {
  if (f.alphabets().size() != 1) throw DomainError("fake_degree needs a univariate function");
  if (f.is_zero()) return {};
  auto d = homogeneous_degree(f, 0);
  if (!d) throw DomainError("fake_degree: input is not homogeneous");
  QPoly out;
  for (const auto& [lambda, c] : p_to_schur(f, *d)) out += fake_degree_schur(lambda) * c;
  return out;
}

SymFunc complete_series(int cap, const std::string& alphabet) {
  SymFunc out({alphabet}, {cap});
  for (int j = 0; j <= cap; ++j) out += h_fn(j, alphabet);
  return out.with_cap(alphabet, cap);
}

SymFunc complete_series_plus(int cap, const std::string& alphabet) {
  SymFunc out({alphabet}, {cap});
  for (int j = 1; j <= cap; ++j) out += h_fn(j, alphabet);
  return out.with_cap(alphabet, cap);
}

SymFunc linear_orders_plus(int cap, const std::string& alphabet) {
  SymFunc out({alphabet}, {cap});
  for (int m = 1; m <= cap; ++m) out.add_term({Partition(m, 1)}, 1);
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

/// Σ s_{λᵗ}(Y) over λ with even columns, at most max_len rows, |λ| in [lo, hi].
SymFunc transposed_even_column_sum(int lo, int hi, int max_len) {
  SymFunc out({"Y"}, {hi});
  for (int m = lo; m <= hi; ++m)
    for (const auto& lambda : enumerate_partitions(m, {max_len, true, false}))
      out += schur(transpose(lambda), "Y");
  return out;
}

/// h_r(X·g(Y)) with caps r on X and k·r on Y.
SymFunc h_of_product(int r, const SymFunc& g_of_y, int ycap) {
  SymFunc inner = multiply(SymFunc::power_sum({1}, "X").with_cap("X", r), g_of_y.with_cap("Y", ycap));
  return plethysm(h_fn(r), inner).homogeneous_part("X", r);
}

SymFunc h_minus(int k) {
  SymFunc g = h_fn(k, "Y");
  if (k >= 2) g -= h_fn(k - 2, "Y");
  return g;
}

/// (H_n ∘ H₊) restricted to the given degree.
SymFunc set_partition_series(int degree, int n, const std::string& alphabet) {
  SymFunc hn({"X"});
  for (int j = 0; j <= n; ++j) hn += h_fn(j);
  return plethysm(hn, complete_series_plus(degree, alphabet)).homogeneous_part(alphabet, degree);
}

}  // namespace

SymFunc sp_matchings_character(int r, int n) {
  require(r >= 0 && n >= 1, "sp_matchings needs r >= 0, n >= 1");
  return transposed_even_column_sum(2 * r, 2 * r, 2 * n).renamed("Y", "X");
}

SymFunc sp_sympower_character(int r, int n, int k) {
  require(r >= 0 && n >= 1 && k >= 1, "sp_sympower needs r >= 0, n >= 1, k >= 1");
  SymFunc kernel = h_of_product(r, e_fn(k, "Y"), k * r);
  return scalar_product(kernel, transposed_even_column_sum(k * r, k * r, 2 * n), "Y");
}

SymFunc sp_fundamental_character(int r, int n, int k) {
  require(r >= 0 && n >= 1 && k >= 1, "sp_fundamental needs r >= 0, n >= 1, k >= 1");
  SymFunc kernel = h_of_product(r, h_minus(k), k * r);
  return scalar_product(kernel, transposed_even_column_sum(0, k * r, 2 * n), "Y");
}

SymFunc regular_graphs_character(int r, int k) {
  require(r >= 0 && k >= 1, "regular_graphs needs r >= 0, k >= 1");
  SymFunc kernel = h_of_product(r, h_minus(k), k * r);
  SymFunc graphs = plethysm(complete_series(k * r / 2 + 1), h_fn(2, "Y").with_cap("Y", k * r));
  return scalar_product(kernel, graphs, "Y");
}

SymFunc sym_sets_character(int r, int n) {
  require(r >= 0 && n >= 0, "sym_sets needs r, n >= 0");
  return set_partition_series(r, n, "X");
}

SymFunc sym_multiset_character(int r, int n, int k, char mode) {
  require(r >= 0 && n >= 0 && k >= 1, "sym_multiset needs r, n >= 0, k >= 1");
  require(mode == 'h' || mode == 'e', "sym_multiset mode must be h or e");
  SymFunc kernel = h_of_product(r, mode == 'h' ? h_fn(k, "Y") : e_fn(k, "Y"), k * r);
  return scalar_product(kernel, set_partition_series(k * r, n, "Y"), "Y");
}

SymFunc gl_adjoint_character(int r, int n) {
  require(r >= 0 && n >= 1, "gl_adjoint needs r >= 0, n >= 1");
  SymFunc out;
  for (const auto& lambda : enumerate_partitions(r, {n, false, false})) {
    SymFunc s = schur(lambda);
    out += kronecker(s, s);
  }
  return out;
}

SymFunc permutations_character(int r) {
  require(r >= 0, "permutations needs r >= 0");
  SymFunc out;
  for (const auto& lambda : enumerate_partitions(r)) out.add_term({lambda}, 1);
  return out;
}

SymFunc invariant_character(const std::string& family, const FamilyParams& p) {
  if (family == "sp_matchings") return sp_matchings_character(p.r, p.n);
  if (family == "sp_sympower") return sp_sympower_character(p.r, p.n, p.k);
  if (family == "sp_fundamental") return sp_fundamental_character(p.r, p.n, p.k);
  if (family == "regular_graphs") return regular_graphs_character(p.r, p.k);
  if (family == "sym_sets") return sym_sets_character(p.r, p.n);
  if (family == "sym_multiset") return sym_multiset_character(p.r, p.n, p.k, p.mode);
  if (family == "gl_adjoint") return gl_adjoint_character(p.r, p.n);
  if (family == "permutations") return permutations_character(p.r);
  throw DomainError("unknown character family: " + family);
}

bool cauchy_diagonal_identity_check(const Partition& alpha, const Partition& beta, int maxdeg) {
  if (maxdeg > 7) throw DomainError("cauchy_diagonal_identity_check: maxdeg must be at most 7");
  int a = partition_size(alpha), b = partition_size(beta);
  if (a != b) return true;  // both sides vanish degree by degree
  SymFunc lhs({"X"}, {maxdeg});
  SymFunc sa = schur(alpha), sb = schur(beta);
  for (int d = a; d <= maxdeg; ++d)
    for (const auto& lambda : enumerate_partitions(d - a)) {
      SymFunc sl = schur(lambda);
      lhs += kronecker(multiply(sa, sl), multiply(sb, sl));
    }
  SymFunc all_p({"X"}, {maxdeg});
  for (int d = 0; d <= maxdeg; ++d) all_p += permutations_character(d);
  SymFunc rhs = multiply(all_p.with_cap("X", maxdeg), plethysm(kronecker(sa, sb), linear_orders_plus(maxdeg)));
  return lhs.with_cap("X", maxdeg) == rhs.with_cap("X", maxdeg);
}

}  // namespace diagcat
