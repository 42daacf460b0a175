#include "diagcat/csp.hpp"

#include <algorithm>
#include <set>

#include "diagcat/diagrams.hpp"

namespace diagcat {

namespace {

constexpr std::size_t kSetLimit = 1'000'000;

void guard_size(std::size_t n) {
  if (n > kSetLimit) throw ResourceError("CSP set exceeds 10^6 elements");
}

}  // namespace

QPoly perm_character_mod_cyclic(const std::vector<int>& orbit_sizes, int order) {
  if (order < 1) throw DomainError("cyclic order must be positive");
  std::vector<Rational> c(order);
  for (int m : orbit_sizes) {
    if (m < 1 || order % m != 0) throw DomainError("orbit size " + std::to_string(m) + " does not divide " + std::to_string(order));
    for (int j = 0; j < m; ++j) c[j * (order / m)] += 1;
  }
  return QPoly(std::move(c));
}

CSPVerdict verify_csp(const OrbitData& data, int order, const QPoly& polynomial) {
  CSPVerdict v;
  v.chi = perm_character_mod_cyclic(data.orbit_sizes, order);
  v.reduced = reduce_mod_cyclic(polynomial, order);
  for (int e = 0; e < order; ++e)
    if (v.reduced.coeff(e) != v.chi.coeff(e)) {
      v.witness = e;
      break;
    }
  v.pass = !v.witness;
  return v;
}

const std::vector<std::string>& csp_families() {
  static const std::vector<std::string> names{
      "noncrossing_matchings", "all_matchings", "regular_graphs",   "set_partitions", "multiset_partitions",
      "permutations",          "temperley_lieb", "multiset_exterior", "sp_fundamental"};
  return names;
}

std::vector<std::vector<std::vector<int>>> enumerate_multiset_partitions(int r, int n, int k) {
  if (r < 0 || n < 0 || k < 1) throw DomainError("multiset partitions need r, n >= 0 and k >= 1");
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& d : enumerate_setpartitions(k * r, n)) {
    std::vector<std::vector<int>> blocks;
    for (auto block : d.blocks()) {
      for (int& p : block) p /= k;
      std::sort(block.begin(), block.end());
      blocks.push_back(std::move(block));
    }
    std::sort(blocks.begin(), blocks.end());
    seen.insert(std::move(blocks));
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::vector<std::vector<int>> rotate_multiset(const std::vector<std::vector<int>>& blocks, int r) {
  std::vector<std::vector<int>> out;
  for (auto block : blocks) {
    for (int& x : block) x = (x + 1) % r;
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation conjugate_by_long_cycle(const Permutation& p) {
  int m = static_cast<int>(p.size());
  Permutation out(m);
  for (int i = 0; i < m; ++i) out[(i + 1) % m] = (p[i] + 1) % m;
  return out;
}

template <class T, class Rho>
void fill(CSPInstance& inst, const std::vector<T>& xs, Rho rho) {
  guard_size(xs.size());
  inst.set_size = xs.size();
  inst.orbits = orbit_data(xs, rho, inst.order);
}

}  // namespace

CSPInstance build_instance(const std::string& family, const FamilyParams& p) {
  CSPInstance inst;
  inst.family = family;
  inst.params = p;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw DomainError(family + ": " + what);
  };
  if (family == "noncrossing_matchings") {
    need(p.r >= 1 && p.n >= 1, "needs r >= 1 and n >= 1");
    inst.order = 2 * p.r;
    fill(inst, enumerate_noncrossing(2 * p.r, p.n), [](const BrauerDiagram& d) { return rotate(d); });
    inst.polynomial = fake_degree(sp_matchings_character(p.r, p.n));
  } else if (family == "all_matchings") {
    need(p.r >= 1, "needs r >= 1");
    inst.order = 2 * p.r;
    fill(inst, enumerate_matchings(2 * p.r), [](const BrauerDiagram& d) { return rotate(d); });
    inst.polynomial = fake_degree(plethysm(h_fn(p.r), h_fn(2)));
  } else if (family == "regular_graphs") {
    need(p.r >= 1 && p.n >= 1 && p.k >= 1, "needs r, n, k >= 1");
    inst.order = p.r;
    int k = p.k;
    fill(inst, enumerate_regular_diagrams(p.r, p.n, p.k), [k](const BrauerDiagram& d) { return rotate(d, k); });
    inst.polynomial = fake_degree(sp_sympower_character(p.r, p.n, p.k));
  } else if (family == "set_partitions") {
    need(p.r >= 1 && p.n >= 1, "needs r >= 1 and n >= 1");
    inst.order = p.r;
    fill(inst, enumerate_setpartitions(p.r, p.n), [](const PartitionDiagram& d) { return rotate(d); });
    inst.polynomial = fake_degree(sym_sets_character(p.r, p.n));
  } else if (family == "multiset_partitions") {
    need(p.r >= 1 && p.n >= 1 && p.k >= 1, "needs r, n, k >= 1");
    inst.order = p.r;
    int r = p.r;
    fill(inst, enumerate_multiset_partitions(p.r, p.n, p.k),
         [r](const std::vector<std::vector<int>>& b) { return rotate_multiset(b, r); });
    inst.polynomial = fake_degree(sym_multiset_character(p.r, p.n, p.k, 'h'));
  } else if (family == "permutations") {
    need(p.r >= 1, "needs r >= 1");
    inst.order = p.r;
    fill(inst, enumerate_permutations(p.r), conjugate_by_long_cycle);
    inst.polynomial = fake_degree(permutations_character(p.r));
  } else if (family == "temperley_lieb") {
    // The size is passed as k; r is accepted as an alias.
    int k = p.k > 0 ? p.k : p.r;
    need(k >= 1, "needs k >= 1");
    inst.params.k = k;
    inst.order = 2 * k;
    fill(inst, enumerate_noncrossing(2 * k, 1), [](const BrauerDiagram& d) { return rotate(d); });
    QPoly numerator = qbinomial(2 * k, k);
    inst.polynomial = numerator.divide_exact(q_integer(k + 1));
  } else if (family == "multiset_exterior") {
    need(p.r >= 1 && p.n >= 1 && p.k >= 1, "needs r, n, k >= 1");
    inst.order = p.r;
    inst.asserted = false;
    inst.polynomial = fake_degree(sym_multiset_character(p.r, p.n, p.k, 'e'));
  } else if (family == "sp_fundamental") {
    need(p.r >= 1 && p.n >= 1 && p.k >= 1, "needs r, n, k >= 1");
    inst.order = p.r;
    inst.asserted = false;
    inst.polynomial = fake_degree(sp_fundamental_character(p.r, p.n, p.k));
  } else {
    throw DomainError("unknown CSP family: " + family);
  }
  return inst;
}

CSPVerdict verify(const CSPInstance& inst) {
  if (!inst.asserted) {
    CSPVerdict v;
    v.reduced = reduce_mod_cyclic(inst.polynomial, inst.order);
    v.pass = true;
    return v;
  }
  return verify_csp(inst.orbits, inst.order, inst.polynomial);
}

}  // namespace diagcat
