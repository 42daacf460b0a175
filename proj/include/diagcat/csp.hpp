#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagcat/errors.hpp"
#include "diagcat/qpoly.hpp"
#include "diagcat/symfunc.hpp"

namespace diagcat {

/// Σ over orbits of size m of Σ_{j<m} q^{j·order/m}.
QPoly perm_character_mod_cyclic(const std::vector<int>& orbit_sizes, int order);

struct OrbitData {
  std::vector<int> orbit_sizes;
  /// fix_counts[j] = #{x : ρ^j(x) = x}, j = 0..order-1.
  std::vector<long long> fix_counts;
};

/// Walks every orbit of ρ on X; throws DomainError if ρ leaves X or has the wrong order.
template <class T, class Rho>
OrbitData orbit_data(const std::vector<T>& xs, Rho rho, int order) {
  if (order < 1) throw DomainError("cyclic order must be positive");
  std::map<T, std::size_t> index;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!index.emplace(xs[i], i).second) throw DomainError("set contains a repeated element");
  OrbitData out;
  out.fix_counts.assign(order, 0);
  std::vector<bool> seen(xs.size(), false);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit{i};
    T cur = rho(xs[i]);
    while (true) {
      auto it = index.find(cur);
      if (it == index.end()) throw DomainError("set is not stable under the cyclic action");
      if (it->second == i) break;
      if (seen[it->second] || static_cast<int>(orbit.size()) >= order)
        throw DomainError("cyclic action does not have the declared order");
      seen[it->second] = true;
      orbit.push_back(it->second);
      cur = rho(cur);
    }
    seen[i] = true;
    int m = static_cast<int>(orbit.size());
    if (order % m != 0) throw DomainError("orbit size does not divide the cyclic order");
    out.orbit_sizes.push_back(m);
    for (int j = 0; j < order; j += m) out.fix_counts[j] += m;
  }
  return out;
}

struct CSPVerdict {
  bool pass = false;
  /// Smallest exponent where P mod q^order−1 and the character differ.
  std::optional<int> witness;
  QPoly reduced, chi;
};

CSPVerdict verify_csp(const OrbitData& data, int order, const QPoly& polynomial);

template <class T, class Rho>
CSPVerdict verify_csp(const std::vector<T>& xs, Rho rho, int order, const QPoly& polynomial) {
  return verify_csp(orbit_data(xs, rho, order), order, polynomial);
}

struct CSPInstance {
  std::string family;
  FamilyParams params;
  int order = 1;
  std::size_t set_size = 0;
  OrbitData orbits;
  QPoly polynomial;
  /// False for variants whose fake degree is not claimed to sieve any set; only the polynomial is filled.
  bool asserted = true;
};

/// noncrossing_matchings, all_matchings, regular_graphs, set_partitions, multiset_partitions,
/// permutations, temperley_lieb; plus the unasserted multiset_exterior and sp_fundamental.
const std::vector<std::string>& csp_families();
CSPInstance build_instance(const std::string& family, const FamilyParams& params);
CSPVerdict verify(const CSPInstance& instance);

/// Orbits of set partitions of [k·r] under permutations inside each group of k consecutive points,
/// written as multiset partitions of {1^k, ..., r^k}; at most n blocks.
std::vector<std::vector<std::vector<int>>> enumerate_multiset_partitions(int r, int n, int k);

}  // namespace diagcat
