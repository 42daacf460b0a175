#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "diagcat/csp.hpp"
#include "diagcat/diagrams.hpp"

using namespace diagcat;

namespace {
QPoly poly(std::vector<long> c) { return QPoly::from_ints(c); }
}  // namespace

TEST_CASE("permutation character from orbit sizes") {
  CHECK(perm_character_mod_cyclic({4}, 4) == poly({1, 1, 1, 1}));
  CHECK(perm_character_mod_cyclic({1, 2, 3}, 6) == poly({3, 0, 1, 1, 1}));
  CHECK(perm_character_mod_cyclic({}, 5).is_zero());
  CHECK_THROWS_AS(perm_character_mod_cyclic({4}, 6), DomainError);
}

TEST_CASE("verify_csp on noncrossing matchings of six points") {
  auto xs = enumerate_noncrossing(6, 1);
  auto rho = [](const BrauerDiagram& m) { return rotate(m); };
  auto data = orbit_data(xs, rho, 6);
  CHECK(data.fix_counts == std::vector<long long>{5, 0, 2, 3, 2, 0});
  QPoly catalan = poly({1, 0, 1, 1, 1, 0, 1});
  auto v = verify_csp(xs, rho, 6, catalan);
  CHECK(v.pass);
  CHECK_FALSE(v.witness);
  auto wrong = verify_csp(xs, rho, 6, catalan + QPoly::monomial(1));
  CHECK_FALSE(wrong.pass);
  REQUIRE(wrong.witness);
  CHECK(*wrong.witness == 1);

  // The listing order never matters.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(xs.begin(), xs.end(), rng);
    CHECK(verify_csp(xs, rho, 6, catalan).pass);
  }
}

TEST_CASE("orbit validation") {
  std::vector<int> xs{0, 1, 2};
  CHECK_THROWS_AS(orbit_data(xs, [](int x) { return x + 1; }, 3), DomainError);
  CHECK_THROWS_AS(orbit_data(xs, [](int x) { return (x + 1) % 3; }, 2), DomainError);
  CHECK_THROWS_AS(orbit_data(std::vector<int>{0, 0}, [](int x) { return x; }, 1), DomainError);
  auto d = orbit_data(xs, [](int x) { return (x + 1) % 3; }, 6);
  CHECK(d.orbit_sizes == std::vector<int>{3});
  CHECK(d.fix_counts == std::vector<long long>{3, 0, 0, 3, 0, 0});
}

TEST_CASE("permutations under conjugation by the long cycle") {
  auto inst = build_instance("permutations", {3, 0, 0});
  CHECK(inst.set_size == 6);
  CHECK(inst.orbits.fix_counts == std::vector<long long>{6, 3, 3});
  CHECK(inst.polynomial == poly({3, 1, 1, 1}));
  auto v = verify(inst);
  CHECK(v.pass);
  CHECK(v.reduced == poly({4, 1, 1}));
}

TEST_CASE("family instances") {
  auto tl = build_instance("temperley_lieb", {0, 0, 3});
  auto nc = build_instance("noncrossing_matchings", {3, 1, 0});
  CHECK(tl.set_size == nc.set_size);
  CHECK(tl.orbits.fix_counts == nc.orbits.fix_counts);
  CHECK(tl.polynomial == poly({1, 0, 1, 1, 1, 0, 1}));
  CHECK(reduce_mod_cyclic(tl.polynomial, 6) == reduce_mod_cyclic(nc.polynomial, 6));
  CHECK(verify(tl).pass);
  CHECK(verify(nc).pass);

  auto reg = build_instance("regular_graphs", {4, 2, 2});
  CHECK(reg.set_size == 6);
  CHECK(verify(reg).pass);
  CHECK(build_instance("set_partitions", {4, 2, 0}).set_size == 8);
  CHECK(verify(build_instance("set_partitions", {4, 2, 0})).pass);
  CHECK(verify(build_instance("all_matchings", {3, 0, 0})).pass);
  CHECK(verify(build_instance("multiset_partitions", {2, 2, 2})).pass);
  CHECK_THROWS_AS(build_instance("nonsense", {1, 1, 1}), DomainError);
}

TEST_CASE("unasserted variants only report a polynomial") {
  auto ext = build_instance("multiset_exterior", {3, 3, 2});
  CHECK_FALSE(ext.asserted);
  auto fundamental = build_instance("sp_fundamental", {2, 1, 3});
  CHECK_FALSE(fundamental.asserted);
  CHECK(fundamental.polynomial == poly({0, 1}));
}

TEST_CASE("each coefficient of the character counts orbits with dividing stabiliser order") {
  for (int r = 1; r <= 6; ++r)
    for (int n = 1; n <= 4; ++n) {
      auto inst = build_instance("set_partitions", {r, n, 0});
      auto v = verify(inst);
      CHECK(v.pass);
      for (int k = 0; k < r; ++k) {
        long expect = 0;
        for (int m : inst.orbits.orbit_sizes) expect += (k % (r / m) == 0);
        CHECK(v.chi.coeff(k) == expect);
        CHECK(v.reduced.coeff(k) >= 0);
      }
    }
}

TEST_CASE("multiset partitions") {
  auto mp = enumerate_multiset_partitions(2, 2, 2);
  // Multiset partitions of {1,1,2,2} into at most two blocks.
  CHECK(mp.size() == 5);
}
