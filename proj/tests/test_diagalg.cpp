#include <doctest.h>

#include "diagcat/checks.hpp"
#include "diagcat/diagalg.hpp"
#include "diagcat/evaluation.hpp"

using namespace diagcat;

namespace {
BrauerElement b_of(const BrauerDiagram& d, const Rational& delta, const Rational& c = 1) {
  return BrauerElement::of(d, delta, c);
}
BrauerElement s_elem(int m, int i, const Rational& delta) { return b_of(BrauerDiagram::crossing(m, i), delta); }
BrauerElement u_elem(int m, int i, const Rational& delta) { return b_of(BrauerDiagram::arc_pair(m, i), delta); }
}  // namespace

TEST_CASE("algebra multiplication") {
  Rational d = 5;
  CHECK(multiply(u_elem(2, 0, d), u_elem(2, 0, d)) == u_elem(2, 0, d) * d);
  CHECK(multiply(s_elem(2, 0, d), s_elem(2, 0, d)) == BrauerElement::identity(2, d));
  Rational m2 = -2;
  BrauerElement e2 = (BrauerElement::identity(2, m2) + s_elem(2, 0, m2) + u_elem(2, 0, m2)) * make_rational(1, 2);
  CHECK(multiply(e2, e2) == e2);
  CHECK(brauer_E_average(2, m2) == e2);
  CHECK_THROWS_AS(multiply(u_elem(2, 0, 1), u_elem(2, 0, 2)), DomainError);
  CHECK_THROWS_AS(multiply(u_elem(2, 0, 1), BrauerElement::identity(3, 1)), DomainError);
}

TEST_CASE("symmetric group elements") {
  auto a2 = perm_antisymmetriser(2);
  CHECK(a2 == (BrauerElement::identity(2, 0) - s_elem(2, 0, 0)) * make_rational(1, 2));
  CHECK(multiply(a2, a2) == a2);
  auto a3 = perm_antisymmetriser(3);
  CHECK(multiply(a3, a3) == a3);
  auto sym3 = perm_symmetriser(3);
  CHECK(multiply(sym3, sym3) == sym3);
  CHECK(multiply(sym3, a3).is_zero());
  CHECK(lds({0, 1, 2, 3}) == 1);
  CHECK(lds({3, 2, 1, 0}) == 4);
  int small = 0;
  for (const auto& p : enumerate_permutations(3)) small += lds(p) <= 2;
  CHECK(small == 5);
  CHECK(permutation_sign({1, 0, 2}) == -1);
  CHECK(permutation_sign({1, 2, 0}) == 1);
}

TEST_CASE("averaged Brauer idempotent") {
  Rational d = -2;
  auto e = brauer_E_average(2, d);
  CHECK(multiply(s_elem(2, 0, d), e) == e);
  CHECK(multiply(u_elem(2, 0, d), e).is_zero());
  Rational d4 = -4;
  auto e3 = brauer_E_average(3, d4);
  for (int i = 0; i < 2; ++i) {
    CHECK(multiply(u_elem(3, i, d4), e3).is_zero());
    CHECK(multiply(e3, u_elem(3, i, d4)).is_zero());
    CHECK(multiply(s_elem(3, i, d4), e3) == e3);
  }
  CHECK(multiply(e3, e3) == e3);
  CHECK(trace(e) == 0);
  CHECK(trace(e3) == 0);
  CHECK(all_pass(brauer_idempotent_check(1)));
  CHECK(all_pass(brauer_idempotent_check(2)));
}

TEST_CASE("Yang-Baxter elements") {
  Rational d = -2;
  CHECK(yang_baxter_R(1, 1, d, 2) == brauer_E_average(2, d));
  CHECK_THROWS_AS(yang_baxter_R(1, 1, 0, 2), DomainError);
  CHECK_THROWS_AS(yang_baxter_R(1, 2, -2, 3), DomainError);
  for (auto [h, k] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}})
    for (const Rational& delta : {Rational(-4), Rational(5), make_rational(7, 2)})
      CHECK(all_pass(yang_baxter_check(h, k, delta)));
  for (int k = 1; k <= 3; ++k)
    CHECK(yang_baxter_R_cleared(2, k, 5, 3) == yang_baxter_R(2, k, 5, 3) * Rational((k + 1) * (5 + 2 * k - 2)));
  for (const Rational& delta : {Rational(5), make_rational(7, 2)})
    CHECK(multiply(yang_baxter_R(1, 1, delta, 4), yang_baxter_R(3, 2, delta, 4)) ==
          multiply(yang_baxter_R(3, 2, delta, 4), yang_baxter_R(1, 1, delta, 4)));
}

TEST_CASE("reduced words") {
  CHECK(crossing_labels(2, {1}) == std::vector<int>{1});
  CHECK(crossing_labels(3, {1, 2, 1}) == std::vector<int>{1, 2, 1});
  CHECK_THROWS_AS(crossing_labels(3, {1, 1}), DomainError);
  CHECK(reduced_words_of_longest(3).size() == 2);
  CHECK(reduced_words_of_longest(4).size() == 16);
  CHECK(brauer_E_from_word(1, {1}, -2) == brauer_E_average(2, -2));
  auto a = brauer_E_from_word(2, {1, 2, 1}, -4);
  auto b = brauer_E_from_word(2, {2, 1, 2}, -4);
  CHECK(a == b);
  CHECK(a == brauer_E_average(3, -4));
  // Word independence away from the special value too.
  CHECK(brauer_E_from_word(2, {1, 2, 1}, 9) == brauer_E_from_word(2, {2, 1, 2}, 9));
  auto words = reduced_words_of_longest(4);
  auto first = brauer_E_from_word(3, words.front(), 11);
  for (std::size_t i = 1; i < words.size(); i += 5) CHECK(brauer_E_from_word(3, words[i], 11) == first);
  CHECK_THROWS_AS(brauer_E_from_word(2, {1, 1, 2}, -4), DomainError);
}

TEST_CASE("trace identities") {
  Rational d = 3;
  for (int m = 0; m <= 3; ++m) CHECK(trace(BrauerElement::identity(m, d)) == power(d, m));
  CHECK(trace(u_elem(2, 0, d)) == d);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto alpha = b_of(random_brauer(2, 2, rng), d) + b_of(random_brauer(2, 2, rng), d, 2);
    auto beta = b_of(random_brauer(2, 2, rng), d, -1);
    CHECK(trace(extend(alpha)) == d * trace(alpha));
    auto ab = multiply(alpha, beta);
    CHECK(trace(multiply(extend(alpha), s_elem(3, 1, d), extend(beta))) == trace(ab));
    CHECK(trace(multiply(extend(alpha), u_elem(3, 1, d), extend(beta))) == trace(ab));
  }
}

TEST_CASE("Pfaffians and the noncrossing rewrite") {
  auto pf = pfaffian(2, 2, 1, {0, 1, 2, 3}, {}, -2);
  CHECK(pf == brauer_E_average(2, -2) * Rational(2));
  CHECK(pfaffian(0, 4, 1, {0, 1, 2, 3}, {}).terms().size() == 3);
  CHECK(pfaffian(0, 6, 1, {0, 1, 4, 5}, {{2, 3}}).terms().size() == 3);
  CHECK_THROWS_AS(pfaffian(0, 6, 1, {0, 1}, {{2, 3}, {4, 5}}), DomainError);

  auto cross3 = b_of(BrauerDiagram::from_pairs(0, 6, {{0, 3}, {1, 4}, {2, 5}}), -2);
  auto reduced = reduce_to_noncrossing(cross3, 1);
  for (const auto& [m, c] : reduced.terms()) CHECK_FALSE(has_j_crossing(m, 2));
  auto sp2 = Evaluator::symplectic(1);
  CHECK(flatten(sp2.ev(reduced)) == flatten(sp2.ev(cross3)));

  auto nc = b_of(BrauerDiagram::from_pairs(0, 6, {{0, 1}, {2, 5}, {3, 4}}), -2);
  CHECK(reduce_to_noncrossing(nc, 1) == nc);

  std::mt19937_64 rng(9);
  for (int n = 1; n <= 2; ++n) {
    auto sp = Evaluator::symplectic(n);
    Rational d = -2 * n;
    for (int k = 2; k <= 6; k += 2)
      for (int t = 0; t < 5; ++t) {
        auto a = b_of(random_brauer(0, k, rng), d) + b_of(random_brauer(0, k, rng), d, -3);
        auto b = b_of(random_brauer(0, k, rng), d, make_rational(1, 2));
        auto ra = reduce_to_noncrossing(a, n);
        for (const auto& [m, c] : ra.terms()) CHECK_FALSE(has_j_crossing(m, n + 1));
        CHECK(reduce_to_noncrossing(a + b, n) == ra + reduce_to_noncrossing(b, n));
        CHECK(flatten(sp.ev(ra)) == flatten(sp.ev(a)));
      }
  }
}

TEST_CASE("Moebius elements of the partition category") {
  auto through = PartitionDiagram::from_blocks(1, 1, {{0, 1}});
  CHECK(partition_xd(through) == PartitionElement::of(through, 0));
  auto split = PartitionDiagram::from_blocks(1, 1, {{0}, {1}});
  CHECK(partition_xd(split) == PartitionElement::of(split, 0) - PartitionElement::of(through, 0));
  auto s1 = Evaluator::symmetric(1);
  CHECK(s1.ev(partition_xd(split, 1)).is_zero());
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; r + s <= 5 && s <= 3; ++s)
      for (const auto& d : enumerate_partition_diagrams(r, s)) {
        PartitionElement sum(r, s, 0);
        for (const auto& c : coarsenings(d)) sum += partition_xd(c);
        CHECK(sum == PartitionElement::of(d, 0));
      }
}

TEST_CASE("partition idempotent recursion") {
  Rational d = 7;
  auto [e1, ep1] = partition_idempotent_recursion(1, d);
  CHECK(ep1 == PartitionElement::identity(1, d));
  CHECK(e1 == PartitionElement::identity(1, d) - partition_p(1, 1, d) * (1 / d));
  auto [e2, ep2] = partition_idempotent_recursion(2, d);
  auto e1x = extend(e1);
  CHECK(ep2 == multiply(e1x, PartitionElement::identity(2, d) - partition_h(2, 1, d) * (d / (d - 1)), e1x));
  CHECK(multiply(e2, e2) == e2);
  auto e3 = partition_idempotent_recursion(3, d).E;
  CHECK(multiply(e3, e3) == e3);
  CHECK(all_pass(partition_idempotent_check(3, 7)));
  CHECK(all_pass(partition_idempotent_check(3, make_rational(-9, 2))));
  CHECK_THROWS_AS(partition_idempotent_recursion(1, 0), DomainError);
  CHECK_THROWS_AS(partition_idempotent_recursion(2, 1), DomainError);
}
