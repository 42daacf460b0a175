#include <doctest.h>

#include <algorithm>

#include "diagcat/diagrams.hpp"
#include "diagcat/tableaux.hpp"

using namespace diagcat;

TEST_CASE("partition enumeration") {
  CHECK(enumerate_partitions(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(enumerate_partitions(0) == std::vector<Partition>{{}});
  CHECK(enumerate_partitions(4, {2, true, false}) == std::vector<Partition>{{2, 2}});
  CHECK(enumerate_partitions(4, {std::nullopt, false, true}) == std::vector<Partition>{{4}, {2, 2}});
  std::vector<long> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int r = 0; r <= 10; ++r) CHECK(enumerate_partitions(r).size() == static_cast<std::size_t>(counts[r]));
}

TEST_CASE("partition statistics") {
  CHECK(transpose({3, 1}) == Partition{2, 1, 1});
  CHECK(transpose({}) == Partition{});
  CHECK(n_statistic({2, 2}) == 2);
  CHECK(z_lambda({2, 1, 1}) == 4);
  CHECK(z_lambda({3}) == 3);
  CHECK(count_standard_tableaux({3, 2}) == 5);
  CHECK(hook_lengths({2, 1}) == std::vector<std::vector<int>>{{3, 1}, {1}});
  CHECK(add_cell({1}) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(add_cell({1}, 1) == std::vector<Partition>{{2}});
  CHECK(remove_cell({2, 1}).size() == 2);
  CHECK_FALSE(is_partition({1, 2}));
  CHECK_FALSE(is_partition({2, 0}));
}

TEST_CASE("standard tableaux and maj") {
  auto t = standard_tableaux({2, 2});
  REQUIRE(t.size() == 2);
  std::vector<int> majs{t[0].maj(), t[1].maj()};
  std::sort(majs.begin(), majs.end());
  CHECK(majs == std::vector<int>{2, 4});
  auto row = standard_tableaux({4});
  REQUIRE(row.size() == 1);
  CHECK(row[0].maj() == 0);
  auto column = standard_tableaux({1, 1, 1});
  REQUIRE(column.size() == 1);
  CHECK(column[0].maj() == 3);
}

TEST_CASE("fake degree of a Schur function, two ways") {
  CHECK(fake_degree_schur({2, 2}) == QPoly::from_ints({0, 0, 1, 0, 1}));
  CHECK(fake_degree_schur({5}) == QPoly::constant(1));
  for (int r = 0; r <= 8; ++r)
    for (const auto& l : enumerate_partitions(r)) {
      QPoly f = fake_degree_schur(l);
      CHECK(f == fake_degree_by_maj(l));
      CHECK(f == fake_degree_by_hooks(l));
      CHECK(f.at_one() == Rational(count_standard_tableaux(l)));
      CHECK(f.degree() == r * (r - 1) / 2 - n_statistic(transpose(l)));
      for (int i = 0; i < n_statistic(l); ++i) CHECK(f.coeff(i) == 0);
      CHECK(f.is_integral());
    }
}

TEST_CASE("two-row rectangle is the q-Catalan number up to a power of q") {
  for (int k = 1; k <= 5; ++k) {
    QPoly catalan = qbinomial(2 * k, k).divide_exact(q_integer(k + 1));
    CHECK(fake_degree_schur(Partition(k, 2)) == QPoly::monomial(k * (k - 1)) * catalan);
  }
}

TEST_CASE("oscillating tableaux") {
  CHECK(enumerate_oscillating(1, 6).size() == 5);
  CHECK(count_oscillating(1, 6) == 5);
  for (int n = 1; n <= 3; ++n) CHECK(enumerate_oscillating(n, 5).empty());
  CHECK(enumerate_oscillating(4, 4).size() == 3);
  CHECK(enumerate_oscillating(5, 4).size() == 3);
  for (const auto& t : enumerate_oscillating(2, 6)) {
    REQUIRE(t.size() == 7);
    CHECK(t.front().empty());
    CHECK(t.back().empty());
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      CHECK(std::abs(partition_size(t[i + 1]) - partition_size(t[i])) == 1);
      CHECK(t[i].size() <= 2);
    }
  }
  CHECK(count_oscillating(1, 2, {2}) == 1);
}

TEST_CASE("oscillating tableaux count noncrossing matchings") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 10; r += 2)
      CHECK(count_oscillating(n, r) == static_cast<long>(enumerate_noncrossing(r, n).size()));
}
