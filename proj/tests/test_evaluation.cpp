#include <doctest.h>

#include "diagcat/checks.hpp"
#include "diagcat/evaluation.hpp"

using namespace diagcat;

namespace {
ExactMatrix swap_matrix(int dim) {
  ExactMatrix m(dim * dim, dim * dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) m.at(b * dim + a, a * dim + b) = 1;
  return m;
}
}  // namespace

TEST_CASE("symmetric group evaluation by the 0/1 formula") {
  for (int n = 1; n <= 3; ++n) {
    auto e = Evaluator::symmetric(n);
    auto split = PartitionDiagram::from_blocks(1, 1, {{0}, {1}});
    ExactMatrix ones(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ones.at(i, j) = 1;
    CHECK(e.ev(split) == ones);
    ExactMatrix minus_id = ones;
    for (int i = 0; i < n; ++i) minus_id.at(i, i) -= 1;
    CHECK(e.ev(partition_xd(split, n)) == minus_id);
    CHECK(e.ev(PartitionDiagram::identity(2)) == ExactMatrix::identity(n * n));
    CHECK(e.delta() == n);
  }
  CHECK_THROWS_AS(Evaluator::symmetric(2).ev(PartitionElement::identity(1, 3)), DomainError);
}

TEST_CASE("symplectic generators") {
  auto e = Evaluator::symplectic(1);
  CHECK(e.dim() == 2);
  CHECK(e.delta() == -2);
  ExactMatrix s = e.ev(BrauerDiagram::crossing(2, 0));
  CHECK(s.rows() * s.cols() == 16);
  CHECK(s == Rational(-1) * swap_matrix(2));
  CHECK(s == e.crossing_matrix());
  CHECK(e.ev(BrauerDiagram::cup()) == e.cup_matrix());
  CHECK(e.ev(BrauerDiagram::cap()) == e.cap_matrix());
  ExactMatrix loop = e.cap_matrix() * e.cup_matrix();
  CHECK(loop.at(0, 0) == -2);
}

TEST_CASE("general linear oriented loops") {
  for (int n = 1; n <= 3; ++n) {
    auto e = Evaluator::general_linear(n);
    auto cw = compose(DirectedDiagram::from_pairs(0, 2, {{0, 1}}), DirectedDiagram::from_pairs(2, 0, {{1, 0}}));
    auto ccw = compose(DirectedDiagram::from_pairs(0, 2, {{1, 0}}), DirectedDiagram::from_pairs(2, 0, {{0, 1}}));
    ExactMatrix a = e.ev(DirectedDiagram::from_pairs(2, 0, {{1, 0}})) * e.ev(DirectedDiagram::from_pairs(0, 2, {{0, 1}}));
    ExactMatrix b = e.ev(DirectedDiagram::from_pairs(2, 0, {{0, 1}})) * e.ev(DirectedDiagram::from_pairs(0, 2, {{1, 0}}));
    CHECK(cw.loops == 1);
    CHECK(ccw.loops == 1);
    CHECK(a.at(0, 0) == n);
    CHECK(b.at(0, 0) == n);
  }
}

TEST_CASE("relation suites and functoriality") {
  for (const auto& e : {Evaluator::symplectic(1), Evaluator::symplectic(2), Evaluator::symmetric(2),
                        Evaluator::symmetric(3), Evaluator::general_linear(2), Evaluator::general_linear(3)}) {
    INFO(e.name());
    CHECK(all_pass(relation_test_suite(e)));
    CHECK(all_pass(functoriality_check(e, 100)));
  }
}

TEST_CASE("invariant span ranks") {
  auto sp2 = Evaluator::symplectic(1);
  CHECK(invariant_span_rank(sp2, enumerate_matchings(6)) == 5);
  CHECK(invariant_span_rank(Evaluator::symmetric(1), enumerate_partition_diagrams(0, 3)) == 1);
  CHECK(invariant_span_rank(Evaluator::symmetric(2), enumerate_partition_diagrams(0, 4)) == 8);
  CHECK(invariant_span_rank(Evaluator::symplectic(2), enumerate_matchings(4)) == 3);
  CHECK(invariant_span_rank(Evaluator::symplectic(3), enumerate_matchings(6)) == 15);
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= 8; k += 2)
      CHECK(invariant_span_rank(Evaluator::symplectic(n), enumerate_matchings(k)) ==
            enumerate_noncrossing(k, n).size());
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 5; ++r)
      CHECK(invariant_span_rank(Evaluator::symmetric(n), enumerate_partition_diagrams(0, r)) ==
            enumerate_setpartitions(r, n).size());
}

TEST_CASE("characters on invariant spans") {
  CHECK(character_on_invariant_span(Evaluator::symplectic(1), 4) == sp_matchings_character(2, 1));
  CHECK(character_on_invariant_span(Evaluator::symplectic(1), 6) == sp_matchings_character(3, 1));
  CHECK(character_on_invariant_span(Evaluator::symplectic(2), 4) == sp_matchings_character(2, 2));
  CHECK(character_on_invariant_span(Evaluator::symmetric(2), 3) == sym_sets_character(3, 2));
}

TEST_CASE("fundamental theorems") {
  CHECK(Evaluator::symplectic(1).ev(brauer_E_average(2, -2)).is_zero());
  CHECK(Evaluator::symplectic(2).ev(brauer_E_average(3, -4)).is_zero());
  CHECK(all_pass(fundamental_theorem_checks(Evaluator::symplectic(1), 2, 2)));
  CHECK(all_pass(fundamental_theorem_checks(Evaluator::symplectic(1), 3, 3)));
  CHECK(all_pass(fundamental_theorem_checks(Evaluator::symmetric(2), 2, 2)));
  CHECK(all_pass(fundamental_theorem_checks(Evaluator::general_linear(1), 3, 3)));
  CHECK(all_pass(fundamental_theorem_checks(Evaluator::general_linear(3), 2, 1)));
  CHECK(all_pass(fundamental_theorem_checks(Evaluator::general_linear(2), 1, 1)));
  // Permutations on three strands: all six independent at n=3, only lds ≤ 1 at n=1.
  for (int n : {1, 3}) {
    std::vector<SparseVector> vs;
    for (const auto& p : enumerate_permutations(3))
      vs.push_back(flatten(Evaluator::general_linear(n).ev(DirectedDiagram::from_permutation(p))));
    CHECK(sparse_rank(vs) == (n == 3 ? 6u : 1u));
  }
}

TEST_CASE("rotation is the long cycle") {
  for (int n = 1; n <= 2; ++n)
    for (int k = 2; k <= 6; k += 2) CHECK(rotation_vs_long_cycle(Evaluator::symplectic(n), k));
  CHECK(rotation_vs_long_cycle(Evaluator::symplectic(1), 1));
  for (int k = 1; k <= 4; ++k) CHECK(rotation_vs_long_cycle(Evaluator::symmetric(2), k));
  CHECK_THROWS_AS(rotation_vs_long_cycle(Evaluator::general_linear(2), 4), DomainError);
}

TEST_CASE("symmetric power invariants") {
  CHECK(all_pass(sym_power_basis_check(1, 2, 2)));
  CHECK(all_pass(sym_power_basis_check(1, 3, 2)));
  CHECK(all_pass(sym_power_basis_check(2, 4, 2)));
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(invariant_span_rank(Evaluator::symplectic(4), enumerate_matchings(10)), ResourceError);
}
