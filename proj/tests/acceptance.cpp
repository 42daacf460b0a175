// One line per acceptance criterion. Criteria listed in kKnownRed are reported as failures but do
// not fail the process; each has a ledger entry explaining why it cannot pass as stated.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "diagcat/checks.hpp"
#include "diagcat/csp.hpp"

using namespace diagcat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 4) failures_.push_back(what);
    ok_ &= ok;
  }
  void report(const Report& rep) {
    for (const auto& c : rep) expect(c.pass, c.check + " [" + c.params + "] expected " + c.expected + " got " + c.got);
  }
  Outcome done(const std::string& summary) const {
    std::string d = summary + " (" + std::to_string(total_) + " checks)";
    for (const auto& f : failures_) d += "; failed: " + f;
    return {ok_, d};
  }

 private:
  bool ok_ = true;
  int total_ = 0;
  std::vector<std::string> failures_;
};

QPoly poly(std::vector<long> c) { return QPoly::from_ints(c); }

std::string params(int r, int n, int k) {
  return "r=" + std::to_string(r) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
}

CSPVerdict csp(Tally& t, const std::string& family, FamilyParams p, CSPInstance* keep = nullptr) {
  auto inst = build_instance(family, p);
  auto v = verify(inst);
  t.expect(v.pass, family + " " + params(p.r, p.n, p.k));
  if (keep) *keep = inst;
  return v;
}

Outcome noncrossing_csp() {
  Tally t;
  for (int r = 1; r <= 5; ++r)
    for (int n = 1; n <= 3; ++n) csp(t, "noncrossing_matchings", {r, n, 0});
  CSPInstance inst;
  auto v = csp(t, "noncrossing_matchings", {3, 1, 0}, &inst);
  t.expect(inst.orbits.fix_counts == std::vector<long long>{5, 0, 2, 3, 2, 0}, "fix profile (5,0,2,3,2,0)");
  QPoly catalan = poly({1, 0, 1, 1, 1, 0, 1});
  // Under the maj convention fd(s_222) carries the factor q^{n(222)} = q^6; the residues mod q^6-1 agree.
  t.expect(inst.polynomial == QPoly::monomial(6) * catalan, "P = q^6·(1+q²+q³+q⁴+q⁶)");
  t.expect(v.reduced == reduce_mod_cyclic(catalan, 6), "P ≡ 1+q²+q³+q⁴+q⁶ mod q^6-1");
  auto tl = build_instance("temperley_lieb", {0, 0, 3});
  t.expect(tl.polynomial == catalan, "Temperley–Lieb pipeline gives 1+q²+q³+q⁴+q⁶ exactly");
  t.expect(verify(tl).pass, "temperley_lieb(3)");
  return t.done("r<=5, n in {1,2,3}; (3,1) profile and q-Catalan residue");
}

Outcome all_matchings_csp() {
  Tally t;
  for (int r = 1; r <= 5; ++r) {
    CSPInstance inst;
    csp(t, "all_matchings", {r, 0, 0}, &inst);
    t.expect(inst.set_size == static_cast<std::size_t>(double_factorial(2 * r - 1)), "|X| = (2r-1)!!");
    t.expect(inst.polynomial == fake_degree(plethysm(h_fn(r), h_fn(2))), "P = fd(h_r∘h_2)");
  }
  return t.done("r<=5");
}

Outcome regular_graphs_csp() {
  Tally t;
  CSPInstance inst;
  csp(t, "regular_graphs", {4, 2, 2}, &inst);
  t.expect(inst.set_size == 6, "|X(4,2,2)| = 6");
  for (auto [r, n, k] : {std::tuple{2, 1, 2}, std::tuple{3, 1, 2}, std::tuple{3, 2, 2}}) csp(t, "regular_graphs", {r, n, k});
  return t.done("|X(4,2,2)| = " + std::to_string(inst.set_size));
}

Outcome set_partitions_csp() {
  Tally t;
  for (int r = 1; r <= 6; ++r)
    for (int n = 1; n <= 4; ++n) csp(t, "set_partitions", {r, n, 0});
  for (auto [r, n, k] : {std::tuple{2, 2, 2}, std::tuple{3, 2, 2}, std::tuple{3, 3, 2}}) csp(t, "multiset_partitions", {r, n, k});
  return t.done("set partitions r<=6 n<=4; three multiset instances");
}

Outcome permutations_csp() {
  Tally t;
  for (int r = 1; r <= 5; ++r) csp(t, "permutations", {r, 0, 0});
  CSPInstance inst;
  auto v = csp(t, "permutations", {3, 0, 0}, &inst);
  t.expect(v.reduced == poly({4, 1, 1}), "P ≡ 4+q+q² mod q³-1");
  t.expect(inst.orbits.fix_counts == std::vector<long long>{6, 3, 3}, "fix profile (6,3,3)");
  return t.done("r<=5; r=3 residue " + v.reduced.to_string());
}

SymFunc expansion_of(const std::vector<std::pair<Partition, long>>& terms) {
  SymFunc f;
  for (const auto& [lambda, c] : terms) f.add_term({lambda}, make_rational(c, 72));
  return f;
}

Outcome stated_coefficients() {
  Tally t;
  // k = 2, r = 6, in the regime n > kr where X(r,n,k) no longer depends on n.
  SymFunc symmetric_powers = expansion_of({{{1, 1, 1, 1, 1, 1}, 13}, {{2, 1, 1, 1, 1}, 12}, {{2, 2, 1, 1}, 63},
                                         {{2, 2, 2}, 54},         {{3, 1, 1, 1}, 4},     {{3, 2, 1}, -12},
                                         {{3, 3}, 28},            {{4, 1, 1}, 18},       {{4, 2}, 36},
                                         {{6}, 36}});
  SymFunc graphs = expansion_of({{{1, 1, 1, 1, 1, 1}, 13}, {{2, 1, 1, 1, 1}, 24}, {{2, 2, 1, 1}, 63}, {{2, 2, 2}, 54},
                               {{3, 1, 1, 1}, 4},         {{3, 2, 1}, 12},       {{3, 3}, 28},       {{4, 1, 1}, 18},
                               {{4, 2}, 36},              {{6}, 36}});
  SymFunc got_graphs = regular_graphs_character(6, 2);
  SymFunc got_powers = sp_sympower_character(6, 13, 2);
  t.expect(got_graphs == graphs, "regular-graph expansion");
  t.expect(got_powers == symmetric_powers, "symmetric-power expansion");
  SymFunc without_p42 = symmetric_powers;
  without_p42.add_term({{4, 2}}, make_rational(-36, 72));
  bool integral = true;
  for (const auto& [lambda, c] : p_to_schur(symmetric_powers, 6)) integral &= c.get_den() == 1;
  std::string detail = std::string("regular graphs ") + (got_graphs == graphs ? "match" : "differ") +
                       "; symmetric powers " +
                       (got_powers == without_p42 ? "equal the stated terms without 36p_42" : "differ beyond p_42") +
                       "; the stated symmetric-power expansion has " + (integral ? "integral" : "non-integral") +
                       " Schur coefficients";
  return t.done(detail);
}

Outcome idempotents() {
  Tally t;
  auto e2 = brauer_E_average(2, -2);
  t.expect(multiply(e2, e2) == e2, "E(2)^2 = E(2) at δ=-2");
  auto e3 = brauer_E_average(3, -4);
  t.expect(multiply(e3, e3) == e3, "E(3)^2 = E(3) at δ=-4");
  for (int n = 1; n <= 2; ++n) {
    Rational delta = -2 * n;
    auto avg = brauer_E_average(n + 1, delta);
    for (const auto& w : reduced_words_of_longest(n + 1)) t.expect(brauer_E_from_word(n, w, delta) == avg, "reduced word");
    t.expect(trace(avg) == 0, "trace E(n+1) = 0");
  }
  return t.done("n in {1,2}, all reduced words");
}

Outcome yang_baxter() {
  Tally t;
  for (auto [h, k] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}})
    for (const Rational& delta : {Rational(-4), Rational(5), make_rational(7, 2)}) t.report(yang_baxter_check(h, k, delta));
  return t.done("3 label pairs × 3 values of δ");
}

Outcome evaluation_relations() {
  Tally t;
  std::vector<Evaluator> evs{Evaluator::symplectic(1), Evaluator::symplectic(2)};
  for (int n = 1; n <= 3; ++n) evs.push_back(Evaluator::symmetric(n));
  for (int n = 1; n <= 3; ++n) evs.push_back(Evaluator::general_linear(n));
  for (const auto& e : evs) {
    t.report(relation_test_suite(e));
    t.report(functoriality_check(e, 100));
  }
  for (int n = 1; n <= 2; ++n) {
    auto e = Evaluator::symplectic(n);
    t.expect((e.ev(BrauerDiagram::cap()) * e.ev(BrauerDiagram::cup())).at(0, 0) == -2 * n, "Sp loop = -2n");
  }
  for (int n = 1; n <= 3; ++n) {
    auto e = Evaluator::symmetric(n);
    auto cup = PartitionDiagram::from_blocks(0, 2, {{0, 1}}), cap = PartitionDiagram::from_blocks(2, 0, {{0, 1}});
    t.expect((e.ev(cap) * e.ev(cup)).at(0, 0) == n, "Sn loop = n");
    auto g = Evaluator::general_linear(n);
    for (auto [c, a] : {std::pair{Pair{0, 1}, Pair{1, 0}}, std::pair{Pair{1, 0}, Pair{0, 1}}}) {
      auto up = DirectedDiagram::from_pairs(0, 2, {c}), down = DirectedDiagram::from_pairs(2, 0, {a});
      t.expect((g.ev(down) * g.ev(up)).at(0, 0) == n, "GL loop = n");
    }
  }
  return t.done("Sp(2), Sp(4), S1..S3, GL(1..3); 100 random pairs each");
}

Outcome second_fundamental_theorems() {
  Tally t;
  for (auto [n, r] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{1, 4}, std::pair{2, 3}}) {
    auto e = Evaluator::symplectic(n);
    t.expect(invariant_span_rank(e, enumerate_matchings(2 * r)) == enumerate_noncrossing(2 * r, n).size(),
             "Sp rank n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  for (int n = 1; n <= 2; ++n) t.report(fundamental_theorem_checks(Evaluator::symplectic(n), n + 1, n + 1, 11));
  for (int n = 1; n <= 3; ++n) {
    auto e = Evaluator::symmetric(n);
    for (int r = 0; r <= 5; ++r)
      t.expect(invariant_span_rank(e, enumerate_setpartitions(r, r)) == enumerate_setpartitions(r, n).size(),
               "Sn rank n=" + std::to_string(n) + " r=" + std::to_string(r));
    t.report(fundamental_theorem_checks(e, 2, 3, 13));
  }
  for (int n = 1; n <= 2; ++n)
    for (int r = 1; r <= 4; ++r) t.report(fundamental_theorem_checks(Evaluator::general_linear(n), r, 0));
  return t.done("Sp, Sn and permutation ranks; E(n+1), Pfaffian and x_d vanishing");
}

Outcome rewrite() {
  Tally t;
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 2; ++n) {
    auto e = Evaluator::symplectic(n);
    for (int sample = 0; sample < 30; ++sample) {
      int k = 2 * (1 + sample % 4);
      auto d = random_brauer(0, k, rng);
      auto a = BrauerElement::of(d, e.delta());
      auto reduced = reduce_to_noncrossing(a, n);
      bool supported = true;
      SparseVector image;
      for (const auto& [m, c] : reduced.terms()) {
        supported &= !has_j_crossing(m, n + 1);
        axpy(image, c, e.invariant(m));
      }
      t.expect(supported, "support is (n+1)-noncrossing");
      t.expect(image == e.invariant(d), "ev agrees after rewriting");
    }
  }
  return t.done("n in {1,2}, 30 random diagrams each, k<=8");
}

Outcome invariant_characters() {
  Tally t;
  for (auto [n, r] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}}) {
    SymFunc want;
    for (const auto& l : enumerate_partitions(2 * r, {2 * n, true, false})) want += schur(transpose(l));
    t.expect(character_on_invariant_span(Evaluator::symplectic(n), 2 * r) == want,
             "n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  return t.done("(n,r) in {(1,2),(1,3),(2,2)}");
}

Outcome rotation() {
  Tally t;
  for (int k : {4, 6}) t.expect(rotation_vs_long_cycle(Evaluator::symplectic(1), k), "k=" + std::to_string(k));
  return t.done("Sp(2), k in {4,6}");
}

Outcome oscillating_counts() {
  Tally t;
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 5; ++r)
      t.expect(count_oscillating(n, 2 * r) == Integer(static_cast<long>(enumerate_noncrossing(2 * r, n).size())),
               "n=" + std::to_string(n) + " r=" + std::to_string(r));
  return t.done("n<=3, r<=5");
}

Outcome partition_conjecture() {
  Tally t;
  for (const Rational& delta : {Rational(7), make_rational(-9, 2)}) t.report(partition_idempotent_check(3, delta));
  return t.done("conjecture, numerical evidence at δ in {7, -9/2}, r<=3");
}

Outcome series_identities() {
  Tally t;
  std::vector<Partition> small{{}, {1}, {2}, {1, 1}};
  for (const auto& a : small)
    for (const auto& b : small)
      if (partition_size(a) == partition_size(b)) t.expect(cauchy_diagonal_identity_check(a, b, 4), "Cauchy");
  for (int r = 1; r <= 4; ++r) {
    SymFunc even_rows;
    for (const auto& l : enumerate_partitions(2 * r, {std::nullopt, false, true})) even_rows += schur(l);
    t.expect(plethysm(h_fn(r), h_fn(2)) == even_rows, "Littlewood r=" + std::to_string(r));
  }
  // H(X·Y) truncated at degree 4 reproduces every f of degree <= 4 under ⟨·,·⟩_Y.
  SymFunc xy = multiply(SymFunc::power_sum({1}, "X"), SymFunc::power_sum({1}, "Y"));
  SymFunc kernel = plethysm(complete_series(4), xy);
  for (int d = 0; d <= 4; ++d)
    for (const auto& l : enumerate_partitions(d)) {
      t.expect(scalar_product(kernel, SymFunc::power_sum(l, "Y"), "Y") == SymFunc::power_sum(l, "X"), "kernel on p");
      t.expect(scalar_product(kernel, schur(l, "Y"), "Y") == schur(l, "X"), "kernel on s");
    }
  return t.done("Cauchy, Littlewood r<=4, reproducing kernel degree<=4");
}

Outcome sym_power_basis() {
  Tally t;
  for (auto [n, r, k] : {std::tuple{1, 2, 2}, std::tuple{1, 3, 2}, std::tuple{2, 4, 2}}) t.report(sym_power_basis_check(n, r, k));
  t.expect(enumerate_regular_diagrams(4, 2, 2).size() == 6, "|X(4,2,2)| = 6");
  return t.done("(1,2,2), (1,3,2), (2,4,2)");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"CSP noncrossing matchings", noncrossing_csp},
      {"CSP all matchings", all_matchings_csp},
      {"CSP regular graphs", regular_graphs_csp},
      {"CSP set and multiset partitions", set_partitions_csp},
      {"CSP permutations", permutations_csp},
      {"k=2, r=6 character coefficients", stated_coefficients},
      {"Brauer idempotents", idempotents},
      {"Yang–Baxter braid identity", yang_baxter},
      {"evaluation relations and functoriality", evaluation_relations},
      {"second fundamental theorems by rank", second_fundamental_theorems},
      {"noncrossing rewrite", rewrite},
      {"characters on invariant spans", invariant_characters},
      {"rotation equals long cycle", rotation},
      {"oscillating tableaux count", oscillating_counts},
      {"partition idempotent recursion (conjecture)", partition_conjecture},
      {"series identities", series_identities},
      {"symmetric-power basis", sym_power_basis},
  };
  // The stated symmetric-power expansion contains a 36p_{42} term that is not a character.
  const std::map<int, std::string> known_red{{6, "stated symmetric-power expansion is not a character"}};

  int hard_failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << "[" << (id < 10 ? " " : "") << id << "] ";
    auto known = known_red.find(id);
    if (o.pass) line << "PASS ";
    else if (known != known_red.end()) line << "FAIL (known: " << known->second << ") ";
    else {
      line << "FAIL ";
      ++hard_failures;
    }
    line.precision(2);
    line << std::fixed << criteria[i].first << " - " << o.detail << " [" << secs << "s]";
    std::cout << line.str() << std::endl;
  }
  return hard_failures == 0 ? 0 : 1;
}
