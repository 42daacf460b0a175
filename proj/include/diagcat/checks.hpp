#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "diagcat/evaluation.hpp"
#include "diagcat/report.hpp"
#include "diagcat/tableaux.hpp"

namespace diagcat {

/// Brauer tower, n large: dim U(r,λ) from up-down path counts against f^λ·C(r,p)·(r−p−1)!!,
/// the add/remove-a-cell sum rule, and Σ dim² = (2r−1)!! = |D(r,r)|.
Report brauer_branching_check(int r, const std::optional<Partition>& lambda = {});

/// Partition tower D_0 ⊂ D'_1 ⊂ D_1 ⊂ ...: paths stay or remove a cell going to D'_{m+1},
/// stay or add a cell going to D_{m+1}. Checked against f^λ·Σ_a C(r,a)S(a,p)Bell(r−a) and
/// Σ dim² = Bell(2r) at D_r, Bell(2r−1) at D'_r.
Report partition_branching_check(int r, const std::optional<Partition>& lambda = {});

/// E(n+1) at δ = −2n: idempotent, xE = ρ(x)E = Ex for all diagrams x, every reduced word of the
/// longest permutation gives the same Yang–Baxter product equal to the average, trace zero.
Report brauer_idempotent_check(int n);

/// The conjectural partition recursion at δ: idempotency and absorption for E(m), E'(m), m ≤ r,
/// and agreement with the worked E(1), E'(2), E(2), E'(3), E(3) formulas.
Report partition_idempotent_check(int r, const Rational& delta);

/// R_1(h)R_2(h+k)R_1(k) = R_2(k)R_1(h+k)R_2(h) on 3 strands; when δ is a pole of some factor
/// the cleared-denominator form is compared instead.
Report yang_baxter_check(int h, int k, const Rational& delta);

/// ev(a·b) = ev(b)ev(a) on random composable pairs, ev(a⊗b) = ev(a)⊗ev(b), and for Sp agreement of the
/// two layer factorisations.
Report functoriality_check(const Evaluator& e, int samples, std::uint64_t seed = 7);

/// Invariant suite behind each CLI subcommand's --selftest.
Report selftest(const std::string& subcommand);

}  // namespace diagcat
