#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diagcat/diagalg.hpp"
#include "diagcat/matrix.hpp"
#include "diagcat/report.hpp"
#include "diagcat/symfunc.hpp"

namespace diagcat {

enum class GroupKind { Sn, Sp, GL };

/// Tensors over V are flattened with the first factor most significant.
/// A diagram r -> s evaluates to a (dim^s × dim^r) matrix; composing a then b gives ev(b)·ev(a).
class Evaluator {
 public:
  static Evaluator symmetric(int n);
  static Evaluator symplectic(int n);
  static Evaluator general_linear(int n);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  int dim() const { return dim_; }
  Rational delta() const;
  std::string name() const;

  /// Sp: Brauer diagrams via layer factorisation. layout 0 moves arcs right, layout 1 left.
  SparseVector apply(const BrauerDiagram& d, const SparseVector& input, int layout = 0) const;
  /// Sn and GL: the 0/1 formula.
  SparseVector apply(const PartitionDiagram& d, const SparseVector& input) const;
  SparseVector apply(const DirectedDiagram& d, const SparseVector& input) const;

  ExactMatrix ev(const BrauerDiagram& d, int layout = 0) const;
  ExactMatrix ev(const PartitionDiagram& d) const;
  ExactMatrix ev(const DirectedDiagram& d) const;
  ExactMatrix ev(const BrauerElement& a) const;
  ExactMatrix ev(const PartitionElement& a) const;
  ExactMatrix ev(const DirectedElement& a) const;

  /// Image of a diagram in D(0,k) as a vector in ⊗^k V.
  SparseVector invariant(const BrauerDiagram& d, int layout = 0) const;
  SparseVector invariant(const PartitionDiagram& d) const;

  /// Action of a permutation of tensor factors (factor i moves to position perm[i]), with the
  /// Koszul sign when V is odd.
  SparseVector permute(const SparseVector& v, int k, const Permutation& perm) const;

  /// Generator images written down from their definitions, not through ev().
  ExactMatrix crossing_matrix() const;
  ExactMatrix cup_matrix() const;   // 1 -> V⊗V
  ExactMatrix cap_matrix() const;   // V⊗V -> 1
  ExactMatrix unit_matrix() const;  // 1 -> V, Σ v_j
  ExactMatrix counit_matrix() const;
  ExactMatrix split_matrix() const;
  ExactMatrix merge_matrix() const;

 private:
  Evaluator(GroupKind kind, int n);
  void require(GroupKind k, const char* what) const;
  /// Gram matrix of the form used by caps; its inverse gives cups.
  const std::vector<std::vector<int>>& gram() const { return gram_; }

  GroupKind kind_;
  int n_, dim_;
  std::vector<std::vector<int>> gram_, cogram_;
};

Report relation_test_suite(const Evaluator& e);
std::size_t invariant_span_rank(const Evaluator& e, const std::vector<BrauerDiagram>& diagrams);
std::size_t invariant_span_rank(const Evaluator& e, const std::vector<PartitionDiagram>& diagrams);
SymFunc character_on_invariant_span(const Evaluator& e, int k);
Report fundamental_theorem_checks(const Evaluator& e, int r, int s, std::uint64_t seed = 1);
bool rotation_vs_long_cycle(const Evaluator& e, int k);
Report sym_power_basis_check(int n, int r, int k);

/// Flattens a matrix to a sparse vector (row-major).
SparseVector flatten(const ExactMatrix& m);

}  // namespace diagcat
