#pragma once

#include <optional>
#include <vector>

#include "diagcat/qpoly.hpp"
#include "diagcat/rational.hpp"

namespace diagcat {

/// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
Partition transpose(const Partition& p);
/// n(λ) = Σ (i-1) λ_i.
int n_statistic(const Partition& p);
/// Hook lengths row by row.
std::vector<std::vector<int>> hook_lengths(const Partition& p);
/// Number of standard tableaux, by the hook length formula.
Integer count_standard_tableaux(const Partition& p);
/// z_λ = Π_i i^{m_i} m_i!.
Integer z_lambda(const Partition& p);

/// Partitions that arise by adding (or removing) one cell.
std::vector<Partition> add_cell(const Partition& p, std::optional<int> max_length = {});
std::vector<Partition> remove_cell(const Partition& p);

struct PartitionFilter {
  std::optional<int> max_length;
  bool even_columns = false;
  bool even_rows = false;
};

/// Reverse lexicographic order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> enumerate_partitions(int r, const PartitionFilter& filter = {});

/// Rows of entries 1..n; rows and columns strictly increasing.
struct StandardTableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  int size() const;
  /// i is a descent when i+1 sits in a strictly lower row.
  std::vector<int> descents() const;
  int maj() const;
};

std::vector<StandardTableau> standard_tableaux(const Partition& shape);

/// Σ_T q^maj(T) over standard tableaux.
QPoly fake_degree_by_maj(const Partition& shape);
/// q^{n(λ)} [r]_q! / Π [h]_q.
QPoly fake_degree_by_hooks(const Partition& shape);
/// Both of the above, compared; throws InternalError on disagreement. Cached.
QPoly fake_degree_schur(const Partition& shape);

/// Shapes μ^0 .. μ^r, consecutive ones differing by one cell, at most n rows.
using OscillatingTableau = std::vector<Partition>;

std::vector<OscillatingTableau> enumerate_oscillating(int n, int r, const Partition& final_shape = {});
Integer count_oscillating(int n, int r, const Partition& final_shape = {});

}  // namespace diagcat
