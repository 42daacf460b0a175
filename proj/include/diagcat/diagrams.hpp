#pragma once

#include <compare>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace diagcat {

/// Points are numbered 0..r+s-1: tops left to right, then bottoms left to right.
/// A diagram x in D(r,s) is a morphism r -> s; composing x then y stacks x above y.

using Pair = std::pair<int, int>;
/// A permutation of {0..m-1}: top point i is joined to bottom point perm[i].
using Permutation = std::vector<int>;

struct BrauerDiagram {
  int r = 0, s = 0;
  std::vector<int> partner;

  static BrauerDiagram from_pairs(int r, int s, const std::vector<Pair>& pairs);
  static BrauerDiagram identity(int m);
  static BrauerDiagram from_permutation(const Permutation& perm);
  /// D(0,2): the arc joining two bottom points.
  static BrauerDiagram cup();
  /// D(2,0): the arc joining two top points.
  static BrauerDiagram cap();
  /// s_i on m strands (0-based i swaps strands i, i+1).
  static BrauerDiagram crossing(int m, int i);
  /// u_i on m strands: arcs on (i,i+1) at top and at bottom.
  static BrauerDiagram arc_pair(int m, int i);

  int size() const { return r + s; }
  std::vector<Pair> pairs() const;

  auto operator<=>(const BrauerDiagram&) const = default;
  bool operator==(const BrauerDiagram&) const = default;
};

struct PartitionDiagram {
  int r = 0, s = 0;
  /// Restricted growth labels: block[p] is the index of p's block, numbered by first appearance.
  std::vector<int> block;

  static PartitionDiagram from_blocks(int r, int s, const std::vector<std::vector<int>>& blocks);
  static PartitionDiagram from_labels(int r, int s, const std::vector<int>& labels);
  static PartitionDiagram identity(int m);
  static PartitionDiagram from_permutation(const Permutation& perm);
  static PartitionDiagram from_brauer(const BrauerDiagram& b);

  int size() const { return r + s; }
  int block_count() const;
  std::vector<std::vector<int>> blocks() const;

  auto operator<=>(const PartitionDiagram&) const = default;
  bool operator==(const PartitionDiagram&) const = default;
};

struct DirectedDiagram {
  int r = 0, s = 0;
  std::vector<int> partner;
  /// initial[p]: p is where its strand starts.
  std::vector<bool> initial;

  /// Ordered pairs (from, to).
  static DirectedDiagram from_pairs(int r, int s, const std::vector<Pair>& ordered);
  static DirectedDiagram from_permutation(const Permutation& perm);
  /// All strands run downward.
  static DirectedDiagram identity(int m);

  int size() const { return r + s; }
  std::vector<Pair> ordered_pairs() const;
  BrauerDiagram underlying() const;
  /// '+' where a top point is initial, '-' otherwise.
  std::string domain_word() const;
  /// '+' where a bottom point is final, '-' otherwise.
  std::string codomain_word() const;

  auto operator<=>(const DirectedDiagram&) const = default;
  bool operator==(const DirectedDiagram&) const = default;
};

template <class D>
struct Composite {
  D diagram;
  int loops = 0;
  /// Directed only: loops split by orientation (clockwise, anticlockwise).
  int loops_cw = 0, loops_ccw = 0;
};

Composite<BrauerDiagram> compose(const BrauerDiagram& x, const BrauerDiagram& y);
Composite<PartitionDiagram> compose(const PartitionDiagram& x, const PartitionDiagram& y);
Composite<DirectedDiagram> compose(const DirectedDiagram& x, const DirectedDiagram& y);

BrauerDiagram tensor(const BrauerDiagram& x, const BrauerDiagram& y);
PartitionDiagram tensor(const PartitionDiagram& x, const PartitionDiagram& y);
DirectedDiagram tensor(const DirectedDiagram& x, const DirectedDiagram& y);

BrauerDiagram star(const BrauerDiagram& x);
PartitionDiagram star(const PartitionDiagram& x);
DirectedDiagram star(const DirectedDiagram& x);

int propagating_number(const BrauerDiagram& x);
int propagating_number(const PartitionDiagram& x);
int propagating_number(const DirectedDiagram& x);

/// Crossing statistics along the total point order.
int crossing_pairs(const BrauerDiagram& m);
bool has_j_crossing(const BrauerDiagram& m, int j);
/// The lexicographically least set of j pairwise crossing strands, or empty.
std::vector<Pair> find_j_crossing(const BrauerDiagram& m, int j);
/// D(0,k) only: relabels point i to i+shift mod k.
BrauerDiagram rotate(const BrauerDiagram& m, int shift = 1);
PartitionDiagram rotate(const PartitionDiagram& m, int shift = 1);

/// Throws ResourceError when the raw object count exceeds this.
inline constexpr long long kEnumerationLimit = 10'000'000;

std::vector<BrauerDiagram> enumerate_matchings(int k);
std::vector<BrauerDiagram> enumerate_brauer(int r, int s);
std::vector<BrauerDiagram> enumerate_noncrossing(int k, int n);
std::vector<PartitionDiagram> enumerate_setpartitions(int r, int max_blocks);
std::vector<PartitionDiagram> enumerate_partition_diagrams(int r, int s);
std::vector<BrauerDiagram> enumerate_regular_diagrams(int r, int n, int k);
std::vector<DirectedDiagram> enumerate_directed(int r, int s);
/// Directed diagrams with prescribed boundary words (walled Brauer diagrams).
std::vector<DirectedDiagram> enumerate_directed(const std::string& domain, const std::string& codomain);
std::vector<Permutation> enumerate_permutations(int m);

BrauerDiagram random_brauer(int r, int s, std::mt19937_64& rng);
PartitionDiagram random_partition_diagram(int r, int s, std::mt19937_64& rng);
DirectedDiagram random_directed(int r, int s, std::mt19937_64& rng);

long long double_factorial(int odd);
long long bell_number(int m);

}  // namespace diagcat
