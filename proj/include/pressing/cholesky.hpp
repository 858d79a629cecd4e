#pragma once

// Instructional Cholesky roots and the greedy pressing order.

#include <cstddef>
#include <optional>
#include <vector>

#include "pressing/common.hpp"
#include "pressing/f2core.hpp"
#include "pressing/graph.hpp"

namespace pressing {

/// Upper-triangular U whose row i is the adjacency row of vertex i after
/// pressing vertices 1..i-1; rows past the pressing length are zero.
struct CholeskyRoot {
  BitMatrix u;
  /// Vertex labels in the order the root was computed under (position i is
  /// row/column i of `u`).
  std::vector<Label> order;
};

/// Result of greedy pressing: the looped vertex of maximum degree is pressed
/// until no looped vertex is left, passing over any vertex whose press would
/// leave a non-trivial component without a loop.
struct PressingOrder {
  std::vector<Label> permutation;
  /// True iff the presses emptied the graph.
  bool complete = false;
  /// 1-based index of the first step where two looped vertices shared the
  /// maximum degree.
  std::optional<std::size_t> first_tie;
  /// Vertices of one leftover non-trivial component when incomplete.
  std::vector<Label> leftover;
};

/// Row-by-row elimination: while the current diagonal entry is 1, the row is
/// copied into U and cleared from every later row with a 1 in that column.
/// Throws NotOrderPressable if elimination halts with a nonzero residual, and
/// InvalidArgument if `a` is not symmetric.
CholeskyRoot instructional_root(const BitMatrix& a);
/// Root of the graph under its label order.
CholeskyRoot instructional_root(const PseudoGraph& g);

/// Greedy order without throwing; ties go to the smallest label.
PressingOrder greedy_pressing_order(const PseudoGraph& g);
/// As greedy_pressing_order, but throws NotPressable when edges remain.
PressingOrder find_pressing_order(const PseudoGraph& g);

/// Integer column sum of column j of the root.
std::size_t vertex_weight(const CholeskyRoot& r, std::size_t j);
/// GF(2) dot product of columns i and j of the root.
bool vertex_dot(const CholeskyRoot& r, std::size_t i, std::size_t j);

/// P^T A P: the adjacency matrix of `g` with rows/columns in `order`, which
/// must list every vertex exactly once.
BitMatrix permuted_adjacency(const PseudoGraph& g, const std::vector<Label>& order);

}  // namespace pressing
