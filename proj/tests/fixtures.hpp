#pragma once

// Worked matrices and graphs used across the test suites.

#include "pressing/f2core.hpp"
#include "pressing/graph.hpp"

namespace fixtures {

using pressing::BitMatrix;
using pressing::PseudoGraph;

/// Singular 5x5 adjacency matrix; elimination in label order stops at row 3.
inline BitMatrix example_m() {
  return BitMatrix::from_rows({"10001", "01010", "00000", "01010", "10001"});
}

/// Its instructional root.
inline BitMatrix example_u() {
  return BitMatrix::from_rows({"10001", "01010", "00000", "00000", "00000"});
}

/// 4x4 root satisfying all four column properties.
inline BitMatrix v1() { return BitMatrix::from_rows({"1100", "0110", "0011", "0001"}); }

/// 4x4 root with column weights 1, 2, 3, 2.
inline BitMatrix v2() { return BitMatrix::from_rows({"1110", "0110", "0011", "0001"}); }

/// V = {1, 2, 3}, E = {11, 13}.
inline PseudoGraph loop_pendant() { return PseudoGraph({1, 2, 3}, {{1, 1}, {1, 3}}); }

/// Graph whose root has weights 1, 2, 2, 4: edges are the pairs with dot
/// product 1 plus loops on odd-weight vertices.
inline PseudoGraph weights_1224() { return PseudoGraph({1, 2, 3, 4}, {{1, 1}, {1, 2}, {1, 4}, {2, 3}}); }

/// The only connected uniquely pressable graph on two vertices.
inline PseudoGraph cup2() { return PseudoGraph({1, 2}, {{1, 1}, {1, 2}}); }

}  // namespace fixtures
