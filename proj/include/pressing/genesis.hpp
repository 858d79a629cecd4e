#pragma once

// Generation and counting of connected uniquely pressable (CUP) graphs.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "pressing/f2core.hpp"
#include "pressing/graph.hpp"

namespace pressing {

/// Adds vertex n+1 adjacent to every looped vertex of `g`, looped iff n is
/// even. `g` must be a CUP graph on labels 1..n (throws NotCup otherwise).
PseudoGraph extend_right(const PseudoGraph& g);

/// `g` is a CUP graph on labels 2..n+1. Removes every edge (loops included)
/// inside L(g) and adds a looped vertex 1 adjacent to all of L(g). Throws
/// NotCup otherwise.
PseudoGraph extend_left(const PseudoGraph& g);

/// Root-level counterparts: extending right appends an all-ones column;
/// extending left prepends the row (1, parity of each column weight).
BitMatrix extend_root_right(const BitMatrix& u);
BitMatrix extend_root_left(const BitMatrix& u);

/// Every CUP graph on labels 1..n, sorted by row-major adjacency bit string.
/// Built level by level from the single loop, deduplicated by labeled equality.
std::vector<PseudoGraph> generate_cup(std::size_t n);

/// A CUP graph on 1..n from a random sequence of left/right extensions.
PseudoGraph random_cup(std::size_t n, std::mt19937_64& rng);
/// The instructional root of such a graph, without forming the graph.
BitMatrix random_cup_root(std::size_t n, std::mt19937_64& rng);

/// |CUP_[n]|: 3^((n-2)/2) for even n, 2*3^((n-3)/2) for odd n >= 3; 1 for
/// n = 0 (empty graph) and n = 1 (single loop). Throws std::overflow_error
/// past 64 bits.
std::uint64_t cup_count(std::size_t n);

/// T_n, uniquely pressable graphs on n vertices up to isomorphism:
/// (5*3^((n-2)/2)+1)/2 for even n, (3^((n+1)/2)+1)/2 for odd n; T_0 = 1.
std::uint64_t total_count(std::size_t n);

struct CensusResult {
  std::size_t n = 0;
  std::uint64_t labeled_total = 0;
  std::uint64_t up_iso_classes = 0;
  std::uint64_t cup_iso_classes = 0;
};

struct CensusOptions {
  std::size_t max_vertices = 5;
  std::size_t jobs = 1;
};

/// Runs `recognize` on all 2^(n(n+1)/2) labeled pseudo-graphs on n vertices
/// and counts isomorphism classes of the accepted ones (all of them, and those
/// that are connected with no trivial component).
CensusResult census(std::size_t n, CensusOptions options = {});

/// Lexicographically smallest row-major adjacency bit string over all vertex
/// permutations, packed most-significant-first. Requires n <= 8.
std::uint64_t canonical_code(const BitMatrix& a);

/// Row-major adjacency bit string of a graph on 1..n as '0'/'1' characters.
std::string adjacency_key(const PseudoGraph& g);

}  // namespace pressing
