#pragma once

// Unique-pressability recognition: the column properties of an instructional
// Cholesky root, the cubic-time pipeline, and a brute-force oracle.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "pressing/common.hpp"
#include "pressing/f2core.hpp"
#include "pressing/graph.hpp"

namespace pressing {

struct PropertyCheck {
  bool pass = true;
  /// First offending column (1-based) when !pass, else 0.
  std::size_t column = 0;
};

struct PropertyReport {
  /// Index k-1 holds Property k.
  std::array<PropertyCheck, 4> property;
  std::vector<std::size_t> column_weights;

  const PropertyCheck& prop(int k) const { return property.at(static_cast<std::size_t>(k - 1)); }
  /// All four properties hold, i.e. the matrix is in M_n.
  bool all_pass() const noexcept;
  /// 1-based number of the first failing property, 0 if none fails.
  int first_failure() const noexcept;
};

/// Evaluates on an upper-triangular matrix with column weights w_1..w_n:
///   1. the ones of each column are consecutive and end at the diagonal;
///   2. 1 = w_1 <= w_2 <= ... <= w_n;
///   3. w_i > 2 implies w_{i+2} > w_i;
///   4. once a non-initial column has odd weight, it and every column to its
///      right have full weight (w_j = j).
/// Witness columns: the offending column for 1, the smaller right-hand column
/// for 2 (column 1 if w_1 != 1), column i+2 for 3, the first non-full column
/// for 4. Throws InvalidArgument on a non-upper-triangular input.
PropertyReport check_properties(const BitMatrix& u);

enum class Verdict { yes, no };

enum class Reason { none, multi_component, unpressable, tie, prop1, prop2, prop3, prop4 };

/// Stable code: MULTI_COMPONENT, UNPRESSABLE, TIE, PROP1..PROP4 (empty for none).
std::string reason_code(Reason reason);

struct RecognitionReport {
  Verdict verdict = Verdict::no;
  /// The unique successful sequence, in original labels, when verdict is yes.
  PressingSequence sequence;
  Reason reason = Reason::none;
  /// Root column of a property failure (position in the greedy order), else 0.
  std::size_t column = 0;
  /// Labels of the trivial components removed before the pipeline ran.
  std::vector<Label> stripped;

  bool accepted() const noexcept { return verdict == Verdict::yes; }
};

/// Decides unique pressability in O(n^3):
///  - two or more non-trivial components: no;
///  - none: yes with the empty sequence;
///  - otherwise greedy order, instructional root and property check on the
///    single non-trivial component.
RecognitionReport recognize(const PseudoGraph& g);

/// Three lines: `verdict: yes|no`, then `sequence: v1 v2 ...` or
/// `reason: CODE [col j]`, then `stripped: ...`.
void write_report(std::ostream& out, const RecognitionReport& report);
std::string to_string(const RecognitionReport& report);

struct OracleOptions {
  std::size_t max_vertices = 10;
};

/// Exact number of successful pressing sequences, by depth-first search over
/// every press choice. Throws BoundExceeded past `max_vertices` (hard cap 32).
std::size_t count_sequences_bruteforce(const PseudoGraph& g, OracleOptions options = {});

/// All successful pressing sequences (lexicographic order), stopping after
/// `limit` of them.
std::vector<PressingSequence> successful_sequences_bruteforce(const PseudoGraph& g, std::size_t limit,
                                                              OracleOptions options = {});

/// Common length of every successful pressing sequence. Throws NotPressable if
/// there is none.
std::size_t pressing_length(const PseudoGraph& g);

}  // namespace pressing
