#pragma once

// Bit-packed dense linear algebra over GF(2).
//
// All public indices are 1-based. Column j of a row lives in bit (j-1) % 64 of
// word (j-1) / 64, so column 1 is the least significant bit of word 0. Bits past
// the row length are kept at zero, which lets equality and popcounts work on
// whole words.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pressing/common.hpp"

namespace pressing {

class BitRow {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitRow() = default;
  explicit BitRow(std::size_t length);

  /// Parses a string of '0'/'1' characters; character k is column k+1.
  static BitRow from_string(std::string_view bits);

  std::size_t size() const noexcept { return length_; }

  bool test(std::size_t j) const;
  void set(std::size_t j, bool value = true);
  void reset(std::size_t j) { set(j, false); }
  void flip(std::size_t j);

  /// Number of ones.
  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  /// 1-based position of the lowest set bit, 0 if the row is zero.
  std::size_t first_set() const noexcept;

  BitRow& operator^=(const BitRow& other);
  BitRow& operator&=(const BitRow& other);
  BitRow& operator|=(const BitRow& other);

  std::span<const word_type> words() const noexcept { return words_; }
  std::span<word_type> words() noexcept { return words_; }

  std::string to_string() const;

  friend bool operator==(const BitRow&, const BitRow&) = default;
  friend std::strong_ordering operator<=>(const BitRow&, const BitRow&) = default;

 private:
  void check_index(std::size_t j) const;

  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

BitRow operator^(BitRow a, const BitRow& b);
BitRow operator&(BitRow a, const BitRow& b);

/// Square matrix over GF(2) stored as bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  static BitMatrix identity(std::size_t n);
  /// Builds a matrix from n strings of n '0'/'1' characters.
  static BitMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t size() const noexcept { return rows_.size(); }

  bool operator()(std::size_t i, std::size_t j) const { return row(i).test(j); }
  void set(std::size_t i, std::size_t j, bool value = true) { row(i).set(j, value); }

  const BitRow& row(std::size_t i) const;
  BitRow& row(std::size_t i);
  BitRow column(std::size_t j) const;

  BitMatrix transpose() const;
  bool is_symmetric() const;
  bool is_upper_triangular() const;
  bool is_zero() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
  friend std::strong_ordering operator<=>(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<BitRow> rows_;
};

/// Parity of the number of positions where both rows are 1.
bool gf2_dot(const BitRow& a, const BitRow& b);

/// U^T U over GF(2): entry (i, j) is the dot product of columns i and j of U.
BitMatrix transpose_mul(const BitMatrix& u);

/// Entry k-1 is det over GF(2) of the leading k x k block, for k = 1..n.
std::vector<bool> leading_principal_minors(const BitMatrix& a);

/// Rank over GF(2).
std::size_t gf2_rank(const BitMatrix& a);

/// The block on rows and columns lo..hi (inclusive, 1-based).
BitMatrix principal_submatrix(const BitMatrix& m, std::size_t lo, std::size_t hi);

/// Integer column sums w_1..w_n.
std::vector<std::size_t> column_weights(const BitMatrix& m);

// Matrix text format: a line holding n, then n lines of n '0'/'1' characters.
void write_matrix(std::ostream& out, const BitMatrix& m);
std::string to_string(const BitMatrix& m);
BitMatrix read_matrix(std::istream& in);
BitMatrix parse_matrix(std::string_view text);

}  // namespace pressing
