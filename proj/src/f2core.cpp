#include "pressing/f2core.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "line_reader.hpp"

namespace pressing {

namespace {

std::size_t words_for(std::size_t length) { return (length + BitRow::word_bits - 1) / BitRow::word_bits; }

void require_same_length(const BitRow& a, const BitRow& b) {
  if (a.size() != b.size()) {
    throw DimensionError("row length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

}  // namespace

BitRow::BitRow(std::size_t length) : length_(length), words_(words_for(length), 0) {}

BitRow BitRow::from_string(std::string_view bits) {
  BitRow row(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      row.set(k + 1);
    } else if (bits[k] != '0') {
      throw InvalidArgument("bit string contains a character other than 0/1");
    }
  }
  return row;
}

void BitRow::check_index(std::size_t j) const {
  if (j == 0 || j > length_) {
    throw DimensionError("column index " + std::to_string(j) + " outside [1, " + std::to_string(length_) + "]");
  }
}

bool BitRow::test(std::size_t j) const {
  check_index(j);
  return (words_[(j - 1) / word_bits] >> ((j - 1) % word_bits)) & 1U;
}

void BitRow::set(std::size_t j, bool value) {
  check_index(j);
  const word_type mask = word_type{1} << ((j - 1) % word_bits);
  if (value) {
    words_[(j - 1) / word_bits] |= mask;
  } else {
    words_[(j - 1) / word_bits] &= ~mask;
  }
}

void BitRow::flip(std::size_t j) {
  check_index(j);
  words_[(j - 1) / word_bits] ^= word_type{1} << ((j - 1) % word_bits);
}

std::size_t BitRow::count() const noexcept {
  std::size_t total = 0;
  for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitRow::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
}

std::size_t BitRow::first_set() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * word_bits + static_cast<std::size_t>(std::countr_zero(words_[k])) + 1;
  }
  return 0;
}

// Both operands are canonical, so xor and and keep the padding at zero.
BitRow& BitRow::operator^=(const BitRow& other) {
  require_same_length(*this, other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitRow& BitRow::operator&=(const BitRow& other) {
  require_same_length(*this, other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

BitRow& BitRow::operator|=(const BitRow& other) {
  require_same_length(*this, other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

std::string BitRow::to_string() const {
  std::string s(length_, '0');
  for (std::size_t j = 1; j <= length_; ++j) {
    if (test(j)) s[j - 1] = '1';
  }
  return s;
}

BitRow operator^(BitRow a, const BitRow& b) { return a ^= b; }
BitRow operator&(BitRow a, const BitRow& b) { return a &= b; }

BitMatrix::BitMatrix(std::size_t n) : rows_(n, BitRow(n)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  BitMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionError("matrix rows must have length n");
    m.rows_[i] = BitRow::from_string(rows[i]);
  }
  return m;
}

const BitRow& BitMatrix::row(std::size_t i) const {
  if (i == 0 || i > rows_.size()) {
    throw DimensionError("row index " + std::to_string(i) + " outside [1, " + std::to_string(rows_.size()) + "]");
  }
  return rows_[i - 1];
}

BitRow& BitMatrix::row(std::size_t i) {
  return const_cast<BitRow&>(std::as_const(*this).row(i));
}

BitRow BitMatrix::column(std::size_t j) const {
  const std::size_t n = size();
  BitRow col(n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (rows_[i - 1].test(j)) col.set(i);
  }
  return col;
}

BitMatrix BitMatrix::transpose() const {
  const std::size_t n = size();
  BitMatrix t(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (rows_[i - 1].test(j)) t.set(j, i);
    }
  }
  return t;
}

bool BitMatrix::is_symmetric() const { return *this == transpose(); }

bool BitMatrix::is_upper_triangular() const {
  for (std::size_t i = 2; i <= size(); ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      if (rows_[i - 1].test(j)) return false;
    }
  }
  return true;
}

bool BitMatrix::is_zero() const {
  return std::none_of(rows_.begin(), rows_.end(), [](const BitRow& r) { return r.any(); });
}

bool gf2_dot(const BitRow& a, const BitRow& b) {
  require_same_length(a, b);
  const auto wa = a.words();
  const auto wb = b.words();
  BitRow::word_type acc = 0;
  for (std::size_t k = 0; k < wa.size(); ++k) acc ^= wa[k] & wb[k];
  return std::popcount(acc) & 1;
}

// U^T U = sum over rows t of (row t)^T (row t): every row i with u_{t,i} = 1
// picks up row t.
BitMatrix transpose_mul(const BitMatrix& u) {
  const std::size_t n = u.size();
  BitMatrix b(n);
  for (std::size_t t = 1; t <= n; ++t) {
    const BitRow& r = u.row(t);
    for (std::size_t i = r.first_set(); i != 0 && i <= n; ++i) {
      if (r.test(i)) b.row(i) ^= r;
    }
  }
  return b;
}

// Incremental row reduction of the growing leading block. After step k the
// reduced rows 1..k split into pivot rows (leading one at a column <= k) and
// dependent rows (zero on columns 1..k); the k-th minor is nonzero iff there
// are k pivots. Rows are carried at full length so later columns stay exact.
std::vector<bool> leading_principal_minors(const BitMatrix& a) {
  const std::size_t n = a.size();
  std::vector<bool> minors(n, false);
  std::vector<BitRow> pivot(n + 1);
  std::vector<bool> has_pivot(n + 1, false);
  std::vector<BitRow> dependent;
  std::size_t rank = 0;

  for (std::size_t k = 1; k <= n; ++k) {
    // Column k joins the block.
    auto hit = std::find_if(dependent.begin(), dependent.end(), [k](const BitRow& r) { return r.test(k); });
    if (hit != dependent.end()) {
      pivot[k] = std::move(*hit);
      has_pivot[k] = true;
      dependent.erase(hit);
      ++rank;
      for (BitRow& r : dependent) {
        if (r.test(k)) r ^= pivot[k];
      }
    }

    // Row k joins the block.
    BitRow r = a.row(k);
    for (std::size_t c = 1; c <= k; ++c) {
      if (has_pivot[c] && r.test(c)) r ^= pivot[c];
    }
    std::size_t lead = 0;
    for (std::size_t c = 1; c <= k; ++c) {
      if (r.test(c)) {
        lead = c;
        break;
      }
    }
    if (lead != 0) {
      pivot[lead] = std::move(r);
      has_pivot[lead] = true;
      ++rank;
    } else {
      dependent.push_back(std::move(r));
    }
    minors[k - 1] = rank == k;
  }
  return minors;
}

std::size_t gf2_rank(const BitMatrix& a) {
  std::vector<BitRow> rows;
  rows.reserve(a.size());
  for (std::size_t i = 1; i <= a.size(); ++i) rows.push_back(a.row(i));
  std::size_t rank = 0;
  for (std::size_t c = 1; c <= a.size() && rank < rows.size(); ++c) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                           [c](const BitRow& r) { return r.test(c); });
    if (it == rows.end()) continue;
    std::swap(*it, rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i].test(c)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

BitMatrix principal_submatrix(const BitMatrix& m, std::size_t lo, std::size_t hi) {
  if (lo == 0 || lo > hi || hi > m.size()) {
    throw DimensionError("principal block [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "] outside [1, " + std::to_string(m.size()) + "]");
  }
  const std::size_t k = hi - lo + 1;
  BitMatrix out(k);
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      if (m(lo + i - 1, lo + j - 1)) out.set(i, j);
    }
  }
  return out;
}

std::vector<std::size_t> column_weights(const BitMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> w(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const BitRow& r = m.row(i);
    for (std::size_t j = r.first_set(); j != 0 && j <= n; ++j) {
      if (r.test(j)) ++w[j - 1];
    }
  }
  return w;
}

void write_matrix(std::ostream& out, const BitMatrix& m) {
  out << m.size() << '\n';
  for (std::size_t i = 1; i <= m.size(); ++i) out << m.row(i).to_string() << '\n';
}

std::string to_string(const BitMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

BitMatrix read_matrix(std::istream& in) {
  detail::LineReader reader(in);
  auto header = reader.next();
  while (header && detail::trim(*header).empty()) header = reader.next();
  if (!header) throw ParseError(reader.line_no(), "empty input");
  auto n = detail::parse_count(*header);
  if (!n) reader.fail("expected matrix dimension");
  std::vector<std::string> rows;
  rows.reserve(*n);
  for (std::size_t i = 0; i < *n; ++i) {
    auto line = reader.next();
    if (!line) throw ParseError(reader.line_no() + 1, "missing matrix row");
    if (line->size() != *n || line->find_first_not_of("01") != std::string::npos) {
      reader.fail("expected " + std::to_string(*n) + " characters from {0,1}");
    }
    rows.push_back(std::move(*line));
  }
  return BitMatrix::from_rows(rows);
}

BitMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

}  // namespace pressing
