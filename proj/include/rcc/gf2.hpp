#pragma once

// Dense linear algebra over Z/2: bit-packed vectors and matrices, rank,
// linear solves, null spaces and row-space membership.
//
// All routines take their inputs by const reference and eliminate on a copy.
// Pivots are always chosen at the lowest available row index, so every
// certificate returned here is reproducible.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcc::gf2 {

class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length)
      : length_(length), words_((length + word_bits - 1) / word_bits, 0) {}

  BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, (b & 1) != 0);
  }

  static BitVector from_indices(std::size_t length, const std::vector<std::size_t>& indices) {
    BitVector v(length);
    for (std::size_t i : indices) v.flip(i);
    return v;
  }

  /// Bit i is the i-th low bit of `mask`; length must be <= 64.
  static BitVector from_mask(std::size_t length, std::uint64_t mask) {
    BitVector v(length);
    if (length > 0) {
      v.words_[0] = length >= word_bits ? mask : mask & ((word_type{1} << length) - 1);
    }
    return v;
  }

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t i) const {
    check_index(i);
    return (words_[i / word_bits] >> (i % word_bits)) & 1U;
  }
  bool operator[](std::size_t i) const { return get(i); }

  void set(std::size_t i, bool value = true) {
    check_index(i);
    const word_type mask = word_type{1} << (i % word_bits);
    if (value) {
      words_[i / word_bits] |= mask;
    } else {
      words_[i / word_bits] &= ~mask;
    }
  }

  void flip(std::size_t i) {
    check_index(i);
    words_[i / word_bits] ^= word_type{1} << (i % word_bits);
  }

  BitVector& operator^=(const BitVector& other) {
    if (other.length_ != length_) {
      throw std::invalid_argument("BitVector length mismatch: " + std::to_string(length_) +
                                  " vs " + std::to_string(other.length_));
    }
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  /// Inner product over Z/2.
  bool dot(const BitVector& other) const {
    if (other.length_ != length_) throw std::invalid_argument("BitVector length mismatch in dot");
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
  }

  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (word_type w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept {
    if (from >= length_) return length_;
    std::size_t w = from / word_bits;
    word_type cur = words_[w] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (cur != 0) {
        return std::min(length_, w * word_bits + static_cast<std::size_t>(std::countr_zero(cur)));
      }
      if (++w == words_.size()) return length_;
      cur = words_[w];
    }
  }
  std::size_t find_first() const noexcept { return find_next(0); }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = find_first(); i < length_; i = find_next(i + 1)) out.push_back(i);
    return out;
  }

  /// "0110..." with bit 0 first.
  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void check_index(std::size_t i) const {
    if (i >= length_) {
      throw std::out_of_range("bit index " + std::to_string(i) + " out of range for length " +
                              std::to_string(length_));
    }
  }

  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  /// Row-major literal; every row must have the same length.
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged BitMatrix literal");
      rows_.emplace_back(r);
    }
  }

  static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows) {
    for (const auto& r : rows) {
      if (r.size() != cols) throw std::invalid_argument("row length does not match column count");
    }
    BitMatrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return row_at(r).get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { row_at(r).set(c, value); }

  const BitVector& row(std::size_t r) const { return row_at(r); }
  BitVector& row(std::size_t r) { return row_at(r); }
  const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }

  void append_row(BitVector r) {
    if (r.size() != cols_) throw std::invalid_argument("appended row has wrong length");
    rows_.push_back(std::move(r));
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const BitVector& row = rows_[r];
      for (std::size_t c = row.find_first(); c < cols_; c = row.find_next(c + 1)) t.set(c, r);
    }
    return t;
  }

  /// this * x
  BitVector multiply(const BitVector& x) const {
    if (x.size() != cols_) {
      throw std::invalid_argument("multiply: vector length " + std::to_string(x.size()) +
                                  " does not match column count " + std::to_string(cols_));
    }
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].dot(x)) out.set(r);
    }
    return out;
  }

  /// Sum of the rows selected by `coefficients` (i.e. coefficientsᵀ * this).
  BitVector combine_rows(const BitVector& coefficients) const {
    if (coefficients.size() != rows_.size()) {
      throw std::invalid_argument("combine_rows: coefficient length " +
                                  std::to_string(coefficients.size()) + " does not match row count " +
                                  std::to_string(rows_.size()));
    }
    BitVector out(cols_);
    for (std::size_t r = coefficients.find_first(); r < rows_.size(); r = coefficients.find_next(r + 1)) {
      out ^= rows_[r];
    }
    return out;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  const BitVector& row_at(std::size_t r) const {
    if (r >= rows_.size()) throw std::out_of_range("row index " + std::to_string(r) + " out of range");
    return rows_[r];
  }
  BitVector& row_at(std::size_t r) {
    if (r >= rows_.size()) throw std::out_of_range("row index " + std::to_string(r) + " out of range");
    return rows_[r];
  }

  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Reduced row echelon form of a matrix, with the pivot column of each
/// nonzero row. Rows past pivot_cols.size() are zero.
struct Echelon {
  BitMatrix reduced;
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

namespace detail {

// Gauss-Jordan on `m` in place; only columns < pivot_limit may carry pivots.
inline std::vector<std::size_t> gauss_jordan(BitMatrix& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < pivot_limit && next_row < m.rows(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != next_row) std::swap(m.row(pivot), m.row(next_row));
    const BitVector pivot_row = m.row(next_row);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != next_row && m.get(r, col)) m.row(r) ^= pivot_row;
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

}  // namespace detail

inline Echelon echelon(const BitMatrix& m) {
  Echelon e{m, {}};
  e.pivot_cols = detail::gauss_jordan(e.reduced, m.cols());
  return e;
}

inline std::size_t rank(const BitMatrix& m) { return echelon(m).rank(); }

/// Some x with a * x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero.
inline std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
  if (b.size() != a.rows()) {
    throw std::invalid_argument("solve: right-hand side has length " + std::to_string(b.size()) +
                                " but the matrix has " + std::to_string(a.rows()) + " rows");
  }
  const std::size_t n = a.cols();
  BitMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const BitVector& row = a.row(r);
    for (std::size_t c = row.find_first(); c < n; c = row.find_next(c + 1)) aug.set(r, c);
    if (b.get(r)) aug.set(r, n);
  }
  const auto pivots = detail::gauss_jordan(aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug.get(r, n)) return std::nullopt;
  }
  BitVector x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (aug.get(i, n)) x.set(pivots[i]);
  }
  return x;
}

/// Basis of {x : a * x = 0}; one vector per free column, in column order.
inline std::vector<BitVector> nullspace_basis(const BitMatrix& a) {
  const Echelon e = echelon(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(n);
    v.set(free);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      if (e.reduced.get(i, free)) v.set(e.pivot_cols[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coefficients y over the rows of m with yᵀ m = v, or nullopt if v is not
/// in the row space.
inline std::optional<BitVector> in_rowspace(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) {
    throw std::invalid_argument("in_rowspace: vector has length " + std::to_string(v.size()) +
                                " but the matrix has " + std::to_string(m.cols()) + " columns");
  }
  return solve(m.transpose(), v);
}

}  // namespace rcc::gf2
