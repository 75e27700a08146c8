#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include "pertinent/errors.hpp"

namespace pertinent {

inline constexpr int kMaxBinaryDim = 30;

/// Square 0/1 matrix stored as one bitmask per row.
///
/// Public indices are 1-based: element (i, j) lives in bit j-1 of row i-1.
/// Rows beyond n and bits at or above position n are always clear, so the
/// defaulted comparisons are value comparisons.
class BinaryMatrix {
 public:
  explicit BinaryMatrix(int n) : n_(n) {
    if (n < 1 || n > kMaxBinaryDim) {
      throw DimensionError("binary matrix dimension " + std::to_string(n) + " outside [1, 30]");
    }
  }

  BinaryMatrix(int n, std::span<const std::uint32_t> rows) : BinaryMatrix(n) {
    if (static_cast<int>(rows.size()) != n) throw DimensionError("row count does not match dimension");
    for (int i = 0; i < n; ++i) {
      if (rows[i] & ~full_row_mask()) throw DimensionError("row bit set beyond column n");
      rows_[i] = rows[i];
    }
  }

  // BinaryMatrix::from_rows({{1, 0}, {1, 1}})
  static BinaryMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    BinaryMatrix m(static_cast<int>(rows.size()));
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m.n_) throw DimensionError("matrix is not square");
      int j = 0;
      for (int v : row) {
        if (v != 0 && v != 1) throw SpecViolation("binary matrix entries must be 0 or 1");
        if (v) m.rows_[i] |= 1u << j;
        ++j;
      }
      ++i;
    }
    return m;
  }

  static BinaryMatrix identity(int n) {
    BinaryMatrix m(n);
    for (int i = 0; i < n; ++i) m.rows_[i] = 1u << i;
    return m;
  }

  static BinaryMatrix ones(int n) {
    BinaryMatrix m(n);
    for (int i = 0; i < n; ++i) m.rows_[i] = m.full_row_mask();
    return m;
  }

  int size() const noexcept { return n_; }

  bool operator()(int i, int j) const {
    check_index(i, j);
    return (rows_[i - 1] >> (j - 1)) & 1u;
  }

  void set(int i, int j, bool value) {
    check_index(i, j);
    if (value) {
      rows_[i - 1] |= 1u << (j - 1);
    } else {
      rows_[i - 1] &= ~(1u << (j - 1));
    }
  }

  // 0-based storage view; bit j of rows()[i] is element (i+1, j+1).
  std::span<const std::uint32_t> rows() const noexcept { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  std::uint32_t full_row_mask() const noexcept {
    return (1u << n_) - 1u;
  }

  int count_ones() const noexcept {
    int c = 0;
    for (int i = 0; i < n_; ++i) c += std::popcount(rows_[i]);
    return c;
  }

  BinaryMatrix transposed() const {
    BinaryMatrix t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if ((rows_[i] >> j) & 1u) t.rows_[j] |= 1u << i;
    return t;
  }

  BinaryMatrix operator&(const BinaryMatrix& other) const {
    check_same_size(other);
    BinaryMatrix r(n_);
    for (int i = 0; i < n_; ++i) r.rows_[i] = rows_[i] & other.rows_[i];
    return r;
  }

  BinaryMatrix operator|(const BinaryMatrix& other) const {
    check_same_size(other);
    BinaryMatrix r(n_);
    for (int i = 0; i < n_; ++i) r.rows_[i] = rows_[i] | other.rows_[i];
    return r;
  }

  BinaryMatrix complement() const {
    BinaryMatrix r(n_);
    for (int i = 0; i < n_; ++i) r.rows_[i] = ~rows_[i] & full_row_mask();
    return r;
  }

  bool is_upper_triangular() const noexcept {
    for (int i = 0; i < n_; ++i)
      if (rows_[i] & ((1u << i) - 1u)) return false;
    return true;
  }

  bool is_lower_triangular() const noexcept {
    for (int i = 0; i < n_; ++i)
      if (rows_[i] >> (i + 1)) return false;
    return true;
  }

  // "((1,0),(0,1))"
  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) {
      s += i ? ",(" : "(";
      for (int j = 0; j < n_; ++j) {
        if (j) s += ',';
        s += ((rows_[i] >> j) & 1u) ? '1' : '0';
      }
      s += ')';
    }
    return s + ")";
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
  friend auto operator<=>(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  void check_index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      throw DimensionError("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                           std::to_string(n_));
    }
  }

  void check_same_size(const BinaryMatrix& other) const {
    if (other.n_ != n_) throw DimensionError("binary matrix dimensions differ");
  }

  int n_ = 1;
  std::array<std::uint32_t, kMaxBinaryDim> rows_{};
};

}  // namespace pertinent
