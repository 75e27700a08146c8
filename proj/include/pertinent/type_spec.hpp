#pragma once

#include <string>
#include <string_view>

#include "pertinent/binary_matrix.hpp"
#include "pertinent/errors.hpp"

namespace pertinent {

/// A: every element random. B: unit diagonal except the random element at
/// (1,1). C: unit diagonal.
enum class Family { A, B, C };

inline char to_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
  }
  return '?';
}

inline Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  throw ParseError("unknown family '" + std::string(s) + "' (expected A, B or C)");
}

/// Which elements of an n x n matrix of a family are variable, plus the
/// counting constants derived from it.
///
///   m      number of variable elements
///   j_min  least number of zero-valued variable elements in a pertinent matrix
///   i_max  m - j_min, the most one-valued variable elements a pertinent
///          matrix can have
///   target permanent value u that makes a binary matrix pertinent
class TypeSpec {
 public:
  static TypeSpec make(Family family, int n) {
    if (n < 1 || n > kMaxBinaryDim) throw DimensionError("dimension " + std::to_string(n) + " outside [1, 30]");
    BinaryMatrix mask = BinaryMatrix::ones(n);
    int j_min = n;
    switch (family) {
      case Family::A:
        break;
      case Family::B:
        for (int i = 2; i <= n; ++i) mask.set(i, i, false);
        break;
      case Family::C:
        for (int i = 1; i <= n; ++i) mask.set(i, i, false);
        j_min = (n * n - n) / 2;
        break;
    }
    const int m = mask.count_ones();
    return TypeSpec(family, n, mask, m, m - j_min, j_min);
  }

  Family family() const noexcept { return family_; }
  int n() const noexcept { return n_; }
  const BinaryMatrix& variable_mask() const noexcept { return variable_mask_; }
  BinaryMatrix fixed_mask() const { return variable_mask_.complement(); }
  int m() const noexcept { return m_; }
  int i_max() const noexcept { return i_max_; }
  int j_min() const noexcept { return j_min_; }
  int target() const noexcept { return family_ == Family::C ? 1 : 0; }

  std::string name() const { return std::string(1, to_char(family_)) + "_" + std::to_string(n_); }

  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;

 private:
  TypeSpec(Family family, int n, BinaryMatrix mask, int m, int i_max, int j_min)
      : family_(family), n_(n), variable_mask_(mask), m_(m), i_max_(i_max), j_min_(j_min) {}

  Family family_;
  int n_;
  BinaryMatrix variable_mask_;
  int m_;
  int i_max_;
  int j_min_;
};

}  // namespace pertinent
