#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pertinent/binary_matrix.hpp"
#include "pertinent/errors.hpp"
#include "pertinent/numeric.hpp"

namespace pertinent {

// Expansion-based operations (n! terms) refuse larger matrices.
inline constexpr int kMaxExpansionDim = 8;

/// Square matrix of exact rationals, 1-based element access.
class RationalMatrix {
 public:
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
    if (n < 1) throw DimensionError("matrix dimension must be positive");
  }

  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
      : RationalMatrix(static_cast<int>(rows.size())) {
    std::size_t k = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_) throw DimensionError("matrix is not square");
      for (const auto& v : row) a_[k++] = v;
    }
  }

  static RationalMatrix from_binary(const BinaryMatrix& b) {
    RationalMatrix m(b.size());
    for (int i = 1; i <= b.size(); ++i)
      for (int j = 1; j <= b.size(); ++j)
        if (b(i, j)) m(i, j) = 1;
    return m;
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n);
    for (int i = 1; i <= n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const noexcept { return n_; }

  const Rational& operator()(int i, int j) const { return a_[offset(i, j)]; }
  Rational& operator()(int i, int j) { return a_[offset(i, j)]; }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 1; i <= n_; ++i) {
      s += i > 1 ? ",(" : "(";
      for (int j = 1; j <= n_; ++j) {
        if (j > 1) s += ',';
        s += pertinent::to_string((*this)(i, j));
      }
      s += ')';
    }
    return s + ")";
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t offset(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      throw DimensionError("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                           std::to_string(n_));
    }
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  std::vector<Rational> a_;
};

/// Exact determinant by Gaussian elimination over the rationals.
inline Rational determinant(const RationalMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i + 1, j + 1);

  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col + 1; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

namespace detail {

inline void check_expansion_dim(int n) {
  if (n < 1 || n > kMaxExpansionDim) {
    throw DimensionError("expansion over permutations needs 1 <= n <= 8, got " + std::to_string(n));
  }
}

// sign of the permutation held in perm (0-based images)
inline int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(perm[k])) {
      seen[k] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace detail

/// Leibniz expansion; the cross-check for determinant().
inline Rational determinant_expansion(const RationalMatrix& m) {
  const int n = m.size();
  detail::check_expansion_dim(n);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Rational sum = 0;
  do {
    Rational term = detail::permutation_sign(sigma);
    for (int col = 0; col < n && term != 0; ++col) term *= m(sigma[col] + 1, col + 1);
    sum += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

/// sum over sigma of prod_i m(sigma(i), i)
inline Rational permanent_expansion(const RationalMatrix& m) {
  const int n = m.size();
  detail::check_expansion_dim(n);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Rational sum = 0;
  do {
    Rational term = 1;
    for (int col = 0; col < n && term != 0; ++col) term *= m(sigma[col] + 1, col + 1);
    sum += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

/// The (n-1)x(n-1) submatrix left after deleting row i and column j.
inline RationalMatrix delete_row_col(const RationalMatrix& m, int i, int j) {
  const int n = m.size();
  if (n < 2) throw DimensionError("cannot delete a row and column from a 1x1 matrix");
  if (i < 1 || i > n || j < 1 || j > n) {
    throw DimensionError("deleted index (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                         std::to_string(n));
  }
  RationalMatrix sub(n - 1);
  for (int r = 1, sr = 1; r <= n; ++r) {
    if (r == i) continue;
    for (int c = 1, sc = 1; c <= n; ++c) {
      if (c == j) continue;
      sub(sr, sc++) = m(r, c);
    }
    ++sr;
  }
  return sub;
}

inline Rational cofactor(const RationalMatrix& m, int i, int j) {
  const Rational minor = determinant(delete_row_col(m, i, j));
  return (i + j) % 2 == 0 ? minor : Rational(-minor);
}

/// Binarization: bit (i, j) is set iff the entry is non-zero.
inline BinaryMatrix support(const RationalMatrix& m) {
  BinaryMatrix b(m.size());
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j)
      if (m(i, j) != 0) b.set(i, j, true);
  return b;
}

}  // namespace pertinent
