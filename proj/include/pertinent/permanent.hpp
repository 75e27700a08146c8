#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pertinent/binary_matrix.hpp"
#include "pertinent/numeric.hpp"
#include "pertinent/rational_matrix.hpp"

namespace pertinent {

/// Permanent of a 0/1 matrix as a literal sum over all n! permutations.
inline BigInt permanent_expansion(const BinaryMatrix& m) {
  const int n = m.size();
  detail::check_expansion_dim(n);
  const auto rows = m.rows();
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::uint64_t count = 0;
  do {
    bool term = true;
    for (int col = 0; col < n && term; ++col) term = (rows[sigma[col]] >> col) & 1u;
    count += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return BigInt(count);
}

/// Ryser's inclusion-exclusion over column subsets, Gray-code ordered:
/// per(M) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} m_ij.
inline BigInt permanent_ryser(const BinaryMatrix& m) {
  const int n = m.size();
  const auto rows = m.rows();
  std::vector<int> row_sum(n, 0);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;

  if (n <= 15) {
    // n^n < 2^63 and 2^n * n^n < 2^127 for n <= 15
    __int128 total = 0;
    for (std::uint64_t k = 1; k < subsets; ++k) {
      const int col = std::countr_zero(k);
      gray ^= std::uint64_t{1} << col;
      const int delta = ((gray >> col) & 1u) ? 1 : -1;
      std::int64_t prod = 1;
      for (int i = 0; i < n; ++i) {
        if ((rows[i] >> col) & 1u) row_sum[i] += delta;
        prod *= row_sum[i];
      }
      if (std::popcount(gray) % 2 == 1) {
        total -= prod;
      } else {
        total += prod;
      }
    }
    if (n % 2 == 1) total = -total;
    const bool negative = total < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-total) : static_cast<unsigned __int128>(total);
    BigInt result = static_cast<std::uint64_t>(mag >> 64);
    result <<= 64;
    result += static_cast<std::uint64_t>(mag);
    return negative ? BigInt(-result) : result;
  }

  BigInt total = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    gray ^= std::uint64_t{1} << col;
    const int delta = ((gray >> col) & 1u) ? 1 : -1;
    bool zero = false;
    for (int i = 0; i < n; ++i) {
      if ((rows[i] >> col) & 1u) row_sum[i] += delta;
      zero = zero || row_sum[i] == 0;
    }
    if (zero) continue;
    BigInt prod = 1;
    for (int i = 0; i < n; ++i) prod *= row_sum[i];
    if (std::popcount(gray) % 2 == 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return n % 2 == 1 ? BigInt(-total) : total;
}

}  // namespace pertinent
