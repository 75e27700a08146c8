#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pertinent/binary_matrix.hpp"
#include "pertinent/coefficient_table.hpp"
#include "pertinent/digraph.hpp"
#include "pertinent/errors.hpp"
#include "pertinent/parallel.hpp"
#include "pertinent/type_spec.hpp"

namespace pertinent {

// 2^m assignments; (A, 5) is 2^25.
inline constexpr int kMaxEnumerationDim = 5;

/// Whether the bipartite graph rows x columns with an edge at every 1-entry
/// has a perfect matching, i.e. whether the permanent is non-zero.
inline bool has_perfect_matching(std::span<const std::uint32_t> rows, int n) {
  const std::uint32_t full = (1u << n) - 1u;
  std::uint32_t covered = 0;
  for (int i = 0; i < n; ++i) {
    if (!rows[i]) return false;
    covered |= rows[i];
  }
  if (covered != full) return false;

  // Kuhn's augmenting paths; owner[c] is the row matched to column c.
  std::array<int, kMaxBinaryDim> owner;
  owner.fill(-1);
  std::uint32_t visited = 0;
  auto augment = [&](auto&& self, int row) -> bool {
    for (std::uint32_t cand = rows[row] & ~visited; cand; cand &= cand - 1) {
      const int c = std::countr_zero(cand);
      if ((visited >> c) & 1u) continue;
      visited |= 1u << c;
      if (owner[c] < 0 || self(self, owner[c])) {
        owner[c] = row;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    visited = 0;
    if (!augment(augment, i)) return false;
  }
  return true;
}

namespace detail {

// Maps an assignment counter onto a family's matrix. Bit k of the counter is
// the k-th variable position in row-major order, so each row consumes a
// contiguous slice of the counter and is expanded through a lookup table.
class AssignmentLayout {
 public:
  explicit AssignmentLayout(const TypeSpec& spec) : n_(spec.n()) {
    if (spec.n() > kMaxEnumerationDim) throw DimensionError("assignment layout supports n <= 5");
    const auto var = spec.variable_mask().rows();
    const auto fixed = spec.fixed_mask();
    int shift = 0;
    for (int i = 0; i < n_; ++i) {
      Row& row = rows_[i];
      row.shift = shift;
      row.width = std::popcount(var[i]);
      row.lut.assign(std::size_t{1} << row.width, fixed.rows()[i]);
      for (std::uint32_t x = 0; x < row.lut.size(); ++x) {
        std::uint32_t bits = var[i];
        for (int k = 0; bits; ++k, bits &= bits - 1) {
          if ((x >> k) & 1u) row.lut[x] |= 1u << std::countr_zero(bits);
        }
      }
      shift += row.width;
    }
  }

  void fill(std::uint64_t counter, std::array<std::uint32_t, kMaxEnumerationDim>& out) const {
    for (int i = 0; i < n_; ++i) {
      const Row& row = rows_[i];
      out[i] = row.lut[(counter >> row.shift) & ((std::uint64_t{1} << row.width) - 1)];
    }
  }

  BinaryMatrix matrix(std::uint64_t counter) const {
    std::array<std::uint32_t, kMaxEnumerationDim> r{};
    fill(counter, r);
    return BinaryMatrix(n_, std::span<const std::uint32_t>(r.data(), static_cast<std::size_t>(n_)));
  }

 private:
  struct Row {
    int shift = 0;
    int width = 0;
    std::vector<std::uint32_t> lut;
  };
  int n_;
  std::array<Row, kMaxEnumerationDim> rows_{};
};

inline bool pertinent_rows(Family family, std::span<const std::uint32_t> rows, int n) {
  return family == Family::C ? acyclic_rows(rows, n) : !has_perfect_matching(rows, n);
}

}  // namespace detail

/// per = 0 for families A and B, per = 1 for family C. The permanent is
/// decided through a matching test (A, B) or a cycle test on M - I (C).
inline bool is_pertinent(const TypeSpec& spec, const BinaryMatrix& assignment) {
  if (assignment.size() != spec.n()) throw DimensionError("assignment dimension does not match " + spec.name());
  const auto fixed = spec.fixed_mask();
  if ((assignment & fixed) != fixed) throw SpecViolation("a fixed element of " + spec.name() + " is 0");
  return detail::pertinent_rows(spec.family(), assignment.rows(), spec.n());
}

/// Counts pertinent matrices by number of one-valued variable elements over
/// all 2^m assignments. Counts above i_max are checked to be zero.
inline CoefficientTable count_pertinent(const TypeSpec& spec, const ParallelOptions& opt = {}) {
  if (spec.n() > kMaxEnumerationDim) {
    throw DimensionError("enumeration supports n <= 5, got " + spec.name());
  }
  const detail::AssignmentLayout layout(spec);
  const int n = spec.n();
  const Family family = spec.family();
  const unsigned m = static_cast<unsigned>(spec.m());
  const unsigned split = resolve_split_bits(opt, m);
  const unsigned low_bits = m - split;

  auto counts = parallel_count(std::uint64_t{1} << split, m + 1, resolve_workers(opt),
                               [&](std::uint64_t chunk, auto& partial) {
                                 std::array<std::uint32_t, kMaxEnumerationDim> rows{};
                                 const std::uint64_t first = chunk << low_bits;
                                 const std::uint64_t last = first + (std::uint64_t{1} << low_bits);
                                 const std::span<const std::uint32_t> view(rows.data(), static_cast<std::size_t>(n));
                                 for (std::uint64_t a = first; a < last; ++a) {
                                   layout.fill(a, rows);
                                   if (detail::pertinent_rows(family, view, n)) ++partial[std::popcount(a)];
                                 }
                               });

  for (std::size_t i = spec.i_max() + 1; i < counts.size(); ++i) {
    if (counts[i] != 0) {
      throw std::logic_error("pertinent " + spec.name() + " matrix with " + std::to_string(i) +
                             " one-valued variable elements exceeds i_max");
    }
  }
  std::vector<BigInt> coeffs(counts.begin(), counts.begin() + spec.i_max() + 1);
  return CoefficientTable(spec, std::move(coeffs), Route::enumeration);
}

inline BigInt total_pertinent(const TypeSpec& spec, const ParallelOptions& opt = {}) {
  return count_pertinent(spec, opt).total();
}

struct ExtremesReport {
  TypeSpec spec;
  std::uint64_t pertinent_below_min = 0;  // pertinent assignments with fewer than j_min zeros
  std::vector<BinaryMatrix> witnesses;    // pertinent assignments with exactly j_min zeros

  bool ok() const { return pertinent_below_min == 0 && !witnesses.empty(); }
};

/// Scans every assignment with at most j_min zero-valued variable elements.
inline ExtremesReport verify_extremes(const TypeSpec& spec) {
  if (spec.n() > kMaxEnumerationDim) throw DimensionError("extremes check supports n <= 5");
  const detail::AssignmentLayout layout(spec);
  const int m = spec.m();
  const std::uint64_t all = (std::uint64_t{1} << m) - 1;
  ExtremesReport report{spec, 0, {}};
  std::array<std::uint32_t, kMaxEnumerationDim> rows{};
  const std::span<const std::uint32_t> view(rows.data(), static_cast<std::size_t>(spec.n()));

  for (int zeros = 0; zeros <= spec.j_min(); ++zeros) {
    // Gosper's hack over the zero positions.
    std::uint64_t z = zeros == 0 ? 0 : (std::uint64_t{1} << zeros) - 1;
    while (z <= all) {
      const std::uint64_t a = all & ~z;
      layout.fill(a, rows);
      if (detail::pertinent_rows(spec.family(), view, spec.n())) {
        if (zeros < spec.j_min()) {
          ++report.pertinent_below_min;
        } else {
          report.witnesses.push_back(layout.matrix(a));
        }
      }
      if (z == 0) break;
      const std::uint64_t c = z & (~z + 1);
      const std::uint64_t r = z + c;
      z = (((r ^ z) >> 2) / c) | r;
    }
  }
  return report;
}

}  // namespace pertinent
