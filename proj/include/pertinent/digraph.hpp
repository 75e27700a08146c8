#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pertinent/binary_matrix.hpp"
#include "pertinent/coefficient_table.hpp"
#include "pertinent/errors.hpp"
#include "pertinent/parallel.hpp"
#include "pertinent/type_spec.hpp"

namespace pertinent {

// The edge-census enumerates 3^(n(n-1)/2) two-cycle-free adjacencies.
inline constexpr int kMaxCensusDim = 6;

/// Loop-free digraph on vertices 1..n, stored as out-neighbour bitmasks.
class Digraph {
 public:
  explicit Digraph(int n) : n_(n) {
    if (n < 1 || n > kMaxBinaryDim) throw DimensionError("digraph vertex count outside [1, 30]");
  }

  static Digraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Digraph d(n);
    for (auto [k, l] : edges) d.add_edge(k, l);
    return d;
  }

  void add_edge(int k, int l) {
    check_vertex(k);
    check_vertex(l);
    if (k == l) throw SpecViolation("digraph loops are not allowed");
    out_[k - 1] |= 1u << (l - 1);
  }

  bool has_edge(int k, int l) const {
    check_vertex(k);
    check_vertex(l);
    return (out_[k - 1] >> (l - 1)) & 1u;
  }

  int size() const noexcept { return n_; }

  int edge_count() const noexcept {
    int e = 0;
    for (int v = 0; v < n_; ++v) e += std::popcount(out_[v]);
    return e;
  }

  // Sorted (k, l) pairs, 1-based.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int k = 0; k < n_; ++k)
      for (int l = 0; l < n_; ++l)
        if ((out_[k] >> l) & 1u) e.emplace_back(k + 1, l + 1);
    return e;
  }

  std::span<const std::uint32_t> out_neighbours() const noexcept {
    return {out_.data(), static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 1 || v > n_) throw DimensionError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }

  int n_;
  std::array<std::uint32_t, kMaxBinaryDim> out_{};
};

namespace detail {

// Repeatedly peels vertices with no out-edge into the remaining set (Kahn's
// algorithm run on sinks). Diagonal bits are ignored, so matrix rows with a
// unit diagonal can be passed directly.
inline bool acyclic_rows(std::span<const std::uint32_t> out, int n) {
  std::uint32_t remaining = (1u << n) - 1u;
  while (remaining) {
    std::uint32_t sinks = 0;
    for (std::uint32_t r = remaining; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if ((out[v] & remaining & ~(1u << v)) == 0) sinks |= 1u << v;
    }
    if (!sinks) return false;
    remaining &= ~sinks;
  }
  return true;
}

}  // namespace detail

/// Edge set {(k,l) : k != l, M(k,l) = 1}; the adjacency matrix is M - I.
inline Digraph matrix_to_digraph(const BinaryMatrix& m) {
  Digraph d(m.size());
  for (int k = 1; k <= m.size(); ++k) {
    if (!m(k, k)) throw SpecViolation("family C matrix needs a unit diagonal; (" + std::to_string(k) + "," +
                                      std::to_string(k) + ") is 0");
    for (int l = 1; l <= m.size(); ++l)
      if (k != l && m(k, l)) d.add_edge(k, l);
  }
  return d;
}

inline bool is_acyclic(const Digraph& d) { return detail::acyclic_rows(d.out_neighbours(), d.size()); }

/// Number of labelled acyclic digraphs on n vertices by edge count.
///
/// Off-diagonal cells are grouped into pairs {(k,l),(l,k)}. For each set of
/// backward edges the forward edges range over the submasks of its
/// complement, so adjacencies with a 2-cycle are never generated.
inline CoefficientTable count_dags_by_edges(int n, const ParallelOptions& opt = {}) {
  if (n < 1 || n > kMaxCensusDim) {
    throw DimensionError("DAG census supports 1 <= n <= 6, got " + std::to_string(n));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) pairs.emplace_back(k, l);
  const int npairs = static_cast<int>(pairs.size());
  const std::uint32_t all = (npairs == 32) ? ~0u : (1u << npairs) - 1u;
  const std::size_t width = static_cast<std::size_t>(n) * (n - 1) + 1;

  const unsigned split = resolve_split_bits(opt, static_cast<unsigned>(npairs));
  const std::uint64_t chunks = std::uint64_t{1} << split;
  const unsigned low_bits = static_cast<unsigned>(npairs) - split;

  auto counts = parallel_count(chunks, width, resolve_workers(opt), [&](std::uint64_t chunk, auto& partial) {
    std::array<std::uint32_t, kMaxCensusDim> out{};
    const std::uint32_t first = static_cast<std::uint32_t>(chunk << low_bits);
    const std::uint32_t last = first + (1u << low_bits);
    for (std::uint32_t back = first; back < last; ++back) {
      const std::uint32_t free = all & ~back;
      for (std::uint32_t fwd = free;; fwd = (fwd - 1) & free) {
        out.fill(0);
        for (int p = 0; p < npairs; ++p) {
          const auto [k, l] = pairs[p];
          if ((fwd >> p) & 1u) out[k] |= 1u << l;
          if ((back >> p) & 1u) out[l] |= 1u << k;
        }
        if (detail::acyclic_rows({out.data(), static_cast<std::size_t>(n)}, n)) {
          ++partial[std::popcount(fwd) + std::popcount(back)];
        }
        if (fwd == 0) break;
      }
    }
  });

  const TypeSpec spec = TypeSpec::make(Family::C, n);
  for (std::size_t e = spec.i_max() + 1; e < width; ++e) {
    if (counts[e] != 0) throw std::logic_error("acyclic digraph with more than n(n-1)/2 edges");
  }
  std::vector<BigInt> coeffs(counts.begin(), counts.begin() + spec.i_max() + 1);
  return CoefficientTable(spec, std::move(coeffs), Route::dag_census);
}

}  // namespace pertinent
