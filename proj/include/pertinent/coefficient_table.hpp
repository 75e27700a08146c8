#pragma once

#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pertinent/errors.hpp"
#include "pertinent/numeric.hpp"
#include "pertinent/type_spec.hpp"

namespace pertinent {

enum class Route { enumeration, dag_census, generating_function };

// Names used on the command line and in JSON output.
inline std::string_view route_name(Route r) {
  switch (r) {
    case Route::enumeration: return "enumeration";
    case Route::dag_census: return "dag";
    case Route::generating_function: return "gf";
  }
  return "?";
}

/// coeffs[i] = number of pertinent matrices of a family with exactly i
/// one-valued variable elements, i = 0 .. i_max.
class CoefficientTable {
 public:
  CoefficientTable(TypeSpec spec, std::vector<BigInt> coeffs, Route route)
      : spec_(std::move(spec)), coeffs_(std::move(coeffs)), route_(route) {
    if (static_cast<int>(coeffs_.size()) != spec_.i_max() + 1) {
      throw SpecViolation("coefficient table for " + spec_.name() + " needs " + std::to_string(spec_.i_max() + 1) +
                          " entries, got " + std::to_string(coeffs_.size()));
    }
    for (const auto& c : coeffs_) {
      if (c < 0) throw SpecViolation("negative count in coefficient table");
    }
    total_ = std::accumulate(coeffs_.begin(), coeffs_.end(), BigInt(0));
  }

  const TypeSpec& spec() const noexcept { return spec_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Route route() const noexcept { return route_; }
  const BigInt& total() const noexcept { return total_; }

  // Same family, dimension and counts; the route may differ.
  bool same_counts(const CoefficientTable& other) const {
    return spec_ == other.spec_ && coeffs_ == other.coeffs_;
  }

 private:
  TypeSpec spec_;
  std::vector<BigInt> coeffs_;
  Route route_;
  BigInt total_;
};

}  // namespace pertinent
