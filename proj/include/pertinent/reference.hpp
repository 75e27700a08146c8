#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pertinent/type_spec.hpp"

// Published values the computations are checked against.
namespace pertinent::reference {

using Row = std::vector<std::uint64_t>;

// F_n(i), family A, n = 1..5
inline const std::vector<Row> kFamilyA = {
    {1},
    {1, 4, 4},
    {1, 9, 36, 78, 90, 45, 6},
    {1, 16, 120, 560, 1796, 4080, 6496, 6976, 4860, 2128, 576, 96, 8},
    {1, 25, 300, 2300, 12650, 53010, 174700, 458500, 956775, 1571525, 2010920, 1994200, 1534800, 923700,
     439600, 166720, 50025, 11500, 1900, 200, 10},
};

// G_n(i), family B, n = 1..5
inline const std::vector<Row> kFamilyB = {
    {1},
    {1, 2},
    {1, 6, 13, 10, 2},
    {1, 12, 63, 184, 315, 324, 203, 78, 18, 2},
    {1, 20, 186, 1056, 4035, 10836, 21032, 30212, 32829, 27520, 18062, 9324, 3741, 1128, 240, 32, 2},
};

// H_n(i), family C, n = 1..5
inline const std::vector<Row> kFamilyC = {
    {1},
    {1, 2},
    {1, 6, 12, 6},
    {1, 12, 60, 152, 186, 108, 24},
    {1, 20, 180, 940, 3050, 6180, 7960, 6540, 3330, 960, 120},
};

// Reference totals for families A and C, n = 1..5.
inline const Row kTotalsA = {1, 9, 265, 27713, 10363661};
inline const Row kTotalsC = {1, 3, 25, 543, 29281};

inline std::optional<Row> table(Family f, int n) {
  if (n < 1 || n > 5) return std::nullopt;
  switch (f) {
    case Family::A: return kFamilyA[n - 1];
    case Family::B: return kFamilyB[n - 1];
    case Family::C: return kFamilyC[n - 1];
  }
  return std::nullopt;
}

}  // namespace pertinent::reference
