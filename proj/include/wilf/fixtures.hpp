#pragma once

// Published tables, kept verbatim (including the misprinted y_14) so that
// computed tables can be diffed against them.

#include <array>
#include <cstdint>

namespace wilf::fixtures {

inline constexpr int kVersion = 1;

/// B±(0..10).
inline constexpr std::array<std::int64_t, 11> kBellPmSmall = {1, -1, 0, 1, 1, -2, -9, -9, 50, 267, 413};

/// y_m for m = 0..18 as printed. y_14 = 801 is a truncation of 8013.
inline constexpr std::array<std::uint64_t, 19> kPublishedY = {1,    1,    1,    5,    13,    13,    13,
                                                         77,   77,   333,  845,  1869,  3917,  8013,
                                                         801,  24397, 57165, 122701, 122701};

/// x_m = 24 y_m + 14 for m = 0..18 as printed.
inline constexpr std::array<std::uint64_t, 19> kPublishedX = {
    38, 38, 38, 134, 326, 326, 326, 1862, 1862, 8006, 20294, 44870, 94022, 192326, 192326, 585542, 1371974,
    2944838, 2944838};

/// Index of the row whose printed y_m disagrees with x_m.
inline constexpr int kMisprintRow = 14;

/// log10|B±(x_m)| for m = 0..8, one decimal.
inline constexpr std::array<double, 9> kGrowthLog10 = {27.3, 27.3, 27.3, 153.8, 475.8, 475.8, 475.8, 3908.4, 3908.4};

/// First ten bits of the limiting sequence s.
inline constexpr std::array<int, 10> kSequenceS10 = {1, 0, 1, 1, 0, 0, 1, 0, 1, 1};

}  // namespace wilf::fixtures
