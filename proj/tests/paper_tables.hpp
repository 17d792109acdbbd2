// Reference tables: maximal parallel-spinor counts for n = 1..28 and the
// Calabi-Yau hypersurface bounds vs flat-torus counts for even m = 2..30.

#ifndef RSCOUNT_TESTS_PAPER_TABLES_HPP
#define RSCOUNT_TESTS_PAPER_TABLES_HPP

#include <array>
#include <string_view>

namespace rscount::testing {

inline constexpr std::array<int, 28> kParallelSpinorTable{0, 0, 0, 2,  0, 0,  1, 4,  0,  0,  2,  8,  0,  2,
                                                          4, 16, 0, 4, 8, 32, 2, 8, 16, 64, 4, 16, 32, 128};

struct CalabiYauRow {
    int m;
    std::string_view rs_bound;
    std::string_view torus_rs;
};

inline constexpr std::array<CalabiYauRow, 15> kCalabiYauTable{{
    {2, "38", "12"},
    {4, "850", "112"},
    {6, "12736", "704"},
    {8, "184542", "3840"},
    {10, "2703838", "19456"},
    {12, "40116146", "94208"},
    {14, "601079752", "442368"},
    {16, "9075134398", "2031616"},
    {18, "137846527510", "9175040"},
    {20, "2104098961730", "40894464"},
    {22, "32247603679902", "180355072"},
    {24, "495918532942658", "788529152"},
    {26, "7648690600750682", "3422552064"},
    {28, "118264581564843242", "14763950080"},
    {30, "1832624140942555720", "63350767616"},
}};

}  // namespace rscount::testing

#endif  // RSCOUNT_TESTS_PAPER_TABLES_HPP
