#ifndef NDSORT_TESTS_FIXTURES_HPP
#define NDSORT_TESTS_FIXTURES_HPP

#include "ndsort/core.hpp"

#include <cstdint>
#include <vector>

namespace ndsort::testing {

// 14-solution, 3-objective worked example. Labels in the comments are the
// 1-based ids used in the published table; the library uses id = label - 1.
inline ObjectiveMatrix worked_example()
{
    return ObjectiveMatrix::from_rows({
        {34, 30, 40}, // 1
        {33, 34, 30}, // 2
        {32, 32, 31}, // 3
        {31, 34, 34}, // 4
        {34, 30, 41}, // 5
        {36, 35, 36}, // 6
        {36, 33, 32}, // 7
        {35, 31, 43}, // 8
        {37, 36, 39}, // 9
        {35, 34, 38}, // 10
        {38, 38, 37}, // 11
        {39, 37, 31}, // 12
        {37, 36, 39}, // 13, duplicate of 9
        {33, 34, 30}, // 14, duplicate of 2
    });
}

// Ranks of the worked example from the dominance definition, indexed by
// label - 1. Four fronts: 3 < 7 < 6 < 9 and 1 < 5 < 8 are dominance chains.
inline std::vector<std::uint32_t> worked_example_ranks()
{
    return {1, 1, 1, 1, 2, 3, 2, 3, 4, 2, 4, 2, 4, 1};
}

// Rank column as originally tabulated alongside the example. It disagrees
// with the definition for labels 8, 9, 11 and 13 (6 dominates 9, yet both
// are listed at rank 3) and is kept only to report that disagreement.
inline std::vector<std::uint32_t> worked_example_tabulated_ranks()
{
    return {1, 1, 1, 1, 2, 3, 2, 2, 3, 2, 3, 2, 3, 1};
}

inline std::vector<std::uint32_t> labels_to_ids(std::vector<std::uint32_t> labels)
{
    for (auto& l : labels) {
        --l;
    }
    return labels;
}

} // namespace ndsort::testing

#endif
