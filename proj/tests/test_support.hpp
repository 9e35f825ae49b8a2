#pragma once

#include "pcw/core.hpp"
#include "pcw/poset.hpp"

#include <random>
#include <vector>

namespace test {

using Rng = std::mt19937_64;

inline pcw::ParamSet P0() { return {2, 8, {2, 4, 8}, {{2, 2}, {4, 3}, {8, 5}}}; }
inline pcw::ParamSet P1() { return {3, 9, {3, 9}, {{3, 3}, {9, 4}}}; }
inline pcw::ParamSet P3() { return {3, 18, {3, 9, 18}, {{3, 3}, {9, 4}, {18, 9}}}; }

inline std::vector<pcw::ParamSet> valid_corpus() {
    return {
        P0(),
        P1(),
        P3(),
        {2, 8, {2, 8}, {{2, 2}, {8, 5}}},
        {2, 8, {2, 4, 8}, {{2, 2}, {4, 4}, {8, 8}}},
        {2, 16, {2, 4, 8, 16}, {{2, 2}, {4, 3}, {8, 5}, {16, 9}}},
        {3, 18, {3, 6, 18}, {{3, 3}, {6, 4}, {18, 9}}},
        {4, 16, {4, 16}, {{4, 4}, {16, 12}}},
    };
}

inline pcw::Condition C(std::vector<std::pair<int, int>> pairs) {
    return pcw::Condition::from_pairs(pairs);
}

}  // namespace test
