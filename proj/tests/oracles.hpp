#pragma once

// Independent reference computations. Nothing here calls into the library
// routine it is used to check.

#include "pcw/core.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

/// Tries every subfamily of size `target`.
inline bool delta_exists(const std::vector<pcw::IntSet>& sets, std::size_t target) {
    const std::size_t n = sets.size();
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (static_cast<std::size_t>(__builtin_popcount(s)) != target)
            continue;
        bool first = true, ok = true;
        pcw::IntSet kernel;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = a + 1; b < n && ok; ++b) {
                if (!(s >> a & 1) || !(s >> b & 1))
                    continue;
                pcw::IntSet inter;
                for (int x : sets[a])
                    if (sets[b].count(x))
                        inter.insert(x);
                if (first)
                    kernel = inter, first = false;
                else
                    ok = inter == kernel;
            }
        if (ok)
            return true;
    }
    return false;
}

/// Budget check by block arithmetic on a plain point list.
inline bool domain_ok(const std::vector<int>& pts, const pcw::ParamSet& p) {
    for (int t : p.theta_list) {
        std::vector<int> per(static_cast<std::size_t>(p.mu / t), 0);
        for (int x : pts)
            ++per[static_cast<std::size_t>(x / t)];
        for (int c : per)
            if (c >= p.budgets.at(t))
                return false;
    }
    return true;
}

/// Sum over admissible domains of 2^|domain|.
inline std::uint64_t count_by_domains(const pcw::ParamSet& p) {
    std::uint64_t total = 0;
    for (std::uint64_t d = 0; d < (std::uint64_t{1} << p.mu); ++d) {
        std::vector<int> pts;
        for (int i = 0; i < p.mu; ++i)
            if (d >> i & 1)
                pts.push_back(i);
        if (domain_ok(pts, p))
            total += std::uint64_t{1} << pts.size();
    }
    return total;
}

/// Walks all 3^mu partial maps (digit 2 means undefined).
inline std::uint64_t count_by_partial_maps(const pcw::ParamSet& p) {
    std::uint64_t total = 0, limit = 1;
    for (int i = 0; i < p.mu; ++i)
        limit *= 3;
    for (std::uint64_t code = 0; code < limit; ++code) {
        std::vector<int> pts;
        std::uint64_t c = code;
        for (int i = 0; i < p.mu; ++i, c /= 3)
            if (c % 3 != 2)
                pts.push_back(i);
        total += domain_ok(pts, p);
    }
    return total;
}

/// Relation check by direct intersection: every interleaved config fixes
/// some pair colors; mark the colorings each config covers and look for a
/// coloring no config covers. Returns the least uncovered coloring index
/// (last pair least significant), or -1 when the relation holds.
inline std::int64_t relation_first_failure(int n, int m, int colors, bool mixed) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        total *= static_cast<std::uint64_t>(colors);
    std::vector<char> covered(total, 0);
    auto pos = [&](int a, int b) {
        if (a > b)
            std::swap(a, b);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k] == std::make_pair(a, b))
                return k;
        return pairs.size();
    };
    auto cover = [&](const std::vector<std::pair<std::size_t, int>>& fixed) {
        for (std::uint64_t code = 0; code < total; ++code) {
            bool ok = true;
            for (auto [k, col] : fixed) {
                std::uint64_t c = code;
                for (std::size_t r = pairs.size() - 1; r > k; --r)
                    c /= static_cast<std::uint64_t>(colors);
                ok = ok && static_cast<int>(c % static_cast<std::uint64_t>(colors)) == col;
            }
            if (ok)
                covered[code] = 1;
        }
    };
    // all strictly increasing vertex tuples of length len
    auto tuples = [&](int len) {
        std::vector<std::vector<int>> out;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
            if (__builtin_popcountll(s) == len) {
                std::vector<int> t;
                for (int i = 0; i < n; ++i)
                    if (s >> i & 1)
                        t.push_back(i);
                out.push_back(t);
            }
        return out;
    };
    if (mixed)
        for (const auto& t : tuples(m)) {
            std::vector<std::pair<std::size_t, int>> fixed;
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    fixed.emplace_back(pos(t[a], t[b]), 0);
            cover(fixed);
        }
    for (int eps = mixed ? 1 : 0; eps < colors; ++eps)
        for (const auto& t : tuples(2 * m)) {
            std::vector<std::pair<std::size_t, int>> fixed;
            for (int i = 0; i < m; ++i)
                for (int j = i; j < m; ++j)
                    fixed.emplace_back(pos(t[2 * i], t[2 * j + 1]), eps);
            cover(fixed);
        }
    for (std::uint64_t code = 0; code < total; ++code)
        if (!covered[code])
            return static_cast<std::int64_t>(code);
    return -1;
}

}  // namespace oracle
