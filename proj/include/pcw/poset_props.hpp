#pragma once

// Clause-by-clause property suite for the condition orders.

#include "pcw/poset.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pcw {

struct ClauseTally {
    std::string clause;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::optional<std::string> witness;  // first violation
};

struct PosetSuiteConfig {
    int enumeration_cap = kEnumerationCap;
    std::uint64_t pair_limit = std::uint64_t{1} << 21;  // above this, pairs are sampled too
    std::uint64_t samples = 100000;                     // per triple clause
    std::uint64_t seed = 1;
    std::size_t pool = 400;  // random base conditions when enumeration is infeasible
};

struct PosetSuiteReport {
    std::string mode;          // "exhaustive" or "sampled" for the condition universe
    std::string pair_mode;     // "exhaustive" or "sampled"
    std::uint64_t universe = 0;
    std::vector<ClauseTally> clauses;

    bool ok() const;
    const ClauseTally& at(const std::string& clause) const;
};

PosetSuiteReport run_poset_suite(const Poset& poset, const PosetSuiteConfig& cfg = {});

/// Grows a condition point by point in random order, keeping budgets.
Condition random_condition(const Poset& poset, std::mt19937_64& rng);
/// Random condition extending p (as a function), built the same way.
Condition random_extension(const Poset& poset, const Condition& p, std::mt19937_64& rng);

}  // namespace pcw
