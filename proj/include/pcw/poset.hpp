#pragma once

// Conditions (budgeted partial 0/1 maps on [0, mu)) and their three orders.

#include "pcw/core.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcw {

using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;
inline constexpr int kEnumerationCap = 12;

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }
Mask mask_of(const IntSet& s);
IntSet set_of(Mask m);

/// Partial function from [0, 64) to {0,1}; `values` only has bits inside `domain`.
struct Condition {
    Mask domain = 0;
    Mask values = 0;

    static Condition from_pairs(const std::vector<std::pair<int, int>>& pairs);

    bool empty() const { return domain == 0; }
    int size() const { return popcount(domain); }
    bool defined(int i) const { return domain >> i & 1; }
    int at(int i) const { return static_cast<int>(values >> i & 1); }

    /// q extends *this as a function.
    bool subset_of(const Condition& q) const;
    bool compatible(const Condition& q) const;
    Condition restricted(Mask keep) const;
    /// Throws std::invalid_argument when the two disagree somewhere.
    Condition united(const Condition& q) const;

    std::vector<std::pair<int, int>> pairs() const;
    std::string to_string() const;

    friend bool operator==(const Condition&, const Condition&) = default;
    friend auto operator<=>(const Condition&, const Condition&) = default;
};

/// For each level, the indices of the blocks of that width growing from p to q.
using GrowthProfile = std::map<int, std::vector<int>>;

struct UnionReport {
    std::optional<Condition> result;
    std::optional<int> clash;       // a point two parts disagree on
    std::optional<Block> overfull;  // a class whose budget the union breaks
    bool upper_bound = false;       // every part is <= the union
};

struct Decomposition {
    Condition r;  // p <=pr r <=ap q
    Condition s;  // p <=ap s <=pr q
};

struct WitnessPair {
    Condition q;  // p1 <=pr q
    Condition t;  // p2 <=ap t
};

class Poset {
public:
    /// Requires well-formed levels and mu <= 64.
    explicit Poset(ParamSet params);

    const ParamSet& params() const { return params_; }
    int mu() const { return params_.mu; }

    Mask block_mask(int kappa, int index) const;
    Mask class_mask(int i, int kappa) const;
    /// Union of the kappa-blocks meeting `points`.
    Mask classes_of(int kappa, Mask points) const;
    /// Union of the kappa-blocks lying inside `region`.
    Mask blocks_inside(int kappa, Mask region) const;

    bool is_condition(const Condition& f) const;
    std::optional<Block> first_overfull(const Condition& f) const;

    /// Throws std::invalid_argument unless p is a subset of q.
    GrowthProfile growth_profile(const Condition& p, const Condition& q) const;
    /// Number of kappa-blocks growing from p to q; p must be a subset of q.
    int growth_count(int kappa, const Condition& p, const Condition& q) const;
    Mask growing_blocks(int kappa, const Condition& p, const Condition& q) const;

    bool le(const Condition& p, const Condition& q) const;
    bool le_pr(int kappa, const Condition& p, const Condition& q) const;
    bool le_ap(int kappa, const Condition& p, const Condition& q) const;

    /// Union of the kappa-blocks of points new in q. Throws unless p is a subset of q.
    Mask supp(int kappa, const Condition& p, const Condition& q) const;

    UnionReport union_lub(const std::vector<Condition>& parts) const;

    /// Requires le(p, q). Postconditions are checked; a failure throws std::logic_error.
    Decomposition decompose(int kappa, const Condition& p, const Condition& q) const;
    /// Requires le(p1, r) and le(p2, r). Postconditions are checked as above.
    WitnessPair witness_pair(int kappa, const Condition& p1, const Condition& p2,
                             const Condition& r) const;

    /// Every condition, ordered by (sorted domain, value vector) lexicographically.
    std::vector<Condition> enumerate_conditions(int cap = kEnumerationCap) const;
    /// Every condition q extending p with the new points inside `region`, same order.
    std::vector<Condition> extensions_within(const Condition& p, Mask region) const;

private:
    void require_level(int kappa) const;
    void require_points(const Condition& f) const;
    void require_subset(const Condition& p, const Condition& q, const char* who) const;

    ParamSet params_;
    std::map<int, std::vector<Mask>> blocks_;
};

}  // namespace pcw
