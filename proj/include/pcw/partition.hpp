#pragma once

// Half-graph partition relations on tiny vertex sets: colorings, configs,
// exhaustive and sampled relation checks, and the rectangle check.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace pcw {

enum class Variant { plain, mixed };

const char* to_string(Variant v);
Variant variant_from_string(const std::string& s);

/// Coloring of the unordered pairs of [0, n); pairs are stored in
/// lexicographic order (0,1), (0,2), ..., (n-2,n-1).
struct Coloring {
    int n = 0;
    int colors = 1;
    std::vector<std::uint8_t> table;

    Coloring() = default;
    Coloring(int n, int colors, int fill = 0);

    static std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2; }
    std::size_t index(int i, int j) const;
    int at(int i, int j) const { return table[index(i, j)]; }
    void set(int i, int j, int c);

    bool operator==(const Coloring&) const = default;
};

/// Throws std::invalid_argument on a wrong table size or an out-of-range color.
void validate(const Coloring& c);

/// colors^C(n,2), or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> coloring_count(int n, int colors, std::uint64_t cap);
/// The idx-th coloring: a base-`colors` counter with the last pair least significant.
Coloring coloring_from_index(int n, int colors, std::uint64_t idx);
Coloring random_coloring(int n, int colors, std::mt19937_64& rng);

struct HalfGraphConfig {
    Variant variant = Variant::plain;
    int epsilon = 0;
    std::vector<int> alphas;
    std::vector<int> betas;  // empty for mixed with epsilon 0

    bool operator==(const HalfGraphConfig&) const = default;
};

/// Interleaving plus the variant's color clauses. Throws std::invalid_argument
/// on malformed input (indices out of range, wrong list sizes, bad epsilon).
bool verify_config(const Coloring& c, const HalfGraphConfig& cfg);

/// First config in (epsilon, interleaved tuple) lexicographic order, if any.
std::optional<HalfGraphConfig> find_config(const Coloring& c, int m, Variant v);

/// Some m-set is monochromatic.
bool has_monochromatic(const Coloring& c, int m);
/// Some setsize-set sees at most `bound` colors.
bool has_few_colored(const Coloring& c, int setsize, int bound);

inline constexpr std::uint64_t kDefaultColoringCap = std::uint64_t{1} << 25;

struct SearchOptions {
    std::uint64_t cap = kDefaultColoringCap;
    bool sampled = false;  // required once the space exceeds cap
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
};

struct RelationResult {
    bool holds = true;
    std::optional<Coloring> counterexample;  // least in enumeration (or sample) order
    std::string mode;                        // "exhaustive" or "sampled"
    std::uint64_t checked = 0;
    std::uint64_t space = 0;  // colorings in the exhaustive space, 0 when sampled
};

using ColoringPredicate = std::function<bool(const Coloring&)>;

/// Searches for the least coloring failing `good`. OpenMP-parallel; the
/// result does not depend on the thread count. Throws std::length_error
/// when the space exceeds the cap and sampling is off.
RelationResult search_colorings(int n, int colors, const ColoringPredicate& good, const SearchOptions& opt = {});

RelationResult relation_holds(int n, int m, int colors, Variant v, const SearchOptions& opt = {});
/// Every m' < m (the "below m" reading).
RelationResult relation_holds_below(int n, int m, int colors, Variant v, const SearchOptions& opt = {});
RelationResult ramsey_holds(int n, int m, int colors, const SearchOptions& opt = {});
RelationResult square_bracket_holds(int n, int setsize, int colors, int bound = 2, const SearchOptions& opt = {});

namespace serial {
// Single-threaded references with identical results.
RelationResult search_colorings(int n, int colors, const ColoringPredicate& good, const SearchOptions& opt = {});
RelationResult relation_holds(int n, int m, int colors, Variant v, const SearchOptions& opt = {});
RelationResult ramsey_holds(int n, int m, int colors, const SearchOptions& opt = {});
RelationResult square_bracket_holds(int n, int setsize, int colors, int bound = 2, const SearchOptions& opt = {});
}  // namespace serial

struct RelationEntry {
    int n = 0, m = 0, colors = 0;
    Variant variant = Variant::plain;
    bool holds = false;
};

/// Exhaustive table over 1 <= n <= n_max, 1 <= m <= m_max, 1 <= colors <= colors_max.
std::vector<RelationEntry> relation_table(int n_max, int m_max, int colors_max, Variant v,
                                          const SearchOptions& opt = {});
/// Pairs (e1, e2) of the table with e1 true, n2 >= n1, m2 <= m1, colors2 <= colors1 and e2 false.
std::vector<std::pair<RelationEntry, RelationEntry>> monotonicity_violations(const std::vector<RelationEntry>& table);

/// find_config(c, m_mixed, mixed) implies find_config(c, m_plain, plain).
bool mixed_implies_plain(const Coloring& c, int m_mixed, int m_plain);

using Rectangle = std::vector<std::vector<int>>;  // rows x cols

/// xi rows and xi columns on which the rectangle is constant, if any; the
/// first such pair in lexicographic row-set order, then least columns.
std::optional<std::pair<std::vector<int>, std::vector<int>>> polarized_11_check(const Rectangle& rect, int xi);

}  // namespace pcw
