#pragma once

// Finite-surrogate cardinal parameters: levels, budgets, block geometry,
// the delta-system finder and lexicographic utilities on binary strings.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pcw {

using IntSet = std::set<int>;

/// Finite parameter set: ground set [0, mu), levels Theta and per-level budgets.
struct ParamSet {
    int lambda = 0;
    int mu = 0;
    std::vector<int> theta_list;
    std::map<int, int> budgets;

    bool is_level(int kappa) const;
    int budget(int kappa) const;  // throws std::out_of_range for non-levels

    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

struct Violation {
    std::string clause;   // clause letter of the hypothesis, e.g. "c.delta"
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool violates(std::string_view clause) const;
};

/// Lists every violated clause; an empty report means the set is valid.
ValidationReport validate_params(const ParamSet& p);

/// Throws std::invalid_argument unless the block geometry is usable: levels
/// strictly increasing, nested by divisibility, ending at mu, with budgets.
void require_well_formed(const ParamSet& p);

/// Throws std::invalid_argument when validate_params reports anything.
void require_valid(const ParamSet& p);

/// An equivalence class of E_width: the interval [width*index, width*(index+1)).
struct Block {
    int width = 0;
    int index = 0;

    int begin() const { return width * index; }
    int end() const { return width * (index + 1); }
    bool contains(int i) const { return i >= begin() && i < end(); }
    IntSet elements() const;

    friend bool operator==(const Block&, const Block&) = default;
    friend auto operator<=>(const Block&, const Block&) = default;
};

Block class_of(int i, int kappa, const ParamSet& p);

/// Least level at which i and j share a block.
int kappa_of(int i, int j, const ParamSet& p);

/// min of budgets strictly above kappa; mu when kappa == mu.
int partial_sup(int kappa, const ParamSet& p);

/// Largest level strictly below kappa, or nullopt when E_{<kappa} is equality.
std::optional<int> level_below(int kappa, const ParamSet& p);

/// A block grows from A to B when it meets A and its trace changes.
/// Throws std::invalid_argument unless A is a subset of B.
bool grows(const Block& block, const IntSet& a, const IntSet& b);

struct OmegaReport {
    std::vector<int> omega;
    std::vector<int> omega_prime;    // always empty for finite level sets
    bool omega_prime_vacuous = true;  // no level set below a level lacks a maximum
};

/// Levels in (lambda, mu] not covered by any [budget_k, partial_sup_k].
/// Requires a valid ParamSet.
OmegaReport omega_set(const ParamSet& p);

struct DeltaSystem {
    IntSet kernel;
    std::vector<std::size_t> indices;
};

inline constexpr std::size_t kExhaustiveDeltaLimit = 20;

/// Finds at least `target` sets with pairwise intersections all equal to a
/// common kernel. Exhaustive up to kExhaustiveDeltaLimit sets, greedy above.
std::optional<DeltaSystem> find_delta_system(const std::vector<IntSet>& sets,
                                             std::size_t target);

/// Finite 0/1 sequence.
class BinaryString {
public:
    BinaryString() = default;
    explicit BinaryString(std::string_view text);  // throws on non-0/1 characters

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int operator[](std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }
    const std::string& text() const { return bits_; }

    bool is_prefix_of(const BinaryString& other) const;
    BinaryString prefix(std::size_t len) const;
    BinaryString extended(int bit) const;

    friend bool operator==(const BinaryString&, const BinaryString&) = default;
    friend auto operator<=>(const BinaryString&, const BinaryString&) = default;

private:
    std::string bits_;
};

enum class LexOrder { less, greater, prefix, equal };

const char* to_string(LexOrder o);

LexOrder lex_compare(const BinaryString& a, const BinaryString& b);

/// True iff a and b are incomparable under the prefix order and a comes first.
bool lex_less(const BinaryString& a, const BinaryString& b);

/// A pair of prefix-incomparable prefixes (nu0 lex-before nu1), each a prefix
/// of at least ceil(|strings| / threshold) inputs. Shallowest split wins.
std::optional<std::pair<BinaryString, BinaryString>> find_incomparable_pair(
    const std::vector<BinaryString>& strings, int threshold = 2);

/// Every sibling split (w0, w1) of the prefix tree, shallowest first.
std::vector<std::pair<BinaryString, BinaryString>> sibling_splits(
    const std::vector<BinaryString>& strings);

/// Longest index-increasing subsequence with strictly lex-increasing labels.
/// Throws std::invalid_argument on duplicates or prefix-comparable labels.
std::vector<std::size_t> longest_lex_increasing(const std::vector<BinaryString>& strings);

}  // namespace pcw
