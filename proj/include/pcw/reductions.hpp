#pragma once

// Doubled colorings from lexicographic labels, and the two extractions built
// on a vertex set where the doubled coloring takes at most two values.

#include "pcw/core.hpp"
#include "pcw/partition.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcw {

struct LabeledColoring {
    Coloring c;
    std::vector<BinaryString> labels;  // one per vertex, distinct, equal length
};

/// Throws std::invalid_argument on a label count mismatch, unequal lengths
/// or repeated labels.
void validate(const LabeledColoring& lc);

/// d{a,b} = 2 c{a,b} + [label(a) <lex label(b)] for a < b; 2 * colors colors.
Coloring build_d(const LabeledColoring& lc);

/// Sorted distinct values of d on pairs from U.
std::vector<int> values_on(const Coloring& d, const std::vector<int>& U);

/// Thrown when an extraction cannot proceed. `kind` is "hypothesis",
/// "too-small", "no-split" or "no-increasing".
class ReductionError : public std::runtime_error {
public:
    ReductionError(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// A mixed-variant config for c, built from U as in the prefix-split argument.
HalfGraphConfig extract_polarized(const LabeledColoring& lc, std::vector<int> U, int m);

struct RamseyExtraction {
    std::vector<int> vertices;  // index-increasing and label-increasing
    std::optional<int> color;   // nullopt when fewer than two vertices
    std::size_t longest = 0;    // longest lex-increasing run found in U
};

RamseyExtraction extract_ramsey(const LabeledColoring& lc, std::vector<int> U, int g);

/// On U: if the labels run both up and down somewhere, d has two values of
/// different parity or is constant. Vacuously true otherwise.
bool sierpinski_exclusion_holds(const LabeledColoring& lc, const std::vector<int>& U);

struct ReductionInstance {
    LabeledColoring lc;
    std::vector<int> U;
    int m = 1;  // target for extract_polarized
    int g = 1;  // target for extract_ramsey
};

/// Random coloring and labels with a vertex set U on which d takes at most
/// two values by construction; U interleaves two prefix groups unless the
/// instance is monotone.
ReductionInstance random_reduction_instance(std::mt19937_64& rng);

}  // namespace pcw
