#pragma once

// Finite spaces with brute-force cardinal invariants, and abstract
// separation systems with the discrete-family extraction.

#include "pcw/partition.hpp"
#include "pcw/poset.hpp"

#include <optional>
#include <random>
#include <vector>

namespace pcw {

inline constexpr int kSpaceCap = 16;

/// Finite topology stored by minimal neighbourhoods: N(x) is the least open
/// set containing x, and the opens are exactly the unions of these.
class FiniteSpace {
public:
    /// The family must contain the empty set and the whole space and be
    /// closed under pairwise unions and intersections.
    static FiniteSpace from_opens(int n, const std::vector<Mask>& opens);
    /// Topology generated by the given sets.
    static FiniteSpace from_subbasis(int n, const std::vector<Mask>& subbasis);
    static FiniteSpace discrete(int n);
    static FiniteSpace indiscrete(int n);

    int size() const { return n_; }
    Mask all() const;
    Mask neighborhood(int x) const { return nbhd_.at(static_cast<std::size_t>(x)); }
    /// Distinct minimal neighbourhoods, ascending.
    std::vector<Mask> basis() const;
    bool is_open(Mask s) const;
    /// Every open set, ascending.
    std::vector<Mask> opens() const;

private:
    explicit FiniteSpace(int n) : n_(n) {}
    int n_ = 0;
    std::vector<Mask> nbhd_;
};

Mask closure(Mask s, const FiniteSpace& x);
bool is_discrete(Mask s, const FiniteSpace& x);
bool is_t1(const FiniteSpace& x);

int density(const FiniteSpace& x);
int spread(const FiniteSpace& x);

struct HLWitness {
    std::vector<int> points;
    std::vector<Mask> opens;
};

/// x_a in U_a and x_b not in U_a for a < b, of length L.
std::optional<HLWitness> hL_witness(const FiniteSpace& x, int L);

struct Invariants {
    int density = 0;
    int hd = 0;
    int hL = 0;
    int spread = 0;
    // sup of successors: max + 1 at this scale
    int hd_plus = 0;
    int hL_plus = 0;
    int spread_plus = 0;
};

Invariants invariants(const FiniteSpace& x);

FiniteSpace random_space(int n, std::mt19937_64& rng);

// ---------------------------------------------------------------- systems

enum class SeparationMode { density, lindelof };

const char* to_string(SeparationMode m);
SeparationMode mode_from_string(const std::string& s);

/// Points x_a of a carrier [0, carrier) with sets u1_a, u2_a. Closed sets are
/// the intersections of finite unions of the closed basis.
struct SeparationSystem {
    int carrier = 0;
    std::vector<Mask> closed_basis;
    std::vector<int> points;
    std::vector<Mask> u1, u2;

    Mask closure(Mask s) const;
    std::size_t size() const { return points.size(); }
};

/// Throws std::invalid_argument naming the first broken invariant.
void validate(const SeparationSystem& sys, SeparationMode mode);

/// density: c{a,b} = 1 iff x_b in u2_a; lindelof: iff x_a in u2_b (a < b).
Coloring coloring_from_system(const SeparationSystem& sys, SeparationMode mode);

struct DiscreteFamily {
    std::vector<int> points;
    std::vector<Mask> opens;
};

/// y_e in u3_e and y_z not in u3_e for z != e.
bool is_discrete_family(const DiscreteFamily& f);

/// Case 1 for mixed epsilon 0, Case 2 for epsilon 1 (pairs 2e, 2e+1). Throws
/// std::invalid_argument when cfg fails verification and std::logic_error
/// if the output is not discrete.
DiscreteFamily discrete_from_config(const SeparationSystem& sys, const HalfGraphConfig& cfg, SeparationMode mode);

/// Lindelof Case 2 with y_e = x_{alpha_2e}, u3_e = u2_{alpha_2e} minus
/// cl(u2_{beta_2e+1}); not checked, kept for comparison.
DiscreteFamily lindelof_alpha_even_pairing(const SeparationSystem& sys, const HalfGraphConfig& cfg);

/// Random valid system of n points over a line carrier of 3n points.
SeparationSystem random_system(SeparationMode mode, int n, std::mt19937_64& rng);

/// Nested rays on a carrier of 2n points; every pair gets color 1.
SeparationSystem nested_interval_system(SeparationMode mode, int n);

}  // namespace pcw
