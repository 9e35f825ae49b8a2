#pragma once

// Reasonable parameters y = (kappa, p_chain, u_chain), the sub-poset Q_y they
// carve out, and a bounded checker for the quadruple axioms.

#include "pcw/poset.hpp"
#include "pcw/poset_props.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pcw {

/// Which support decides membership in Q_y: supp_kappa (default) or supp_theta.
enum class Granularity { kappa, theta };

const char* to_string(Granularity g);
Granularity granularity_from_string(const std::string& s);

struct ReasonableParam {
    int kappa = 0;
    std::vector<Condition> p_chain;
    std::vector<Mask> u_chain;
};

/// Least level strictly above kappa.
int theta_of(int kappa, const ParamSet& p);

/// Throws std::invalid_argument naming the first broken requirement.
void validate_reasonable(const ReasonableParam& y, const Poset& poset);

inline constexpr std::size_t kMaxSubposetMembers = 4096;

class SubPoset {
public:
    SubPoset(const Poset& poset, ReasonableParam y, Granularity g = Granularity::kappa,
             std::size_t member_cap = kMaxSubposetMembers);

    const Poset& poset() const { return poset_; }
    const ReasonableParam& param() const { return y_; }
    Granularity granularity() const { return g_; }
    int kappa() const { return y_.kappa; }
    int theta() const { return theta_; }

    bool contains(const Condition& q) const;
    /// Least witnessing index, or nullopt outside Q_y.
    std::optional<std::size_t> alpha_of(const Condition& q) const;
    /// Throws std::invalid_argument outside Q_y.
    std::size_t alpha(const Condition& q) const;
    /// Apure extensions of q inside the support q already has over its base.
    std::vector<Condition> ap(const Condition& q) const;

    bool le(const Condition& a, const Condition& b) const;
    bool le_pr(const Condition& a, const Condition& b) const;

    /// Every member of Q_y in ascending order.
    const std::vector<Condition>& members() const { return members_; }

    /// s = q u r for p <=pr_y r and q in ap_y(p); postconditions are checked
    /// and a failure throws std::logic_error.
    Condition pure_mix(const Condition& p, const Condition& r, const Condition& q) const;

private:
    bool witnessed_at(std::size_t a, const Condition& q) const;

    const Poset& poset_;
    ReasonableParam y_;
    Granularity g_;
    int theta_ = 0;
    std::vector<Condition> members_;
};

enum class ClauseStatus { verified, violated, bounded_skip };

const char* to_string(ClauseStatus s);

struct ClauseResult {
    ClauseStatus status = ClauseStatus::verified;
    std::uint64_t checked = 0;
    std::string detail;  // witness on violation, scope otherwise
};

struct QuadrupleBudget {
    std::size_t max_chain = 6;
    std::uint64_t max_chains = 200000;
};

struct QuadrupleReport {
    std::string granularity;
    std::size_t members = 0;
    std::map<std::string, ClauseResult> clauses;  // "a" .. "j"

    /// No clause is violated.
    bool ok() const;
    /// Listed clauses are all verified.
    bool verified(std::initializer_list<const char*> which) const;
};

QuadrupleReport check_quadruple_axioms(const SubPoset& q, const QuadrupleBudget& budget = {});

/// Tallies for the support, index and mixing observations ("0", "0A", "1", "2", "3").
std::vector<ClauseTally> check_observations(const SubPoset& q);

/// A random reasonable parameter whose u-sets always hold a full kappa-class
/// of the current base, so Q_y is not just the chain itself.
ReasonableParam random_reasonable(const Poset& poset, int kappa, std::size_t length, std::mt19937_64& rng);

}  // namespace pcw
