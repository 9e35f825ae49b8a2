#include "pcw/poset.hpp"

#include <sstream>
#include <stdexcept>

namespace pcw {

Mask mask_of(const IntSet& s) {
    Mask m = 0;
    for (int x : s) {
        if (x < 0 || x >= kMaxGround)
            throw std::out_of_range("point " + std::to_string(x) + " outside [0, 64)");
        m |= bit(x);
    }
    return m;
}

IntSet set_of(Mask m) {
    IntSet s;
    for (; m; m &= m - 1)
        s.insert(__builtin_ctzll(m));
    return s;
}

// ---------------------------------------------------------------- Condition

Condition Condition::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    Condition c;
    for (auto [i, v] : pairs) {
        if (i < 0 || i >= kMaxGround)
            throw std::out_of_range("point " + std::to_string(i) + " outside [0, 64)");
        if (v != 0 && v != 1)
            throw std::invalid_argument("condition values must be 0 or 1");
        if (c.defined(i) && c.at(i) != v)
            throw std::invalid_argument("point " + std::to_string(i) + " assigned twice");
        c.domain |= bit(i);
        if (v)
            c.values |= bit(i);
    }
    return c;
}

bool Condition::subset_of(const Condition& q) const {
    return (domain & ~q.domain) == 0 && ((values ^ q.values) & domain) == 0;
}

bool Condition::compatible(const Condition& q) const {
    return ((values ^ q.values) & domain & q.domain) == 0;
}

Condition Condition::restricted(Mask keep) const {
    return Condition{domain & keep, values & keep};
}

Condition Condition::united(const Condition& q) const {
    if (!compatible(q))
        throw std::invalid_argument("union of incompatible conditions");
    return Condition{domain | q.domain, values | q.values};
}

std::vector<std::pair<int, int>> Condition::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i : set_of(domain))
        out.emplace_back(i, at(i));
    return out;
}

std::string Condition::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto [i, v] : pairs()) {
        os << (first ? "" : ",") << i << ':' << v;
        first = false;
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------- Poset

Poset::Poset(ParamSet params) : params_(std::move(params)) {
    require_well_formed(params_);
    if (params_.mu > kMaxGround)
        throw std::invalid_argument("mu above 64 is not supported");
    for (int t : params_.theta_list) {
        auto& v = blocks_[t];
        for (int b = 0; b < params_.mu / t; ++b) {
            Mask m = 0;
            for (int i = b * t; i < (b + 1) * t; ++i)
                m |= bit(i);
            v.push_back(m);
        }
    }
}

void Poset::require_level(int kappa) const {
    if (!params_.is_level(kappa))
        throw std::invalid_argument(std::to_string(kappa) + " is not a level");
}

void Poset::require_points(const Condition& f) const {
    if (params_.mu < kMaxGround && (f.domain >> params_.mu) != 0)
        throw std::out_of_range("condition has a point outside [0, mu)");
}

void Poset::require_subset(const Condition& p, const Condition& q, const char* who) const {
    if (!p.subset_of(q))
        throw std::invalid_argument(std::string(who) + ": p is not a subset of q");
}

Mask Poset::block_mask(int kappa, int index) const {
    require_level(kappa);
    return blocks_.at(kappa).at(static_cast<std::size_t>(index));
}

Mask Poset::class_mask(int i, int kappa) const {
    require_level(kappa);
    if (i < 0 || i >= params_.mu)
        throw std::out_of_range("point outside [0, mu)");
    return blocks_.at(kappa)[static_cast<std::size_t>(i / kappa)];
}

Mask Poset::classes_of(int kappa, Mask points) const {
    require_level(kappa);
    Mask out = 0;
    for (Mask b : blocks_.at(kappa))
        if (b & points)
            out |= b;
    return out;
}

Mask Poset::blocks_inside(int kappa, Mask region) const {
    require_level(kappa);
    Mask out = 0;
    for (Mask b : blocks_.at(kappa))
        if ((b & ~region) == 0)
            out |= b;
    return out;
}

std::optional<Block> Poset::first_overfull(const Condition& f) const {
    require_points(f);
    for (int t : params_.theta_list) {
        const int cap = params_.budget(t);
        const auto& bl = blocks_.at(t);
        for (std::size_t b = 0; b < bl.size(); ++b)
            if (popcount(bl[b] & f.domain) >= cap)
                return Block{t, static_cast<int>(b)};
    }
    return std::nullopt;
}

bool Poset::is_condition(const Condition& f) const {
    return !first_overfull(f).has_value();
}

Mask Poset::growing_blocks(int kappa, const Condition& p, const Condition& q) const {
    require_level(kappa);
    require_subset(p, q, "growing_blocks");
    const Mask fresh = q.domain & ~p.domain;
    Mask out = 0;
    for (Mask b : blocks_.at(kappa))
        if ((b & p.domain) && (b & fresh))
            out |= b;
    return out;
}

int Poset::growth_count(int kappa, const Condition& p, const Condition& q) const {
    return popcount(growing_blocks(kappa, p, q)) / kappa;
}

GrowthProfile Poset::growth_profile(const Condition& p, const Condition& q) const {
    require_subset(p, q, "growth_profile");
    GrowthProfile g;
    for (int t : params_.theta_list) {
        auto& v = g[t];
        const Mask grown = growing_blocks(t, p, q);
        const auto& bl = blocks_.at(t);
        for (std::size_t b = 0; b < bl.size(); ++b)
            if (bl[b] & grown)
                v.push_back(static_cast<int>(b));
    }
    return g;
}

bool Poset::le(const Condition& p, const Condition& q) const {
    if (!p.subset_of(q))
        return false;
    for (int t : params_.theta_list)
        if (growth_count(t, p, q) >= params_.budget(t))
            return false;
    return true;
}

bool Poset::le_pr(int kappa, const Condition& p, const Condition& q) const {
    require_level(kappa);
    if (kappa == params_.mu)
        return p == q;
    return le(p, q) && growing_blocks(kappa, p, q) == 0;
}

bool Poset::le_ap(int kappa, const Condition& p, const Condition& q) const {
    require_level(kappa);
    if (!le(p, q))
        return false;
    if (kappa == params_.mu)
        return true;
    return classes_of(kappa, p.domain) == classes_of(kappa, q.domain);
}

Mask Poset::supp(int kappa, const Condition& p, const Condition& q) const {
    require_subset(p, q, "supp");
    return classes_of(kappa, q.domain & ~p.domain);
}

UnionReport Poset::union_lub(const std::vector<Condition>& parts) const {
    UnionReport rep;
    Condition acc;
    for (const Condition& c : parts) {
        require_points(c);
        const Mask clash = (acc.values ^ c.values) & acc.domain & c.domain;
        if (clash) {
            rep.clash = __builtin_ctzll(clash);
            return rep;
        }
        acc = acc.united(c);
    }
    rep.overfull = first_overfull(acc);
    if (rep.overfull)
        return rep;
    rep.result = acc;
    rep.upper_bound = true;
    for (const Condition& c : parts)
        rep.upper_bound = rep.upper_bound && le(c, acc);
    return rep;
}

namespace {

void ensure(bool ok, const char* what) {
    if (!ok)
        throw std::logic_error(what);
}

}  // namespace

Decomposition Poset::decompose(int kappa, const Condition& p, const Condition& q) const {
    require_level(kappa);
    if (!le(p, q))
        throw std::invalid_argument("decompose: p is not below q");
    Decomposition d;
    if (kappa == params_.mu) {
        d.r = p;
        d.s = q;
    } else {
        const Mask old = classes_of(kappa, p.domain);
        d.s = p.united(q.restricted(old));
        d.r = p.united(q.restricted(~old));
    }
    ensure(le_pr(kappa, p, d.r), "decompose: p <=pr r failed");
    ensure(le_ap(kappa, d.r, q), "decompose: r <=ap q failed");
    ensure(le_ap(kappa, p, d.s), "decompose: p <=ap s failed");
    ensure(le_pr(kappa, d.s, q), "decompose: s <=pr q failed");
    ensure(d.r.united(d.s) == q, "decompose: r and s do not cover q");
    ensure(le(d.r, q) && le(d.s, q), "decompose: q is not an upper bound");
    return d;
}

WitnessPair Poset::witness_pair(int kappa, const Condition& p1, const Condition& p2,
                                const Condition& r) const {
    require_level(kappa);
    if (!le(p1, r) || !le(p2, r))
        throw std::invalid_argument("witness_pair: r is not above both p1 and p2");
    WitnessPair w;
    if (kappa == params_.mu) {
        w.q = p1;
        w.t = r;
    } else {
        w.t = p2.united(r.restricted(growing_blocks(kappa, p2, r)));
        w.q = p1.united(r.restricted(~growing_blocks(kappa, p1, r)));
    }
    ensure(le_pr(kappa, p1, w.q), "witness_pair: p1 <=pr q failed");
    ensure(le_ap(kappa, p2, w.t), "witness_pair: p2 <=ap t failed");
    ensure(w.q.compatible(w.t) && is_condition(w.q.united(w.t)), "witness_pair: q and t are incompatible");
    ensure(p1.subset_of(w.q), "witness_pair: q does not extend p1");
    return w;
}

namespace {

// Appends every value assignment on the points of `fresh` (first point most
// significant) on top of `base`.
void emit_values(const Condition& base, Mask fresh, std::vector<Condition>& out) {
    std::vector<int> pts;
    for (Mask m = fresh; m; m &= m - 1)
        pts.push_back(__builtin_ctzll(m));
    const std::size_t k = pts.size();
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
        Condition c{base.domain | fresh, base.values};
        for (std::size_t j = 0; j < k; ++j)
            if (v >> (k - 1 - j) & 1)
                c.values |= bit(pts[j]);
        out.push_back(c);
    }
}

}  // namespace

std::vector<Condition> Poset::extensions_within(const Condition& p, Mask region) const {
    require_points(p);
    if (!is_condition(p))
        throw std::invalid_argument("extensions_within: base is not a condition");
    region &= ~p.domain;
    if (params_.mu < kMaxGround)
        region &= bit(params_.mu) - 1;
    std::vector<int> pts;
    for (Mask m = region; m; m &= m - 1)
        pts.push_back(__builtin_ctzll(m));

    std::vector<Condition> out;
    // Depth-first over added point lists in lexicographic order.
    auto dfs = [&](auto&& self, std::size_t from, Mask added) -> void {
        emit_values(p, added, out);
        for (std::size_t k = from; k < pts.size(); ++k) {
            const Mask next = added | bit(pts[k]);
            if (is_condition(Condition{p.domain | next, p.values}))
                self(self, k + 1, next);
        }
    };
    dfs(dfs, 0, 0);
    return out;
}

std::vector<Condition> Poset::enumerate_conditions(int cap) const {
    if (params_.mu > cap)
        throw std::length_error("mu " + std::to_string(params_.mu) + " exceeds the enumeration cap " +
                                std::to_string(cap));
    const Mask all = params_.mu == kMaxGround ? ~Mask{0} : bit(params_.mu) - 1;
    std::vector<Condition> out;
    if (!is_condition(Condition{}))
        return out;
    return extensions_within(Condition{}, all);
}

}  // namespace pcw
