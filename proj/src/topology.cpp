#include "pcw/topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace pcw {

namespace {

Mask full(int n) {
    return n >= 64 ? ~Mask{0} : bit(n) - 1;
}

void require_cap(int n) {
    if (n < 0 || n > kSpaceCap)
        throw std::length_error("finite spaces are limited to " + std::to_string(kSpaceCap) + " points");
}

}  // namespace

// ---------------------------------------------------------------- FiniteSpace

Mask FiniteSpace::all() const {
    return full(n_);
}

FiniteSpace FiniteSpace::from_opens(int n, const std::vector<Mask>& opens) {
    require_cap(n);
    const Mask whole = full(n);
    std::set<Mask> fam(opens.begin(), opens.end());
    for (Mask u : fam)
        if (u & ~whole)
            throw std::invalid_argument("open set leaves the point set");
    if (!fam.count(0) || !fam.count(whole))
        throw std::invalid_argument("opens must contain the empty set and the whole space");
    for (Mask a : fam)
        for (Mask b : fam)
            if (!fam.count(a | b) || !fam.count(a & b))
                throw std::invalid_argument("opens are not closed under union and intersection");
    FiniteSpace x(n);
    for (int p = 0; p < n; ++p) {
        Mask nb = whole;
        for (Mask u : fam)
            if (u & bit(p))
                nb &= u;
        x.nbhd_.push_back(nb);
    }
    return x;
}

FiniteSpace FiniteSpace::from_subbasis(int n, const std::vector<Mask>& subbasis) {
    require_cap(n);
    const Mask whole = full(n);
    FiniteSpace x(n);
    for (int p = 0; p < n; ++p) {
        Mask nb = whole;
        for (Mask u : subbasis) {
            if (u & ~whole)
                throw std::invalid_argument("subbasis set leaves the point set");
            if (u & bit(p))
                nb &= u;
        }
        x.nbhd_.push_back(nb);
    }
    return x;
}

FiniteSpace FiniteSpace::discrete(int n) {
    std::vector<Mask> sub;
    for (int p = 0; p < n; ++p)
        sub.push_back(bit(p));
    return from_subbasis(n, sub);
}

FiniteSpace FiniteSpace::indiscrete(int n) {
    return from_subbasis(n, {});
}

std::vector<Mask> FiniteSpace::basis() const {
    std::set<Mask> s(nbhd_.begin(), nbhd_.end());
    return {s.begin(), s.end()};
}

bool FiniteSpace::is_open(Mask s) const {
    if (s & ~all())
        return false;
    Mask u = 0;
    for (Mask m = s; m; m &= m - 1)
        u |= nbhd_[__builtin_ctzll(m)];
    return u == s;
}

std::vector<Mask> FiniteSpace::opens() const {
    std::vector<Mask> out;
    for (Mask s = 0; s <= all(); ++s)
        if (is_open(s))
            out.push_back(s);
    return out;
}

Mask closure(Mask s, const FiniteSpace& x) {
    if (s & ~x.all())
        throw std::invalid_argument("closure of a set outside the space");
    Mask out = 0;
    for (int p = 0; p < x.size(); ++p)
        if (x.neighborhood(p) & s)
            out |= bit(p);
    return out;
}

bool is_discrete(Mask s, const FiniteSpace& x) {
    if (s & ~x.all())
        throw std::invalid_argument("subset outside the space");
    for (Mask m = s; m; m &= m - 1) {
        const int p = __builtin_ctzll(m);
        if ((x.neighborhood(p) & s) != bit(p))
            return false;
    }
    return true;
}

bool is_t1(const FiniteSpace& x) {
    for (int p = 0; p < x.size(); ++p)
        if (x.neighborhood(p) != bit(p))
            return false;
    return true;
}

int density(const FiniteSpace& x) {
    int best = x.size();
    for (Mask s = 0; s <= x.all(); ++s)
        if (popcount(s) < best && closure(s, x) == x.all())
            best = popcount(s);
    return best;
}

int spread(const FiniteSpace& x) {
    int best = 0;
    for (Mask s = 0; s <= x.all(); ++s)
        if (popcount(s) > best && is_discrete(s, x))
            best = popcount(s);
    return best;
}

namespace {

// Sets of points that can be ordered into a right-separated sequence with
// minimal neighbourhoods: x may follow S when x lies in no N(s), s in S.
// parent[mask] is the last point added, -1 if unreachable.
std::vector<int> right_separated(const FiniteSpace& x) {
    std::vector<int> last(static_cast<std::size_t>(x.all()) + 1, -1);
    last[0] = x.size();
    for (Mask s = 0; s <= x.all(); ++s) {
        if (last[s] < 0)
            continue;
        Mask banned = s;
        for (Mask m = s; m; m &= m - 1)
            banned |= x.neighborhood(__builtin_ctzll(m));
        for (int p = 0; p < x.size(); ++p)
            if (!(banned & bit(p)) && last[s | bit(p)] < 0)
                last[s | bit(p)] = p;
    }
    return last;
}

int subspace_density(const FiniteSpace& x, Mask y) {
    std::set<Mask> minimal;
    for (Mask m = y; m; m &= m - 1) {
        const Mask ny = x.neighborhood(__builtin_ctzll(m)) & y;
        bool least = true;
        for (Mask k = y; k && least; k &= k - 1) {
            const Mask nz = x.neighborhood(__builtin_ctzll(k)) & y;
            least = !((nz & ~ny) == 0 && nz != ny);
        }
        if (least)
            minimal.insert(ny);
    }
    // distinct minimal neighbourhoods are disjoint, so a dense set needs one point from each
    return static_cast<int>(minimal.size());
}

}  // namespace

std::optional<HLWitness> hL_witness(const FiniteSpace& x, int L) {
    if (L < 0 || L > x.size())
        return std::nullopt;
    const auto last = right_separated(x);
    for (Mask s = 0; s <= x.all(); ++s) {
        if (popcount(s) != L || last[s] < 0)
            continue;
        HLWitness w;
        for (Mask m = s; m;) {
            const int p = last[m];
            w.points.push_back(p);
            m &= ~bit(p);
        }
        std::reverse(w.points.begin(), w.points.end());
        for (int p : w.points)
            w.opens.push_back(x.neighborhood(p));
        return w;
    }
    return std::nullopt;
}

Invariants invariants(const FiniteSpace& x) {
    Invariants inv;
    inv.density = density(x);
    inv.spread = spread(x);
    const auto last = right_separated(x);
    for (Mask s = 0; s <= x.all(); ++s) {
        if (last[s] >= 0)
            inv.hL = std::max(inv.hL, popcount(s));
        if (s)
            inv.hd = std::max(inv.hd, subspace_density(x, s));
    }
    inv.hd_plus = inv.hd + 1;
    inv.hL_plus = inv.hL + 1;
    inv.spread_plus = inv.spread + 1;
    return inv;
}

FiniteSpace random_space(int n, std::mt19937_64& rng) {
    require_cap(n);
    std::vector<Mask> sub;
    const int k = n + static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
    for (int i = 0; i < k; ++i) {
        Mask u = 0;
        for (int p = 0; p < n; ++p)
            if (rng() % 3 == 0)
                u |= bit(p);
        sub.push_back(u);
    }
    return FiniteSpace::from_subbasis(n, sub);
}

// ---------------------------------------------------------------- systems

const char* to_string(SeparationMode m) {
    return m == SeparationMode::density ? "density" : "lindelof";
}

SeparationMode mode_from_string(const std::string& s) {
    if (s == "density")
        return SeparationMode::density;
    if (s == "lindelof")
        return SeparationMode::lindelof;
    throw std::invalid_argument("mode must be density or lindelof, got " + s);
}

Mask SeparationSystem::closure(Mask s) const {
    const Mask whole = full(carrier);
    if (s == 0)
        return 0;
    Mask out = 0;
    for (int p = 0; p < carrier; ++p) {
        Mask avoid = 0;
        for (Mask b : closed_basis)
            if (!(b & bit(p)))
                avoid |= b;
        if (s & ~avoid)
            out |= bit(p);
    }
    return out & whole;
}

void validate(const SeparationSystem& sys, SeparationMode mode) {
    if (sys.carrier < 1 || sys.carrier > kMaxGround)
        throw std::invalid_argument("carrier must have 1 to 64 points");
    const Mask whole = full(sys.carrier);
    const std::size_t n = sys.points.size();
    if (sys.u1.size() != n || sys.u2.size() != n)
        throw std::invalid_argument("u1 and u2 need one set per point");
    for (Mask b : sys.closed_basis)
        if (b & ~whole)
            throw std::invalid_argument("closed basis set leaves the carrier");
    Mask seen = 0;
    for (std::size_t a = 0; a < n; ++a) {
        const int x = sys.points[a];
        const std::string at = "[" + std::to_string(a) + "]";
        if (x < 0 || x >= sys.carrier)
            throw std::invalid_argument("point" + at + " outside the carrier");
        if (seen & bit(x))
            throw std::invalid_argument("point" + at + " repeats");
        seen |= bit(x);
        if ((sys.u1[a] | sys.u2[a]) & ~whole)
            throw std::invalid_argument("u" + at + " leaves the carrier");
        if (!(sys.u2[a] & bit(x)))
            throw std::invalid_argument("x" + at + " is not in u2" + at);
        if (sys.closure(sys.u2[a]) & ~sys.u1[a])
            throw std::invalid_argument("cl(u2" + at + ") is not inside u1" + at);
    }
    for (std::size_t a = 0; a < n; ++a) {
        Mask other = 0;
        for (std::size_t b = 0; b < n; ++b)
            if (mode == SeparationMode::density ? b < a : b > a)
                other |= bit(sys.points[b]);
        const Mask bad = mode == SeparationMode::density ? sys.closure(other) : other;
        if (sys.u1[a] & bad)
            throw std::invalid_argument(std::string("u1[") + std::to_string(a) + "] meets " +
                                        (mode == SeparationMode::density ? "the closure of the earlier points"
                                                                         : "a later point"));
    }
}

Coloring coloring_from_system(const SeparationSystem& sys, SeparationMode mode) {
    validate(sys, mode);
    const int n = static_cast<int>(sys.size());
    Coloring c(n, 2);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const bool in = mode == SeparationMode::density ? (sys.u2[a] & bit(sys.points[b]))
                                                            : (sys.u2[b] & bit(sys.points[a]));
            c.set(a, b, in ? 1 : 0);
        }
    return c;
}

bool is_discrete_family(const DiscreteFamily& f) {
    if (f.points.size() != f.opens.size())
        return false;
    for (std::size_t e = 0; e < f.points.size(); ++e)
        for (std::size_t z = 0; z < f.points.size(); ++z) {
            const bool in = f.opens[e] & bit(f.points[z]);
            if (in != (e == z))
                return false;
        }
    return true;
}

DiscreteFamily discrete_from_config(const SeparationSystem& sys, const HalfGraphConfig& cfg, SeparationMode mode) {
    const Coloring c = coloring_from_system(sys, mode);
    if (!verify_config(c, cfg))
        throw std::invalid_argument("config fails verification against the system coloring");
    DiscreteFamily f;
    if (cfg.epsilon == 0) {
        if (cfg.variant != Variant::mixed)
            throw std::invalid_argument("a color-0 config must be the mixed clique case");
        for (int a : cfg.alphas) {
            f.points.push_back(sys.points[a]);
            f.opens.push_back(sys.u2[a]);
        }
    } else {
        const std::size_t k = cfg.alphas.size() / 2;
        if (k == 0)
            throw std::invalid_argument("a color-1 config needs at least two pairs");
        for (std::size_t e = 0; e < k; ++e) {
            // density: y = x_{beta_2e}, u3 = u2_{beta_2e} - cl(u2_{alpha_2e+1})
            // lindelof: y = x_{alpha_2e+1}, u3 = u2_{alpha_2e+1} - cl(u2_{beta_2e})
            const int keep = mode == SeparationMode::density ? cfg.betas[2 * e] : cfg.alphas[2 * e + 1];
            const int cut = mode == SeparationMode::density ? cfg.alphas[2 * e + 1] : cfg.betas[2 * e];
            f.points.push_back(sys.points[keep]);
            f.opens.push_back(sys.u2[keep] & ~sys.closure(sys.u2[cut]));
        }
    }
    if (!is_discrete_family(f))
        throw std::logic_error("extracted family is not discrete");
    return f;
}

DiscreteFamily lindelof_alpha_even_pairing(const SeparationSystem& sys, const HalfGraphConfig& cfg) {
    DiscreteFamily f;
    for (std::size_t e = 0; 2 * e + 1 < cfg.alphas.size(); ++e) {
        const int keep = cfg.alphas[2 * e], cut = cfg.betas[2 * e + 1];
        f.points.push_back(sys.points[keep]);
        f.opens.push_back(sys.u2[keep] & ~sys.closure(sys.u2[cut]));
    }
    return f;
}

namespace {

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[i] = i;
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

// Tries to place one point outside `banned` with u2, u1 avoiding `avoid`.
bool place(SeparationSystem& sys, Mask banned, Mask avoid, std::mt19937_64& rng, int& x, Mask& u1, Mask& u2) {
    for (int p : shuffled(sys.carrier, rng)) {
        if ((banned | avoid) & bit(p) || sys.closure(bit(p)) & avoid)
            continue;
        x = p;
        u2 = bit(p);
        for (int q : shuffled(sys.carrier, rng))
            if (rng() % 2 && !(avoid & bit(q)) && !(sys.closure(u2 | bit(q)) & avoid))
                u2 |= bit(q);
        u1 = sys.closure(u2);
        for (int q = 0; q < sys.carrier; ++q)
            if (!(avoid & bit(q)) && rng() % 3 == 0)
                u1 |= bit(q);
        return true;
    }
    return false;
}

}  // namespace

SeparationSystem random_system(SeparationMode mode, int n, std::mt19937_64& rng) {
    if (n < 1 || 3 * n > kMaxGround)
        throw std::invalid_argument("random_system needs 1 <= n <= 21");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        SeparationSystem sys;
        sys.carrier = 3 * n;
        for (int p = 0; p < sys.carrier; ++p) {
            if (rng() % 2)
                sys.closed_basis.push_back(bit(p));
            const int len = 1 + static_cast<int>(rng() % 3);
            Mask iv = 0;
            for (int q = p; q <= std::min(sys.carrier - 1, p + len); ++q)
                iv |= bit(q);
            sys.closed_basis.push_back(iv);
        }
        sys.points.assign(n, -1);
        sys.u1.assign(n, 0);
        sys.u2.assign(n, 0);
        bool ok = true;
        Mask chosen = 0;
        for (int k = 0; k < n && ok; ++k) {
            // density fills forward against the closure of what came before,
            // lindelof fills backward against the later points
            const int a = mode == SeparationMode::density ? k : n - 1 - k;
            const Mask avoid = mode == SeparationMode::density ? sys.closure(chosen) : chosen;
            ok = place(sys, chosen, avoid, rng, sys.points[a], sys.u1[a], sys.u2[a]);
            chosen |= bit(sys.points[a]);
        }
        if (!ok)
            continue;
        validate(sys, mode);
        return sys;
    }
    throw std::runtime_error("random_system found no valid system in 1000 attempts");
}

SeparationSystem nested_interval_system(SeparationMode mode, int n) {
    if (n < 1 || 2 * n > kMaxGround)
        throw std::invalid_argument("nested_interval_system needs 1 <= n <= 32");
    SeparationSystem sys;
    sys.carrier = 2 * n;
    for (int p = 0; p < sys.carrier; ++p)
        sys.closed_basis.push_back(bit(p));
    for (int a = 0; a < n; ++a) {
        Mask ray = 0;
        for (int p = 0; p < sys.carrier; ++p)
            if (mode == SeparationMode::density ? p >= 2 * a : p <= 2 * a + 1)
                ray |= bit(p);
        sys.closed_basis.push_back(ray);
        sys.points.push_back(2 * a);
        sys.u1.push_back(ray);
        sys.u2.push_back(ray);
    }
    validate(sys, mode);
    return sys;
}

}  // namespace pcw
