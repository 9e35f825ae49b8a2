#include "pcw/subposet.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pcw {

const char* to_string(Granularity g) {
    return g == Granularity::kappa ? "kappa" : "theta";
}

Granularity granularity_from_string(const std::string& s) {
    if (s == "kappa")
        return Granularity::kappa;
    if (s == "theta")
        return Granularity::theta;
    throw std::invalid_argument("granularity must be kappa or theta, got " + s);
}

const char* to_string(ClauseStatus s) {
    switch (s) {
    case ClauseStatus::verified: return "verified";
    case ClauseStatus::violated: return "violated";
    case ClauseStatus::bounded_skip: return "bounded-skip";
    }
    return "?";
}

int theta_of(int kappa, const ParamSet& p) {
    for (int t : p.theta_list)
        if (t > kappa)
            return t;
    throw std::invalid_argument("no level above " + std::to_string(kappa));
}

void validate_reasonable(const ReasonableParam& y, const Poset& poset) {
    const ParamSet& ps = poset.params();
    if (!ps.is_level(y.kappa) || y.kappa >= ps.mu)
        throw std::invalid_argument("kappa must be a level below mu");
    if (y.p_chain.empty())
        throw std::invalid_argument("p_chain is empty");
    if (y.p_chain.size() != y.u_chain.size())
        throw std::invalid_argument("p_chain and u_chain differ in length");
    const int theta = theta_of(y.kappa, ps);
    for (std::size_t a = 0; a < y.p_chain.size(); ++a) {
        const Condition& pa = y.p_chain[a];
        if (!poset.is_condition(pa))
            throw std::invalid_argument("p_chain[" + std::to_string(a) + "] is not a condition");
        for (std::size_t b = a + 1; b < y.p_chain.size(); ++b)
            if (!poset.le_pr(theta, pa, y.p_chain[b]))
                throw std::invalid_argument("p_chain is not pure-increasing at " + std::to_string(a) + " < " +
                                            std::to_string(b));
        const Mask u = y.u_chain[a];
        if (ps.mu < kMaxGround && (u >> ps.mu))
            throw std::invalid_argument("u_chain[" + std::to_string(a) + "] leaves [0, mu)");
        if (a > 0 && (y.u_chain[a - 1] & ~u))
            throw std::invalid_argument("u_chain is not increasing at " + std::to_string(a));
        if (u & ~poset.classes_of(y.kappa, pa.domain))
            throw std::invalid_argument("u_chain[" + std::to_string(a) + "] leaves the classes of p_chain[" +
                                        std::to_string(a) + "]");
        if (popcount(u) > partial_sup(y.kappa, ps))
            throw std::invalid_argument("u_chain[" + std::to_string(a) + "] is too large");
    }
}

// ---------------------------------------------------------------- SubPoset

SubPoset::SubPoset(const Poset& poset, ReasonableParam y, Granularity g, std::size_t member_cap)
    : poset_(poset), y_(std::move(y)), g_(g) {
    validate_reasonable(y_, poset_);
    theta_ = theta_of(y_.kappa, poset_.params());
    const int width = g_ == Granularity::kappa ? y_.kappa : theta_;
    for (std::size_t a = 0; a < y_.p_chain.size(); ++a) {
        const Mask region = poset_.blocks_inside(width, y_.u_chain[a]);
        for (const Condition& q : poset_.extensions_within(y_.p_chain[a], region))
            if (witnessed_at(a, q))
                members_.push_back(q);
        if (members_.size() > member_cap * 4)
            break;
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.size() > member_cap)
        throw std::length_error("Q_y has more than " + std::to_string(member_cap) + " members");
}

bool SubPoset::witnessed_at(std::size_t a, const Condition& q) const {
    const Condition& pa = y_.p_chain[a];
    if (!poset_.is_condition(q) || !poset_.le_ap(theta_, pa, q))
        return false;
    const int width = g_ == Granularity::kappa ? y_.kappa : theta_;
    return (poset_.supp(width, pa, q) & ~y_.u_chain[a]) == 0;
}

std::optional<std::size_t> SubPoset::alpha_of(const Condition& q) const {
    for (std::size_t a = 0; a < y_.p_chain.size(); ++a)
        if (witnessed_at(a, q))
            return a;
    return std::nullopt;
}

bool SubPoset::contains(const Condition& q) const {
    return alpha_of(q).has_value();
}

std::size_t SubPoset::alpha(const Condition& q) const {
    auto a = alpha_of(q);
    if (!a)
        throw std::invalid_argument("condition " + q.to_string() + " is not in Q_y");
    return *a;
}

std::vector<Condition> SubPoset::ap(const Condition& q) const {
    const Condition& base = y_.p_chain[alpha(q)];
    const Mask room = poset_.supp(theta_, base, q);
    std::vector<Condition> out;
    for (const Condition& r : members_)
        if (q.subset_of(r) && poset_.le_ap(y_.kappa, q, r) && (poset_.supp(y_.kappa, q, r) & ~room) == 0)
            out.push_back(r);
    return out;
}

bool SubPoset::le(const Condition& a, const Condition& b) const {
    return contains(a) && contains(b) && poset_.le(a, b);
}

bool SubPoset::le_pr(const Condition& a, const Condition& b) const {
    return contains(a) && contains(b) && poset_.le_pr(y_.kappa, a, b);
}

Condition SubPoset::pure_mix(const Condition& p, const Condition& r, const Condition& q) const {
    if (!le_pr(p, r))
        throw std::invalid_argument("pure_mix: r is not a pure extension of p in Q_y");
    auto apq = ap(p);
    if (std::find(apq.begin(), apq.end(), q) == apq.end())
        throw std::invalid_argument("pure_mix: q is not in ap_y(p)");
    if (!q.compatible(r))
        throw std::invalid_argument("pure_mix: q and r disagree");
    const Condition s = q.united(r);
    if (!contains(s))
        throw std::logic_error("pure_mix: s is not in Q_y");
    auto apr = ap(r);
    if (std::find(apr.begin(), apr.end(), s) == apr.end())
        throw std::logic_error("pure_mix: s is not in ap_y(r)");
    if (!le_pr(q, s))
        throw std::logic_error("pure_mix: q is not pure below s");
    if (alpha(s) != alpha(r))
        throw std::logic_error("pure_mix: alpha(s) differs from alpha(r)");
    return s;
}

// ---------------------------------------------------------------- checker

bool QuadrupleReport::ok() const {
    return std::none_of(clauses.begin(), clauses.end(),
                        [](const auto& kv) { return kv.second.status == ClauseStatus::violated; });
}

bool QuadrupleReport::verified(std::initializer_list<const char*> which) const {
    for (const char* c : which) {
        auto it = clauses.find(c);
        if (it == clauses.end() || it->second.status != ClauseStatus::verified)
            return false;
    }
    return true;
}

namespace {

// Order data of Q_y as index matrices.
struct Table {
    const SubPoset& Q;
    const std::vector<Condition>& M;
    std::size_t n;
    std::vector<std::vector<char>> le, pr;
    std::vector<std::vector<std::size_t>> ap;
    std::vector<std::size_t> alpha;

    explicit Table(const SubPoset& q) : Q(q), M(q.members()), n(M.size()) {
        const Poset& P = Q.poset();
        le.assign(n, std::vector<char>(n, 0));
        pr = le;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                le[i][j] = P.le(M[i], M[j]);
                pr[i][j] = P.le_pr(Q.kappa(), M[i], M[j]);
            }
        ap.resize(n);
        alpha.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            alpha[i] = Q.alpha(M[i]);
            for (const Condition& r : Q.ap(M[i]))
                ap[i].push_back(index(r));
        }
    }

    std::size_t index(const Condition& c) const {
        auto it = std::lower_bound(M.begin(), M.end(), c);
        if (it == M.end() || *it != c)
            throw std::logic_error("condition outside Q_y: " + c.to_string());
        return static_cast<std::size_t>(it - M.begin());
    }

    std::optional<std::size_t> find(const Condition& c) const {
        auto it = std::lower_bound(M.begin(), M.end(), c);
        if (it == M.end() || *it != c)
            return std::nullopt;
        return static_cast<std::size_t>(it - M.begin());
    }

    bool compatible(std::size_t a, std::size_t b) const {
        for (std::size_t k = 0; k < n; ++k)
            if (le[a][k] && le[b][k])
                return true;
        return false;
    }

    // Order reading of "q forces (p in G implies r in G)": every common
    // extension of q and p in Q_y is compatible with r.
    bool forces(std::size_t q, std::size_t p, std::size_t r) const {
        for (std::size_t s = 0; s < n; ++s)
            if (le[q][s] && le[p][s] && !compatible(s, r))
                return false;
        return true;
    }

    bool in_ap(std::size_t q, std::size_t r) const {
        return std::find(ap[q].begin(), ap[q].end(), r) != ap[q].end();
    }
};

struct Clause {
    ClauseResult res;
    void check(bool ok, const std::function<std::string()>& why) {
        ++res.checked;
        if (!ok && res.status != ClauseStatus::violated) {
            res.status = ClauseStatus::violated;
            res.detail = why();
        }
    }
};

}  // namespace

QuadrupleReport check_quadruple_axioms(const SubPoset& Q, const QuadrupleBudget& budget) {
    const Table T(Q);
    const auto& M = T.M;
    const std::size_t n = T.n;
    auto show = [&](std::size_t i) { return M[i].to_string(); };

    QuadrupleReport rep;
    rep.granularity = to_string(Q.granularity());
    rep.members = n;

    Clause a, b, c, d, e, f, g, h, i, j;

    // (a) the quadruple has the right shape: nonempty, ap defined everywhere
    a.check(n > 0, [] { return std::string("Q_y is empty"); });
    for (std::size_t x = 0; x < n; ++x)
        a.check(Q.contains(M[x]), [&] { return show(x) + " listed but not a member"; });

    // (b) quasi order; (c) pure order is a quasi order inside the main one
    for (std::size_t x = 0; x < n; ++x) {
        b.check(T.le[x][x], [&] { return show(x) + " not below itself"; });
        c.check(T.pr[x][x], [&] { return show(x) + " not pure below itself"; });
        for (std::size_t y = 0; y < n; ++y) {
            c.check(!T.pr[x][y] || T.le[x][y], [&] { return show(x) + " <=pr " + show(y) + " but not <="; });
            for (std::size_t z = 0; z < n; ++z) {
                if (T.le[x][y] && T.le[y][z])
                    b.check(T.le[x][z], [&] { return "transitivity " + show(x) + " " + show(y) + " " + show(z); });
                if (T.pr[x][y] && T.pr[y][z])
                    c.check(T.pr[x][z], [&] { return "transitivity " + show(x) + " " + show(y) + " " + show(z); });
            }
        }
    }

    // (d)(beta), (gamma), (gamma)+
    for (std::size_t q = 0; q < n; ++q) {
        d.check(T.in_ap(q, q), [&] { return show(q) + " missing from its own ap set"; });
        for (std::size_t r : T.ap[q]) {
            d.check(T.compatible(q, r), [&] { return "ap member " + show(r) + " incompatible with " + show(q); });
            for (std::size_t qp = 0; qp < n; ++qp) {
                if (!T.pr[q][qp])
                    continue;
                d.check(T.compatible(qp, r), [&] {
                    return "gamma+: " + show(qp) + " pure above " + show(q) + " incompatible with " + show(r);
                });
                bool found = false;
                for (std::size_t rp : T.ap[qp])
                    if (T.forces(qp, rp, r)) {
                        found = true;
                        break;
                    }
                d.check(found, [&] {
                    return "gamma+: no r+ in ap(" + show(qp) + ") forcing " + show(r) + " (q=" + show(q) + ")";
                });
            }
        }
    }

    // (i) ap sets are small
    const int cap = Q.poset().params().budget(Q.theta());
    for (std::size_t q = 0; q < n; ++q)
        i.check(static_cast<int>(T.ap[q].size()) < cap, [&] {
            return "|ap(" + show(q) + ")| = " + std::to_string(T.ap[q].size()) + " >= " + std::to_string(cap);
        });

    // (j) witnesses: the decomposition first, then any pair at all
    for (std::size_t qs = 0; qs < n; ++qs)
        for (std::size_t r = 0; r < n; ++r) {
            if (!T.le[qs][r])
                continue;
            bool ok = false;
            const auto dec = Q.poset().decompose(Q.kappa(), M[qs], M[r]);
            auto iq = T.find(dec.r), ip = T.find(dec.s);
            if (iq && ip && T.pr[qs][*iq] && T.in_ap(qs, *ip) && T.forces(*iq, *ip, r))
                ok = true;
            for (std::size_t q = 0; q < n && !ok; ++q) {
                if (!T.pr[qs][q])
                    continue;
                for (std::size_t p : T.ap[qs])
                    if (T.forces(q, p, r)) {
                        ok = true;
                        break;
                    }
            }
            j.check(ok, [&] { return "no witness for q*=" + show(qs) + " r=" + show(r); });
        }

    // Bounded analogues on pure-increasing chains (all pairs pure-related).
    std::uint64_t chains = 0;
    bool truncated = false;
    std::vector<std::size_t> chain;
    std::function<void()> walk = [&] {
        if (chain.size() >= 2) {
            if (++chains > budget.max_chains) {
                truncated = true;
                return;
            }
            const std::size_t last = chain.back();
            // (e) a pure upper bound exists: the union, which is the last element
            auto u = Q.poset().union_lub([&] {
                std::vector<Condition> v;
                for (auto x : chain)
                    v.push_back(M[x]);
                return v;
            }());
            auto iu = u.result ? T.find(*u.result) : std::nullopt;
            bool ub = iu.has_value();
            for (auto x : chain)
                ub = ub && T.pr[x][*iu];
            e.check(ub, [&] { return "chain ending at " + show(last) + " has no pure upper bound"; });

            // (g) the union is exact: each ap member of it is forced by some ap member below
            if (iu) {
                for (std::size_t p : T.ap[*iu]) {
                    bool ok = false;
                    for (std::size_t k = 0; k < chain.size() && !ok; ++k)
                        for (std::size_t pp : T.ap[chain[k]])
                            if (T.forces(*iu, pp, p)) {
                                ok = true;
                                break;
                            }
                    g.check(ok, [&] { return "union " + show(*iu) + " not exact for " + show(p); });
                }
            }

            // (h) with xi = 1: some zeta forces an earlier ap choice into G
            std::vector<std::size_t> pick(chain.size(), 0);
            std::uint64_t combos = 0;
            while (true) {
                bool ok = false;
                for (std::size_t z = 1; z < chain.size() && !ok; ++z) {
                    const std::size_t qz = chain[z], rz = T.ap[qz][pick[z]];
                    bool all = true;
                    for (std::size_t s = 0; s < n && all; ++s) {
                        if (!(T.le[qz][s] && T.le[rz][s]))
                            continue;
                        bool some = false;
                        for (std::size_t k = 0; k < z && !some; ++k)
                            some = T.compatible(s, T.ap[chain[k]][pick[k]]);
                        all = some;
                    }
                    ok = all;
                }
                h.check(ok, [&] { return "chain ending at " + show(last) + ": no zeta works"; });
                if (++combos > 64)
                    break;
                std::size_t k = 0;
                while (k < chain.size() && ++pick[k] == T.ap[chain[k]].size())
                    pick[k++] = 0;
                if (k == chain.size())
                    break;
            }
        }
        if (chain.size() >= budget.max_chain || truncated)
            return;
        for (std::size_t s = 0; s < n; ++s) {
            bool ok = true;
            for (auto x : chain)
                ok = ok && x != s && T.pr[x][s];
            if (!ok)
                continue;
            chain.push_back(s);
            walk();
            chain.pop_back();
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        chain = {s};
        walk();
    }

    // (f) Delta-system step: members over pure-related bases whose kappa-supports
    // meet only where the two agree have an upper bound that is apure over the later one.
    const Poset& P = Q.poset();
    const auto& base = Q.param().p_chain;
    std::vector<Mask> supp(n);
    for (std::size_t x = 0; x < n; ++x)
        supp[x] = P.supp(Q.kappa(), base[T.alpha[x]], M[x]);
    std::uint64_t delta_runs = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t a1 = T.alpha[x], a2 = T.alpha[y];
            if (x == y || a1 > a2 || !P.le_ap(Q.kappa(), base[a2], M[y]) || !P.le_ap(Q.kappa(), base[a1], M[x]))
                continue;
            const Mask kernel = supp[x] & supp[y];
            if (M[x].restricted(kernel) != M[y].restricted(kernel) || !M[x].compatible(M[y]))
                continue;
            if (!find_delta_system({set_of(supp[x]), set_of(supp[y])}, 2))
                continue;
            ++delta_runs;
            bool ok = false;
            for (std::size_t r = 0; r < n && !ok; ++r)
                ok = T.le[x][r] && P.le_ap(Q.kappa(), M[y], M[r]) &&
                     (a1 != a2 || P.le_ap(Q.kappa(), M[x], M[r]));
            f.check(ok, [&] { return "no common bound for " + show(x) + " and " + show(y); });
        }

    auto finish = [&](Clause& cl, bool bounded, std::string scope) {
        if (cl.res.status == ClauseStatus::violated)
            return cl.res;
        cl.res.status = bounded ? ClauseStatus::bounded_skip : ClauseStatus::verified;
        cl.res.detail = std::move(scope);
        return cl.res;
    };
    const std::string chain_scope = "pure chains of length <= " + std::to_string(budget.max_chain) + ", " +
                                    std::to_string(std::min<std::uint64_t>(chains, budget.max_chains)) +
                                    " chains" + (truncated ? " (truncated)" : "");
    rep.clauses["a"] = finish(a, false, "exact over Q_y");
    rep.clauses["b"] = finish(b, false, "exact over Q_y");
    rep.clauses["c"] = finish(c, false, "exact over Q_y");
    rep.clauses["d"] = finish(d, false, "exact over Q_y");
    rep.clauses["e"] = finish(e, true, chain_scope);
    rep.clauses["f"] = finish(f, true, std::to_string(delta_runs) + " Delta-system pairs");
    rep.clauses["g"] = finish(g, true, chain_scope);
    rep.clauses["h"] = finish(h, true, chain_scope + ", xi = 1");
    rep.clauses["i"] = finish(i, false, "exact over Q_y");
    rep.clauses["j"] = finish(j, false, "exact over Q_y");
    return rep;
}

std::vector<ClauseTally> check_observations(const SubPoset& Q) {
    const Table T(Q);
    const auto& M = T.M;
    const std::size_t n = T.n;
    const Poset& P = Q.poset();
    const auto& th = P.params().theta_list;
    std::map<std::string, ClauseTally> t;
    for (const char* k : {"0", "0A", "1", "2", "3"})
        t[k].clause = k;
    auto rec = [&](const char* k, bool ok, const std::function<std::string()>& why) {
        auto& x = t[k];
        ++x.checked;
        if (!ok && !x.violations++)
            x.witness = why();
    };
    auto show = [&](std::size_t i) { return M[i].to_string(); };

    for (std::size_t x = 0; x < n; ++x)
        rec("1", T.alpha[x] < Q.param().p_chain.size(), [&] { return show(x); });

    for (std::size_t p1 = 0; p1 < n; ++p1)
        for (std::size_t p2 = 0; p2 < n; ++p2) {
            if (!T.le[p1][p2])
                continue;
            rec("2", T.alpha[p1] <= T.alpha[p2], [&] { return show(p1) + " <= " + show(p2); });
            for (std::size_t p3 = 0; p3 < n; ++p3) {
                if (!T.le[p2][p3])
                    continue;
                if (T.le[p1][p3])
                    for (int k : th)
                        rec("0A",
                            P.supp(k, M[p1], M[p3]) == (P.supp(k, M[p1], M[p2]) | P.supp(k, M[p2], M[p3])),
                            [&] { return show(p1) + " " + show(p2) + " " + show(p3); });
                // p1 <= p2 <= q2 = p3 <= q1
                for (std::size_t q1 = 0; q1 < n; ++q1) {
                    if (!T.le[p3][q1] || !T.le[p1][q1])
                        continue;
                    for (int k2 : th)
                        for (int k1 : th)
                            if (k2 <= k1)
                                rec("0", (P.supp(k2, M[p2], M[p3]) & ~P.supp(k1, M[p1], M[q1])) == 0, [&] {
                                    return show(p1) + " " + show(p2) + " " + show(p3) + " " + show(q1);
                                });
                }
            }
        }

    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < n; ++r) {
            if (!T.pr[p][r])
                continue;
            for (std::size_t q : T.ap[p]) {
                bool ok = true;
                std::string why;
                try {
                    Q.pure_mix(M[p], M[r], M[q]);
                } catch (const std::exception& ex) {
                    ok = false;
                    why = ex.what();
                }
                rec("3", ok, [&] { return "p=" + show(p) + " r=" + show(r) + " q=" + show(q) + ": " + why; });
            }
        }

    std::vector<ClauseTally> out;
    for (const char* k : {"0", "0A", "1", "2", "3"})
        out.push_back(t[k]);
    return out;
}

ReasonableParam random_reasonable(const Poset& poset, int kappa, std::size_t length, std::mt19937_64& rng) {
    const ParamSet& ps = poset.params();
    const int theta = theta_of(kappa, ps);
    const int sup = partial_sup(kappa, ps);
    ReasonableParam y;
    y.kappa = kappa;

    auto fill = [&](Condition c, Mask region) {
        std::vector<int> pts;
        for (Mask m = region & ~c.domain; m; m &= m - 1)
            pts.push_back(__builtin_ctzll(m));
        std::shuffle(pts.begin(), pts.end(), rng);
        const std::size_t want = 1 + rng() % 2;
        std::size_t added = 0;
        for (int i : pts) {
            if (added == want)
                break;
            Condition next{c.domain | bit(i), c.values | (rng() & 1 ? bit(i) : 0)};
            if (poset.is_condition(next)) {
                c = next;
                ++added;
            }
        }
        return c;
    };

    Mask used = 0;
    Condition cur;
    Mask u = 0;
    const int blocks = ps.mu / theta;
    for (std::size_t a = 0; a < length; ++a) {
        // a fresh theta-block keeps the chain pure at theta
        std::vector<int> fresh;
        for (int b = 0; b < blocks; ++b)
            if (!(poset.block_mask(theta, b) & used))
                fresh.push_back(b);
        if (!fresh.empty() && (a == 0 || rng() % 3 != 0)) {
            const Mask blk = poset.block_mask(theta, fresh[rng() % fresh.size()]);
            Condition next = fill(cur, blk);
            if (poset.le_pr(theta, cur, next)) {
                bool pure = true;
                for (const Condition& prev : y.p_chain)
                    pure = pure && poset.le_pr(theta, prev, next);
                if (pure) {
                    cur = next;
                    used |= blk;
                }
            }
        }
        // grow u by a whole kappa-class of the base when it fits
        const Mask classes = poset.classes_of(kappa, cur.domain);
        if (u == 0 && classes) {
            std::vector<int> starts;
            for (Mask m = classes; m; m &= m - 1)
                if (__builtin_ctzll(m) % kappa == 0)
                    starts.push_back(__builtin_ctzll(m));
            const int s = starts[rng() % starts.size()];
            const Mask cls = poset.class_mask(s, kappa);
            if (popcount(cls) <= sup)
                u = cls;
        }
        if (u && popcount(u) < sup && rng() % 2) {
            const Mask spare = classes & ~u;
            if (spare) {
                std::vector<int> pts;
                for (Mask m = spare; m; m &= m - 1)
                    pts.push_back(__builtin_ctzll(m));
                u |= bit(pts[rng() % pts.size()]);
            }
        }
        y.p_chain.push_back(cur);
        y.u_chain.push_back(u);
    }
    validate_reasonable(y, poset);
    return y;
}

}  // namespace pcw
