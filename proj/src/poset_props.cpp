#include "pcw/poset_props.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace pcw {

bool PosetSuiteReport::ok() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseTally& t) { return t.violations == 0; });
}

const ClauseTally& PosetSuiteReport::at(const std::string& clause) const {
    for (const auto& t : clauses)
        if (t.clause == clause)
            return t;
    throw std::out_of_range("no clause " + clause);
}

Condition random_extension(const Poset& poset, const Condition& p, std::mt19937_64& rng) {
    std::vector<int> order(static_cast<std::size_t>(poset.mu()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Condition c = p;
    // Stop probability keeps small and large conditions both common.
    const double keep = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    std::bernoulli_distribution take(keep);
    for (int i : order) {
        if (c.defined(i) || !take(rng))
            continue;
        Condition next{c.domain | bit(i), c.values | (rng() & 1 ? bit(i) : 0)};
        if (poset.is_condition(next))
            c = next;
    }
    return c;
}

Condition random_condition(const Poset& poset, std::mt19937_64& rng) {
    return random_extension(poset, Condition{}, rng);
}

namespace {

struct KeyHash {
    std::size_t operator()(const Condition& c) const {
        return std::hash<Mask>()(c.domain * 0x9E3779B97F4A7C15ull ^ c.values);
    }
};

class Suite {
public:
    Suite(const Poset& poset, const PosetSuiteConfig& cfg) : P(poset), cfg_(cfg), rng_(cfg.seed) {
        for (const char* c : {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n",
                              "subadditivity"})
            tally(c);
    }

    PosetSuiteReport run() {
        build_universe();
        pair_clauses();
        triple_clauses();
        PosetSuiteReport rep;
        rep.mode = mode_;
        rep.pair_mode = pair_mode_;
        rep.universe = U.size();
        for (auto& name : order_)
            rep.clauses.push_back(tallies_.at(name));
        return rep;
    }

private:
    const Poset& P;
    PosetSuiteConfig cfg_;
    std::mt19937_64 rng_;
    std::string mode_, pair_mode_;
    std::vector<Condition> U;
    std::unordered_map<Condition, std::uint32_t, KeyHash> index_;
    std::vector<std::vector<std::uint32_t>> supersets_, ups_, downs_;
    std::map<std::string, ClauseTally> tallies_;
    std::vector<std::string> order_;

    ClauseTally& tally(const std::string& c) {
        auto [it, fresh] = tallies_.try_emplace(c);
        if (fresh) {
            it->second.clause = c;
            order_.push_back(c);
        }
        return it->second;
    }

    template <class F>
    void record(const char* clause, bool ok, F&& describe) {
        auto& t = tally(clause);
        ++t.checked;
        if (!ok) {
            if (!t.violations)
                t.witness = describe();
            ++t.violations;
        }
    }

    static std::string show(std::initializer_list<std::pair<const char*, Condition>> xs, int kappa = 0) {
        std::string s;
        for (auto& [n, c] : xs)
            s += std::string(s.empty() ? "" : " ") + n + "=" + c.to_string();
        if (kappa)
            s += " kappa=" + std::to_string(kappa);
        return s;
    }

    std::uint32_t pick(std::size_t n) { return static_cast<std::uint32_t>(rng_() % n); }

    void build_universe() {
        if (P.mu() <= cfg_.enumeration_cap) {
            mode_ = "exhaustive";
            U = P.enumerate_conditions(cfg_.enumeration_cap);
        } else {
            mode_ = "sampled";
            std::vector<Condition> pool{Condition{}};
            for (std::size_t k = 0; k < cfg_.pool; ++k) {
                Condition base = random_condition(P, rng_);
                pool.push_back(base);
                for (int e = 0; e < 4; ++e) {
                    Condition ext = random_extension(P, base, rng_);
                    pool.push_back(ext);
                    pool.push_back(random_extension(P, ext, rng_));
                }
                // sub-conditions keep the down-closure well populated
                pool.push_back(base.restricted(rng_()));
            }
            std::sort(pool.begin(), pool.end());
            pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
            U = std::move(pool);
        }
        for (std::uint32_t i = 0; i < U.size(); ++i)
            index_[U[i]] = i;
        supersets_.assign(U.size(), {});
        ups_.assign(U.size(), {});
        downs_.assign(U.size(), {});
        for (std::uint32_t i = 0; i < U.size(); ++i)
            for (std::uint32_t j = 0; j < U.size(); ++j)
                if (U[i].subset_of(U[j])) {
                    supersets_[i].push_back(j);
                    if (P.le(U[i], U[j])) {
                        ups_[i].push_back(j);
                        downs_[j].push_back(i);
                    }
                }
    }

    std::vector<std::uint32_t> supersets_of(const Condition& q) const {
        if (auto it = index_.find(q); it != index_.end())
            return supersets_[it->second];
        std::vector<std::uint32_t> out;
        for (std::uint32_t j = 0; j < U.size(); ++j)
            if (q.subset_of(U[j]))
                out.push_back(j);
        return out;
    }

    // q is an upper bound of a and b lying below every common upper bound in the universe.
    std::optional<Condition> lub_failure(const Condition& a, const Condition& b, const Condition& q) const {
        if (!P.le(a, q) || !P.le(b, q))
            return q;
        for (std::uint32_t j : supersets_of(q)) {
            const Condition& u = U[j];
            if (P.le(a, u) && P.le(b, u) && !P.le(q, u))
                return u;
        }
        return std::nullopt;
    }

    void pair_check(const Condition& p, const Condition& q) {
        const auto& th = P.params().theta_list;
        const int mu = P.mu();
        const bool le = P.le(p, q), el = P.le(q, p);

        // (a) antisymmetry and inclusions between the orders; (d)(beta)
        record("a", !(le && el) || p == q, [&] { return show({{"p", p}, {"q", q}}); });
        record("d", le == P.le_ap(mu, p, q), [&] { return show({{"p", p}, {"q", q}}); });
        for (int k : th) {
            const bool pr = P.le_pr(k, p, q), ap = P.le_ap(k, p, q);
            record("a", (!pr || le) && (!ap || le), [&] { return show({{"p", p}, {"q", q}}, k); });
            record("a", !(pr && P.le_pr(k, q, p)) || p == q, [&] { return show({{"p", p}, {"q", q}}, k); });
            record("a", !(ap && P.le_ap(k, q, p)) || p == q, [&] { return show({{"p", p}, {"q", q}}, k); });
            if (k == mu) {
                record("a", ap == le && pr == (p == q), [&] { return show({{"p", p}, {"q", q}}, k); });
            }
            // (e) monotone in the level
            for (int k2 : th)
                if (k <= k2) {
                    const bool ok = (!P.le_pr(k2, p, q) || pr) && (!ap || P.le_ap(k2, p, q));
                    record("e", ok, [&] { return show({{"p", p}, {"q", q}}, k); });
                }
            // (j) restated: new points sit in few growing blocks, each holding few points
            if (ap) {
                const Mask fresh = q.domain & ~p.domain;
                bool ok;
                if (k == mu) {
                    ok = popcount(fresh) < P.params().budget(k);
                } else {
                    const Mask grown = P.growing_blocks(k, p, q);
                    ok = (fresh & ~grown) == 0 && popcount(grown) / k < P.params().budget(k);
                    for (int b = 0; ok && b < mu / k; ++b) {
                        const Mask blk = P.block_mask(k, b);
                        if (blk & grown)
                            ok = popcount(blk & q.domain) < P.params().budget(k);
                    }
                }
                record("j", ok, [&] { return show({{"p", p}, {"q", q}}, k); });
            }
            // (c) decomposition and its lub
            if (le) {
                bool ok = true;
                std::string why;
                try {
                    auto d = P.decompose(k, p, q);
                    if (auto u = lub_failure(d.r, d.s, q)) {
                        ok = false;
                        why = " not-lub-against u=" + u->to_string();
                    }
                } catch (const std::logic_error& e) {
                    ok = false;
                    why = std::string(" ") + e.what();
                }
                record("c", ok, [&] { return show({{"p", p}, {"q", q}}, k) + why; });
            }
        }

        // (b) unions of compatible conditions; (i) unions below a common upper bound
        if (p.compatible(q)) {
            const Condition u0 = p.united(q);
            if (P.is_condition(u0) && P.le(p, u0) && P.le(q, u0)) {
                auto fail = lub_failure(p, q, u0);
                record("b", !fail, [&] {
                    return show({{"p1", p}, {"p2", q}, {"u", fail.value_or(Condition{})}});
                });
            }
            for (std::uint32_t j : supersets_of(u0)) {
                const Condition& ub = U[j];
                if (!(P.le(p, ub) && P.le(q, ub)))
                    continue;
                record("i", P.is_condition(u0) && P.le(p, u0) && P.le(q, u0),
                       [&] { return show({{"p1", p}, {"p2", q}, {"ub", ub}}); });
                for (int k : th) {
                    if (P.le_pr(k, p, ub) && P.le_pr(k, q, ub))
                        record("i", P.le_pr(k, p, u0) && P.le_pr(k, q, u0),
                               [&] { return show({{"p1", p}, {"p2", q}, {"ub", ub}}, k); });
                    if (P.le_ap(k, p, ub) && P.le_ap(k, q, ub))
                        record("i", P.le_ap(k, p, u0) && P.le_ap(k, q, u0),
                               [&] { return show({{"p1", p}, {"p2", q}, {"ub", ub}}, k); });
                }
                break;
            }
        }
    }

    void pair_clauses() {
        // (d) and reflexivity
        bool has_empty = index_.count(Condition{}) > 0;
        record("d", has_empty && P.is_condition(Condition{}), [] { return std::string("empty condition missing"); });
        for (const Condition& q : U) {
            record("a", P.le(q, q), [&] { return show({{"q", q}}); });
            record("d", P.le(Condition{}, q), [&] { return show({{"q", q}}); });
            for (int k : P.params().theta_list) {
                record("a", P.le_pr(k, q, q) && P.le_ap(k, q, q), [&] { return show({{"q", q}}, k); });
                if (k < P.mu()) {
                    record("d", P.le_pr(k, Condition{}, q), [&] { return show({{"q", q}}, k); });
                    if (!q.empty())
                        record("d", !P.le_ap(k, Condition{}, q), [&] { return show({{"q", q}}, k); });
                }
            }
        }
        const std::uint64_t n = U.size();
        if (n * n <= cfg_.pair_limit) {
            pair_mode_ = "exhaustive";
            for (const Condition& p : U)
                for (const Condition& q : U)
                    pair_check(p, q);
        } else {
            pair_mode_ = "sampled";
            for (std::uint64_t s = 0; s < cfg_.pair_limit; ++s) {
                const auto i = pick(n);
                // half the draws land on comparable pairs
                const auto j = (s & 1) ? ups_[i][pick(ups_[i].size())] : pick(n);
                pair_check(U[i], U[j]);
            }
        }
    }

    std::optional<std::uint32_t> pick_from(const std::vector<std::uint32_t>& xs) {
        if (xs.empty())
            return std::nullopt;
        return xs[pick(xs.size())];
    }

    template <class Pred>
    std::optional<std::uint32_t> pick_where(const std::vector<std::uint32_t>& xs, Pred pred) {
        std::vector<std::uint32_t> ok;
        for (auto j : xs)
            if (pred(U[j]))
                ok.push_back(j);
        return pick_from(ok);
    }

    void triple_clauses() {
        const auto& th = P.params().theta_list;
        const std::size_t n = U.size();
        for (std::uint64_t s = 0; s < cfg_.samples; ++s) {
            const int k = th[pick(th.size())];
            const Condition& p = U[pick(n)];
            const auto& up = ups_[index_.at(p)];

            // subadditivity along p <= q <= r (set inclusion)
            {
                const auto& sp = supersets_[index_.at(p)];
                const Condition& q = U[*pick_from(sp)];
                const Condition& r = U[*pick_from(supersets_[index_.at(q)])];
                bool ok = true;
                for (int t : th)
                    ok = ok && P.growth_count(t, p, r) <= P.growth_count(t, p, q) + P.growth_count(t, q, r);
                record("subadditivity", ok, [&] { return show({{"p", p}, {"q", q}, {"r", r}}); });
            }

            // (k) sandwich
            if (auto j3 = pick_where(up, [&](const Condition& c) { return P.le_ap(k, p, c); })) {
                const Condition& p3 = U[*j3];
                if (auto j2 = pick_where(up, [&](const Condition& c) { return P.le(c, p3); })) {
                    const Condition& p2 = U[*j2];
                    record("k", P.le_ap(k, p, p2) && P.le_ap(k, p2, p3),
                           [&] { return show({{"p1", p}, {"p2", p2}, {"p3", p3}}, k); });
                }
            }

            auto ap_up = [&](const Condition& c) { return P.le_ap(k, p, c); };
            auto pr_up = [&](const Condition& c) { return P.le_pr(k, p, c); };

            // (f) mixing an apure and a pure extension
            if (auto jq = pick_where(up, ap_up))
                if (auto jr = pick_where(up, pr_up)) {
                    const Condition &q = U[*jq], &r = U[*jr];
                    if (q.compatible(r)) {
                        const Condition u = q.united(r);
                        if (P.is_condition(u) && P.le(q, u) && P.le(r, u)) {
                            auto fail = lub_failure(q, r, u);
                            record("f", P.le(p, u) && P.le_pr(k, q, u) && P.le_ap(k, r, u) && !fail,
                                   [&] { return show({{"p", p}, {"q", q}, {"r", r}}, k); });
                        }
                    } else {
                        record("f", false, [&] { return show({{"p", p}, {"q", q}, {"r", r}}, k) + " clash"; });
                    }
                }

            // (g), (h)
            if (auto j1 = pick_where(up, pr_up))
                if (auto j2 = pick_where(up, pr_up)) {
                    const Condition &q1 = U[*j1], &q2 = U[*j2];
                    if (q1.compatible(q2) && P.is_condition(q1.united(q2)))
                        record("g", P.le_pr(k, p, q1.united(q2)),
                               [&] { return show({{"p", p}, {"q1", q1}, {"q2", q2}}, k); });
                }
            if (auto j1 = pick_where(up, ap_up))
                if (auto j2 = pick_where(up, ap_up)) {
                    const Condition &q1 = U[*j1], &q2 = U[*j2];
                    if (q1.compatible(q2) && P.is_condition(q1.united(q2))) {
                        const Condition u = q1.united(q2);
                        record("h", P.le_ap(k, q1, u) && P.le_ap(k, q2, u),
                               [&] { return show({{"p", p}, {"q1", q1}, {"q2", q2}}, k); });
                    }
                }

            // (l)
            if (auto j2 = pick_where(up, pr_up)) {
                const Condition& p2 = U[*j2];
                auto jq1 = pick_where(up, ap_up);
                auto jq2 = pick_where(ups_[*j2], [&](const Condition& c) { return P.le_ap(k, p2, c); });
                if (jq1 && jq2) {
                    const Condition &q1 = U[*jq1], &q2 = U[*jq2];
                    if (q1.compatible(q2) && P.is_condition(q1.united(q2))) {
                        const Condition u = q1.united(q2);
                        auto fail = lub_failure(q1, q2, u);
                        record("l", !fail && P.le_ap(k, q2, u) && P.le(q1, u),
                               [&] { return show({{"p1", p}, {"p2", p2}, {"q1", q1}, {"q2", q2}}, k); });
                    }
                }
            }

            // (m) witness pairs below a common upper bound
            if (auto jr = pick_from(up)) {
                const Condition& r = U[*jr];
                const Condition& p2 = U[*pick_from(downs_[*jr])];
                bool ok = true;
                std::string why;
                try {
                    P.witness_pair(k, p, p2, r);
                } catch (const std::logic_error& e) {
                    ok = false;
                    why = std::string(" ") + e.what();
                }
                record("m", ok, [&] { return show({{"p1", p}, {"p2", p2}, {"r", r}}, k) + why; });
            }

            // (n) finite pure chains with apure companions
            {
                std::vector<Condition> c1{p}, c2;
                auto first = pick_where(up, ap_up);
                if (first) {
                    c2.push_back(U[*first]);
                    for (int step = 0; step < 2; ++step) {
                        const Condition a = c1.back(), b = c2.back();
                        auto na = pick_where(ups_[index_.at(a)], [&](const Condition& c) { return P.le_pr(k, a, c); });
                        if (!na)
                            break;
                        const Condition& a2 = U[*na];
                        auto nb = pick_where(ups_[index_.at(b)], [&](const Condition& c) {
                            return P.le_pr(k, b, c) && P.le_ap(k, a2, c);
                        });
                        if (!nb)
                            break;
                        c1.push_back(a2);
                        c2.push_back(U[*nb]);
                    }
                    auto u1 = P.union_lub(c1), u2 = P.union_lub(c2);
                    if (u1.result && u2.result)
                        record("n", P.le_ap(k, *u1.result, *u2.result),
                               [&] { return show({{"p1", c1.back()}, {"p2", c2.back()}}, k); });
                }
            }
        }
    }
};

}  // namespace

PosetSuiteReport run_poset_suite(const Poset& poset, const PosetSuiteConfig& cfg) {
    return Suite(poset, cfg).run();
}

}  // namespace pcw
