#include "pcw/core.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pcw {

bool ParamSet::is_level(int kappa) const {
    return std::binary_search(theta_list.begin(), theta_list.end(), kappa);
}

int ParamSet::budget(int kappa) const {
    auto it = budgets.find(kappa);
    if (it == budgets.end() || !is_level(kappa))
        throw std::out_of_range("no budget for level " + std::to_string(kappa));
    return it->second;
}

bool ValidationReport::violates(std::string_view clause) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.clause == clause; });
}

ValidationReport validate_params(const ParamSet& p) {
    ValidationReport r;
    auto add = [&](std::string clause, std::string msg) {
        r.violations.push_back({std::move(clause), std::move(msg)});
    };
    const auto& th = p.theta_list;

    if (p.lambda <= 0 || p.mu <= 0)
        add("a", "lambda and mu must be positive");
    if (!(p.lambda < p.mu))
        add("a", "lambda must be below mu");

    if (th.empty()) {
        add("b", "level list is empty");
        return r;
    }
    if (th.front() != p.lambda)
        add("b", "level list must start with lambda");
    if (th.back() != p.mu)
        add("b", "level list must end with mu");
    for (std::size_t k = 0; k + 1 < th.size(); ++k) {
        if (th[k] >= th[k + 1])
            add("b", "levels must be strictly increasing");
        else if (th[k] <= 0 || th[k + 1] % th[k] != 0)
            add("nesting", std::to_string(th[k]) + " does not divide " + std::to_string(th[k + 1]));
    }
    for (int t : th)
        if (t < p.lambda || t > p.mu)
            add("b", "level " + std::to_string(t) + " outside [lambda, mu]");

    for (int t : th)
        if (!p.budgets.count(t))
            add("c", "missing budget for level " + std::to_string(t));
    for (const auto& [t, b] : p.budgets) {
        if (std::find(th.begin(), th.end(), t) == th.end())
            add("c", "budget given for non-level " + std::to_string(t));
        if (b <= 0)
            add("c", "budget for level " + std::to_string(t) + " must be positive");
    }

    for (std::size_t k = 0; k < th.size(); ++k) {
        auto it = p.budgets.find(th[k]);
        if (it == p.budgets.end())
            continue;
        const int bk = it->second;
        if (bk > th[k])
            add("c.gamma", "budget " + std::to_string(bk) + " exceeds level " + std::to_string(th[k]));
        if (k + 1 < th.size()) {
            auto next = p.budgets.find(th[k + 1]);
            if (next != p.budgets.end() && !(bk < next->second))
                add("c.gamma", "budgets not strictly increasing at level " + std::to_string(th[k + 1]));
        }
        for (std::size_t j = 0; j < k; ++j)
            if (bk < th[j])
                add("c.delta", "budget " + std::to_string(bk) + " of level " + std::to_string(th[k]) +
                                   " is below smaller level " + std::to_string(th[j]));
    }
    if (auto it = p.budgets.find(p.lambda); it != p.budgets.end() && it->second != p.lambda)
        add("c.epsilon", "budget of lambda must equal lambda");
    return r;
}

void require_well_formed(const ParamSet& p) {
    const auto& th = p.theta_list;
    if (p.mu <= 0 || th.empty() || th.back() != p.mu || th.front() <= 0)
        throw std::invalid_argument("levels must be positive and end with mu");
    for (std::size_t k = 0; k + 1 < th.size(); ++k)
        if (th[k] >= th[k + 1] || th[k + 1] % th[k] != 0)
            throw std::invalid_argument("levels must be strictly increasing and nested by divisibility");
    for (int t : th)
        if (!p.budgets.count(t))
            throw std::invalid_argument("missing budget for level " + std::to_string(t));
}

void require_valid(const ParamSet& p) {
    auto r = validate_params(p);
    if (!r.ok())
        throw std::invalid_argument("invalid parameter set: " + r.violations.front().clause + ": " +
                                    r.violations.front().message);
}

IntSet Block::elements() const {
    IntSet s;
    for (int i = begin(); i < end(); ++i)
        s.insert(i);
    return s;
}

namespace {

void require_level(int kappa, const ParamSet& p) {
    if (!p.is_level(kappa))
        throw std::invalid_argument(std::to_string(kappa) + " is not a level");
}

void require_point(int i, const ParamSet& p) {
    if (i < 0 || i >= p.mu)
        throw std::out_of_range("point " + std::to_string(i) + " outside [0, mu)");
}

}  // namespace

Block class_of(int i, int kappa, const ParamSet& p) {
    require_level(kappa, p);
    require_point(i, p);
    return Block{kappa, i / kappa};
}

int kappa_of(int i, int j, const ParamSet& p) {
    require_point(i, p);
    require_point(j, p);
    for (int t : p.theta_list)
        if (i / t == j / t)
            return t;
    throw std::invalid_argument("levels do not end with a single block");
}

int partial_sup(int kappa, const ParamSet& p) {
    require_level(kappa, p);
    if (kappa == p.mu)
        return p.mu;
    int best = 0;
    bool found = false;
    for (int t : p.theta_list)
        if (t > kappa) {
            int b = p.budget(t);
            best = found ? std::min(best, b) : b;
            found = true;
        }
    return best;
}

std::optional<int> level_below(int kappa, const ParamSet& p) {
    std::optional<int> best;
    for (int t : p.theta_list)
        if (t < kappa)
            best = t;
    return best;
}

bool grows(const Block& block, const IntSet& a, const IntSet& b) {
    if (!std::includes(b.begin(), b.end(), a.begin(), a.end()))
        throw std::invalid_argument("grows: A is not a subset of B");
    IntSet ta, tb;
    for (int x : a)
        if (block.contains(x))
            ta.insert(x);
    for (int x : b)
        if (block.contains(x))
            tb.insert(x);
    return !ta.empty() && ta != tb;
}

OmegaReport omega_set(const ParamSet& p) {
    require_valid(p);
    OmegaReport r;
    for (int level = p.lambda + 1; level <= p.mu; ++level) {
        bool covered = false;
        for (int k : p.theta_list)
            if (p.budget(k) <= level && level <= partial_sup(k, p)) {
                covered = true;
                break;
            }
        if (!covered)
            r.omega.push_back(level);
    }
    return r;
}

// ---------------------------------------------------------------- delta systems

namespace {

IntSet intersect(const IntSet& a, const IntSet& b) {
    IntSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

// Largest clique reachable by extending `chosen` with members of `candidates`;
// stops as soon as `target` is reached.
bool grow_clique(const std::vector<std::uint32_t>& adj, std::uint32_t candidates,
                 std::vector<std::size_t>& chosen, std::size_t target) {
    if (chosen.size() >= target)
        return true;
    while (candidates) {
        if (chosen.size() + static_cast<std::size_t>(__builtin_popcount(candidates)) < target)
            return false;
        const int v = __builtin_ctz(candidates);
        candidates &= candidates - 1;
        chosen.push_back(static_cast<std::size_t>(v));
        if (grow_clique(adj, candidates & adj[v], chosen, target))
            return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<DeltaSystem> find_delta_system(const std::vector<IntSet>& sets, std::size_t target) {
    if (target < 2)
        throw std::invalid_argument("find_delta_system: target must be at least 2");
    const std::size_t n = sets.size();
    if (n < target)
        return std::nullopt;

    std::set<IntSet> kernels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            kernels.insert(intersect(sets[i], sets[j]));

    for (const IntSet& kernel : kernels) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (std::includes(sets[i].begin(), sets[i].end(), kernel.begin(), kernel.end()))
                members.push_back(i);
        if (members.size() < target)
            continue;

        if (n <= kExhaustiveDeltaLimit) {
            std::vector<std::uint32_t> adj(members.size(), 0);
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    if (intersect(sets[members[a]], sets[members[b]]) == kernel) {
                        adj[a] |= 1u << b;
                        adj[b] |= 1u << a;
                    }
            std::vector<std::size_t> chosen;
            const std::uint32_t all = members.size() == 32 ? ~0u : ((1u << members.size()) - 1);
            if (grow_clique(adj, all, chosen, target)) {
                DeltaSystem d{kernel, {}};
                for (std::size_t c : chosen)
                    d.indices.push_back(members[c]);
                return d;
            }
        } else {
            // Greedy: keep a member when its petal avoids every petal taken so far.
            DeltaSystem d{kernel, {}};
            IntSet used;
            for (std::size_t i : members) {
                IntSet petal;
                std::set_difference(sets[i].begin(), sets[i].end(), kernel.begin(), kernel.end(),
                                    std::inserter(petal, petal.end()));
                if (intersect(petal, used).empty()) {
                    d.indices.push_back(i);
                    used.insert(petal.begin(), petal.end());
                }
            }
            if (d.indices.size() >= target)
                return d;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- binary strings

BinaryString::BinaryString(std::string_view text) : bits_(text) {
    for (char c : bits_)
        if (c != '0' && c != '1')
            throw std::invalid_argument("binary string may contain only 0 and 1");
}

bool BinaryString::is_prefix_of(const BinaryString& other) const {
    return bits_.size() <= other.bits_.size() && other.bits_.compare(0, bits_.size(), bits_) == 0;
}

BinaryString BinaryString::prefix(std::size_t len) const {
    return BinaryString(std::string_view(bits_).substr(0, len));
}

BinaryString BinaryString::extended(int bit) const {
    BinaryString b = *this;
    b.bits_.push_back(bit ? '1' : '0');
    return b;
}

const char* to_string(LexOrder o) {
    switch (o) {
    case LexOrder::less: return "less";
    case LexOrder::greater: return "greater";
    case LexOrder::prefix: return "prefix";
    case LexOrder::equal: return "equal";
    }
    return "?";
}

LexOrder lex_compare(const BinaryString& a, const BinaryString& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i])
            return a[i] < b[i] ? LexOrder::less : LexOrder::greater;
    return a.size() == b.size() ? LexOrder::equal : LexOrder::prefix;
}

bool lex_less(const BinaryString& a, const BinaryString& b) {
    return lex_compare(a, b) == LexOrder::less;
}

std::vector<std::pair<BinaryString, BinaryString>> sibling_splits(
    const std::vector<BinaryString>& strings) {
    std::vector<std::pair<BinaryString, BinaryString>> out;
    // Breadth-first over prefixes that head at least one input.
    std::vector<BinaryString> frontier{BinaryString()};
    while (!frontier.empty()) {
        std::vector<BinaryString> next;
        for (const BinaryString& w : frontier) {
            bool has[2] = {false, false};
            for (const BinaryString& s : strings)
                if (s.size() > w.size() && w.is_prefix_of(s))
                    has[s[w.size()]] = true;
            if (has[0] && has[1])
                out.emplace_back(w.extended(0), w.extended(1));
            for (int bit = 0; bit < 2; ++bit)
                if (has[bit])
                    next.push_back(w.extended(bit));
        }
        frontier = std::move(next);
    }
    return out;
}

std::optional<std::pair<BinaryString, BinaryString>> find_incomparable_pair(
    const std::vector<BinaryString>& strings, int threshold) {
    if (threshold < 1)
        throw std::invalid_argument("threshold must be positive");
    const std::size_t need = (strings.size() + threshold - 1) / threshold;
    auto heads = [&](const BinaryString& nu) {
        std::size_t k = 0;
        for (const BinaryString& s : strings)
            k += nu.is_prefix_of(s);
        return k;
    };
    for (auto& split : sibling_splits(strings))
        if (heads(split.first) >= need && heads(split.second) >= need)
            return split;
    return std::nullopt;
}

std::vector<std::size_t> longest_lex_increasing(const std::vector<BinaryString>& strings) {
    const std::size_t n = strings.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            LexOrder o = lex_compare(strings[i], strings[j]);
            if (o == LexOrder::equal)
                throw std::invalid_argument("duplicate label " + strings[i].text());
            if (o == LexOrder::prefix)
                throw std::invalid_argument("labels " + strings[i].text() + " and " + strings[j].text() +
                                            " are prefix-comparable");
        }
    if (n == 0)
        return {};
    std::vector<std::size_t> len(n, 1), prev(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (lex_less(strings[i], strings[j]) && len[i] + 1 > len[j]) {
                len[j] = len[i] + 1;
                prev[j] = i;
            }
    std::size_t end = static_cast<std::size_t>(std::max_element(len.begin(), len.end()) - len.begin());
    std::vector<std::size_t> out;
    for (std::size_t k = end; k != n; k = prev[k])
        out.push_back(k);
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace pcw
