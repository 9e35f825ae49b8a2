#include "pcw/partition.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace pcw {

const char* to_string(Variant v) {
    return v == Variant::plain ? "plain" : "mixed";
}

Variant variant_from_string(const std::string& s) {
    if (s == "plain")
        return Variant::plain;
    if (s == "mixed")
        return Variant::mixed;
    throw std::invalid_argument("variant must be plain or mixed, got " + s);
}

// ---------------------------------------------------------------- Coloring

Coloring::Coloring(int n_, int colors_, int fill) : n(n_), colors(colors_) {
    if (n < 0 || n > 64)
        throw std::invalid_argument("coloring needs 0 <= n <= 64");
    if (colors < 1 || colors > 64)
        throw std::invalid_argument("coloring needs 1 <= colors <= 64");
    if (fill < 0 || fill >= colors)
        throw std::invalid_argument("fill color out of range");
    table.assign(pair_count(n), static_cast<std::uint8_t>(fill));
}

std::size_t Coloring::index(int i, int j) const {
    if (i > j)
        std::swap(i, j);
    if (i < 0 || j >= n || i == j)
        throw std::out_of_range("pair {" + std::to_string(i) + "," + std::to_string(j) + "} outside [n]^2");
    return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

void Coloring::set(int i, int j, int c) {
    if (c < 0 || c >= colors)
        throw std::invalid_argument("color out of range");
    table[index(i, j)] = static_cast<std::uint8_t>(c);
}

void validate(const Coloring& c) {
    if (c.n < 0 || c.n > 64 || c.colors < 1 || c.colors > 64)
        throw std::invalid_argument("coloring shape out of range");
    if (c.table.size() != Coloring::pair_count(c.n))
        throw std::invalid_argument("coloring table has " + std::to_string(c.table.size()) + " entries, expected " +
                                    std::to_string(Coloring::pair_count(c.n)));
    for (auto v : c.table)
        if (v >= c.colors)
            throw std::invalid_argument("coloring uses color " + std::to_string(v) + " of " +
                                        std::to_string(c.colors));
}

std::optional<std::uint64_t> coloring_count(int n, int colors, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < Coloring::pair_count(n); ++k) {
        if (total > cap / static_cast<std::uint64_t>(colors))
            return std::nullopt;
        total *= static_cast<std::uint64_t>(colors);
    }
    if (total > cap)
        return std::nullopt;
    return total;
}

Coloring coloring_from_index(int n, int colors, std::uint64_t idx) {
    Coloring c(n, colors);
    for (std::size_t k = c.table.size(); k-- > 0;) {
        c.table[k] = static_cast<std::uint8_t>(idx % colors);
        idx /= colors;
    }
    return c;
}

Coloring random_coloring(int n, int colors, std::mt19937_64& rng) {
    Coloring c(n, colors);
    std::uniform_int_distribution<int> d(0, colors - 1);
    for (auto& v : c.table)
        v = static_cast<std::uint8_t>(d(rng));
    return c;
}

// ---------------------------------------------------------------- configs

namespace {

void require_index(const Coloring& c, int v) {
    if (v < 0 || v >= c.n)
        throw std::invalid_argument("config vertex " + std::to_string(v) + " outside [0, " + std::to_string(c.n) + ")");
}

bool half_graph(const Coloring& c, int m, int eps, std::vector<int>& t, int pos) {
    if (pos == 2 * m)
        return true;
    const int start = pos == 0 ? 0 : t[pos - 1] + 1;
    for (int v = start; v <= c.n - (2 * m - pos); ++v) {
        if (pos % 2 == 1) {
            bool ok = true;
            for (int i = 0; i <= pos / 2 && ok; ++i)
                ok = c.at(t[2 * i], v) == eps;
            if (!ok)
                continue;
        }
        t[pos] = v;
        if (half_graph(c, m, eps, t, pos + 1))
            return true;
    }
    return false;
}

bool clique(const Coloring& c, int m, int eps, std::vector<int>& t, int pos) {
    if (pos == m)
        return true;
    const int start = pos == 0 ? 0 : t[pos - 1] + 1;
    for (int v = start; v <= c.n - (m - pos); ++v) {
        bool ok = true;
        for (int i = 0; i < pos && ok; ++i)
            ok = c.at(t[i], v) == eps;
        if (!ok)
            continue;
        t[pos] = v;
        if (clique(c, m, eps, t, pos + 1))
            return true;
    }
    return false;
}

HalfGraphConfig split(Variant v, int eps, const std::vector<int>& t) {
    HalfGraphConfig cfg{v, eps, {}, {}};
    for (std::size_t k = 0; k < t.size(); ++k)
        (k % 2 ? cfg.betas : cfg.alphas).push_back(t[k]);
    return cfg;
}

}  // namespace

bool verify_config(const Coloring& c, const HalfGraphConfig& cfg) {
    if (cfg.epsilon < 0 || cfg.epsilon >= c.colors)
        throw std::invalid_argument("epsilon outside the color range");
    if (cfg.alphas.empty())
        throw std::invalid_argument("config has no alphas");
    const bool clique_case = cfg.variant == Variant::mixed && cfg.epsilon == 0;
    if (clique_case ? !cfg.betas.empty() : cfg.betas.size() != cfg.alphas.size())
        throw std::invalid_argument(clique_case ? "mixed epsilon 0 config carries betas"
                                                : "alphas and betas differ in length");
    for (int v : cfg.alphas)
        require_index(c, v);
    for (int v : cfg.betas)
        require_index(c, v);

    const std::size_t m = cfg.alphas.size();
    if (clique_case) {
        for (std::size_t i = 0; i + 1 < m; ++i)
            if (cfg.alphas[i] >= cfg.alphas[i + 1])
                return false;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (c.at(cfg.alphas[i], cfg.alphas[j]) != 0)
                    return false;
        return true;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (cfg.alphas[i] >= cfg.betas[i])
            return false;
        if (i + 1 < m && cfg.betas[i] >= cfg.alphas[i + 1])
            return false;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            if (c.at(cfg.alphas[i], cfg.betas[j]) != cfg.epsilon)
                return false;
    return true;
}

std::optional<HalfGraphConfig> find_config(const Coloring& c, int m, Variant v) {
    if (m < 1)
        throw std::invalid_argument("find_config needs m >= 1");
    if (v == Variant::mixed) {
        std::vector<int> t(static_cast<std::size_t>(m));
        if (clique(c, m, 0, t, 0))
            return HalfGraphConfig{v, 0, t, {}};
    }
    std::vector<int> t(static_cast<std::size_t>(2 * m));
    for (int eps = v == Variant::mixed ? 1 : 0; eps < c.colors; ++eps)
        if (half_graph(c, m, eps, t, 0))
            return split(v, eps, t);
    return std::nullopt;
}

bool has_monochromatic(const Coloring& c, int m) {
    if (m <= 1)
        return c.n >= m;
    std::vector<int> t(static_cast<std::size_t>(m));
    for (int eps = 0; eps < c.colors; ++eps)
        if (clique(c, m, eps, t, 0))
            return true;
    return false;
}

namespace {

bool few_colored(const Coloring& c, int s, int bound, std::vector<int>& t, int pos, std::uint64_t used) {
    if (pos == s)
        return true;
    const int start = pos == 0 ? 0 : t[pos - 1] + 1;
    for (int v = start; v <= c.n - (s - pos); ++v) {
        std::uint64_t u = used;
        for (int i = 0; i < pos; ++i)
            u |= std::uint64_t{1} << c.at(t[i], v);
        if (__builtin_popcountll(u) > bound)
            continue;
        t[pos] = v;
        if (few_colored(c, s, bound, t, pos + 1, u))
            return true;
    }
    return false;
}

}  // namespace

bool has_few_colored(const Coloring& c, int setsize, int bound) {
    if (setsize < 0 || bound < 0)
        throw std::invalid_argument("setsize and bound must be nonnegative");
    std::vector<int> t(static_cast<std::size_t>(setsize));
    return few_colored(c, setsize, bound, t, 0, 0);
}

// ---------------------------------------------------------------- searches

namespace {

Coloring sample_coloring(int n, int colors, std::uint64_t seed, std::uint64_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    return random_coloring(n, colors, rng);
}

struct Space {
    std::uint64_t total;
    bool sampled;
};

Space space_of(int n, int colors, const SearchOptions& opt) {
    if (n < 0 || n > 64 || colors < 1 || colors > 64)
        throw std::invalid_argument("search needs 0 <= n <= 64 and 1 <= colors <= 64");
    auto total = coloring_count(n, colors, opt.cap);
    if (total && !opt.sampled)
        return {*total, false};
    if (!opt.sampled)
        throw std::length_error(std::to_string(colors) + "^" + std::to_string(Coloring::pair_count(n)) +
                                " colorings exceed the cap of " + std::to_string(opt.cap) + "; use sampling");
    return {opt.samples, true};
}

Coloring nth(int n, int colors, const Space& sp, const SearchOptions& opt, std::uint64_t i) {
    return sp.sampled ? sample_coloring(n, colors, opt.seed, i) : coloring_from_index(n, colors, i);
}

RelationResult finish(int n, int colors, const Space& sp, const SearchOptions& opt, std::uint64_t bad) {
    RelationResult r;
    r.mode = sp.sampled ? "sampled" : "exhaustive";
    r.space = sp.sampled ? 0 : sp.total;
    r.holds = bad == sp.total;
    r.checked = r.holds ? sp.total : bad + 1;
    if (!r.holds)
        r.counterexample = nth(n, colors, sp, opt, bad);
    return r;
}

ColoringPredicate relation_pred(int m, Variant v) {
    if (m < 1)
        throw std::invalid_argument("relation needs m >= 1");
    return [m, v](const Coloring& c) { return find_config(c, m, v).has_value(); };
}

ColoringPredicate ramsey_pred(int m) {
    if (m < 1)
        throw std::invalid_argument("ramsey needs m >= 1");
    return [m](const Coloring& c) { return has_monochromatic(c, m); };
}

ColoringPredicate bracket_pred(int s, int bound) {
    if (s < 1 || bound < 1)
        throw std::invalid_argument("square bracket needs setsize >= 1 and bound >= 1");
    return [s, bound](const Coloring& c) { return has_few_colored(c, s, bound); };
}

}  // namespace

RelationResult search_colorings(int n, int colors, const ColoringPredicate& good, const SearchOptions& opt) {
    const Space sp = space_of(n, colors, opt);
    std::atomic<std::uint64_t> best{sp.total};
    const auto total = static_cast<std::int64_t>(sp.total);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t k = 0; k < total; ++k) {
        const auto i = static_cast<std::uint64_t>(k);
        if (i >= best.load(std::memory_order_relaxed))
            continue;
        if (good(nth(n, colors, sp, opt, i)))
            continue;
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
    }
    return finish(n, colors, sp, opt, best.load());
}

RelationResult relation_holds(int n, int m, int colors, Variant v, const SearchOptions& opt) {
    return search_colorings(n, colors, relation_pred(m, v), opt);
}

RelationResult relation_holds_below(int n, int m, int colors, Variant v, const SearchOptions& opt) {
    return search_colorings(
        n, colors,
        [m, v](const Coloring& c) {
            for (int k = 1; k < m; ++k)
                if (!find_config(c, k, v))
                    return false;
            return true;
        },
        opt);
}

RelationResult ramsey_holds(int n, int m, int colors, const SearchOptions& opt) {
    return search_colorings(n, colors, ramsey_pred(m), opt);
}

RelationResult square_bracket_holds(int n, int setsize, int colors, int bound, const SearchOptions& opt) {
    return search_colorings(n, colors, bracket_pred(setsize, bound), opt);
}

namespace serial {

RelationResult search_colorings(int n, int colors, const ColoringPredicate& good, const SearchOptions& opt) {
    const Space sp = space_of(n, colors, opt);
    std::uint64_t i = 0;
    while (i < sp.total && good(nth(n, colors, sp, opt, i)))
        ++i;
    return finish(n, colors, sp, opt, i);
}

RelationResult relation_holds(int n, int m, int colors, Variant v, const SearchOptions& opt) {
    return serial::search_colorings(n, colors, relation_pred(m, v), opt);
}

RelationResult ramsey_holds(int n, int m, int colors, const SearchOptions& opt) {
    return serial::search_colorings(n, colors, ramsey_pred(m), opt);
}

RelationResult square_bracket_holds(int n, int setsize, int colors, int bound, const SearchOptions& opt) {
    return serial::search_colorings(n, colors, bracket_pred(setsize, bound), opt);
}

}  // namespace serial

// ---------------------------------------------------------------- table

std::vector<RelationEntry> relation_table(int n_max, int m_max, int colors_max, Variant v, const SearchOptions& opt) {
    std::vector<RelationEntry> out;
    for (int n = 1; n <= n_max; ++n)
        for (int m = 1; m <= m_max; ++m)
            for (int k = 1; k <= colors_max; ++k)
                out.push_back({n, m, k, v, relation_holds(n, m, k, v, opt).holds});
    return out;
}

std::vector<std::pair<RelationEntry, RelationEntry>> monotonicity_violations(const std::vector<RelationEntry>& table) {
    std::vector<std::pair<RelationEntry, RelationEntry>> out;
    for (const auto& a : table) {
        if (!a.holds)
            continue;
        for (const auto& b : table)
            if (b.variant == a.variant && !b.holds && b.n >= a.n && b.m <= a.m && b.colors <= a.colors)
                out.emplace_back(a, b);
    }
    return out;
}

bool mixed_implies_plain(const Coloring& c, int m_mixed, int m_plain) {
    return !find_config(c, m_mixed, Variant::mixed) || find_config(c, m_plain, Variant::plain).has_value();
}

// ---------------------------------------------------------------- rectangles

std::optional<std::pair<std::vector<int>, std::vector<int>>> polarized_11_check(const Rectangle& rect, int xi) {
    if (xi < 1)
        throw std::invalid_argument("xi must be positive");
    const int rows = static_cast<int>(rect.size());
    const int cols = rows ? static_cast<int>(rect[0].size()) : 0;
    for (const auto& r : rect)
        if (static_cast<int>(r.size()) != cols)
            throw std::invalid_argument("ragged rectangle");
    if (rows < xi || cols < xi)
        throw std::invalid_argument("rectangle smaller than xi");

    std::vector<int> pick(static_cast<std::size_t>(xi));
    for (int k = 0; k < xi; ++k)
        pick[k] = k;
    while (true) {
        std::optional<std::vector<int>> best;
        std::vector<std::vector<int>> by_color;
        for (int j = 0; j < cols; ++j) {
            const int col = rect[pick[0]][j];
            bool same = true;
            for (int r : pick)
                same = same && rect[r][j] == col;
            if (!same || col < 0)
                continue;
            if (static_cast<int>(by_color.size()) <= col)
                by_color.resize(col + 1);
            by_color[col].push_back(j);
        }
        for (auto& v : by_color)
            if (static_cast<int>(v.size()) >= xi) {
                v.resize(xi);
                if (!best || v < *best)
                    best = v;
            }
        if (best)
            return std::make_pair(pick, *best);
        int k = xi - 1;
        while (k >= 0 && pick[k] == rows - xi + k)
            --k;
        if (k < 0)
            return std::nullopt;
        ++pick[k];
        for (int t = k + 1; t < xi; ++t)
            pick[t] = pick[t - 1] + 1;
    }
}

}  // namespace pcw
