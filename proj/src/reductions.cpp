#include "pcw/reductions.hpp"

#include <algorithm>
#include <set>

namespace pcw {

void validate(const LabeledColoring& lc) {
    validate(lc.c);
    if (static_cast<int>(lc.labels.size()) != lc.c.n)
        throw std::invalid_argument("need one label per vertex");
    std::set<BinaryString> seen;
    for (const auto& l : lc.labels) {
        if (l.size() != lc.labels[0].size())
            throw std::invalid_argument("labels differ in length");
        if (!seen.insert(l).second)
            throw std::invalid_argument("label " + l.text() + " repeats");
    }
}

Coloring build_d(const LabeledColoring& lc) {
    validate(lc);
    Coloring d(lc.c.n, 2 * lc.c.colors);
    for (int a = 0; a < lc.c.n; ++a)
        for (int b = a + 1; b < lc.c.n; ++b)
            d.set(a, b, 2 * lc.c.at(a, b) + (lex_less(lc.labels[a], lc.labels[b]) ? 1 : 0));
    return d;
}

std::vector<int> values_on(const Coloring& d, const std::vector<int>& U) {
    std::set<int> v;
    for (std::size_t i = 0; i < U.size(); ++i)
        for (std::size_t j = i + 1; j < U.size(); ++j)
            v.insert(d.at(U[i], U[j]));
    return {v.begin(), v.end()};
}

namespace {

std::string show(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

// Sorted, deduplicated, in range; returns the values of d on it.
std::vector<int> prepare(const LabeledColoring& lc, const Coloring& d, std::vector<int>& U) {
    std::sort(U.begin(), U.end());
    if (std::adjacent_find(U.begin(), U.end()) != U.end())
        throw std::invalid_argument("U repeats a vertex");
    for (int v : U)
        if (v < 0 || v >= lc.c.n)
            throw std::invalid_argument("U vertex " + std::to_string(v) + " out of range");
    auto vals = values_on(d, U);
    if (vals.size() > 2)
        throw ReductionError("hypothesis", "d takes " + std::to_string(vals.size()) + " values " + show(vals) +
                                               " on U, at most 2 allowed");
    return vals;
}

std::vector<BinaryString> labels_of(const LabeledColoring& lc, const std::vector<int>& U) {
    std::vector<BinaryString> out;
    for (int v : U)
        out.push_back(lc.labels[v]);
    return out;
}

BinaryString complement(const BinaryString& s) {
    std::string t = s.text();
    for (char& ch : t)
        ch = ch == '0' ? '1' : '0';
    return BinaryString(t);
}

// Greedy alternation: first vertex heading `a`, next heading `b`, and so on.
std::optional<HalfGraphConfig> interleave(const LabeledColoring& lc, const std::vector<int>& U, int m, int eps,
                                          const BinaryString& a, const BinaryString& b) {
    HalfGraphConfig cfg{Variant::mixed, eps, {}, {}};
    for (int v : U) {
        if (static_cast<int>(cfg.betas.size()) == m)
            break;
        const bool want_alpha = cfg.alphas.size() == cfg.betas.size();
        const BinaryString& head = want_alpha ? a : b;
        if (head.is_prefix_of(lc.labels[v]))
            (want_alpha ? cfg.alphas : cfg.betas).push_back(v);
    }
    if (static_cast<int>(cfg.betas.size()) < m)
        return std::nullopt;
    return cfg;
}

}  // namespace

HalfGraphConfig extract_polarized(const LabeledColoring& lc, std::vector<int> U, int m) {
    if (m < 1)
        throw std::invalid_argument("extract_polarized needs m >= 1");
    const Coloring d = build_d(lc);
    const auto vals = prepare(lc, d, U);
    const int n = static_cast<int>(U.size());

    auto checked = [&](HalfGraphConfig cfg) {
        if (!verify_config(lc.c, cfg))
            throw std::logic_error("extract_polarized produced an invalid config");
        return cfg;
    };
    auto clique_zero = [&](const std::vector<int>& from) {
        return checked({Variant::mixed, 0, std::vector<int>(from.begin(), from.begin() + m), {}});
    };

    // colors on U are all 0
    if (std::all_of(vals.begin(), vals.end(), [](int v) { return v / 2 == 0; })) {
        if (n < m)
            throw ReductionError("too-small", "U has " + std::to_string(n) + " vertices, need " + std::to_string(m));
        return clique_zero(U);
    }
    // one nonzero value: any interleaving of U
    if (vals.size() == 1) {
        if (n < 2 * m)
            throw ReductionError("too-small",
                                 "U has " + std::to_string(n) + " vertices, need " + std::to_string(2 * m));
        HalfGraphConfig cfg{Variant::mixed, vals[0] / 2, {}, {}};
        for (int i = 0; i < 2 * m; ++i)
            (i % 2 ? cfg.betas : cfg.alphas).push_back(U[i]);
        return checked(cfg);
    }
    if (vals[0] % 2 == vals[1] % 2)
        throw ReductionError("hypothesis", "both values " + show(vals) + " have the same parity");

    const int eps_even = (vals[0] % 2 ? vals[1] : vals[0]) / 2;  // lex-decreasing pairs
    const int eps_odd = (vals[0] % 2 ? vals[0] : vals[1]) / 2;   // lex-increasing pairs
    const auto labels = labels_of(lc, U);
    const auto split = find_incomparable_pair(labels, 2);
    if (split) {
        const auto& [nu0, nu1] = *split;
        if (eps_odd != 0)
            if (auto cfg = interleave(lc, U, m, eps_odd, nu0, nu1))
                return checked(*cfg);
        if (eps_even != 0)
            if (auto cfg = interleave(lc, U, m, eps_even, nu1, nu0))
                return checked(*cfg);
    }
    // a zero value on one direction: a monotone run of length m
    for (bool up : {true, false}) {
        if ((up ? eps_odd : eps_even) != 0)
            continue;
        std::vector<BinaryString> keys = labels;
        if (!up)
            for (auto& k : keys)
                k = complement(k);
        const auto run = longest_lex_increasing(keys);
        if (static_cast<int>(run.size()) >= m) {
            std::vector<int> picked;
            for (auto i : run)
                picked.push_back(U[i]);
            return clique_zero(picked);
        }
    }
    if (!split)
        throw ReductionError("no-split", "no two incomparable prefixes each head half of U");
    throw ReductionError("too-small", "the prefix groups of U interleave fewer than " + std::to_string(m) +
                                          " times");
}

RamseyExtraction extract_ramsey(const LabeledColoring& lc, std::vector<int> U, int g) {
    if (g < 1)
        throw std::invalid_argument("extract_ramsey needs g >= 1");
    const Coloring d = build_d(lc);
    const auto vals = prepare(lc, d, U);
    const auto run = longest_lex_increasing(labels_of(lc, U));
    RamseyExtraction out;
    out.longest = run.size();
    if (static_cast<int>(run.size()) < g)
        throw ReductionError("no-increasing", "longest lex-increasing run in U has length " +
                                                  std::to_string(run.size()) + ", need " + std::to_string(g));
    for (int k = 0; k < g; ++k)
        out.vertices.push_back(U[run[k]]);
    for (int v : vals)
        if (v % 2)
            out.color = v / 2;
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            if (lc.c.at(out.vertices[i], out.vertices[j]) != out.color)
                throw ReductionError("hypothesis", "lex-increasing run is not monochromatic; d values " + show(vals));
    if (g < 2)
        out.color.reset();
    return out;
}

bool sierpinski_exclusion_holds(const LabeledColoring& lc, const std::vector<int>& U) {
    const Coloring d = build_d(lc);
    bool up = false, down = false;
    for (std::size_t i = 0; i < U.size(); ++i)
        for (std::size_t j = i + 1; j < U.size(); ++j) {
            const int a = std::min(U[i], U[j]), b = std::max(U[i], U[j]);
            (lex_less(lc.labels[a], lc.labels[b]) ? up : down) = true;
        }
    const auto vals = values_on(d, U);
    if (!(up && down) || vals.size() > 2)
        return true;
    return vals.size() == 1 || vals[0] % 2 != vals[1] % 2;
}

ReductionInstance random_reduction_instance(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    ReductionInstance inst;
    inst.m = pick(1, 3);
    const int usize = 2 * inst.m + 2;
    const int n = usize + pick(0, 6);
    const int colors = pick(2, 4);
    const bool monotone = pick(0, 4) == 0;
    const int stem_len = pick(0, 2);
    const int len = stem_len + 1 + pick(3, 4);

    auto bits = [&](int k) {
        std::string s;
        for (int i = 0; i < k; ++i)
            s += static_cast<char>('0' + pick(0, 1));
        return s;
    };

    std::vector<int> all(n);
    for (int i = 0; i < n; ++i)
        all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    inst.U.assign(all.begin(), all.begin() + usize);
    std::sort(inst.U.begin(), inst.U.end());

    std::set<std::string> used;
    std::vector<std::string> text(n);
    const std::string stem = bits(stem_len);
    const int start = pick(0, 1);
    for (int k = 0; k < usize; ++k) {
        std::string s;
        do
            s = stem + static_cast<char>('0' + (start + k) % 2) + bits(len - stem_len - 1);
        while (!used.insert(s).second);
        text[inst.U[k]] = s;
    }
    if (monotone) {
        std::vector<std::string> sorted;
        for (int v : inst.U)
            sorted.push_back(text[v]);
        std::sort(sorted.begin(), sorted.end());
        for (int k = 0; k < usize; ++k)
            text[inst.U[k]] = sorted[k];
    }
    for (int v = 0; v < n; ++v)
        if (text[v].empty()) {
            std::string s;
            do
                s = bits(len);
            while (!used.insert(s).second);
            text[v] = s;
        }
    for (const auto& s : text)
        inst.lc.labels.emplace_back(s);

    inst.lc.c = random_coloring(n, colors, rng);
    const int eps_odd = pick(0, colors - 1), eps_even = pick(0, colors - 1);
    for (int i = 0; i < usize; ++i)
        for (int j = i + 1; j < usize; ++j) {
            const int a = inst.U[i], b = inst.U[j];
            inst.lc.c.set(a, b, lex_less(inst.lc.labels[a], inst.lc.labels[b]) ? eps_odd : eps_even);
        }

    std::vector<BinaryString> ul;
    for (int v : inst.U)
        ul.push_back(inst.lc.labels[v]);
    inst.g = static_cast<int>(longest_lex_increasing(ul).size());
    return inst;
}

}  // namespace pcw
