// pcw: command-line front end for the checkers, suites and extractions.
//
// Exit codes: 0 verified, 1 counterexample or violation (see "witness"),
// 2 usage error or malformed input, 3 internal error.

#include "pcw/core.hpp"
#include "pcw/partition.hpp"
#include "pcw/poset.hpp"
#include "pcw/poset_props.hpp"
#include "pcw/reductions.hpp"
#include "pcw/serialize.hpp"
#include "pcw/subposet.hpp"
#include "pcw/topology.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

using namespace pcw;

namespace {

struct Common {
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 1;
    bool timing = false;
};

struct Outcome {
    Json inputs = Json::object();
    std::string mode = "exhaustive";
    Json result = Json::object();
    std::optional<Json> witness;
    bool ok = true;
};

struct Flags {
    std::string params;
    std::string instance;
    int n = 0, m = 0, colors = 2;
    std::string variant = "plain";
    std::uint64_t cap = 0;
    std::uint64_t sample = 0;
    std::string granularity = "kappa";
    int bound = 2;
    int kappa = 0;
    int length = 3;
    int max_chain = 6;
    std::string separation = "density";
    std::string kind = "system";
};

ParamSet load_params(const std::string& path) {
    if (path.empty())
        throw std::invalid_argument("--params FILE is required");
    return read_json_file(path).get<ParamSet>();
}

Json violations_json(const ValidationReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back({{"clause", x.clause}, {"message", x.message}});
    return v;
}

Json levels_json(const ParamSet& p) {
    Json levels = Json::array();
    for (int k : p.theta_list) {
        auto below = level_below(k, p);
        levels.push_back({{"theta", k},
                          {"budget", p.budget(k)},
                          {"partial_sup", partial_sup(k, p)},
                          {"level_below", below ? Json(*below) : Json(nullptr)}});
    }
    return levels;
}

// ------------------------------------------------------------------ params

Outcome cmd_params(const Flags& f, const Common&) {
    Outcome o;
    const ParamSet p = load_params(f.params);
    o.inputs["params"] = p;
    const auto rep = validate_params(p);
    o.result["valid"] = rep.ok();
    o.result["violations"] = violations_json(rep);
    if (!rep.ok()) {
        o.ok = false;
        o.witness = o.result["violations"][0];
        return o;
    }
    const auto om = omega_set(p);
    o.result["levels"] = levels_json(p);
    o.result["omega"] = om.omega;
    o.result["omega_prime"] = om.omega_prime;
    o.result["omega_prime_vacuous"] = om.omega_prime_vacuous;
    return o;
}

// ------------------------------------------------------------- poset-props

Outcome cmd_poset_props(const Flags& f, const Common& c) {
    Outcome o;
    const ParamSet p = load_params(f.params);
    require_valid(p);
    PosetSuiteConfig cfg;
    if (f.cap)
        cfg.enumeration_cap = static_cast<int>(f.cap);
    if (f.sample)
        cfg.samples = f.sample;
    cfg.seed = c.seed;
    o.inputs = {{"params", p}, {"enumeration_cap", cfg.enumeration_cap}, {"samples", cfg.samples}, {"seed", c.seed}};
    const Poset poset(p);
    const auto rep = run_poset_suite(poset, cfg);
    o.mode = rep.mode;
    o.result = rep;
    o.result["ok"] = rep.ok();
    o.ok = rep.ok();
    for (const auto& t : rep.clauses)
        if (t.violations) {
            o.witness = t;
            break;
        }
    return o;
}

// ---------------------------------------------------------- subposet-check

Outcome cmd_subposet(const Flags& f, const Common& c) {
    Outcome o;
    const ParamSet p = load_params(f.params);
    require_valid(p);
    const Poset poset(p);
    const Granularity g = granularity_from_string(f.granularity);
    ReasonableParam y;
    if (!f.instance.empty()) {
        y = read_json_file(f.instance).get<ReasonableParam>();
    } else {
        std::mt19937_64 rng(c.seed);
        const int kappa = f.kappa ? f.kappa : p.theta_list.front();
        y = random_reasonable(poset, kappa, static_cast<std::size_t>(f.length), rng);
    }
    validate_reasonable(y, poset);
    QuadrupleBudget budget;
    budget.max_chain = static_cast<std::size_t>(f.max_chain);
    o.inputs = {{"params", p},
                {"y", y},
                {"support_granularity", to_string(g)},
                {"max_chain", budget.max_chain},
                {"seed", c.seed}};
    const SubPoset q(poset, y, g);
    const auto rep = check_quadruple_axioms(q, budget);
    const auto obs = check_observations(q);
    o.result = {{"members", q.members().size()}, {"quadruple", rep}, {"observations", obs}};
    for (const auto& [k, r] : rep.clauses)
        if (r.status == ClauseStatus::violated && !o.witness)
            o.witness = Json{{"clause", k}, {"detail", r.detail}};
    for (const auto& t : obs)
        if (t.violations && !o.witness)
            o.witness = Json{{"observation", t.clause}, {"detail", t.witness.value_or("")}};
    o.ok = !o.witness;
    o.result["ok"] = o.ok;
    return o;
}

// ---------------------------------------------------------------- relation

Outcome run_relation(const Flags& f, const Common& c, const std::string& variant) {
    Outcome o;
    SearchOptions opt;
    if (f.cap)
        opt.cap = f.cap;
    if (f.sample) {
        opt.sampled = true;
        opt.samples = f.sample;
    }
    opt.seed = c.seed;
    o.inputs = {{"n", f.n}, {"m", f.m}, {"colors", f.colors}, {"variant", variant}, {"cap", opt.cap}};
    if (variant == "square")
        o.inputs["bound"] = f.bound;
    if (opt.sampled) {
        o.inputs["sample"] = opt.samples;
        o.inputs["seed"] = c.seed;
    }

    RelationResult r;
    std::function<bool(const Coloring&)> fails;
    if (variant == "plain" || variant == "mixed") {
        const Variant v = variant_from_string(variant);
        r = relation_holds(f.n, f.m, f.colors, v, opt);
        fails = [&](const Coloring& col) { return !find_config(col, f.m, v); };
    } else if (variant == "ramsey") {
        r = ramsey_holds(f.n, f.m, f.colors, opt);
        fails = [&](const Coloring& col) { return !has_monochromatic(col, f.m); };
    } else if (variant == "square") {
        r = square_bracket_holds(f.n, f.m, f.colors, f.bound, opt);
        fails = [&](const Coloring& col) { return !has_few_colored(col, f.m, f.bound); };
    } else {
        throw std::invalid_argument("unknown variant '" + variant + "'");
    }
    o.mode = r.mode;
    o.result = {{"holds", r.holds}, {"checked", r.checked}, {"space", r.space}};
    if (r.counterexample) {
        o.ok = false;
        o.witness = Json{{"coloring", *r.counterexample}, {"reverified", fails(*r.counterexample)}};
    }
    return o;
}

Outcome cmd_relation(const Flags& f, const Common& c) { return run_relation(f, c, f.variant); }
Outcome cmd_square(const Flags& f, const Common& c) { return run_relation(f, c, "square"); }

// ------------------------------------------------------------------ reduce

Outcome cmd_reduce(const Flags& f, const Common& c) {
    Outcome o;
    ReductionInstance inst;
    if (!f.instance.empty()) {
        const Json j = read_json_file(f.instance);
        inst.lc = j.at("labeled_coloring").get<LabeledColoring>();
        inst.U = j.at("U").get<std::vector<int>>();
        inst.m = j.value("m", 1);
        inst.g = j.value("g", 1);
    } else {
        std::mt19937_64 rng(c.seed);
        inst = random_reduction_instance(rng);
    }
    if (f.m) {
        inst.m = f.m;
        inst.g = f.m;
    }
    const bool ramsey = f.variant == "ramsey";
    if (!ramsey && f.variant != "mixed")
        throw std::invalid_argument("reduce takes --variant mixed or ramsey");
    o.inputs = {{"labeled_coloring", inst.lc}, {"U", inst.U}, {"variant", f.variant}};
    o.inputs[ramsey ? "g" : "m"] = ramsey ? inst.g : inst.m;
    if (f.instance.empty())
        o.inputs["seed"] = c.seed;
    o.result["d_values"] = values_on(build_d(inst.lc), inst.U);
    try {
        if (ramsey) {
            const auto r = extract_ramsey(inst.lc, inst.U, inst.g);
            bool mono = true;
            for (std::size_t i = 0; i < r.vertices.size(); ++i)
                for (std::size_t j = i + 1; j < r.vertices.size(); ++j)
                    mono = mono && inst.lc.c.at(r.vertices[i], r.vertices[j]) == r.color;
            o.result["extracted"] = true;
            o.result["vertices"] = r.vertices;
            o.result["color"] = r.color ? Json(*r.color) : Json(nullptr);
            o.result["longest"] = r.longest;
            o.result["monochromatic"] = mono;
            o.ok = mono;
        } else {
            const auto cfg = extract_polarized(inst.lc, inst.U, inst.m);
            const bool ok = verify_config(inst.lc.c, cfg);
            o.result["extracted"] = true;
            o.result["config"] = cfg;
            o.result["verified"] = ok;
            o.ok = ok;
        }
    } catch (const ReductionError& e) {
        o.result["extracted"] = false;
        o.ok = false;
        o.witness = Json{{"kind", e.kind()}, {"message", e.what()}};
    }
    return o;
}

// -------------------------------------------------------------------- topo

Outcome topo_space(const Flags& f, const Common& c) {
    Outcome o;
    std::optional<FiniteSpace> x;
    if (!f.instance.empty()) {
        x = space_from_json(read_json_file(f.instance));
    } else {
        std::mt19937_64 rng(c.seed);
        x = random_space(f.n ? f.n : 6, rng);
        o.inputs["seed"] = c.seed;
    }
    o.inputs["kind"] = "space";
    o.inputs["space"] = *x;
    const auto inv = invariants(*x);
    o.result = {{"density", inv.density}, {"hd", inv.hd},           {"hL", inv.hL},
                {"spread", inv.spread},   {"hd_plus", inv.hd_plus}, {"hL_plus", inv.hL_plus},
                {"spread_plus", inv.spread_plus}, {"t1", is_t1(*x)}};
    if (auto w = hL_witness(*x, inv.hL)) {
        Json seq = Json::array();
        for (std::size_t i = 0; i < w->points.size(); ++i)
            seq.push_back(Json::array({w->points[i], mask_to_json(w->opens[i])}));
        o.result["hL_witness"] = seq;
    }
    return o;
}

Outcome topo_system(const Flags& f, const Common& c) {
    Outcome o;
    const SeparationMode mode = mode_from_string(f.separation);
    SeparationSystem sys;
    if (!f.instance.empty()) {
        sys = read_json_file(f.instance).get<SeparationSystem>();
    } else {
        std::mt19937_64 rng(c.seed);
        sys = random_system(mode, f.n ? f.n : 8, rng);
        o.inputs["seed"] = c.seed;
    }
    validate(sys, mode);
    const int target = f.m ? f.m : 2;
    o.inputs["kind"] = "system";
    o.inputs["separation"] = to_string(mode);
    o.inputs["m"] = target;
    o.inputs["system"] = sys;
    const Coloring col = coloring_from_system(sys, mode);
    o.result["coloring"] = col;
    o.result["config"] = nullptr;
    o.result["family"] = nullptr;
    for (int m = target; m >= 1; --m) {
        auto cfg = find_config(col, m, Variant::mixed);
        if (!cfg || (cfg->epsilon == 1 && m < 2))
            continue;
        o.result["config"] = *cfg;
        try {
            const auto fam = discrete_from_config(sys, *cfg, mode);
            o.result["family"] = fam;
            o.result["discrete"] = true;
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const std::invalid_argument*>(&e))
                throw;
            o.result["discrete"] = false;
            o.ok = false;
            o.witness = Json{{"config", *cfg}, {"message", e.what()}};
        }
        break;
    }
    return o;
}

Outcome cmd_topo(const Flags& f, const Common& c) {
    if (f.kind == "space")
        return topo_space(f, c);
    if (f.kind == "system")
        return topo_system(f, c);
    throw std::invalid_argument("--kind must be system or space");
}

// ------------------------------------------------------------ demo-presets

// Budgets equal to levels, with the doubling successor standing in for theta+.
Outcome cmd_demo(const Flags&, const Common&) {
    Outcome o;
    Json presets = Json::array();
    for (int lambda : {2, 3})
        for (int k = 1; k <= 3; ++k) {
            ParamSet p;
            p.lambda = lambda;
            for (int i = 0, t = lambda; i <= k; ++i, t *= 2) {
                p.theta_list.push_back(t);
                p.budgets[t] = t;
            }
            p.mu = p.theta_list.back();
            const auto rep = validate_params(p);
            Json e = {{"params", p}, {"valid", rep.ok()}, {"violations", violations_json(rep)}};
            if (rep.ok()) {
                bool successor = true;
                for (std::size_t i = 0; i < p.theta_list.size(); ++i) {
                    const int t = p.theta_list[i];
                    const int next = i + 1 < p.theta_list.size() ? p.theta_list[i + 1] : p.mu;
                    successor = successor && partial_sup(t, p) == std::min(next, p.mu);
                }
                e["levels"] = levels_json(p);
                e["omega"] = omega_set(p).omega;
                e["partial_sup_is_successor"] = successor;
                if (!successor && !o.witness)
                    o.witness = e;
            } else if (!o.witness) {
                o.witness = e;
            }
            presets.push_back(e);
        }
    o.ok = !o.witness;
    o.result = {{"presets", presets}, {"ok", o.ok}};
    return o;
}

// -------------------------------------------------------------------- main

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--out", c.out, "Write the report to FILE instead of stdout");
    sub->add_option("--seed", c.seed, "Seed for sampling and generators");
    sub->add_flag("--timing", c.timing, "Record wall-clock time in timing_ms");
}

void add_search(CLI::App* sub, Flags& f) {
    sub->add_option("--n", f.n, "Vertices")->required()->check(CLI::Range(1, 64));
    sub->add_option("--m", f.m, "Target size")->required()->check(CLI::PositiveNumber);
    sub->add_option("--colors", f.colors, "Colors")->check(CLI::Range(1, 64));
    sub->add_option("--cap", f.cap, "Largest exhaustive space")->check(CLI::PositiveNumber);
    sub->add_option("--sample", f.sample, "Sample N colorings instead of exhausting")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite checkers for half-graph partition relations and condition posets"};
    app.require_subcommand(1);
    Common common;
    Flags f;

    auto* params = app.add_subcommand("params", "Validate a parameter set");
    params->add_option("--params", f.params, "ParamSet JSON")->required();

    auto* poset = app.add_subcommand("poset-props", "Run the condition-order property suite");
    poset->add_option("--params", f.params, "ParamSet JSON")->required();
    poset->add_option("--cap", f.cap, "Enumeration cap (mu)")->check(CLI::PositiveNumber);
    poset->add_option("--sample", f.sample, "Samples per triple clause")->check(CLI::PositiveNumber);

    auto* sub = app.add_subcommand("subposet-check", "Check the quadruple axioms on a sub-poset");
    sub->add_option("--params", f.params, "ParamSet JSON")->required();
    sub->add_option("--instance", f.instance, "Reasonable parameter JSON (generated from --seed if absent)");
    sub->add_option("--kappa", f.kappa, "Level for a generated parameter");
    sub->add_option("--length", f.length, "Chain length for a generated parameter")->check(CLI::Range(1, 16));
    sub->add_option("--max-chain", f.max_chain, "Chain bound for the bounded clauses")->check(CLI::Range(1, 16));
    sub->add_option("--support-granularity", f.granularity, "Membership support")
        ->check(CLI::IsMember({"kappa", "theta"}));

    auto* rel = app.add_subcommand("relation", "Decide a partition relation on tiny n");
    add_search(rel, f);
    rel->add_option("--variant", f.variant, "Relation")->check(CLI::IsMember({"plain", "mixed", "ramsey", "square"}));
    rel->add_option("--bound", f.bound, "Colors allowed on the set (square)")->check(CLI::PositiveNumber);

    auto* sq = app.add_subcommand("square-bracket", "Decide a square-bracket relation on tiny n");
    add_search(sq, f);
    sq->add_option("--bound", f.bound, "Colors allowed on the set")->check(CLI::PositiveNumber);

    auto* red = app.add_subcommand("reduce", "Extract a config or a monochromatic run from a labeled coloring");
    red->add_option("--instance", f.instance, "Instance JSON {labeled_coloring, U, m, g} (generated if absent)");
    red->add_option("--m", f.m, "Target size")->check(CLI::PositiveNumber);
    red->add_option("--variant", f.variant, "Extraction")->check(CLI::IsMember({"mixed", "ramsey"}));

    auto* topo = app.add_subcommand("topo", "Finite-space invariants or discrete-family extraction");
    topo->add_option("--kind", f.kind, "system or space")->check(CLI::IsMember({"system", "space"}));
    topo->add_option("--separation", f.separation, "Coloring rule")->check(CLI::IsMember({"density", "lindelof"}));
    topo->add_option("--instance", f.instance, "SeparationSystem or FiniteSpace JSON");
    topo->add_option("--n", f.n, "Points for a generated instance")->check(CLI::Range(1, 21));
    topo->add_option("--m", f.m, "Target config size")->check(CLI::PositiveNumber);

    auto* demo = app.add_subcommand("demo-presets", "Materialize the budget-equals-level presets");

    for (auto* s : {params, poset, sub, rel, sq, red, topo, demo})
        add_common(s, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (red->parsed() && f.variant == "plain")
        f.variant = "mixed";

    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (name == "params")
            out = cmd_params(f, common);
        else if (name == "poset-props")
            out = cmd_poset_props(f, common);
        else if (name == "subposet-check")
            out = cmd_subposet(f, common);
        else if (name == "relation")
            out = cmd_relation(f, common);
        else if (name == "square-bracket")
            out = cmd_square(f, common);
        else if (name == "reduce")
            out = cmd_reduce(f, common);
        else if (name == "topo")
            out = cmd_topo(f, common);
        else
            out = cmd_demo(f, common);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << " (pass --sample N or raise --cap)\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    Json report = {{"subcommand", name}, {"inputs", out.inputs}, {"mode", out.mode}, {"result", out.result}};
    if (out.witness)
        report["witness"] = *out.witness;
    report["timing_ms"] = common.timing ? Json(ms) : Json(nullptr);

    const std::string text = common.format == "tsv" ? to_tsv(report) : report.dump(2) + "\n";
    if (common.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(common.out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write " << common.out << "\n";
            return 2;
        }
        file << text;
    }
    return out.ok ? 0 : 1;
}
