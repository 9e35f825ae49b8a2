#include "pcw/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pcw {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object())
        throw std::invalid_argument(std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string("missing key '") + key + "'");
    return *it;
}

template <class T>
T as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad ") + what + ": " + e.what());
    }
}

std::vector<int> ints(const Json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + " must be a list");
    return as<std::vector<int>>(j, what);
}

}  // namespace

// ------------------------------------------------------------------ params

void to_json(Json& j, const ParamSet& p) {
    Json budgets = Json::object();
    for (const auto& [k, v] : p.budgets)
        budgets[std::to_string(k)] = v;
    j = Json{{"lambda", p.lambda}, {"mu", p.mu}, {"theta_list", p.theta_list}, {"budgets", budgets}};
}

void from_json(const Json& j, ParamSet& p) {
    p.lambda = as<int>(field(j, "lambda"), "lambda");
    p.mu = as<int>(field(j, "mu"), "mu");
    p.theta_list = ints(field(j, "theta_list"), "theta_list");
    p.budgets.clear();
    const Json& b = field(j, "budgets");
    if (!b.is_object())
        throw std::invalid_argument("budgets must map levels to integers");
    for (const auto& [k, v] : b.items()) {
        std::size_t used = 0;
        int level = 0;
        try {
            level = std::stoi(k, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != k.size())
            throw std::invalid_argument("budget key '" + k + "' is not an integer");
        p.budgets[level] = as<int>(v, "budget");
    }
}

// -------------------------------------------------------------- conditions

void to_json(Json& j, const Condition& c) {
    j = Json::array();
    for (const auto& [i, b] : c.pairs())
        j.push_back(Json::array({i, b}));
}

void from_json(const Json& j, Condition& c) {
    if (!j.is_array())
        throw std::invalid_argument("a condition is a list of [index, bit] pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("condition entry " + e.dump() + " is not an [index, bit] pair");
        pairs.emplace_back(as<int>(e[0], "index"), as<int>(e[1], "bit"));
    }
    c = Condition::from_pairs(pairs);
}

Json growth_to_json(const GrowthProfile& g) {
    Json j = Json::object();
    for (const auto& [k, blocks] : g)
        j[std::to_string(k)] = blocks;
    return j;
}

Json mask_to_json(Mask m) {
    Json j = Json::array();
    for (int i : set_of(m))
        j.push_back(i);
    return j;
}

Mask mask_from_json(const Json& j) {
    Mask m = 0;
    for (int i : ints(j, "point set")) {
        if (i < 0 || i >= kMaxGround)
            throw std::invalid_argument("point " + std::to_string(i) + " out of range");
        m |= bit(i);
    }
    return m;
}

void to_json(Json& j, const ReasonableParam& y) {
    Json u = Json::array();
    for (Mask m : y.u_chain)
        u.push_back(mask_to_json(m));
    j = Json{{"kappa", y.kappa}, {"p_chain", y.p_chain}, {"u_chain", u}};
}

void from_json(const Json& j, ReasonableParam& y) {
    y.kappa = as<int>(field(j, "kappa"), "kappa");
    y.p_chain.clear();
    y.u_chain.clear();
    for (const auto& c : field(j, "p_chain"))
        y.p_chain.push_back(c.get<Condition>());
    for (const auto& u : field(j, "u_chain"))
        y.u_chain.push_back(mask_from_json(u));
}

// ----------------------------------------------------------------- reports

void to_json(Json& j, const ClauseResult& r) {
    j = Json{{"status", to_string(r.status)}, {"checked", r.checked}, {"detail", r.detail}};
}

void to_json(Json& j, const QuadrupleReport& r) {
    Json clauses = Json::object();
    for (const auto& [k, v] : r.clauses)
        clauses[k] = v;
    j = Json{{"granularity", r.granularity}, {"members", r.members}, {"clauses", clauses}};
}

void to_json(Json& j, const ClauseTally& t) {
    j = Json{{"clause", t.clause}, {"checked", t.checked}, {"violations", t.violations}};
    if (t.witness)
        j["witness"] = *t.witness;
}

void to_json(Json& j, const PosetSuiteReport& r) {
    j = Json{{"mode", r.mode}, {"pair_mode", r.pair_mode}, {"universe", r.universe}, {"clauses", r.clauses}};
}

// --------------------------------------------------------------- colorings

void to_json(Json& j, const Coloring& c) {
    std::vector<int> upper(c.table.begin(), c.table.end());
    j = Json{{"n", c.n}, {"colors", c.colors}, {"upper", upper}};
}

void from_json(const Json& j, Coloring& c) {
    const int n = as<int>(field(j, "n"), "n");
    const int colors = as<int>(field(j, "colors"), "colors");
    const auto upper = ints(field(j, "upper"), "upper");
    if (n < 0 || n > kMaxGround || colors < 1 || colors > 64)
        throw std::invalid_argument("coloring size out of range");
    if (upper.size() != Coloring::pair_count(n))
        throw std::invalid_argument("upper has " + std::to_string(upper.size()) + " entries, need " +
                                    std::to_string(Coloring::pair_count(n)));
    c = Coloring(n, colors);
    for (std::size_t i = 0; i < upper.size(); ++i) {
        if (upper[i] < 0 || upper[i] >= colors)
            throw std::invalid_argument("color " + std::to_string(upper[i]) + " out of range");
        c.table[i] = static_cast<std::uint8_t>(upper[i]);
    }
}

void to_json(Json& j, const HalfGraphConfig& c) {
    j = Json{{"variant", to_string(c.variant)}, {"epsilon", c.epsilon}, {"alphas", c.alphas}, {"betas", c.betas}};
}

void from_json(const Json& j, HalfGraphConfig& c) {
    c.variant = variant_from_string(as<std::string>(field(j, "variant"), "variant"));
    c.epsilon = as<int>(field(j, "epsilon"), "epsilon");
    c.alphas = ints(field(j, "alphas"), "alphas");
    c.betas = ints(field(j, "betas"), "betas");
}

void to_json(Json& j, const LabeledColoring& lc) {
    Json labels = Json::array();
    for (const auto& l : lc.labels)
        labels.push_back(l.text());
    j = Json{{"coloring", lc.c}, {"labels", labels}};
}

void from_json(const Json& j, LabeledColoring& lc) {
    lc.c = field(j, "coloring").get<Coloring>();
    lc.labels.clear();
    for (const auto& s : field(j, "labels"))
        lc.labels.emplace_back(as<std::string>(s, "label"));
    validate(lc);
}

// ---------------------------------------------------------------- topology

void to_json(Json& j, const FiniteSpace& x) {
    Json basis = Json::array();
    for (Mask b : x.basis())
        basis.push_back(mask_to_json(b));
    j = Json{{"points", x.size()}, {"basis", basis}};
}

FiniteSpace space_from_json(const Json& j) {
    const int n = as<int>(field(j, "points"), "points");
    std::vector<Mask> basis;
    for (const auto& b : field(j, "basis"))
        basis.push_back(mask_from_json(b));
    return FiniteSpace::from_subbasis(n, basis);
}

void to_json(Json& j, const SeparationSystem& s) {
    auto masks = [](const std::vector<Mask>& v) {
        Json a = Json::array();
        for (Mask m : v)
            a.push_back(mask_to_json(m));
        return a;
    };
    j = Json{{"carrier", s.carrier},
             {"points", s.points},
             {"u1", masks(s.u1)},
             {"u2", masks(s.u2)},
             {"closed_basis", masks(s.closed_basis)}};
}

void from_json(const Json& j, SeparationSystem& s) {
    s.carrier = as<int>(field(j, "carrier"), "carrier");
    s.points = ints(field(j, "points"), "points");
    s.u1.clear();
    s.u2.clear();
    s.closed_basis.clear();
    for (const auto& m : field(j, "u1"))
        s.u1.push_back(mask_from_json(m));
    for (const auto& m : field(j, "u2"))
        s.u2.push_back(mask_from_json(m));
    for (const auto& m : field(j, "closed_basis"))
        s.closed_basis.push_back(mask_from_json(m));
}

void to_json(Json& j, const DiscreteFamily& f) {
    j = Json::array();
    for (std::size_t i = 0; i < f.points.size(); ++i)
        j.push_back(Json::array({f.points[i], mask_to_json(f.opens.at(i))}));
}

void from_json(const Json& j, DiscreteFamily& f) {
    if (!j.is_array())
        throw std::invalid_argument("a discrete family is a list of [point, set] pairs");
    f = {};
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("family entry " + e.dump() + " is not a [point, set] pair");
        f.points.push_back(as<int>(e[0], "point"));
        f.opens.push_back(mask_from_json(e[1]));
    }
}

// --------------------------------------------------------------------- tsv

namespace {

bool scalar_array(const Json& j) {
    for (const auto& e : j)
        if (e.is_structured())
            return false;
    return true;
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items())
            flatten(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array() && !scalar_array(j)) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], path + "." + std::to_string(i), out);
    } else {
        out << path << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

}  // namespace

std::string to_tsv(const Json& doc) {
    std::ostringstream out;
    flatten(doc, "", out);
    return out.str();
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace pcw
