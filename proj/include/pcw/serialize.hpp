#pragma once

// JSON documents for the value types, and a flat TSV rendering of reports.

#include "pcw/core.hpp"
#include "pcw/partition.hpp"
#include "pcw/poset.hpp"
#include "pcw/poset_props.hpp"
#include "pcw/reductions.hpp"
#include "pcw/subposet.hpp"
#include "pcw/topology.hpp"

#include <json.hpp>

#include <string>

namespace pcw {

using Json = nlohmann::ordered_json;

// Readers throw std::invalid_argument (std::out_of_range for points past 63)
// on a malformed document.

void to_json(Json& j, const ParamSet& p);
void from_json(const Json& j, ParamSet& p);

/// Sorted list of [index, bit] pairs.
void to_json(Json& j, const Condition& c);
void from_json(const Json& j, Condition& c);

Json growth_to_json(const GrowthProfile& g);
Json mask_to_json(Mask m);
Mask mask_from_json(const Json& j);

void to_json(Json& j, const ReasonableParam& y);
void from_json(const Json& j, ReasonableParam& y);

void to_json(Json& j, const ClauseResult& r);
void to_json(Json& j, const QuadrupleReport& r);
void to_json(Json& j, const ClauseTally& t);
void to_json(Json& j, const PosetSuiteReport& r);

void to_json(Json& j, const Coloring& c);
void from_json(const Json& j, Coloring& c);
void to_json(Json& j, const HalfGraphConfig& c);
void from_json(const Json& j, HalfGraphConfig& c);

void to_json(Json& j, const LabeledColoring& lc);
void from_json(const Json& j, LabeledColoring& lc);

void to_json(Json& j, const FiniteSpace& x);
FiniteSpace space_from_json(const Json& j);
void to_json(Json& j, const SeparationSystem& s);
void from_json(const Json& j, SeparationSystem& s);
/// List of [point, set] pairs.
void to_json(Json& j, const DiscreteFamily& f);
void from_json(const Json& j, DiscreteFamily& f);

/// One "path<TAB>value" line per scalar leaf, in document order. Arrays of
/// scalars stay on one line as compact JSON.
std::string to_tsv(const Json& doc);

/// Parses a JSON file; throws std::invalid_argument naming the file.
Json read_json_file(const std::string& path);

}  // namespace pcw
