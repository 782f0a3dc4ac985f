#pragma once

#include <filesystem>

#include <json.hpp>

#include "casweep/hierarchy.hpp"
#include "casweep/mealy.hpp"
#include "casweep/zeta.hpp"

namespace casweep::io {

using nlohmann::json;

inline constexpr int schema_version = 1;

// Malformed input files.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_json(const std::filesystem::path& p);
void save_json(const std::filesystem::path& p, const json& j);

json to_json(const EpConfig& x);
EpConfig config_from_json(const json& j);

json to_json(const BlockRule& chi);
BlockRule block_from_json(const json& j);

json to_json(const LocalRule& f);
LocalRule rule_from_json(const json& j);

json to_json(const ValuedRational& r);
json to_json(const ClosingVerdict& v);
json to_json(const SliderReport& r);
json to_json(const SweepOutcome& s);
json to_json(const ZAutomaton& A);
ZAutomaton automaton_from_json(const json& j);
json manifest(const Synthesis& s);

// Writes stage_<i>.json, claimed_ca.json and decomposition.json into `dir`.
void save_decomposition(const std::filesystem::path& dir, const Decomposition& d);
Decomposition load_decomposition(const std::filesystem::path& file);

}  // namespace casweep::io
