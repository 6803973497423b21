#pragma once

#include <json.hpp>

#include "expander/baseline.hpp"
#include "expander/bsgs.hpp"
#include "expander/characters.hpp"
#include "expander/construction.hpp"
#include "expander/eigensolver.hpp"
#include "expander/expansion.hpp"
#include "expander/kazhdan.hpp"
#include "expander/walks.hpp"

namespace expander {

using Json = nlohmann::json;

// Every document written by the library carries this field.
constexpr int schema_version = 1;

Json to_json(const GeneratingFamily& f);
GeneratingFamily family_from_json(const Json& j);

// base, strong generators in cycle notation, order as a decimal string.
Json to_json(const Bsgs& b);
Bsgs bsgs_from_json(const Json& j);

Json to_json(const FamilyCertificate& c);
Json to_json(const PowerGenSet& s);
Json to_json(const SpectralReport& r);
Json to_json(const ProbeReport& r);
Json to_json(const ExpansionReport& r);
Json to_json(const KazhdanReport& r);
Json to_json(const BaselineReport& r);
Json to_json(const RoichmanReport& r);
Json to_json(const MixingReport& r);
Json to_json(const CycleStatistics& s);
Json to_json(const TransitivityProbe& p);

} // namespace expander
