#pragma once

// JSON encoding of library types. Field names follow the type and field
// names of the public structs; key order is insertion order and stable.

#include "tpzeros/classifier.hpp"
#include "tpzeros/polynomials.hpp"
#include "tpzeros/recurrence.hpp"
#include "tpzeros/rootfinder.hpp"
#include "tpzeros/verifier.hpp"

#include <json.hpp>

namespace tpz::io {

using Json = nlohmann::ordered_json;

Json to_json(cplx z);
Json to_json(const RecurrenceSpec& spec);
Json to_json(const CharacteristicData& ch);
Json to_json(const PolynomialCoeffs& p);
Json to_json(const RootSet& rs);
Json to_json(const DiskCount& dc);
Json to_json(const Classification& cls);
Json to_json(const MRecord& rec);
Json to_json(const CircleStat& st);
Json to_json(const VerificationReport& report);
Json to_json(const InstanceOutcome& outcome);
Json to_json(const SweepReport& report);

std::string_view to_string(PolyKind kind);

cplx complex_from_json(const Json& j);
/// Reads the fields written by to_json(const RootSet&).
RootSet root_set_from_json(const Json& j);

} // namespace tpz::io
