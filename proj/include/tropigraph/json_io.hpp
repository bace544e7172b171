#pragma once

#include "json.hpp"

#include "tropigraph/representation.hpp"
#include "tropigraph/threshold.hpp"
#include "tropigraph/verifier.hpp"

namespace tropigraph {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tropigraph/1";

Json to_json(const TropicalValue& value);
Json to_json(const TropicalVector& vec);
Json to_json(const Representation& rep);
Json to_json(const CoverSolution& cover);
Json to_json(const VerificationReport& report);
Json to_json(const DimensionResult& result);
Json to_json(const ConjectureReport& report);

// Throw ParseError on malformed documents, including a "schema" field other
// than tropigraph/1. A missing schema field is accepted.
TropicalVector vector_from_json(const Json& j);
Representation representation_from_json(const Json& j);
CoverSolution cover_from_json(const Json& j);

}  // namespace tropigraph
