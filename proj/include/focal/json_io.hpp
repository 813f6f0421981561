#pragma once

#include <json.hpp>

#include "focal/bounds.hpp"
#include "focal/detect.hpp"
#include "focal/matching.hpp"
#include "focal/orthogonal_array.hpp"
#include "focal/search.hpp"

namespace focal {

/// Insertion-ordered JSON so emitted documents have a stable key order.
using Json = nlohmann::ordered_json;

Json witness_json(const FocalWitness& w);
Json matching_json(const MatchingNumberResult& m);
Json bound_report_json(const BoundReport& rep);
Json search_json(const HypergraphSearchResult& res);
Json search_json(const CodeSearchResult& res);
Json oa_certificate_json(const OaCertificate& cert);

const char* maximality_name(Maximality m);
const char* regime_name(MatchingRegime r);

/// {"rational": "p/q", "decimal": "...", "floor": "..."} — bounds are exact
/// rationals; the floor is the cardinality form.
Json rational_json(const BigRat& value);

}  // namespace focal
