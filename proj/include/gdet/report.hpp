#pragma once

// Machine-readable reports, schema "gdet/1".
//
// Every report is a JSON object whose first two keys are "schema" and
// "kind". All integers, including counts and group parameters, are decimal
// strings so consumers never overflow. Key order is fixed, so the same
// input always produces byte-identical output.

#include <optional>
#include <string>

#include <json.hpp>

#include "gdet/detengine.hpp"
#include "gdet/laws.hpp"
#include "gdet/search.hpp"
#include "gdet/witnesses.hpp"

namespace gdet {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gdet/1";

Json report_header(const std::string& kind);

Json to_json(const GroupSpec& g);
// {"f": [...], "g": [...], "text": "..."}; no "g" for the cyclic family.
Json to_json(const RingElement& a);
Json to_json(const Witness& w);
Json to_json(const Verdict& v);

Json det_report(const RingElement& a, const Int& value, const std::optional<Int>& oracle);
Json factor_report(const RingElement& a, const FactoredDeterminant& fd);
Json witness_report(const Witness& w, bool verified);
// subject: {"set": ..., "p": ...} or {"group": ...}
Json classify_report(const Json& subject, const Int& value, const Verdict& v);
Json lambda_report(const LambdaReport& r, const Witness* witness);
Json search_report(const SearchReport& r);

// Columns value,multiplicity,example_f,example_g with the polynomials in
// expression form (which never contains a comma).
std::string spectrum_csv(const SearchReport& r);

// Two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace gdet
