#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rtl/certify.hpp"
#include "rtl/oracle.hpp"
#include "rtl/ramsey.hpp"
#include "rtl/turan.hpp"
#include "rtl/witness.hpp"

namespace rtl {

using Json = nlohmann::ordered_json;

// JSON payloads. Key order is fixed so output is byte-deterministic; the
// timestamp field is only attached by finish_json when enabled.
Json to_json(const ExtremalValue& v);
Json to_json(const RamseyResult& r, const TreeSpec& a, const TreeSpec& b);
Json to_json(const VerifiedWitness& w);
Json to_json(const UpperCert& u);
Json to_json(const Certificate& c);
Json to_json(const SearchStats& s, bool with_elapsed);
Json to_json(const Conjecture1Report& r, bool with_elapsed);
Json to_json(const Conjecture2Report& r, bool with_elapsed);

/// Adds the command name (first key) and, when enabled, a generated_at
/// timestamp, then dumps with a trailing newline.
std::string finish_json(const std::string& command, Json body, bool timestamp);

// CSV emitters (comma-separated, quoted only when needed, LF endings).
std::string csv_escape(const std::string& field);
std::string audit_csv(const std::vector<AuditRow>& rows);
std::string ex_table_csv(const TreeSpec& spec, long long pmin, long long pmax);

/// Ramsey grid over two family ranges; cells are "value [citations]",
/// "lo..hi [citations]" or "NC".
std::string report_grid_csv(const std::vector<TreeSpec>& rows, const std::vector<TreeSpec>& cols);
Json report_grid_json(const std::vector<TreeSpec>& rows, const std::vector<TreeSpec>& cols);

}  // namespace rtl
