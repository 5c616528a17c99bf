#pragma once

#include <string>

#include "qf/decide.hpp"
#include "qf/rep_ring.hpp"

#include "json.hpp"

namespace qf {

using Json = nlohmann::ordered_json;

// Parses raw text, wrapping syntax errors in DocumentError.
Json parse_json_text(const std::string& text);

// { "type": "permutation", "degree": d, "generators": [[images], ...] }
PermGroup parse_group_document(const Json& doc, const std::string& path = "");

// { "type": "character_table", ... }; the result has passed validate_table.
CharacterTable parse_table_document(const Json& doc, const std::string& path = "");
Json serialize_table(const CharacterTable& table);

// { "rep": [ {"irr": i, "mult": m}, ... ] } or { "values": ["cyclo", ...] };
// the values form is decomposed and must yield a genuine representation.
Representation parse_rep_document(const Json& doc, const TablePtr& table,
                                  const std::string& path = "");

// Either group form resolved to a validated table: a permutation document is
// run through compute_table, a character_table document through load/validate.
TablePtr resolve_group_document(const Json& doc, const std::string& path = "");

struct JobDocument {
  TablePtr table;
  Representation pi1;
  Representation pi2;
  DecideConfig config;
};
// { "group": ..., "pi1": ..., "pi2": ..., "config": {...}? }
JobDocument parse_job_document(const Json& doc);

Json serialize_k_groups(const KGroups& groups);
Json serialize_coords(const std::vector<Int>& coords);
Json serialize_values(const std::vector<Cyclotomic>& values);
Json serialize_obstruction(const Obstruction& obstruction);
Json serialize_verdict(const Verdict& verdict);

}  // namespace qf
