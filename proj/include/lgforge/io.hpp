#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lgforge/cover.hpp"
#include "lgforge/mutation.hpp"

namespace lgforge {

using Json = nlohmann::json;

Json load_json_file(const std::filesystem::path& path);

// {"potential": expr, "vars": [...], "functional": {"linear": [...],
//  "constant": q}, "r": int, "descendant": "q", "basis": [[column], ...]}
// "basis" is optional; rationals may be strings or integers.
CoverSpec cover_spec_from_json(const Json& doc);
Json cover_spec_to_json(const CoverSpec& spec);

// {"vars": [...], "images": [expr, ...]}
struct SubstitutionFile {
  std::vector<std::string> vars;
  Substitution substitution;
};
SubstitutionFile substitution_from_json(const Json& doc);

// {"classes": [{"half_maslov": 1, "divisor_hits": [0, 1], "boundary": [1, 0],
//   "area": "1/4"}, ...], "divisor_components": [0, ...], "r": 2,
//  "linking": [1, 0]}; "r" and "linking" are optional.
struct LedgerInput {
  std::vector<DiscClass> classes;
  std::vector<std::size_t> divisor_components;
  std::optional<std::int64_t> cover_degree;
  std::vector<std::int64_t> linking;
};
LedgerInput ledger_from_json(const Json& doc);

Rational rational_from_json(const Json& value);
std::vector<std::string> varnames_from_json(const Json& value);
// Integers that fit in 64 bits become JSON numbers, anything else a string.
Json to_json(const Rational& q);
Json to_json(const PeriodSequence& p);
Json to_json(const IntMatrix& m);  // list of rows

}  // namespace lgforge
