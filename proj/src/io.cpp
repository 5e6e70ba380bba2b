#include "lgforge/io.hpp"

#include <fstream>

#include "lgforge/errors.hpp"
#include "lgforge/expression.hpp"

namespace lgforge {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(std::to_string(value.get<std::int64_t>()), 10);
  throw InputError("expected a rational (string or integer), got " + value.dump());
}

std::vector<std::string> varnames_from_json(const Json& value) {
  if (!value.is_array()) throw InputError("'vars' must be an array of names");
  std::string joined;
  for (const auto& v : value) {
    if (!v.is_string()) throw InputError("'vars' must be an array of names");
    joined += (joined.empty() ? "" : ",") + v.get<std::string>();
  }
  if (joined.empty()) throw InputError("'vars' must not be empty");
  return parse_varnames(joined);
}

Json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return static_cast<std::int64_t>(q.get_num().get_si());
  return q.get_str();
}

Json to_json(const PeriodSequence& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(to_json(c));
  return coeffs;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

CoverSpec cover_spec_from_json(const Json& doc) {
  const auto vars = varnames_from_json(require(doc, "vars"));
  const Json& expr = require(doc, "potential");
  if (!expr.is_string()) throw InputError("'potential' must be an expression string");
  CoverSpec spec;
  spec.potential = parse_laurent(expr.get<std::string>(), vars);

  const Json& functional = require(doc, "functional");
  const Json& linear = require(functional, "linear");
  if (!linear.is_array() || linear.size() != vars.size())
    throw InputError("'functional.linear' must have one entry per variable");
  for (const auto& v : linear) spec.functional.linear.push_back(rational_from_json(v));
  spec.functional.constant = rational_from_json(require(functional, "constant"));

  const Json& r = require(doc, "r");
  if (!r.is_number_integer() || r.get<std::int64_t>() < 2) throw InputError("'r' must be an integer >= 2");
  spec.r = r.get<std::int64_t>();
  spec.descendant = DescendantConstant{static_cast<int>(spec.r),
                                       doc.contains("descendant") ? rational_from_json(doc["descendant"]) : Rational(0)};

  if (doc.contains("basis")) {
    const Json& cols = doc["basis"];
    if (!cols.is_array() || cols.size() != vars.size()) throw InputError("'basis' must list one column per variable");
    std::vector<std::vector<std::int64_t>> columns;
    for (const auto& c : cols) {
      if (!c.is_array() || c.size() != vars.size()) throw InputError("each 'basis' column needs one entry per variable");
      columns.push_back(c.get<std::vector<std::int64_t>>());
    }
    spec.basis = IntMatrix::from_columns(columns);
  }
  return spec;
}

Json cover_spec_to_json(const CoverSpec& spec) {
  Json doc;
  doc["potential"] = render(spec.potential);
  doc["vars"] = spec.potential.varnames();
  Json linear = Json::array();
  for (const auto& q : spec.functional.linear) linear.push_back(q.get_str());
  doc["functional"] = {{"linear", linear}, {"constant", spec.functional.constant.get_str()}};
  doc["r"] = spec.r;
  doc["descendant"] = spec.descendant.value.get_str();
  if (spec.basis) {
    Json cols = Json::array();
    for (std::size_t j = 0; j < spec.basis->cols(); ++j) cols.push_back(spec.basis->column(j));
    doc["basis"] = cols;
  }
  return doc;
}

SubstitutionFile substitution_from_json(const Json& doc) {
  auto vars = varnames_from_json(require(doc, "vars"));
  const Json& images = require(doc, "images");
  if (!images.is_array()) throw InputError("'images' must be an array of expressions");
  std::vector<std::string> texts;
  for (const auto& im : images) {
    if (!im.is_string()) throw InputError("'images' must be an array of expressions");
    texts.push_back(im.get<std::string>());
  }
  auto sub = Substitution::parse(vars, texts);
  return SubstitutionFile{std::move(vars), std::move(sub)};
}

LedgerInput ledger_from_json(const Json& doc) {
  LedgerInput in;
  const Json& classes = require(doc, "classes");
  if (!classes.is_array()) throw InputError("'classes' must be an array");
  for (const auto& c : classes) {
    DiscClass d;
    const Json& hm = require(c, "half_maslov");
    if (!hm.is_number_integer()) throw InputError("'half_maslov' must be an integer");
    d.half_maslov = hm.get<std::int64_t>();
    if (c.contains("divisor_hits")) d.divisor_hits = c["divisor_hits"].get<std::vector<std::int64_t>>();
    if (c.contains("boundary")) d.boundary = ExponentVector(c["boundary"].get<std::vector<std::int64_t>>());
    d.area = rational_from_json(require(c, "area"));
    in.classes.push_back(std::move(d));
  }
  if (doc.contains("divisor_components"))
    in.divisor_components = doc["divisor_components"].get<std::vector<std::size_t>>();
  if (doc.contains("r")) {
    if (!doc["r"].is_number_integer() || doc["r"].get<std::int64_t>() < 2) throw InputError("'r' must be an integer >= 2");
    in.cover_degree = doc["r"].get<std::int64_t>();
  }
  if (doc.contains("linking")) in.linking = doc["linking"].get<std::vector<std::int64_t>>();
  return in;
}

}  // namespace lgforge
