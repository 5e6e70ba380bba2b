#include "lgforge/periods.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "lgforge/errors.hpp"

namespace lgforge {

namespace {

Rational split_constant_term(const LaurentPoly& a, const LaurentPoly& b) {
  Rational sum = 0;
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& large = a.size() <= b.size() ? b : a;
  for (const auto& [e, c] : small.terms()) {
    auto it = large.terms().find(-e);
    if (it != large.terms().end()) sum += c * it->second;
  }
  return sum;
}

}  // namespace

PeriodSequence period_sequence(const LaurentPoly& f, unsigned K, const PeriodOptions& options) {
  PeriodSequence out;
  out.source = PeriodSource::computed;
  out.coeffs.reserve(K + 1);
  out.coeffs.emplace_back(1);
  if (K == 0) return out;

  if (options.strategy == PeriodStrategy::incremental) {
    LaurentPoly power = f;
    out.coeffs.push_back(power.constant_term());
    for (unsigned k = 2; k <= K; ++k) {
      power = multiply(power, f, options.threads);
      out.coeffs.push_back(power.constant_term());
    }
    return out;
  }

  const unsigned half = (K + 1) / 2;
  std::vector<LaurentPoly> powers;
  powers.reserve(half + 1);
  powers.push_back(LaurentPoly::constant(f.rank(), 1, f.varnames()));
  for (unsigned k = 1; k <= half; ++k) powers.push_back(multiply(powers.back(), f, options.threads));
  for (unsigned k = 1; k <= K; ++k) out.coeffs.push_back(split_constant_term(powers[(k + 1) / 2], powers[k / 2]));
  return out;
}

DescendantConstant descendant_constant(const PeriodSequence& p, int r) {
  if (r < 0 || static_cast<std::size_t>(r) >= p.coeffs.size())
    throw OutOfRangeError("descendant index " + std::to_string(r) + " outside the period sequence (K = " +
                          std::to_string(p.max_k()) + ")");
  return DescendantConstant{r, p.coeffs[static_cast<std::size_t>(r)]};
}

WeakLGReport is_weak_lg(const LaurentPoly& f, const PeriodSequence& reference, unsigned K, unsigned k_min,
                        const PeriodOptions& options) {
  if (reference.coeffs.size() <= K)
    throw OutOfRangeError("reference period '" + reference.name + "' only covers k <= " +
                          std::to_string(reference.max_k()));
  const PeriodSequence computed = period_sequence(f, K, options);
  WeakLGReport report;
  for (unsigned k = k_min; k <= K; ++k) {
    PeriodRow row{k, computed.coeffs[k], reference.coeffs[k], computed.coeffs[k] == reference.coeffs[k]};
    if (!row.match && report.pass) {
      report.pass = false;
      report.first_mismatch = k;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Reference ingestion

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  const std::size_t digits_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_start) throw InputError("invalid rational '" + std::string(text) + "'");
  if (i < text.size()) {
    if (text[i] != '/') throw InputError("invalid rational '" + std::string(text) + "'");
    const std::size_t den_start = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) throw InputError("invalid rational '" + std::string(text) + "'");
  }
  std::string s(text.front() == '+' ? text.substr(1) : text);
  Rational q;
  const auto slash = s.find('/');
  mpz_class num(s.substr(0, slash), 10);
  mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(s.substr(slash + 1), 10);
  if (den == 0) throw ZeroDenominatorError("zero denominator in '" + std::string(text) + "'");
  q = Rational(num, den);
  q.canonicalize();
  return q;
}

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

unsigned parse_index(const std::string& text, std::size_t line) {
  if (text.empty() || text.size() > 9 || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw FormatError("invalid k '" + text + "'", line);
  return static_cast<unsigned>(std::stoul(text));
}

PeriodSequence assemble(std::string name, const std::map<unsigned, Rational>& entries) {
  PeriodSequence out;
  out.name = std::move(name);
  out.source = PeriodSource::ingested;
  const unsigned top = entries.empty() ? 0 : entries.rbegin()->first;
  out.coeffs.assign(top + 1, Rational(0));
  out.coeffs[0] = 1;
  for (const auto& [k, c] : entries) out.coeffs[k] = c;
  return out;
}

void insert_entry(std::map<unsigned, Rational>& entries, unsigned k, Rational c, std::size_t line) {
  if (k == 0 && c != 1) throw FormatError("c_0 of a regularized period must be 1", line);
  if (!entries.emplace(k, std::move(c)).second) throw FormatError("duplicate k = " + std::to_string(k), line);
}

}  // namespace

PeriodSequence parse_reference_csv(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::map<unsigned, Rational> entries;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (!header_seen) {
      std::string compact;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
      if (compact != "k,coeff") throw FormatError("expected header 'k,coeff'", line_no);
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw FormatError("expected 'k,coeff'", line_no);
    const unsigned k = parse_index(trim(line.substr(0, comma)), line_no);
    Rational c;
    try {
      c = parse_rational(trim(line.substr(comma + 1)));
    } catch (const InputError& e) {
      throw FormatError(e.what(), line_no);
    }
    insert_entry(entries, k, std::move(c), line_no);
  }
  if (!header_seen) throw FormatError("empty reference file", std::max<std::size_t>(line_no, 1));
  if (entries.empty()) throw FormatError("reference file has no coefficients", line_no);
  return assemble(std::move(name), entries);
}

PeriodSequence parse_reference_json(std::string_view text) {
  if (trim(text).empty()) throw FormatError("empty reference file", 1);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
    throw FormatError("malformed JSON", line);
  }
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array())
    throw InputError("reference JSON needs an object with a 'coeffs' array");
  std::string name = doc.value("name", std::string("reference"));
  std::map<unsigned, Rational> entries;
  std::size_t item = 0;
  for (const auto& pair : doc["coeffs"]) {
    ++item;
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned())
      throw InputError("coeffs entry " + std::to_string(item) + " must be [k, \"coeff\"]");
    const auto k = pair[0].get<unsigned>();
    Rational c;
    if (pair[1].is_string())
      c = parse_rational(pair[1].get<std::string>());
    else if (pair[1].is_number_integer())
      c = Rational(std::to_string(pair[1].get<std::int64_t>()), 10);
    else
      throw InputError("coeffs entry " + std::to_string(item) + " must carry a decimal string");
    if (k == 0 && c != 1) throw InputError("c_0 of a regularized period must be 1");
    if (!entries.emplace(k, std::move(c)).second) throw InputError("duplicate k = " + std::to_string(k));
  }
  if (entries.empty()) throw InputError("reference file has no coefficients");
  return assemble(std::move(name), entries);
}

PeriodSequence ingest_reference(const std::filesystem::path& path, ReferenceFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open reference file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (format == ReferenceFormat::csv) return parse_reference_csv(buf.str(), path.stem().string());
  return parse_reference_json(buf.str());
}

PeriodSequence ingest_reference(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".csv") return ingest_reference(path, ReferenceFormat::csv);
  if (ext == ".json") return ingest_reference(path, ReferenceFormat::json);
  throw InputError("cannot infer reference format from '" + path.string() + "' (expected .csv or .json)");
}

}  // namespace lgforge
