#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lgforge/laurent.hpp"

namespace lgforge {

enum class PeriodSource { computed, ingested };

// Coefficients c_0..c_K of a regularized quantum period; coeffs[k] = c_k.
struct PeriodSequence {
  std::string name;
  std::vector<Rational> coeffs;
  PeriodSource source = PeriodSource::computed;

  std::size_t max_k() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const PeriodSequence& a, const PeriodSequence& b) { return a.coeffs == b.coeffs; }
};

struct DescendantConstant {
  int r = 2;
  Rational value;
};

enum class PeriodStrategy {
  incremental,  // c0(f^k) from f^k = f * f^(k-1)
  split,        // c0(f^k) = sum_e [f^ceil(k/2)]_e [f^floor(k/2)]_{-e}
};

struct PeriodOptions {
  PeriodStrategy strategy = PeriodStrategy::incremental;
  unsigned threads = 1;
};

PeriodSequence period_sequence(const LaurentPoly& f, unsigned K, const PeriodOptions& options = {});

// The coefficient c_r of p; c_0 is the normalization 1.
DescendantConstant descendant_constant(const PeriodSequence& p, int r);

struct PeriodRow {
  unsigned k;
  Rational computed;
  Rational reference;
  bool match;
};

struct WeakLGReport {
  std::vector<PeriodRow> rows;
  bool pass = true;
  // First k that fails, when !pass.
  unsigned first_mismatch = 0;
};

// Compares c0(f^k) with reference.coeffs[k] for k_min <= k <= K.
WeakLGReport is_weak_lg(const LaurentPoly& f, const PeriodSequence& reference, unsigned K, unsigned k_min = 2,
                        const PeriodOptions& options = {});

enum class ReferenceFormat { csv, json };

// CSV: header "k,coeff", one row per coefficient. JSON: {"name", "coeffs":
// [[k, "coeff"], ...]}. Missing k are filled with 0 and c_0 defaults to 1.
PeriodSequence parse_reference_csv(std::string_view text, std::string name = "reference");
PeriodSequence parse_reference_json(std::string_view text);
PeriodSequence ingest_reference(const std::filesystem::path& path, ReferenceFormat format);
// Picks the format from the file extension (.csv or .json).
PeriodSequence ingest_reference(const std::filesystem::path& path);

// Parses "7", "-3", "5/2" as an exact rational; rejects anything else.
Rational parse_rational(std::string_view text);

}  // namespace lgforge
