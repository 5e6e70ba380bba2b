#pragma once

#include <string>
#include <vector>

#include "lgforge/expression.hpp"
#include "lgforge/laurent.hpp"
#include "lgforge/periods.hpp"

namespace lgforge {

// Birational substitution x_i -> images[i].
class Substitution {
 public:
  explicit Substitution(std::vector<RationalExpr> images);
  static Substitution identity(std::size_t rank, const std::vector<std::string>& varnames = {});
  static Substitution parse(const std::vector<std::string>& varnames, const std::vector<std::string>& images);

  std::size_t rank() const noexcept { return images_.size(); }
  const std::vector<RationalExpr>& images() const noexcept { return images_; }

 private:
  std::vector<RationalExpr> images_;
};

// Substitutes every variable, clears denominators and divides exactly.
// Throws NotLaurentError when the image is not a Laurent polynomial.
LaurentPoly apply(const LaurentPoly& f, const Substitution& s);

struct PeriodComparison {
  std::vector<PeriodRow> rows;  // computed = c0(f^k), reference = c0(g^k)
  bool pass = true;
  unsigned first_mismatch = 0;
};

PeriodComparison check_period_invariance(const LaurentPoly& f, const LaurentPoly& g, unsigned K,
                                         const PeriodOptions& options = {});

}  // namespace lgforge
