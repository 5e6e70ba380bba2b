#include "lgforge/mutation.hpp"

#include <algorithm>

#include "lgforge/errors.hpp"

namespace lgforge {

Substitution::Substitution(std::vector<RationalExpr> images) : images_(std::move(images)) {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].rank() != images_.size()) throw RankMismatchError(images_.size(), images_[i].rank());
    if (images_[i].num().is_zero())
      throw ZeroDenominatorError("image of variable " + std::to_string(i + 1) + " is zero");
  }
}

Substitution Substitution::identity(std::size_t rank, const std::vector<std::string>& varnames) {
  std::vector<RationalExpr> images;
  for (std::size_t i = 0; i < rank; ++i) images.emplace_back(LaurentPoly::variable(rank, i, varnames));
  return Substitution(std::move(images));
}

Substitution Substitution::parse(const std::vector<std::string>& varnames, const std::vector<std::string>& images) {
  if (images.size() != varnames.size()) throw RankMismatchError(varnames.size(), images.size());
  std::vector<RationalExpr> parsed;
  for (const auto& text : images) parsed.push_back(lgforge::parse(text, varnames));
  return Substitution(std::move(parsed));
}

namespace {

// Caches N^k and D^k for one image N/D.
class PowerCache {
 public:
  explicit PowerCache(const LaurentPoly& base) { powers_.push_back(LaurentPoly::constant(base.rank(), 1, base.varnames())); base_ = base; }
  const LaurentPoly& get(std::size_t k) {
    while (powers_.size() <= k) powers_.push_back(powers_.back() * base_);
    return powers_[k];
  }

 private:
  LaurentPoly base_;
  std::vector<LaurentPoly> powers_;
};

}  // namespace

LaurentPoly apply(const LaurentPoly& f, const Substitution& s) {
  if (f.rank() != s.rank()) throw RankMismatchError(f.rank(), s.rank());
  const std::size_t n = f.rank();
  if (f.is_zero()) return f;

  // With lo_i = min(min_e e_i, 0) and hi_i = max(max_e e_i, 0), every term
  // c * prod (N_i/D_i)^e_i equals c * prod N_i^(e_i - lo_i) D_i^(hi_i - e_i)
  // over the common denominator prod N_i^(-lo_i) D_i^(hi_i).
  const ExponentVector mins = f.min_exponents();
  const ExponentVector maxs = f.max_exponents();
  std::vector<std::int64_t> lo(n), hi(n);
  std::vector<PowerCache> num_pow, den_pow;
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = std::min<std::int64_t>(mins[i], 0);
    hi[i] = std::max<std::int64_t>(maxs[i], 0);
    num_pow.emplace_back(s.images()[i].num());
    den_pow.emplace_back(s.images()[i].den());
  }

  LaurentPoly numerator(n, f.varnames());
  for (const auto& [e, c] : f.terms()) {
    LaurentPoly term = LaurentPoly::constant(n, c, f.varnames());
    for (std::size_t i = 0; i < n; ++i) {
      term = term * num_pow[i].get(static_cast<std::size_t>(e[i] - lo[i]));
      term = term * den_pow[i].get(static_cast<std::size_t>(hi[i] - e[i]));
    }
    numerator += term;
  }
  LaurentPoly denominator = LaurentPoly::constant(n, 1, f.varnames());
  for (std::size_t i = 0; i < n; ++i) {
    denominator = denominator * num_pow[i].get(static_cast<std::size_t>(-lo[i]));
    denominator = denominator * den_pow[i].get(static_cast<std::size_t>(hi[i]));
  }

  auto q = exact_divide(numerator, denominator);
  if (!q) throw NotLaurentError("substitution image of " + render(f) + " is not a Laurent polynomial");
  return q->with_varnames(f.varnames());
}

PeriodComparison check_period_invariance(const LaurentPoly& f, const LaurentPoly& g, unsigned K,
                                         const PeriodOptions& options) {
  if (f.rank() != g.rank()) throw RankMismatchError(f.rank(), g.rank());
  const auto pf = period_sequence(f, K, options);
  const auto pg = period_sequence(g, K, options);
  PeriodComparison out;
  for (unsigned k = 0; k <= K; ++k) {
    PeriodRow row{k, pf.coeffs[k], pg.coeffs[k], pf.coeffs[k] == pg.coeffs[k]};
    if (!row.match && out.pass) {
      out.pass = false;
      out.first_mismatch = k;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace lgforge
