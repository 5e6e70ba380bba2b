#include "lgforge/cover.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lgforge/errors.hpp"

namespace lgforge {

Rational DivisorFunctional::degree(const ExponentVector& e) const {
  if (e.size() != linear.size()) throw RankMismatchError(linear.size(), e.size());
  Rational s = constant;
  for (std::size_t i = 0; i < e.size(); ++i) s += linear[i] * static_cast<long>(e[i]);
  return s;
}

void DivisorFunctional::validate(const LaurentPoly& f) const {
  if (linear.size() != f.rank()) throw RankMismatchError(f.rank(), linear.size());
  std::ostringstream bad;
  std::size_t count = 0;
  for (const auto& [e, c] : f.terms()) {
    const Rational d = degree(e);
    if (d != 0 && d != 1) {
      bad << (count++ ? ", " : "") << to_string(e) << " -> " << d.get_str();
    }
  }
  if (count) throw InvalidFunctionalError("divisor functional must take values in {0, 1}; offending exponents: " + bad.str());
}

SplitPotential split_potential(const LaurentPoly& f, const DivisorFunctional& d) {
  d.validate(f);
  SplitPotential out{LaurentPoly(f.rank(), f.varnames()), LaurentPoly(f.rank(), f.varnames())};
  for (const auto& [e, c] : f.terms()) (d.degree(e) == 0 ? out.complement : out.divisor).add_term(e, c);
  return out;
}

CharacterAction derive_action(const LaurentPoly& f, const DivisorFunctional& d, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("cover degree must be positive");
  d.validate(f);
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> rhs;
  for (const auto& [e, c] : f.terms()) {
    rows.push_back(e.entries());
    rhs.push_back(d.degree(e) == 1 ? 1 : 0);
  }
  auto w = solve_congruences(rows, rhs, r, f.rank());
  if (!w)
    throw InconsistentSystemError("no Z_" + std::to_string(r) +
                                  " character realizes the divisor functional on the support of the potential");
  return CharacterAction(std::move(*w), r);
}

CoverResult build_cover_potential(const CoverSpec& spec) {
  if (spec.r < 2) throw std::invalid_argument("cover degree r must be at least 2");
  if (spec.descendant.r != spec.r)
    throw std::invalid_argument("descendant constant is for r = " + std::to_string(spec.descendant.r) +
                                " but the cover has r = " + std::to_string(spec.r));
  const LaurentPoly& f = spec.potential;
  auto split = split_potential(f, spec.functional);
  CharacterAction action = derive_action(f, spec.functional, spec.r);

  LaurentPoly upstairs = split.complement + pow(split.divisor, static_cast<unsigned>(spec.r)) -
                         LaurentPoly::constant(f.rank(), spec.descendant.value, f.varnames());
  for (const auto& [e, c] : upstairs.terms())
    if (!action.fixes(e))
      throw InvarianceViolationError("upstairs exponent " + to_string(e) + " is not fixed by the deck action");

  Sublattice lattice = invariant_sublattice(action);
  if (spec.basis) {
    Sublattice custom(*spec.basis);
    if (!same_lattice(custom, lattice))
      throw std::invalid_argument("supplied basis does not span the deck-invariant sublattice");
    lattice = std::move(custom);
  }
  LaurentPoly quotient = rewrite_in_sublattice(upstairs, lattice);
  return CoverResult{std::move(split.complement), std::move(split.divisor), std::move(upstairs),
                     std::move(action),           std::move(lattice),       std::move(quotient)};
}

namespace {

mpz_class factorial(std::int64_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace

TangencyResult tangency_number(const LaurentPoly& w, std::int64_t r, const std::vector<std::int64_t>& multiplicities,
                               const DescendantConstant& descendant, const ExponentVector& boundary, bool smooth) {
  if (r < 1) throw std::invalid_argument("tangency order r must be positive");
  if (boundary.size() != w.rank()) throw RankMismatchError(w.rank(), boundary.size());
  if (descendant.r != r)
    throw std::invalid_argument("descendant constant is for r = " + std::to_string(descendant.r) + ", expected " +
                                std::to_string(r));

  Rational count = pow(w, static_cast<unsigned>(r)).coefficient(boundary);
  if (boundary.is_zero()) count -= descendant.value;

  if (!smooth) {
    std::int64_t total = 0;
    for (auto m : multiplicities) {
      if (m < 0) throw std::invalid_argument("multiplicities must be nonnegative");
      total += m;
    }
    if (total != r)
      throw std::invalid_argument("multiplicities sum to " + std::to_string(total) + " but r = " + std::to_string(r));
    mpz_class num = 1;
    for (auto m : multiplicities) num *= factorial(m);
    count *= Rational(num, factorial(r));
    count.canonicalize();
  }
  return TangencyResult{count, count.get_den() == 1};
}

LiftResult riemann_hurwitz_lift(std::int64_t half_maslov_y, std::int64_t d_hits, std::int64_t r) {
  if (r < 2) throw std::invalid_argument("cover degree r must be at least 2");
  Rational v = Rational(half_maslov_y) - Rational(r - 1, r) * Rational(d_hits);
  v.canonicalize();
  return LiftResult{v, v.get_den() == 1};
}

MaslovReport maslov_positive(const std::vector<DiscClass>& classes, const std::vector<std::size_t>& divisor_components) {
  MaslovReport report;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    std::int64_t hits = 0;
    for (auto idx : divisor_components) {
      if (idx >= c.divisor_hits.size())
        throw std::out_of_range("divisor component " + std::to_string(idx) + " missing from class " + std::to_string(i));
      hits += c.divisor_hits[idx];
    }
    const bool ok = c.half_maslov >= std::max<std::int64_t>(hits, 1);
    report.rows.push_back({i, c.half_maslov, hits, ok});
    report.pass = report.pass && ok;
  }
  return report;
}

std::optional<Rational> monotonicity_check(const std::vector<DiscClass>& classes) {
  for (const auto& c : classes)
    if (c.area <= 0) throw std::invalid_argument("disc areas must be positive");
  if (classes.empty()) return std::nullopt;
  std::optional<Rational> lambda;
  for (const auto& c : classes) {
    if (c.half_maslov == 0) return std::nullopt;
    Rational ratio = c.area / Rational(c.half_maslov);
    if (!lambda)
      lambda = ratio;
    else if (*lambda != ratio)
      return std::nullopt;
  }
  return lambda;
}

bool cover_connected(const std::vector<std::int64_t>& d_values, std::int64_t r) {
  std::int64_t g = r;
  for (auto v : d_values) g = gcd(g, v);
  return g == 1;
}

// ---------------------------------------------------------------------------
// Hypersurfaces in P^{n+1}

LaurentPoly projective_space_potential(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
  LaurentPoly f(n, names);
  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector e(n);
    e[i] = 1;
    f.add_term(e, 1);
  }
  f.add_term(ExponentVector(std::vector<std::int64_t>(n, -1)), 1);
  return f;
}

CoverSpec hypersurface_cover_spec(std::size_t n, std::size_t d) {
  if (d < 2 || d > n) throw std::invalid_argument("hypersurface cover needs 2 <= d <= n");
  // deg(z_k) = [k < d] for k = 1..n, and deg(z_0) = 1 on z_0 = (-1, ..., -1).
  DivisorFunctional functional;
  functional.constant = Rational(static_cast<long>(d), static_cast<long>(n + 1));
  functional.constant.canonicalize();
  for (std::size_t k = 1; k <= n; ++k) functional.linear.push_back(Rational(k < d ? 1 : 0) - functional.constant);
  const auto r = static_cast<std::int64_t>(d);
  return CoverSpec{projective_space_potential(n), std::move(functional), r, DescendantConstant{static_cast<int>(r), 0},
                   std::nullopt};
}

LaurentPoly hypersurface_mirror(std::size_t n, std::size_t d) {
  if (d < 1 || d > n) throw std::invalid_argument("hypersurface mirror needs 1 <= d <= n");
  const std::size_t nx = n - d + 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nx; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i < d; ++i) names.push_back("y" + std::to_string(i));

  LaurentPoly f(n, names);
  for (std::size_t i = 0; i < nx; ++i) f += LaurentPoly::variable(n, i, names);

  LaurentPoly base = LaurentPoly::constant(n, 1, names);
  for (std::size_t i = nx; i < n; ++i) base += LaurentPoly::variable(n, i, names);
  f += pow(base, static_cast<unsigned>(d)).shifted(ExponentVector(std::vector<std::int64_t>(n, -1)));
  return f;
}

}  // namespace lgforge
