#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgforge/lattice.hpp"
#include "lgforge/laurent.hpp"
#include "lgforge/periods.hpp"

namespace lgforge {

// deg(e) = linear . e + constant: the intersection number with the branch
// divisor of the Maslov-2 class whose boundary is e. Valid values are 0, 1.
struct DivisorFunctional {
  std::vector<Rational> linear;
  Rational constant;

  Rational degree(const ExponentVector& e) const;
  // Throws InvalidFunctionalError listing every support exponent whose
  // degree is non-integral or outside {0, 1}.
  void validate(const LaurentPoly& f) const;
};

struct SplitPotential {
  LaurentPoly complement;  // terms with deg = 0
  LaurentPoly divisor;     // terms with deg = 1
};

SplitPotential split_potential(const LaurentPoly& f, const DivisorFunctional& d);

// Smallest reduced w with w.e = deg(e) (mod r) on the support of f.
CharacterAction derive_action(const LaurentPoly& f, const DivisorFunctional& d, std::int64_t r);

struct CoverSpec {
  LaurentPoly potential;
  DivisorFunctional functional;
  std::int64_t r = 2;
  DescendantConstant descendant;
  // Columns must span the invariant sublattice; replaces the Hermite basis.
  std::optional<IntMatrix> basis;
};

struct CoverResult {
  LaurentPoly complement;
  LaurentPoly divisor;
  LaurentPoly upstairs_potential;
  CharacterAction action;
  Sublattice basis;
  LaurentPoly quotient_potential;
};

// upstairs = W_complement + W_divisor^r - descendant, rewritten on the
// sublattice of deck-invariant exponents.
CoverResult build_cover_potential(const CoverSpec& spec);

struct TangencyResult {
  Rational value;
  bool integral = true;
};

// snc mode: tau = (prod r_i! / r!) * (W^r[boundary] - [boundary = 0] * descendant)
// smooth mode: tau = (W^D)^r[boundary] - [boundary = 0] * descendant
TangencyResult tangency_number(const LaurentPoly& w, std::int64_t r, const std::vector<std::int64_t>& multiplicities,
                               const DescendantConstant& descendant, const ExponentVector& boundary, bool smooth);

struct LiftResult {
  Rational half_maslov;
  bool integral = true;
};

// Maslov index (halved) of a lift through an r-fold cover branched along a
// divisor the class meets d_hits times.
LiftResult riemann_hurwitz_lift(std::int64_t half_maslov_y, std::int64_t d_hits, std::int64_t r);

struct DiscClass {
  std::int64_t half_maslov = 1;
  std::vector<std::int64_t> divisor_hits;
  ExponentVector boundary;
  Rational area;
};

struct MaslovRow {
  std::size_t index;
  std::int64_t half_maslov;
  std::int64_t hits;
  bool pass;
};

struct MaslovReport {
  std::vector<MaslovRow> rows;
  bool pass = true;
};

// mu/2 >= max(sum of the selected divisor_hits, 1) for every class.
MaslovReport maslov_positive(const std::vector<DiscClass>& classes, const std::vector<std::size_t>& divisor_components);

// lambda with area = lambda * mu/2 for every class, if one exists.
std::optional<Rational> monotonicity_check(const std::vector<DiscClass>& classes);

// True iff the linking numbers together with r generate Z.
bool cover_connected(const std::vector<std::int64_t>& d_values, std::int64_t r);

// Potential of the monotone fibre of P^n in the coordinates z_1..z_n
// (z_0 = 1/(z_1...z_n)).
LaurentPoly projective_space_potential(std::size_t n);

// Cover data for a degree-d hypersurface in P^{n+1} as a d-fold cover of P^n
// branched along a smoothing of {x_0...x_{d-1} = 0}; the descendant is 0.
CoverSpec hypersurface_cover_spec(std::size_t n, std::size_t d);

// x_0 + ... + x_{n-d} + (1 + y_1 + ... + y_{d-1})^d / (x_0...x_{n-d} y_1...y_{d-1})
LaurentPoly hypersurface_mirror(std::size_t n, std::size_t d);

}  // namespace lgforge
