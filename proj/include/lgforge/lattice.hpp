#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lgforge/int_matrix.hpp"
#include "lgforge/laurent.hpp"

namespace lgforge {

// A = U * D * V with U, V unimodular and D diagonal, d1 | d2 | ... (zeros last).
struct SNFDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  // Inverses of U and V, accumulated alongside them.
  IntMatrix U_inv;
  IntMatrix V_inv;

  std::vector<std::int64_t> diagonal() const;
  std::size_t rank() const;
};

// Works for any m x n matrix; U is m x m and V is n x n.
SNFDecomposition smith_normal_form(const IntMatrix& a);

// Column Hermite normal form of a nonsingular square matrix: returns B * T
// (T unimodular) that is lower triangular with positive diagonal and
// 0 <= B(i, j) < B(i, i) for j < i.
IntMatrix column_hermite_form(const IntMatrix& basis);

// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// The Z_r action zeta . x^e = zeta^(w.e) x^e.
class CharacterAction {
 public:
  CharacterAction(std::vector<std::int64_t> weights, std::int64_t modulus);

  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  std::size_t rank() const noexcept { return weights_.size(); }

  // w.e mod r, in [0, r).
  std::int64_t character(const ExponentVector& e) const;
  bool fixes(const ExponentVector& e) const { return character(e) == 0; }

  friend bool operator==(const CharacterAction&, const CharacterAction&) = default;

 private:
  std::vector<std::int64_t> weights_;
  std::int64_t modulus_;
};

// Full-rank sublattice of Z^n given by the columns of `basis`.
class Sublattice {
 public:
  explicit Sublattice(IntMatrix basis);
  static Sublattice full(std::size_t rank);

  std::size_t ambient_rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  std::int64_t index() const noexcept { return index_; }

  // Coordinates c with basis * c = e, if e is in the lattice.
  std::optional<std::vector<std::int64_t>> membership(const ExponentVector& e) const;
  bool contains(const ExponentVector& e) const { return membership(e).has_value(); }

 private:
  IntMatrix basis_;
  std::int64_t index_;
  std::vector<std::vector<Rational>> inverse_;
};

bool same_lattice(const Sublattice& a, const Sublattice& b);

// The unimodular T with to.basis() = from.basis() * T. Rewriting in `from`
// followed by monomial_substitute by unimodular_inverse(T) equals rewriting
// in `to`. Throws std::invalid_argument if the lattices differ.
IntMatrix change_of_basis(const Sublattice& from, const Sublattice& to);

// {e : w.e = 0 mod r} in column Hermite normal form.
Sublattice invariant_sublattice(const CharacterAction& action);

// Re-expresses f in the coordinates of s: each x^e becomes y^c with basis * c = e.
LaurentPoly rewrite_in_sublattice(const LaurentPoly& f, const Sublattice& s);

// Solves w . rows[i] = rhs[i] (mod r) for integer w of length n, returning the
// lexicographically smallest solution with entries in [0, r), or nullopt.
std::optional<std::vector<std::int64_t>> solve_congruences(const std::vector<std::vector<std::int64_t>>& rows,
                                                           const std::vector<std::int64_t>& rhs,
                                                           std::int64_t modulus, std::size_t n);

}  // namespace lgforge
