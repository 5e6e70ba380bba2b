#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lgforge/int_matrix.hpp"

namespace lgforge {

using Rational = mpq_class;

// Exponent of a monomial x^e on a rank-n torus.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t rank) : entries_(rank, 0) {}
  ExponentVector(std::initializer_list<std::int64_t> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;
  std::int64_t total_degree() const noexcept;
  std::int64_t dot(std::span<const std::int64_t> other) const;

  ExponentVector operator-() const;
  ExponentVector& operator+=(const ExponentVector& other);
  ExponentVector& operator-=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

std::string to_string(const ExponentVector& e);

// Graded-lexicographic display order: larger total degree first, ties broken
// so that x precedes y (lexicographically larger exponent first).
struct GradedLexOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Sparse Laurent polynomial with exact rational coefficients. Zero
// coefficients are never stored, so equality is equality of term maps.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, Rational, GradedLexOrder>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t rank, std::vector<std::string> varnames = {});

  static LaurentPoly constant(std::size_t rank, const Rational& c,
                              std::vector<std::string> varnames = {});
  static LaurentPoly monomial(const ExponentVector& e, const Rational& c = 1,
                              std::vector<std::string> varnames = {});
  static LaurentPoly variable(std::size_t rank, std::size_t index,
                              std::vector<std::string> varnames = {});
  static std::vector<std::string> default_varnames(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<std::string>& varnames() const noexcept { return varnames_; }
  LaurentPoly with_varnames(std::vector<std::string> names) const;

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Rational coefficient(const ExponentVector& e) const;
  Rational constant_term() const;

  // Adds c * x^e, dropping the entry if it cancels.
  void add_term(const ExponentVector& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  // Multiplies every exponent shift: returns x^e * f.
  LaurentPoly shifted(const ExponentVector& e) const;
  // Componentwise minimum and maximum of the support; f must be nonzero.
  ExponentVector min_exponents() const;
  ExponentVector max_exponents() const;

 private:
  void check_rank(const ExponentVector& e) const;

  std::size_t rank_ = 0;
  TermMap terms_;
  std::vector<std::string> varnames_;
};

// Product with the left factor's terms split into `threads` chunks that are
// multiplied concurrently and merged in chunk order.
LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b, unsigned threads = 1);
LaurentPoly scale(const LaurentPoly& f, const Rational& c);
LaurentPoly pow(const LaurentPoly& f, unsigned k);

// Pullback along the monomial map x^e -> y^(A e); A is n_out x n_in.
LaurentPoly monomial_substitute(const LaurentPoly& f, const IntMatrix& a);

// Vertices of the Newton polytope, sorted lexicographically ascending.
std::vector<ExponentVector> newton_polytope(const LaurentPoly& f);

std::complex<double> evaluate(const LaurentPoly& f, std::span<const std::complex<double>> point);

// Text in the expression grammar accepted by parse().
std::string render(const LaurentPoly& f);
std::string render(const Rational& q);

}  // namespace lgforge
