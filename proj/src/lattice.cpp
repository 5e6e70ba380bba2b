#include "lgforge/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "lgforge/errors.hpp"

namespace lgforge {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// Applies elementary operations to A while keeping A_orig = U * A * V and the
// inverses U_inv, V_inv in sync.
struct Reducer {
  IntMatrix A, U, U_inv, V, V_inv;

  explicit Reducer(const IntMatrix& a)
      : A(a),
        U(IntMatrix::identity(a.rows())),
        U_inv(IntMatrix::identity(a.rows())),
        V(IntMatrix::identity(a.cols())),
        V_inv(IntMatrix::identity(a.cols())) {}

  // row t += c * row s
  void row_add(std::size_t t, std::size_t s, std::int64_t c) {
    A.add_row_multiple(t, s, c);
    U_inv.add_row_multiple(t, s, c);
    U.add_col_multiple(s, t, checked::mul(c, -1));
  }
  void row_swap(std::size_t i, std::size_t j) {
    A.swap_rows(i, j);
    U_inv.swap_rows(i, j);
    U.swap_cols(i, j);
  }
  void row_negate(std::size_t i) {
    A.negate_row(i);
    U_inv.negate_row(i);
    U.negate_col(i);
  }
  // col t += c * col s
  void col_add(std::size_t t, std::size_t s, std::int64_t c) {
    A.add_col_multiple(t, s, c);
    V_inv.add_col_multiple(t, s, c);
    V.add_row_multiple(s, t, checked::mul(c, -1));
  }
  void col_swap(std::size_t i, std::size_t j) {
    A.swap_cols(i, j);
    V_inv.swap_cols(i, j);
    V.swap_rows(i, j);
  }
};

std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    std::swap(a[piv], a[col]);
    const Rational p = a[col][col];
    for (auto& v : a[col]) v /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw std::overflow_error("non-integral or oversized entry");
  return q.get_num().get_si();
}

}  // namespace

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<std::int64_t> SNFDecomposition::diagonal() const {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SNFDecomposition::rank() const {
  std::size_t r = 0;
  for (auto v : diagonal())
    if (v != 0) ++r;
  return r;
}

SNFDecomposition smith_normal_form(const IntMatrix& a) {
  Reducer red(a);
  IntMatrix& A = red.A;
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (A(i, j) != 0 && (pi == m || abs64(A(i, j)) < abs64(A(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    red.row_swap(t, pi);
    red.col_swap(t, pj);

    while (true) {
      for (std::size_t i = t + 1; i < m; ++i)
        if (A(i, t) != 0) red.row_add(i, t, -floor_div(A(i, t), A(t, t)));
      for (std::size_t j = t + 1; j < n; ++j)
        if (A(t, j) != 0) red.col_add(j, t, -floor_div(A(t, j), A(t, t)));

      // Remainders left in the pivot row/column are smaller than the pivot.
      std::size_t best_i = t, best_j = t;
      for (std::size_t i = t + 1; i < m; ++i)
        if (A(i, t) != 0 && abs64(A(i, t)) < abs64(A(best_i, best_j))) {
          best_i = i;
          best_j = t;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (A(t, j) != 0 && abs64(A(t, j)) < abs64(A(best_i, best_j))) {
          best_i = t;
          best_j = j;
        }
      if (best_i != t || best_j != t) {
        red.row_swap(t, best_i);
        red.col_swap(t, best_j);
        continue;
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < m && clean; ++i)
        if (A(i, t) != 0) clean = false;
      for (std::size_t j = t + 1; j < n && clean; ++j)
        if (A(t, j) != 0) clean = false;
      if (!clean) continue;

      // Divisibility chain: fold an offending row into the pivot row.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      red.row_add(t, bad, 1);
    }
    if (A(t, t) < 0) red.row_negate(t);
  }

  return SNFDecomposition{std::move(red.U), std::move(red.A), std::move(red.V), std::move(red.U_inv),
                          std::move(red.V_inv)};
}

IntMatrix column_hermite_form(const IntMatrix& basis) {
  if (!basis.is_square()) throw std::invalid_argument("column_hermite_form needs a square matrix");
  IntMatrix B = basis;
  const std::size_t n = B.rows();
  for (std::size_t i = 0; i < n; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = i; j < n; ++j)
        if (B(i, j) != 0 && (best == n || abs64(B(i, j)) < abs64(B(i, best)))) best = j;
      if (best == n) throw std::invalid_argument("column_hermite_form of a singular matrix");
      B.swap_cols(i, best);
      bool done = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (B(i, j) == 0) continue;
        B.add_col_multiple(j, i, -floor_div(B(i, j), B(i, i)));
        if (B(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (B(i, i) < 0) B.negate_col(i);
    for (std::size_t j = 0; j < i; ++j) B.add_col_multiple(j, i, -floor_div(B(i, j), B(i, i)));
  }
  return B;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("unimodular_inverse needs a square matrix");
  const auto det = determinant(m);
  if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
  const auto inv = rational_inverse(m);
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_int64(inv[i][j]);
  return out;
}

// ---------------------------------------------------------------------------
// Characters and sublattices

CharacterAction::CharacterAction(std::vector<std::int64_t> weights, std::int64_t modulus)
    : weights_(std::move(weights)), modulus_(modulus) {
  if (modulus_ < 1) throw std::invalid_argument("character modulus must be >= 1");
  for (auto& w : weights_) w = floor_mod(w, modulus_);
}

std::int64_t CharacterAction::character(const ExponentVector& e) const {
  if (e.size() != weights_.size()) throw RankMismatchError(weights_.size(), e.size());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    s = floor_mod(checked::add(s, checked::mul(weights_[i], floor_mod(e[i], modulus_))), modulus_);
  return s;
}

Sublattice::Sublattice(IntMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square()) throw std::invalid_argument("sublattice basis must be square");
  const auto det = determinant(basis_);
  if (det == 0) throw std::invalid_argument("sublattice basis is singular");
  index_ = det < 0 ? -det : det;
  inverse_ = rational_inverse(basis_);
}

Sublattice Sublattice::full(std::size_t rank) { return Sublattice(IntMatrix::identity(rank)); }

std::optional<std::vector<std::int64_t>> Sublattice::membership(const ExponentVector& e) const {
  const std::size_t n = ambient_rank();
  if (e.size() != n) throw RankMismatchError(n, e.size());
  std::vector<std::int64_t> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += inverse_[i][j] * static_cast<long>(e[j]);
    if (s.get_den() != 1) return std::nullopt;
    c[i] = to_int64(s);
  }
  return c;
}

bool same_lattice(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank() != b.ambient_rank() || a.index() != b.index()) return false;
  for (std::size_t j = 0; j < a.ambient_rank(); ++j)
    if (!b.contains(ExponentVector(a.basis().column(j)))) return false;
  return true;
}

IntMatrix change_of_basis(const Sublattice& from, const Sublattice& to) {
  if (!same_lattice(from, to)) throw std::invalid_argument("bases span different lattices");
  std::vector<std::vector<std::int64_t>> cols;
  for (std::size_t j = 0; j < to.ambient_rank(); ++j) cols.push_back(*from.membership(ExponentVector(to.basis().column(j))));
  return IntMatrix::from_columns(cols);
}

Sublattice invariant_sublattice(const CharacterAction& action) {
  const std::size_t n = action.rank();
  if (n == 0) return Sublattice(IntMatrix{});
  IntMatrix w(1, n);
  for (std::size_t j = 0; j < n; ++j) w(0, j) = action.weights()[j];
  const auto snf = smith_normal_form(w);
  const std::int64_t h = snf.D(0, 0);
  const std::int64_t step = action.modulus() / gcd(h, action.modulus());
  IntMatrix basis = snf.V_inv;
  for (std::size_t i = 0; i < n; ++i) basis(i, 0) = checked::mul(basis(i, 0), step);
  return Sublattice(column_hermite_form(basis));
}

LaurentPoly rewrite_in_sublattice(const LaurentPoly& f, const Sublattice& s) {
  if (f.rank() != s.ambient_rank()) throw RankMismatchError(s.ambient_rank(), f.rank());
  LaurentPoly out(f.rank(), f.varnames());
  for (const auto& [e, c] : f.terms()) {
    auto coords = s.membership(e);
    if (!coords) throw NotInSublatticeError("monomial with exponent " + to_string(e) + " is not in the sublattice");
    out.add_term(ExponentVector(std::move(*coords)), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linear congruences

namespace {

bool congruences_solvable(const std::vector<std::vector<std::int64_t>>& rows, const std::vector<std::int64_t>& rhs,
                          std::int64_t r, std::size_t first_free, std::size_t n) {
  const std::size_t m = rows.size();
  const std::size_t free = n - first_free;
  if (free == 0) {
    for (auto b : rhs)
      if (floor_mod(b, r) != 0) return false;
    return true;
  }
  IntMatrix M(m, free);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < free; ++j) M(i, j) = floor_mod(rows[i][first_free + j], r);
  const auto snf = smith_normal_form(M);
  std::vector<std::int64_t> b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = floor_mod(rhs[i], r);
  const auto y = snf.U_inv * b;
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t d = i < free ? snf.D(i, i) : 0;
    if (floor_mod(y[i], gcd(d, r)) != 0) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<std::int64_t>> solve_congruences(const std::vector<std::vector<std::int64_t>>& rows,
                                                           const std::vector<std::int64_t>& rhs,
                                                           std::int64_t modulus, std::size_t n) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  if (rows.size() != rhs.size()) throw std::invalid_argument("row/rhs count mismatch");
  for (const auto& row : rows)
    if (row.size() != n) throw RankMismatchError(n, row.size());

  std::vector<std::int64_t> b(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) b[i] = floor_mod(rhs[i], modulus);
  if (!congruences_solvable(rows, b, modulus, 0, n)) return std::nullopt;

  std::vector<std::int64_t> w(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    bool fixed = false;
    for (std::int64_t v = 0; v < modulus && !fixed; ++v) {
      std::vector<std::int64_t> trial(b);
      for (std::size_t i = 0; i < rows.size(); ++i)
        trial[i] = floor_mod(trial[i] - floor_mod(rows[i][p], modulus) * v, modulus);
      if (congruences_solvable(rows, trial, modulus, p + 1, n)) {
        w[p] = v;
        b = std::move(trial);
        fixed = true;
      }
    }
    if (!fixed) return std::nullopt;
  }
  return w;
}

}  // namespace lgforge
