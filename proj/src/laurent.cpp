#include "lgforge/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "lgforge/errors.hpp"

namespace lgforge {

// ---------------------------------------------------------------------------
// ExponentVector

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t ExponentVector::total_degree() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

std::int64_t ExponentVector::dot(std::span<const std::int64_t> other) const {
  if (other.size() != entries_.size()) throw RankMismatchError(entries_.size(), other.size());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    s = checked::add(s, checked::mul(entries_[i], other[i]));
  return s;
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector out(*this);
  for (auto& v : out.entries_) v = -v;
  return out;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  if (other.size() != size()) throw RankMismatchError(size(), other.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = checked::add(entries_[i], other.entries_[i]);
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
  if (other.size() != size()) throw RankMismatchError(size(), other.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = checked::add(entries_[i], -other.entries_[i]);
  return *this;
}

std::string to_string(const ExponentVector& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ',';
    os << e[i];
  }
  os << ')';
  return os.str();
}

bool GradedLexOrder::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da > db;
  return a > b;
}

// ---------------------------------------------------------------------------
// LaurentPoly

std::vector<std::string> LaurentPoly::default_varnames(std::size_t rank) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

LaurentPoly::LaurentPoly(std::size_t rank, std::vector<std::string> varnames)
    : rank_(rank), varnames_(std::move(varnames)) {
  if (varnames_.empty()) varnames_ = default_varnames(rank);
  if (varnames_.size() != rank_) throw RankMismatchError(rank_, varnames_.size());
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const Rational& c, std::vector<std::string> varnames) {
  LaurentPoly p(rank, std::move(varnames));
  p.add_term(ExponentVector(rank), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& e, const Rational& c, std::vector<std::string> varnames) {
  LaurentPoly p(e.size(), std::move(varnames));
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t rank, std::size_t index, std::vector<std::string> varnames) {
  ExponentVector e(rank);
  e[index] = 1;
  return monomial(e, 1, std::move(varnames));
}

LaurentPoly LaurentPoly::with_varnames(std::vector<std::string> names) const {
  if (names.size() != rank_) throw RankMismatchError(rank_, names.size());
  LaurentPoly out(*this);
  out.varnames_ = std::move(names);
  return out;
}

void LaurentPoly::check_rank(const ExponentVector& e) const {
  if (e.size() != rank_) throw RankMismatchError(rank_, e.size());
}

Rational LaurentPoly::coefficient(const ExponentVector& e) const {
  check_rank(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const { return coefficient(ExponentVector(rank_)); }

void LaurentPoly::add_term(const ExponentVector& e, const Rational& c) {
  check_rank(e);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.rank_ != rank_) throw RankMismatchError(rank_, other.rank_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.rank_ != rank_) throw RankMismatchError(rank_, other.rank_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& e) const {
  check_rank(e);
  LaurentPoly out(rank_, varnames_);
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k + e, c);
  return out;
}

ExponentVector LaurentPoly::min_exponents() const {
  if (terms_.empty()) throw std::invalid_argument("min_exponents of zero polynomial");
  ExponentVector m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < rank_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

ExponentVector LaurentPoly::max_exponents() const {
  if (terms_.empty()) throw std::invalid_argument("max_exponents of zero polynomial");
  ExponentVector m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < rank_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

namespace {

using TermList = std::vector<std::pair<const ExponentVector*, const Rational*>>;

void accumulate_products(const TermList& lhs, std::size_t begin, std::size_t end,
                         const LaurentPoly& rhs, LaurentPoly& out) {
  Rational prod;
  for (std::size_t i = begin; i < end; ++i) {
    for (const auto& [e, c] : rhs.terms()) {
      mpq_mul(prod.get_mpq_t(), lhs[i].second->get_mpq_t(), c.get_mpq_t());
      out.add_term(*lhs[i].first + e, prod);
    }
  }
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b, 1); }

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b, unsigned threads) {
  if (a.rank() != b.rank()) throw RankMismatchError(a.rank(), b.rank());
  TermList lhs;
  lhs.reserve(a.size());
  for (const auto& [e, c] : a.terms()) lhs.emplace_back(&e, &c);

  LaurentPoly out(a.rank(), a.varnames());
  const std::size_t n = lhs.size();
  if (threads <= 1 || n < 2 * static_cast<std::size_t>(threads)) {
    accumulate_products(lhs, 0, n, b, out);
    return out;
  }

  std::vector<LaurentPoly> partial(threads, LaurentPoly(a.rank(), a.varnames()));
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(n, t * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    workers.emplace_back([&, t, begin, end] { accumulate_products(lhs, begin, end, b, partial[t]); });
  }
  for (auto& w : workers) w.join();
  for (const auto& p : partial) out += p;
  return out;
}

LaurentPoly scale(const LaurentPoly& f, const Rational& c) { return f * c; }

LaurentPoly pow(const LaurentPoly& f, unsigned k) {
  LaurentPoly out = LaurentPoly::constant(f.rank(), 1, f.varnames());
  for (unsigned i = 0; i < k; ++i) out = f * out;
  return out;
}

LaurentPoly monomial_substitute(const LaurentPoly& f, const IntMatrix& a) {
  if (a.cols() != f.rank()) throw RankMismatchError(f.rank(), a.cols());
  LaurentPoly out(a.rows(), a.rows() == f.rank() ? f.varnames() : std::vector<std::string>{});
  for (const auto& [e, c] : f.terms()) out.add_term(ExponentVector(a * e.entries()), c);
  return out;
}

// ---------------------------------------------------------------------------
// Newton polytope

namespace {

// Exact phase-I simplex with Bland's rule: is `target` a convex combination
// of `points`?
bool in_convex_hull(const ExponentVector& target, const std::vector<ExponentVector>& points) {
  if (points.empty()) return false;
  const std::size_t n = target.size();
  const std::size_t m = points.size();
  const std::size_t rows = n + 1;
  const std::size_t cols = m + rows;  // lambdas then artificials
  const std::size_t rhs = cols;

  std::vector<std::vector<Rational>> t(rows + 1, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i][j] = i < n ? Rational(points[j][i]) : Rational(1);
    t[i][rhs] = i < n ? Rational(target[i]) : Rational(1);
    if (t[i][rhs] < 0)
      for (std::size_t j = 0; j <= rhs; ++j) t[i][j] = -t[i][j];
    t[i][m + i] = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = m + i;
  auto& obj = t[rows];
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < m; ++j) obj[j] -= t[i][j];
  for (std::size_t i = 0; i < rows; ++i) obj[rhs] -= t[i][rhs];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen in phase I

    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational factor = t[i][enter];
      for (std::size_t j = 0; j <= rhs; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }
  return obj[rhs] == 0;
}

}  // namespace

std::vector<ExponentVector> newton_polytope(const LaurentPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("newton_polytope of the zero polynomial");
  std::vector<ExponentVector> support;
  support.reserve(f.size());
  for (const auto& [e, c] : f.terms()) support.push_back(e);
  std::sort(support.begin(), support.end());

  std::vector<ExponentVector> vertices;
  std::vector<ExponentVector> others;
  for (std::size_t i = 0; i < support.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < support.size(); ++j)
      if (j != i) others.push_back(support[j]);
    if (!in_convex_hull(support[i], others)) vertices.push_back(support[i]);
  }
  return vertices;
}

// ---------------------------------------------------------------------------
// Evaluation and rendering

std::complex<double> evaluate(const LaurentPoly& f, std::span<const std::complex<double>> point) {
  if (point.size() != f.rank()) throw RankMismatchError(f.rank(), point.size());
  for (std::size_t i = 0; i < point.size(); ++i)
    if (point[i] == std::complex<double>(0.0, 0.0))
      throw std::domain_error("coordinate " + std::to_string(i) + " is zero; Laurent polynomials live on the torus");
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : f.terms()) {
    std::complex<double> term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      term *= std::pow(point[i], static_cast<int>(e[i]));
    }
    sum += term;
  }
  return sum;
}

std::string render(const Rational& q) { return q.get_str(); }

std::string render(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += f.varnames()[i];
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string term;
    if (mono.empty())
      term = render(mag);
    else if (mag == 1)
      term = mono;
    else
      term = render(mag) + '*' + mono;

    if (first)
      out += negative ? "-" + term : term;
    else
      out += negative ? " - " + term : " + " + term;
    first = false;
  }
  return out;
}

}  // namespace lgforge
