#include "lgforge/critical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <thread>

#include "lgforge/errors.hpp"

namespace lgforge {

std::vector<LaurentPoly> log_gradient(const LaurentPoly& f) {
  std::vector<LaurentPoly> out(f.rank(), LaurentPoly(f.rank(), f.varnames()));
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < f.rank(); ++i)
      if (e[i] != 0) out[i].add_term(e, c * static_cast<long>(e[i]));
  return out;
}

double log_gradient_residual(const LaurentPoly& f, const std::vector<Complex>& point) {
  double res = 0.0;
  for (const auto& g : log_gradient(f)) res = std::max(res, std::abs(evaluate(g, point)));
  return res;
}

namespace {

// Terms of f with floating coefficients, evaluated in log coordinates
// x = exp(t) so that the Jacobian of theta f is the log-Hessian.
struct NumericPoly {
  std::size_t n = 0;
  std::vector<Complex> coef;
  std::vector<std::vector<double>> exps;

  explicit NumericPoly(const LaurentPoly& f) : n(f.rank()) {
    for (const auto& [e, c] : f.terms()) {
      coef.emplace_back(c.get_d(), 0.0);
      exps.emplace_back(e.begin(), e.end());
    }
  }

  // Fills value, gradient (theta f) and log-Hessian at t.
  void eval(const std::vector<Complex>& t, Complex& value, std::vector<Complex>& grad,
            std::vector<std::vector<Complex>>& hess) const {
    value = 0.0;
    std::fill(grad.begin(), grad.end(), Complex(0.0));
    for (auto& row : hess) std::fill(row.begin(), row.end(), Complex(0.0));
    for (std::size_t k = 0; k < coef.size(); ++k) {
      Complex arg = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (exps[k][j] != 0.0) arg += exps[k][j] * t[j];
      const Complex v = coef[k] * std::exp(arg);
      value += v;
      for (std::size_t i = 0; i < n; ++i) {
        if (exps[k][i] == 0.0) continue;
        grad[i] += exps[k][i] * v;
        for (std::size_t j = 0; j < n; ++j) hess[i][j] += exps[k][i] * exps[k][j] * v;
      }
    }
  }
};

// Solves a x = b in place by partial-pivot elimination; returns the
// determinant of a (0 when singular).
Complex solve_in_place(std::vector<std::vector<Complex>> a, std::vector<Complex>& b) {
  const std::size_t n = a.size();
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
    if (std::abs(a[piv][col]) == 0.0) return 0.0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      const Complex f = a[i][col] / a[col][col];
      if (f == Complex(0.0)) continue;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * b[j];
    b[i] = s / a[i][i];
  }
  return det;
}

Complex complex_determinant(std::vector<std::vector<Complex>> a) {
  std::vector<Complex> dummy(a.size(), Complex(0.0));
  return solve_in_place(std::move(a), dummy);
}

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

// Uniform double in [0, 1) from the top 53 bits, identical across platforms.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::optional<CriticalPoint> newton_from(const NumericPoly& poly, std::vector<Complex> t,
                                         const CriticalOptions& opt) {
  const std::size_t n = poly.n;
  Complex value;
  std::vector<Complex> grad(n);
  std::vector<std::vector<Complex>> hess(n, std::vector<Complex>(n));

  for (unsigned it = 0; it < opt.max_iter; ++it) {
    poly.eval(t, value, grad, hess);
    std::vector<Complex> step = grad;
    if (solve_in_place(hess, step) == Complex(0.0)) return std::nullopt;
    const double size = max_abs(step);
    if (!std::isfinite(size)) return std::nullopt;
    if (size > 1.0)
      for (auto& s : step) s /= size;
    for (std::size_t j = 0; j < n; ++j) t[j] -= step[j];
    for (const auto& tj : t)
      if (std::abs(tj.real()) > 60.0) return std::nullopt;
    if (size < 1e-15) break;
  }

  poly.eval(t, value, grad, hess);
  const double residual = max_abs(grad);
  if (!(residual < opt.tol)) return std::nullopt;

  CriticalPoint p;
  p.coords.resize(n);
  for (std::size_t j = 0; j < n; ++j) p.coords[j] = std::exp(t[j]);
  p.value = value;
  p.residual = residual;
  p.log_hessian_det = complex_determinant(hess);
  // Row i of the scale sums |e_i e_j c x^e| over terms and columns, so that
  // cancellation inside an entry cannot pass for a large determinant.
  std::vector<double> rows(n, 0.0);
  for (std::size_t k = 0; k < poly.coef.size(); ++k) {
    double mag = std::abs(poly.coef[k]);
    for (std::size_t j = 0; j < n; ++j) mag *= std::exp(poly.exps[k][j] * t[j].real());
    double spread = 0.0;
    for (std::size_t j = 0; j < n; ++j) spread += std::abs(poly.exps[k][j]);
    for (std::size_t i = 0; i < n; ++i) rows[i] += std::abs(poly.exps[k][i]) * spread * mag;
  }
  double scale = 1.0;
  for (double r : rows) scale *= r;
  p.nondegenerate = scale > 0.0 && std::abs(p.log_hessian_det) > opt.degeneracy_threshold * scale;
  return p;
}

double grid(double v) { return std::round(v * 1e7); }

bool canonical_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ar = grid(a[i].real()), br = grid(b[i].real());
    if (ar != br) return ar < br;
    const double ai = grid(a[i].imag()), bi = grid(b[i].imag());
    if (ai != bi) return ai < bi;
  }
  return false;
}

}  // namespace

CriticalSearch critical_points(const LaurentPoly& f, const CriticalOptions& options) {
  if (f.rank() == 0) throw std::invalid_argument("critical_points needs rank >= 1");
  CriticalSearch search;
  const auto grads = log_gradient(f);
  if (std::all_of(grads.begin(), grads.end(), [](const LaurentPoly& g) { return g.is_zero(); })) {
    search.degenerate_input = true;
    return search;
  }

  const NumericPoly poly(f);
  const std::size_t n = f.rank();

  // All random draws happen up front so results do not depend on threading.
  std::mt19937_64 rng(options.seed);
  const double log_r = std::log(options.radius_bound);
  std::vector<std::vector<Complex>> starts(options.starts, std::vector<Complex>(n));
  for (auto& s : starts)
    for (auto& tj : s) {
      const double log_modulus = (2.0 * unit_uniform(rng) - 1.0) * log_r;
      const double phase = 2.0 * std::numbers::pi * unit_uniform(rng);
      tj = Complex(log_modulus, phase);
    }

  std::vector<std::optional<CriticalPoint>> found(starts.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, options.starts));
  if (threads == 1) {
    for (std::size_t i = 0; i < starts.size(); ++i) found[i] = newton_from(poly, starts[i], options);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < starts.size(); i += threads) found[i] = newton_from(poly, starts[i], options);
      });
    for (auto& w : workers) w.join();
  }

  std::vector<CriticalPoint> converged;
  for (auto& p : found)
    if (p) converged.push_back(std::move(*p));
  search.converged_starts = static_cast<unsigned>(converged.size());
  std::stable_sort(converged.begin(), converged.end(),
                   [](const CriticalPoint& a, const CriticalPoint& b) { return canonical_less(a.coords, b.coords); });

  for (auto& p : converged) {
    const bool duplicate = std::any_of(search.points.begin(), search.points.end(), [&](const CriticalPoint& q) {
      double d = 0.0;
      for (std::size_t j = 0; j < n; ++j) d = std::max(d, std::abs(p.coords[j] - q.coords[j]));
      return d <= options.dedupe_radius;
    });
    if (!duplicate) search.points.push_back(std::move(p));
  }
  return search;
}

std::vector<CriticalValue> critical_values(const CriticalSearch& search, double cluster_tol) {
  std::vector<CriticalValue> values;
  for (const auto& p : search.points) {
    auto it = std::find_if(values.begin(), values.end(), [&](const CriticalValue& v) {
      return std::abs(v.value - p.value) <= cluster_tol * std::max(1.0, std::abs(v.value));
    });
    if (it == values.end())
      values.push_back({p.value, 1});
    else
      ++it->multiplicity;
  }
  std::stable_sort(values.begin(), values.end(), [](const CriticalValue& a, const CriticalValue& b) {
    return canonical_less({a.value}, {b.value});
  });
  return values;
}

std::vector<CriticalValue> critical_values(const LaurentPoly& f, const CriticalOptions& options) {
  return critical_values(critical_points(f, options));
}

}  // namespace lgforge
