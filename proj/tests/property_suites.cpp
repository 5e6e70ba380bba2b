#include "property_suites.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <iterator>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "lgforge/cover.hpp"
#include "lgforge/critical.hpp"
#include "lgforge/errors.hpp"
#include "lgforge/expression.hpp"
#include "lgforge/lattice.hpp"
#include "lgforge/laurent.hpp"
#include "lgforge/mutation.hpp"
#include "lgforge/periods.hpp"
#include "oracles.hpp"

using namespace lgforge;

namespace props {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

double unit(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

Rational small_rational(Rng& rng) {
  long num = 0;
  while (num == 0) num = uniform(rng, -5, 5);
  Rational q(num, uniform(rng, 1, 3));
  q.canonicalize();
  return q;
}

LaurentPoly random_poly(Rng& rng, std::size_t rank, std::size_t max_terms, long lo, long hi, bool integral = false) {
  LaurentPoly f(rank);
  const auto terms = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    ExponentVector e(rank);
    for (std::size_t i = 0; i < rank; ++i) e[i] = uniform(rng, lo, hi);
    f.add_term(e, integral ? Rational(uniform(rng, 1, 4)) : small_rational(rng));
  }
  return f;
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 1) {
    if (rng() % 2) m.negate_row(0);
    return m;
  }
  const long ops = uniform(rng, 2, 6);
  for (long k = 0; k < ops; ++k) {
    const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    if (a == b) b = (b + 1) % n;
    switch (uniform(rng, 0, 2)) {
      case 0: m.add_row_multiple(a, b, uniform(rng, -2, 2)); break;
      case 1: m.swap_rows(a, b); break;
      default: m.negate_row(a); break;
    }
  }
  return m;
}

std::vector<oracle::Term> to_terms(const LaurentPoly& f) {
  std::vector<oracle::Term> out;
  for (const auto& [e, c] : f.terms()) out.emplace_back(std::vector<long>(e.begin(), e.end()), c);
  return out;
}

// Runs `check` on `instances` seeds; a check returns an empty string on
// success and a description otherwise.
SuiteResult run(const std::string& name, std::uint64_t seed, int instances, const std::function<std::string(Rng&)>& check) {
  SuiteResult res{name, 0, 0, {}};
  Rng rng(seed ^ std::hash<std::string>{}(name));
  for (int i = 0; i < instances; ++i) {
    std::string msg;
    try {
      msg = check(rng);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    ++res.instances;
    if (!msg.empty()) {
      if (res.failures == 0) res.first_failure = "instance " + std::to_string(i) + ": " + msg;
      ++res.failures;
    }
  }
  return res;
}

}  // namespace

SuiteResult ring_axioms(std::uint64_t seed, int instances) {
  return run("ring axioms", seed, instances, [](Rng& rng) -> std::string {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto f = random_poly(rng, n, 5, -3, 3);
    const auto g = random_poly(rng, n, 5, -3, 3);
    const auto h = random_poly(rng, n, 5, -3, 3);
    const auto one = LaurentPoly::constant(n, 1);
    if (!((f + g) + h == f + (g + h))) return "addition not associative";
    if (!(f + g == g + f)) return "addition not commutative";
    if (!((f * g) * h == f * (g * h))) return "multiplication not associative for " + render(f);
    if (!(f * g == g * f)) return "multiplication not commutative";
    if (!(f * (g + h) == f * g + f * h)) return "not distributive";
    if (!(f * one == f)) return "1 is not a unit";
    if (!(f - f).is_zero()) return "f - f is not zero";
    return {};
  });
}

SuiteResult pow_law(std::uint64_t seed, int instances) {
  return run("pow law", seed, instances, [](Rng& rng) -> std::string {
    const auto f = random_poly(rng, 2, 3, -2, 2);
    const auto a = static_cast<unsigned>(uniform(rng, 0, 6));
    const auto b = static_cast<unsigned>(uniform(rng, 0, 6));
    if (!(pow(f, a) * pow(f, b) == pow(f, a + b)))
      return "pow(f," + std::to_string(a) + ")*pow(f," + std::to_string(b) + ") differs for f = " + render(f);
    return {};
  });
}

SuiteResult substitution_composition(std::uint64_t seed, int instances) {
  return run("monomial substitution composition", seed, instances, [](Rng& rng) -> std::string {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t p = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto f = random_poly(rng, n, 5, -3, 3);
    const auto A = random_matrix(rng, m, n, 2);
    const auto B = random_matrix(rng, p, m, 2);
    if (!(monomial_substitute(monomial_substitute(f, A), B) == monomial_substitute(f, B * A)))
      return "composition law fails for " + render(f);
    return {};
  });
}

SuiteResult evaluate_multiplicative(std::uint64_t seed, int instances) {
  return run("evaluate multiplicative", seed, instances, [](Rng& rng) -> std::string {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto f = random_poly(rng, n, 5, -3, 3);
    const auto g = random_poly(rng, n, 5, -3, 3);
    std::vector<std::complex<double>> pt(n);
    for (auto& z : pt) z = std::polar(1.0, 2 * std::numbers::pi * unit(rng));
    const auto lhs = evaluate(f * g, pt);
    const auto rhs = evaluate(f, pt) * evaluate(g, pt);
    if (std::abs(lhs - rhs) > 1e-10 * std::max(1.0, std::abs(rhs))) return "evaluate(fg) != evaluate(f)evaluate(g)";
    return {};
  });
}

SuiteResult render_round_trip(std::uint64_t seed, int instances) {
  return run("render/parse round trip", seed, instances, [](Rng& rng) -> std::string {
    static const std::vector<std::vector<std::string>> names = {{"x"}, {"x", "y"}, {"a1", "b_2", "Z"}};
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto f = random_poly(rng, n, 6, -4, 4).with_varnames(names[n - 1]);
    const auto text = render(f);
    if (!(parse_laurent(text, names[n - 1]) == f)) return "round trip fails for " + text;
    return {};
  });
}

SuiteResult dense_coefficient_oracle(std::uint64_t seed, int instances) {
  return run("coefficients vs dense convolution", seed, instances, [](Rng& rng) -> std::string {
    const auto f = random_poly(rng, 2, 5, -3, 3);
    const auto k = static_cast<unsigned>(uniform(rng, 0, 4));
    const auto fk = pow(f, k);
    for (int probe = 0; probe < 4; ++probe) {
      const long a = uniform(rng, -3 * static_cast<long>(k), 3 * static_cast<long>(k));
      const long b = uniform(rng, -3 * static_cast<long>(k), 3 * static_cast<long>(k));
      if (fk.coefficient(ExponentVector{a, b}) != oracle::power_coefficient(to_terms(f), k, {a, b}))
        return "coefficient mismatch in (" + render(f) + ")^" + std::to_string(k);
    }
    if (!fk.is_zero()) {
      auto it = fk.terms().begin();
      std::advance(it, static_cast<long>(rng() % fk.size()));
      if (it->second != oracle::power_coefficient(to_terms(f), k, {it->first[0], it->first[1]}))
        return "coefficient mismatch on the support of (" + render(f) + ")^" + std::to_string(k);
    }
    if (fk.constant_term() != oracle::constant_term_of_power(to_terms(f), k, 2)) return "constant term mismatch";
    return {};
  });
}

SuiteResult snf_validity(std::uint64_t seed, int instances) {
  return run("Smith normal form", seed, instances, [](Rng& rng) -> std::string {
    const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 4));
    const std::size_t n = rng() % 4 == 0 ? static_cast<std::size_t>(uniform(rng, 1, 4)) : m;
    const auto A = random_matrix(rng, m, n, 5);
    const auto snf = smith_normal_form(A);
    if (!(snf.U * snf.D * snf.V == A)) return "U*D*V != A";
    if (std::abs(determinant(snf.U)) != 1 || std::abs(determinant(snf.V)) != 1) return "U or V not unimodular";
    if (!(snf.U * snf.U_inv == IntMatrix::identity(m)) || !(snf.V * snf.V_inv == IntMatrix::identity(n)))
      return "stored inverses are wrong";
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && snf.D(i, j) != 0) return "D not diagonal";
    const auto d = snf.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0) return "negative invariant factor";
      if (i + 1 < d.size()) {
        if (d[i] == 0 && d[i + 1] != 0) return "zero before nonzero";
        if (d[i] != 0 && d[i + 1] % d[i] != 0) return "divisibility chain broken";
      }
    }
    return {};
  });
}

SuiteResult sublattice_round_trip(std::uint64_t seed, int instances) {
  return run("invariant sublattice", seed, instances, [](Rng& rng) -> std::string {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    const long r = uniform(rng, 1, 12);
    std::vector<std::int64_t> w(n);
    for (auto& x : w) x = uniform(rng, 0, r - 1);
    const CharacterAction action(w, r);
    const auto s = invariant_sublattice(action);
    long g = r;
    for (auto x : w) g = std::gcd(g, x);
    if (s.index() != r / g) return "index is not r / gcd";
    if (std::abs(determinant(s.basis())) != s.index()) return "|det basis| != index";
    for (std::size_t j = 0; j < n; ++j)
      if (!action.fixes(ExponentVector(s.basis().column(j)))) return "basis column not invariant";
    for (int probe = 0; probe < 10; ++probe) {
      ExponentVector e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = uniform(rng, -6, 6);
      if (s.contains(e) != action.fixes(e)) return "membership disagrees with the character at " + to_string(e);
    }
    LaurentPoly f(n);
    for (int t = 0; t < 4; ++t) {
      std::vector<std::int64_t> c(n);
      for (auto& x : c) x = uniform(rng, -2, 2);
      f.add_term(ExponentVector(s.basis() * c), small_rational(rng));
    }
    if (!(monomial_substitute(rewrite_in_sublattice(f, s), s.basis()) == f)) return "round trip fails";
    return {};
  });
}

SuiteResult log_gradient_finite_difference(std::uint64_t seed, int instances) {
  return run("log-gradient vs finite differences", seed, instances, [](Rng& rng) -> std::string {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto f = random_poly(rng, n, 5, -3, 3);
    std::vector<std::complex<double>> x(n);
    for (auto& z : x) z = std::polar(std::exp(unit(rng) - 0.5), 2 * std::numbers::pi * unit(rng));
    const auto grad = log_gradient(f);
    const double h = 1e-5;
    for (std::size_t i = 0; i < n; ++i) {
      auto plus = x, minus = x;
      plus[i] *= std::exp(h);
      minus[i] *= std::exp(-h);
      const auto fd = (evaluate(f, plus) - evaluate(f, minus)) / (2 * h);
      const auto exact = evaluate(grad[i], x);
      // Scale by the size of the summands so cancellation does not inflate
      // the relative error.
      double scale = 0.0;
      for (const auto& [e, c] : f.terms()) {
        double mag = std::abs(c.get_d()) * std::abs(static_cast<double>(e[i]));
        for (std::size_t j = 0; j < n; ++j) mag *= std::pow(std::abs(x[j]), static_cast<double>(e[j]));
        scale += mag;
      }
      if (scale == 0.0) {
        if (std::abs(exact) != 0.0) return "nonzero derivative of an i-independent polynomial";
        continue;
      }
      if (std::abs(fd - exact) > 1e-6 * scale) return "relative error too large for " + render(f);
    }
    return {};
  });
}

SuiteResult period_unimodular_invariance(std::uint64_t seed, int instances) {
  return run("period invariance under unimodular substitution", seed, instances, [](Rng& rng) -> std::string {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto f = random_poly(rng, n, 4, -2, 2, true);
    const auto A = random_unimodular(rng, n);
    const unsigned K = n == 3 ? 5 : 6;
    if (!(period_sequence(f, K) == period_sequence(monomial_substitute(f, A), K)))
      return "periods change under a unimodular substitution of " + render(f);
    return {};
  });
}

SuiteResult parallel_matches_sequential(std::uint64_t seed, int instances) {
  return run("parallel equals sequential", seed, instances, [](Rng& rng) -> std::string {
    const auto a = random_poly(rng, 2, 8, -3, 3);
    const auto b = random_poly(rng, 2, 8, -3, 3);
    const auto threads = static_cast<unsigned>(uniform(rng, 2, 6));
    if (!(multiply(a, b, threads) == multiply(a, b, 1))) return "threaded product differs";
    const auto f = random_poly(rng, 2, 4, -2, 2, true);
    const auto seq = period_sequence(f, 6, {PeriodStrategy::incremental, 1});
    if (!(period_sequence(f, 6, {PeriodStrategy::incremental, threads}) == seq)) return "threaded periods differ";
    if (!(period_sequence(f, 6, {PeriodStrategy::split, threads}) == seq)) return "split strategy differs";
    if (rng() % 10 == 0) {
      CriticalOptions opt;
      opt.starts = 40;
      opt.seed = rng();
      const auto one = critical_points(f, opt);
      opt.threads = threads;
      const auto many = critical_points(f, opt);
      if (one.points.size() != many.points.size()) return "threaded critical search finds a different count";
      for (std::size_t i = 0; i < one.points.size(); ++i)
        if (one.points[i].coords != many.points[i].coords || one.points[i].value != many.points[i].value)
          return "threaded critical search is not bit-identical";
    }
    return {};
  });
}

SuiteResult mutation_ring_map(std::uint64_t seed, int instances) {
  return run("mutation is a ring map", seed, instances, [](Rng& rng) -> std::string {
    const std::vector<std::string> names = {"x", "y"};
    const bool upward = rng() % 2 == 0;
    // x -> x(1+y) needs x-exponents >= 0, x -> x/(1+y) needs them <= 0.
    const auto s = Substitution::parse(names, {upward ? "x*(1+y)" : "x/(1+y)", "y"});
    auto shape = [&](LaurentPoly f) {
      LaurentPoly out(2, names);
      for (const auto& [e, c] : f.terms()) out.add_term(ExponentVector{upward ? std::abs(e[0]) : -std::abs(e[0]), e[1]}, c);
      return out;
    };
    const auto f = shape(random_poly(rng, 2, 4, -2, 2));
    const auto g = shape(random_poly(rng, 2, 4, -2, 2));
    if (!(apply(f + g, s) == apply(f, s) + apply(g, s))) return "not additive";
    if (!(apply(f * g, s) == apply(f, s) * apply(g, s))) return "not multiplicative";
    return {};
  });
}

SuiteResult cover_deck_invariance(std::uint64_t seed, int instances) {
  return run("cover deck invariance", seed, instances, [](Rng& rng) -> std::string {
    // Retry until the random data define a character; inconsistent systems
    // are a legitimate outcome, not a failure.
    for (int attempt = 0; attempt < 200; ++attempt) {
      const long q = uniform(rng, 1, 3);
      DivisorFunctional d{{Rational(uniform(rng, -3, 3), q), Rational(uniform(rng, -3, 3), q)},
                          Rational(uniform(rng, -3, 3), q)};
      for (auto& a : d.linear) a.canonicalize();
      d.constant.canonicalize();
      LaurentPoly f(2);
      for (int t = 0; t < 12 && f.size() < 4; ++t) {
        const ExponentVector e{uniform(rng, -3, 3), uniform(rng, -3, 3)};
        const Rational v = d.degree(e);
        if (v == 0 || v == 1) f.add_term(e, Rational(uniform(rng, 1, 3)));
      }
      if (f.is_zero()) continue;
      CoverSpec spec;
      spec.potential = f;
      spec.functional = d;
      spec.r = uniform(rng, 2, 4);
      spec.descendant = DescendantConstant{static_cast<int>(spec.r), Rational(uniform(rng, -3, 3))};
      std::optional<CoverResult> built;
      try {
        built = build_cover_potential(spec);
      } catch (const InconsistentSystemError&) {
        continue;
      }
      const CoverResult& res = *built;
      for (const auto& [e, c] : res.upstairs_potential.terms())
        if (!res.action.fixes(e)) return "upstairs exponent " + to_string(e) + " not invariant";
      if (!(rewrite_in_sublattice(res.upstairs_potential, res.basis) == res.quotient_potential))
        return "quotient is not the rewrite of the upstairs potential";
      if (!(monomial_substitute(res.quotient_potential, res.basis.basis()) == res.upstairs_potential))
        return "quotient does not pull back to the upstairs potential";
      const Rational expected = -spec.descendant.value + res.complement.constant_term() +
                                pow(res.divisor, static_cast<unsigned>(spec.r)).constant_term();
      if (res.quotient_potential.constant_term() != expected) return "constant term bookkeeping is off";
      return {};
    }
    return "no consistent random cover found";
  });
}

std::vector<SuiteResult> run_all(std::uint64_t seed) {
  return {ring_axioms(seed),
          pow_law(seed),
          substitution_composition(seed),
          evaluate_multiplicative(seed),
          render_round_trip(seed),
          dense_coefficient_oracle(seed),
          snf_validity(seed),
          sublattice_round_trip(seed),
          log_gradient_finite_difference(seed),
          period_unimodular_invariance(seed),
          parallel_matches_sequential(seed),
          mutation_ring_map(seed),
          cover_deck_invariance(seed)};
}

}  // namespace props
