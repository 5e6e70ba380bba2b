#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lgforge/laurent.hpp"

namespace lgforge {

using Complex = std::complex<double>;

// theta_i f = x_i d/dx_i f, one polynomial per coordinate.
std::vector<LaurentPoly> log_gradient(const LaurentPoly& f);

struct CriticalOptions {
  unsigned starts = 200;
  double tol = 1e-10;          // acceptance bound on max |theta_i f|
  unsigned max_iter = 100;
  double dedupe_radius = 1e-6; // max-norm on coordinates
  std::uint64_t seed = 0;
  double radius_bound = 4.0;   // start moduli are log-uniform in [1/R, R]
  double degeneracy_threshold = 1e-6;  // relative to the absolute term sizes
  unsigned threads = 1;
};

struct CriticalPoint {
  std::vector<Complex> coords;
  Complex value;
  Complex log_hessian_det;
  bool nondegenerate = false;
  double residual = 0.0;
};

struct CriticalSearch {
  std::vector<CriticalPoint> points;
  // Set when every theta_i f vanishes identically (e.g. f constant).
  bool degenerate_input = false;
  unsigned converged_starts = 0;
};

// Damped Newton iteration on theta f = 0 in logarithmic coordinates, from
// `starts` seeded random points; converged points are deduplicated.
CriticalSearch critical_points(const LaurentPoly& f, const CriticalOptions& options = {});

struct CriticalValue {
  Complex value;
  unsigned multiplicity = 1;
};

// Critical values clustered within `cluster_tol` (relative to max(1, |v|)),
// sorted by real then imaginary part.
std::vector<CriticalValue> critical_values(const CriticalSearch& search, double cluster_tol = 1e-8);
std::vector<CriticalValue> critical_values(const LaurentPoly& f, const CriticalOptions& options = {});

// max_i |theta_i f(point)|, evaluated directly from the polynomial.
double log_gradient_residual(const LaurentPoly& f, const std::vector<Complex>& point);

}  // namespace lgforge
