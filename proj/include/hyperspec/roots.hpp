#pragma once

#include <optional>
#include <vector>

#include "hyperspec/polynomial.hpp"

namespace hyperspec {

struct RootOptions {
  int max_iter = 5000;
  // Accept when |p(z)| <= residual_tol * sum_i |c_i| |z|^i for every root.
  double residual_tol = 1e-10;
};

// All complex roots with multiplicity, by Durand-Kerner simultaneous
// iteration from a deterministic circle followed by Newton polishing.
// Throws ConvergenceError when the residual test fails.
std::vector<Complex> poly_roots(const Polynomial<Complex>& p, const RootOptions& opts = {});

// Exact input: the square-free parts are solved separately so repeated
// roots come back clustered to full precision.
std::vector<Complex> poly_roots(const Polynomial<Rational>& p, const RootOptions& opts = {});

// Largest real part among roots with |imag| < imag_tol.
std::optional<double> largest_real_root(const std::vector<Complex>& roots, double imag_tol = 1e-9);

}  // namespace hyperspec
