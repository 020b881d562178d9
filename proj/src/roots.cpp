#include "hyperspec/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hyperspec {

namespace {

struct Eval {
  Complex value;
  Complex slope;
  double scale;  // sum |c_i| |z|^i
};

Eval evaluate(const std::vector<Complex>& c, Complex z) {
  Complex v(0.0), dv(0.0);
  double s = 0.0;
  const double az = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dv = dv * z + v;
    v = v * z + *it;
    s = s * az + std::abs(*it);
  }
  return {v, dv, s};
}

}  // namespace

std::vector<Complex> poly_roots(const Polynomial<Complex>& p, const RootOptions& opts) {
  if (p.is_zero()) throw PreconditionError("the zero polynomial has no finite root set");
  const int n = p.degree();
  if (n == 0) return {};
  const std::vector<Complex> c = p.monic().coefficients();
  if (n == 1) return {-c[0]};

  // Fujiwara bound on root moduli.
  double radius = 0.0;
  for (int i = 0; i < n; ++i) {
    const double term = std::pow(std::abs(c[i]) / (i == 0 ? 2.0 : 1.0), 1.0 / (n - i));
    radius = std::max(radius, 2.0 * term);
  }
  if (radius == 0.0) radius = 1.0;

  std::vector<Complex> z(n);
  for (int j = 0; j < n; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / n + 0.4;
    z[j] = std::polar(radius, angle);
  }

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    double worst_step = 0.0;
    for (int j = 0; j < n; ++j) {
      Complex denom(1.0);
      for (int l = 0; l < n; ++l) {
        if (l != j) denom *= (z[j] - z[l]);
      }
      const Complex value = evaluate(c, z[j]).value;
      if (value == Complex(0.0)) continue;
      if (denom == Complex(0.0)) denom = Complex(1e-300);
      const Complex step = value / denom;
      z[j] -= step;
      worst_step = std::max(worst_step, std::abs(step) / std::max(1.0, std::abs(z[j])));
    }
    if (worst_step < 1e-15) break;
  }

  for (Complex& root : z) {
    for (int step = 0; step < 8; ++step) {
      const Eval e = evaluate(c, root);
      if (e.slope == Complex(0.0)) break;
      const Complex candidate = root - e.value / e.slope;
      if (std::abs(evaluate(c, candidate).value) >= std::abs(e.value)) break;
      root = candidate;
    }
    const Eval e = evaluate(c, root);
    if (!std::isfinite(std::abs(root)) || std::abs(e.value) > opts.residual_tol * e.scale) {
      throw ConvergenceError("polynomial root finder did not converge");
    }
  }
  std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return z;
}

std::vector<Complex> poly_roots(const Polynomial<Rational>& p, const RootOptions& opts) {
  if (p.is_zero()) throw PreconditionError("the zero polynomial has no finite root set");
  std::vector<Complex> out;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    for (const Complex& r : poly_roots(to_complex(factors[i]), opts)) {
      for (std::size_t rep = 0; rep <= i; ++rep) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

std::optional<double> largest_real_root(const std::vector<Complex>& roots, double imag_tol) {
  std::optional<double> best;
  for (const Complex& r : roots) {
    if (std::abs(r.imag()) < imag_tol && (!best || r.real() > *best)) best = r.real();
  }
  return best;
}

}  // namespace hyperspec
