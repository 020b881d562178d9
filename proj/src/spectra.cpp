#include "hyperspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hyperspec/error.hpp"

namespace hyperspec {

DenseTensorOperator::DenseTensorOperator(Tensor<Rational> t)
    : exact_(std::move(t)), numeric_(to_complex(exact_)) {
  if (exact_.order() < 2) throw PreconditionError("operator needs tensor order at least 2");
}

std::vector<double> DenseTensorOperator::apply(std::span<const double> x) const {
  std::vector<Complex> z(x.begin(), x.end());
  const auto out = hyperspec::apply(numeric_, std::span<const Complex>(z));
  std::vector<double> r(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) r[i] = out[i].real();
  return r;
}

std::vector<Complex> DenseTensorOperator::apply(std::span<const Complex> x) const {
  return hyperspec::apply(numeric_, x);
}

std::vector<Rational> DenseTensorOperator::apply(std::span<const Rational> x) const {
  return hyperspec::apply(exact_, x);
}

double DenseTensorOperator::max_diagonal() const {
  double best = 0.0;
  std::vector<int> idx(exact_.order());
  for (int i = 0; i < exact_.dim(); ++i) {
    std::fill(idx.begin(), idx.end(), i);
    best = std::max(best, exact_.at(idx).get_d());
  }
  return best;
}

bool DenseTensorOperator::nonnegative() const {
  return std::all_of(exact_.data().begin(), exact_.data().end(), [](const Rational& q) { return sgn(q) >= 0; });
}

std::vector<std::vector<int>> DenseTensorOperator::components() const {
  const int n = exact_.dim();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<int> idx(exact_.order());
  for (std::size_t flat : exact_.nonzeros()) {
    exact_.unflatten(flat, idx);
    for (int v : idx) parent[find(v)] = find(idx[0]);
  }
  std::vector<std::vector<int>> groups(n);
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& g : groups) {
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

std::unique_ptr<TensorOperator> DenseTensorOperator::restrict(std::span<const int> indices) const {
  const int k = exact_.order();
  const int m = static_cast<int>(indices.size());
  std::vector<int> local(exact_.dim(), -1);
  for (int i = 0; i < m; ++i) local[indices[i]] = i;
  Tensor<Rational> sub(k, m);
  std::vector<int> idx(k), mapped(k);
  for (std::size_t flat : exact_.nonzeros()) {
    exact_.unflatten(flat, idx);
    bool inside = true;
    for (int j = 0; j < k && inside; ++j) {
      mapped[j] = local[idx[j]];
      inside = mapped[j] >= 0;
    }
    if (inside) sub.set(mapped, exact_[flat]);
  }
  return std::make_unique<DenseTensorOperator>(std::move(sub));
}

HypergraphTensor::HypergraphTensor(Hypergraph h, TensorKind kind)
    : h_(std::move(h)), kind_(kind), degree_(degrees(h_).values()) {}

double HypergraphTensor::max_diagonal() const {
  if (kind_ == TensorKind::Adjacency || degree_.empty()) return 0.0;
  return *std::max_element(degree_.begin(), degree_.end());
}

std::unique_ptr<TensorOperator> HypergraphTensor::restrict(std::span<const int> indices) const {
  auto sub = induced_subhypergraph(h_, indices);
  return std::make_unique<HypergraphTensor>(std::move(sub.graph), kind_);
}

template <class S>
std::vector<S> HypergraphTensor::eval(std::span<const S> x) const {
  if (static_cast<int>(x.size()) != h_.n()) throw PreconditionError("dimension mismatch in apply");
  const int k = h_.k();
  std::vector<S> out(x.size(), S(0));
  const bool minus = kind_ == TensorKind::Laplacian;
  for (const Edge& e : h_.edges()) {
    for (int a = 0; a < k; ++a) {
      S prod(1);
      for (int b = 0; b < k; ++b) {
        if (b != a) prod *= x[e[b]];
      }
      if (minus) {
        out[e[a]] -= prod;
      } else {
        out[e[a]] += prod;
      }
    }
  }
  if (kind_ != TensorKind::Adjacency) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (degree_[i] == 0) continue;
      S p(1);
      for (int j = 1; j < k; ++j) p *= x[i];
      out[i] += S(degree_[i]) * p;
    }
  }
  return out;
}

namespace {

template <class Op>
double residual_impl(const Op& apply_fn, int k, Complex lambda, std::span<const Complex> x) {
  double scale = 0.0;
  for (const Complex& v : x) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) throw PreconditionError("eigenvector must be nonzero");
  std::vector<Complex> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] / scale;
  const auto ty = apply_fn(std::span<const Complex>(y));
  double worst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    Complex p(1.0, 0.0);
    for (int j = 1; j < k; ++j) p *= y[i];
    worst = std::max(worst, std::abs(ty[i] - lambda * p));
  }
  return worst;
}

}  // namespace

double residual(const TensorOperator& t, Complex lambda, std::span<const Complex> x) {
  if (static_cast<int>(x.size()) != t.dim()) throw PreconditionError("dimension mismatch in residual");
  return residual_impl([&](std::span<const Complex> y) { return t.apply(y); }, t.order(), lambda, x);
}

double residual(const Tensor<Rational>& t, Complex lambda, std::span<const Complex> x) {
  return residual(DenseTensorOperator(t), lambda, x);
}

Rational exact_residual(const TensorOperator& t, const Rational& lambda, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != t.dim()) throw PreconditionError("dimension mismatch in residual");
  if (std::all_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) == 0; })) {
    throw PreconditionError("eigenvector must be nonzero");
  }
  const auto tx = t.apply(x);
  Rational worst = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational p = 1;
    for (int j = 1; j < t.order(); ++j) p *= x[i];
    Rational d = abs(Rational(tx[i] - lambda * p));
    if (d > worst) worst = d;
  }
  return worst;
}

EigenPair make_eigenpair(const TensorOperator& t, Complex lambda, std::vector<Complex> x) {
  EigenPair p{lambda, std::move(x), 0.0};
  p.residual = residual(t, lambda, p.x);
  return p;
}

namespace {

struct ComponentRun {
  double rho = 0.0;
  std::vector<double> x;
  int iterations = 0;
};

ComponentRun perron_connected(const TensorOperator& t, const PowerOptions& opts) {
  const int n = t.dim(), k = t.order();
  const double sigma = std::max(t.max_diagonal(), 1.0);
  const double root = 1.0 / (k - 1);
  ComponentRun run;
  run.x.assign(n, 1.0);
  for (int it = 0; it < opts.max_iter; ++it) {
    const auto tx = t.apply(std::span<const double>(run.x));
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    std::vector<double> xp(n);
    for (int i = 0; i < n; ++i) {
      xp[i] = std::pow(run.x[i], k - 1);
      const double r = tx[i] / xp[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    run.iterations = it + 1;
    if (hi - lo < opts.tol) {
      run.rho = 0.5 * (hi + lo);
      return run;
    }
    double top = 0.0;
    for (int i = 0; i < n; ++i) {
      run.x[i] = std::pow(tx[i] + sigma * xp[i], root);
      top = std::max(top, run.x[i]);
    }
    if (!(top > 0.0) || !std::isfinite(top)) throw ConvergenceError("power iteration broke down");
    for (double& v : run.x) v /= top;
  }
  throw ConvergenceError("power iteration did not converge in " + std::to_string(opts.max_iter) + " steps");
}

}  // namespace

PerronResult spectral_radius_power(const TensorOperator& t, const PowerOptions& opts) {
  if (!t.nonnegative()) throw PreconditionError("power iteration needs a nonnegative tensor");
  if (!(opts.tol > 0.0)) throw PreconditionError("tolerance must be positive");
  if (opts.max_iter < 1) throw PreconditionError("max-iter must be positive");
  const auto comps = t.components();
  PerronResult result;
  result.components = static_cast<int>(comps.size());

  ComponentRun best;
  const std::vector<int>* best_comp = nullptr;
  if (comps.size() == 1) {
    best = perron_connected(t, opts);
    result.iterations = best.iterations;
  } else {
    result.warnings.push_back("input is disconnected (" + std::to_string(comps.size()) +
                              " components); spectral radius taken over components");
    for (const auto& c : comps) {
      auto sub = t.restrict(c);
      auto run = perron_connected(*sub, opts);
      result.iterations += run.iterations;
      if (best_comp == nullptr || run.rho > best.rho) {
        best = std::move(run);
        best_comp = &c;
      }
    }
  }

  std::vector<Complex> x(t.dim(), Complex(0.0, 0.0));
  if (best_comp == nullptr) {
    for (int i = 0; i < t.dim(); ++i) x[i] = best.x[i];
  } else {
    for (std::size_t j = 0; j < best_comp->size(); ++j) x[(*best_comp)[j]] = best.x[j];
  }
  if (best.rho == 0.0) result.warnings.push_back("zero operator (edgeless input); spectral radius is 0");
  result.pair = make_eigenpair(t, best.rho, std::move(x));
  if (result.pair.residual > 10.0 * opts.tol) {
    throw ConvergenceError("Perron residual " + std::to_string(result.pair.residual) + " exceeds tolerance");
  }
  return result;
}

}  // namespace hyperspec
