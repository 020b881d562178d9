#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/scalar.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

// Order-k operator x -> T x^(k-1). Hypergraph tensors of power hypergraphs
// are far too large to store densely, so the numerical routines only see
// this interface.
class TensorOperator {
 public:
  virtual ~TensorOperator() = default;

  virtual int dim() const = 0;
  virtual int order() const = 0;
  virtual std::vector<double> apply(std::span<const double> x) const = 0;
  virtual std::vector<Complex> apply(std::span<const Complex> x) const = 0;
  virtual std::vector<Rational> apply(std::span<const Rational> x) const = 0;
  virtual double max_diagonal() const = 0;
  virtual bool nonnegative() const = 0;
  // Connected components of the index support graph.
  virtual std::vector<std::vector<int>> components() const = 0;
  // Principal sub-operator on the listed indices, in that order.
  virtual std::unique_ptr<TensorOperator> restrict(std::span<const int> indices) const = 0;
};

class DenseTensorOperator final : public TensorOperator {
 public:
  explicit DenseTensorOperator(Tensor<Rational> t);

  int dim() const override { return exact_.dim(); }
  int order() const override { return exact_.order(); }
  std::vector<double> apply(std::span<const double> x) const override;
  std::vector<Complex> apply(std::span<const Complex> x) const override;
  std::vector<Rational> apply(std::span<const Rational> x) const override;
  double max_diagonal() const override;
  bool nonnegative() const override;
  std::vector<std::vector<int>> components() const override;
  std::unique_ptr<TensorOperator> restrict(std::span<const int> indices) const override;

  const Tensor<Rational>& tensor() const { return exact_; }

 private:
  Tensor<Rational> exact_;
  Tensor<Complex> numeric_;
};

// A_H, L_H or Q_H evaluated edge by edge.
class HypergraphTensor final : public TensorOperator {
 public:
  HypergraphTensor(Hypergraph h, TensorKind kind);

  int dim() const override { return h_.n(); }
  int order() const override { return h_.k(); }
  std::vector<double> apply(std::span<const double> x) const override { return eval(x); }
  std::vector<Complex> apply(std::span<const Complex> x) const override { return eval(x); }
  std::vector<Rational> apply(std::span<const Rational> x) const override { return eval(x); }
  double max_diagonal() const override;
  bool nonnegative() const override { return kind_ != TensorKind::Laplacian || h_.m() == 0; }
  std::vector<std::vector<int>> components() const override { return connected_components(h_); }
  std::unique_ptr<TensorOperator> restrict(std::span<const int> indices) const override;

  const Hypergraph& hypergraph() const { return h_; }
  TensorKind kind() const { return kind_; }

 private:
  template <class S>
  std::vector<S> eval(std::span<const S> x) const;

  Hypergraph h_;
  TensorKind kind_;
  std::vector<int> degree_;
};

struct EigenPair {
  Complex lambda;
  std::vector<Complex> x;
  double residual = 0.0;
};

// max_i |(T x)_i - lambda x_i^(k-1)| with x scaled to max-norm 1.
double residual(const TensorOperator& t, Complex lambda, std::span<const Complex> x);
double residual(const Tensor<Rational>& t, Complex lambda, std::span<const Complex> x);

// Exact max_i |(T x)_i - lambda x_i^(k-1)| (no normalization).
Rational exact_residual(const TensorOperator& t, const Rational& lambda, std::span<const Rational> x);

// Builds the pair and fills in its residual.
EigenPair make_eigenpair(const TensorOperator& t, Complex lambda, std::vector<Complex> x);

struct PowerOptions {
  double tol = 1e-10;
  int max_iter = 100000;
};

struct PerronResult {
  EigenPair pair;
  int components = 1;
  int iterations = 0;
  std::vector<std::string> warnings;
};

// Perron pair of a nonnegative operator by the shifted iteration
//   x <- (T x + s x^[k-1])^[1/(k-1)],  s = max(max diagonal, 1),
// stopped on the Collatz-Wielandt gap. Disconnected inputs are solved per
// component; the vector of the winning component is zero-padded.
PerronResult spectral_radius_power(const TensorOperator& t, const PowerOptions& opts = {});

}  // namespace hyperspec
