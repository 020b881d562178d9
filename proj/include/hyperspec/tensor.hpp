#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperspec/error.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/scalar.hpp"

namespace hyperspec {

// Dense order-k, dimension-n tensor. Indices are 0-based; the first index
// is the most significant in the flat layout, so row i occupies a
// contiguous block of n^(k-1) entries.
template <class S>
class Tensor {
 public:
  // Refuses shapes with more than this many entries.
  static constexpr std::size_t kMaxEntries = std::size_t{1} << 26;

  Tensor(int order, int dim) : order_(order), dim_(dim) {
    if (order < 1) throw PreconditionError("tensor order must be at least 1");
    if (dim < 1) throw PreconditionError("tensor dimension must be at least 1");
    std::size_t size = 1;
    for (int i = 0; i < order; ++i) {
      if (size > kMaxEntries / static_cast<std::size_t>(dim)) {
        throw BudgetExceeded("dense tensor of order " + std::to_string(order) + " and dimension " +
                             std::to_string(dim) + " is too large");
      }
      size *= static_cast<std::size_t>(dim);
    }
    data_.assign(size, S(0));
  }

  static Tensor from_vector(std::span<const S> v) {
    Tensor t(1, static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) t.data_[i] = v[i];
    return t;
  }

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }
  std::size_t row_size() const { return data_.size() / static_cast<std::size_t>(dim_); }

  std::size_t flat_index(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != order_) throw PreconditionError("index arity mismatch");
    std::size_t flat = 0;
    for (int i : idx) {
      if (i < 0 || i >= dim_) throw PreconditionError("tensor index out of range");
      flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return flat;
  }

  void unflatten(std::size_t flat, std::span<int> idx) const {
    for (int j = order_ - 1; j >= 0; --j) {
      idx[j] = static_cast<int>(flat % static_cast<std::size_t>(dim_));
      flat /= static_cast<std::size_t>(dim_);
    }
  }

  std::vector<int> indices(std::size_t flat) const {
    std::vector<int> idx(order_);
    unflatten(flat, idx);
    return idx;
  }

  const S& operator[](std::size_t flat) const { return data_[flat]; }
  S& operator[](std::size_t flat) { return data_[flat]; }
  const S& at(std::span<const int> idx) const { return data_[flat_index(idx)]; }
  const S& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  void set(std::span<const int> idx, S value) { data_[flat_index(idx)] = std::move(value); }
  void set(std::initializer_list<int> idx, S value) {
    set(std::span<const int>(idx.begin(), idx.size()), std::move(value));
  }

  const std::vector<S>& data() const { return data_; }

  std::vector<std::size_t> nonzeros() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (!is_zero(data_[i])) out.push_back(i);
    }
    return out;
  }

  // Invariance under every permutation of the index tuple.
  bool is_symmetric() const;

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.order_ == b.order_ && a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  int order_;
  int dim_;
  std::vector<S> data_;
};

template <class S>
bool Tensor<S>::is_symmetric() const {
  std::vector<int> idx(order_);
  for (std::size_t flat = 0; flat < data_.size(); ++flat) {
    if (is_zero(data_[flat])) continue;
    unflatten(flat, idx);
    // Adjacent transpositions generate the symmetric group.
    for (int j = 0; j + 1 < order_; ++j) {
      std::swap(idx[j], idx[j + 1]);
      const bool same = data_[flat_index(idx)] == data_[flat];
      std::swap(idx[j], idx[j + 1]);
      if (!same) return false;
    }
  }
  return true;
}

enum class TensorKind { Adjacency, Laplacian, SignlessLaplacian };

const char* to_string(TensorKind kind);

Tensor<Rational> unit_tensor(int k, int n);
Tensor<Rational> adjacency_tensor(const Hypergraph& h);
Tensor<Rational> laplacian_tensor(const Hypergraph& h);
Tensor<Rational> signless_laplacian_tensor(const Hypergraph& h);
Tensor<Rational> hypergraph_tensor(const Hypergraph& h, TensorKind kind);

Tensor<Complex> to_complex(const Tensor<Rational>& t);

// (T x)_i = sum over i_2..i_k of t_{i i_2..i_k} x_{i_2} ... x_{i_k}.
template <class S>
std::vector<S> apply(const Tensor<S>& t, std::span<const S> x) {
  if (static_cast<int>(x.size()) != t.dim()) throw PreconditionError("dimension mismatch in apply");
  std::vector<S> out(t.dim(), S(0));
  std::vector<int> idx(t.order());
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    if (is_zero(t[flat])) continue;
    t.unflatten(flat, idx);
    S term = t[flat];
    for (int j = 1; j < t.order(); ++j) term *= x[idx[j]];
    out[idx[0]] += term;
  }
  return out;
}

template <class S>
std::vector<S> apply(const Tensor<S>& t, const std::vector<S>& x) {
  return apply(t, std::span<const S>(x));
}

// x^[p]: componentwise power.
template <class S>
std::vector<S> power_vector(std::span<const S> x, int p) {
  std::vector<S> out(x.size(), S(1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (int j = 0; j < p; ++j) out[i] *= x[i];
  }
  return out;
}

// General product of an order-m tensor A with an order-k tensor B:
//   c_{i a_1 .. a_{m-1}} = sum a_{i i_2..i_m} b_{i_2 a_1} ... b_{i_m a_{m-1}}
// giving order (m-1)(k-1)+1.
template <class S>
Tensor<S> shao_product(const Tensor<S>& a, const Tensor<S>& b) {
  if (a.order() < 2) throw PreconditionError("left factor must have order at least 2");
  if (a.dim() != b.dim()) throw PreconditionError("dimension mismatch in tensor product");
  const int n = a.dim();
  const int m = a.order();
  const int tail = b.order() - 1;  // length of each alpha block
  Tensor<S> c((m - 1) * tail + 1, n);
  const std::size_t blocks = c.size() / static_cast<std::size_t>(n);  // n^((m-1)tail)
  std::size_t block_span = 1;
  for (int j = 0; j < tail; ++j) block_span *= static_cast<std::size_t>(n);

  std::vector<int> idx(m);
  for (std::size_t flat = 0; flat < a.size(); ++flat) {
    if (is_zero(a[flat])) continue;
    a.unflatten(flat, idx);
    const std::size_t row_base = static_cast<std::size_t>(idx[0]) * blocks;
    // Each alpha_j ranges over n^tail entries of row idx[j] of B.
    std::vector<std::size_t> alpha(m - 1, 0);
    for (std::size_t combo = 0; combo < blocks; ++combo) {
      std::size_t rem = combo;
      for (int j = m - 2; j >= 0; --j) {
        alpha[j] = rem % block_span;
        rem /= block_span;
      }
      S term = a[flat];
      bool zero = false;
      for (int j = 1; j < m && !zero; ++j) {
        const S& bv = b[static_cast<std::size_t>(idx[j]) * block_span + alpha[j - 1]];
        if (is_zero(bv)) {
          zero = true;
        } else {
          term *= bv;
        }
      }
      if (!zero) c[row_base + combo] += term;
    }
  }
  return c;
}

// (P T Q)_{i_1..i_k} = sum t_{j_1..j_k} p_{i_1 j_1} q_{j_2 i_2} ... q_{j_k i_k}
// with P and Q given as order-2 tensors.
template <class S>
Tensor<S> matrix_sandwich(const Tensor<S>& p, const Tensor<S>& t, const Tensor<S>& q) {
  if (p.order() != 2 || q.order() != 2) throw PreconditionError("P and Q must be matrices");
  if (p.dim() != t.dim() || q.dim() != t.dim()) {
    throw PreconditionError("dimension mismatch in matrix sandwich");
  }
  const int n = t.dim();
  const int k = t.order();
  Tensor<S> cur = t;
  std::vector<int> idx(k);
  // Contract one mode at a time.
  for (int mode = 0; mode < k; ++mode) {
    Tensor<S> next(k, n);
    for (std::size_t flat = 0; flat < cur.size(); ++flat) {
      if (is_zero(cur[flat])) continue;
      cur.unflatten(flat, idx);
      const int j = idx[mode];
      for (int i = 0; i < n; ++i) {
        const S& w = mode == 0 ? p.at({i, j}) : q.at({j, i});
        if (is_zero(w)) continue;
        idx[mode] = i;
        next[next.flat_index(idx)] += cur[flat] * w;
      }
      idx[mode] = j;
    }
    cur = std::move(next);
  }
  return cur;
}

template <class S>
Tensor<S> diagonal_matrix(std::span<const S> diag) {
  Tensor<S> d(2, static_cast<int>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) {
    d.set({static_cast<int>(i), static_cast<int>(i)}, diag[i]);
  }
  return d;
}

struct PhaseSimilarity {
  bool similar;
  double max_deviation;
};

// Compares T with exp(-i theta) U^{-(k-1)} T U for a diagonal unitary U.
PhaseSimilarity check_phase_similarity(const Tensor<Complex>& t, std::span<const Complex> u,
                                       double theta, double tol = 1e-12);

}  // namespace hyperspec
