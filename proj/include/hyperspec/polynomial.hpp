#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hyperspec/error.hpp"
#include "hyperspec/scalar.hpp"

namespace hyperspec {

// Univariate polynomial with ascending coefficients c_0 + c_1 x + ... .
// The zero polynomial has no coefficients; otherwise the leading
// coefficient is nonzero.
template <class S>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(S value) { return Polynomial(std::vector<S>{std::move(value)}); }
  // x - root
  static Polynomial linear_factor(const S& root) { return Polynomial(std::vector<S>{-root, S(1)}); }
  static Polynomial monomial(int degree, S coeff = S(1)) {
    std::vector<S> c(degree + 1, S(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coefficients() const { return c_; }
  S coefficient(int i) const { return i >= 0 && i <= degree() ? c_[i] : S(0); }
  const S& leading() const { return c_.back(); }

  S operator()(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * S(static_cast<int>(i));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    std::vector<S> c = c_;
    const S lead = c.back();
    for (S& x : c) x /= lead;
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const S& s) {
    for (S& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (S& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (hyperspec::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(int e) const {
    Polynomial out = constant(S(1));
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && hyperspec::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

// Quotient and remainder over a field.
template <class S>
std::pair<Polynomial<S>, Polynomial<S>> divmod(const Polynomial<S>& a, const Polynomial<S>& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<S> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<S>{}, a};
  std::vector<S> quot(a.degree() - db + 1, S(0));
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(rem[i])) continue;
    const S f = rem[i] / b.leading();
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coefficient(j);
  }
  rem.resize(db);
  return {Polynomial<S>(std::move(quot)), Polynomial<S>(std::move(rem))};
}

// Exact division; throws if b does not divide a.
template <class S>
Polynomial<S> exact_quotient(const Polynomial<S>& a, const Polynomial<S>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("polynomial division is not exact");
  return q;
}

// Monic gcd over an exact field.
inline Polynomial<Rational> gcd(Polynomial<Rational> a, Polynomial<Rational> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Polynomial<Complex> to_complex(const Polynomial<Rational>& p) {
  std::vector<Complex> c;
  for (const Rational& q : p.coefficients()) c.push_back(to_complex(q));
  return Polynomial<Complex>(std::move(c));
}

// Square-free decomposition p = lc * prod f_i^i (Yun). Entry i-1 holds f_i.
std::vector<Polynomial<Rational>> squarefree_decomposition(const Polynomial<Rational>& p);

}  // namespace hyperspec
