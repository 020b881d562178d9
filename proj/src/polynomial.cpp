#include "hyperspec/polynomial.hpp"

namespace hyperspec {

std::vector<Polynomial<Rational>> squarefree_decomposition(const Polynomial<Rational>& p) {
  if (p.is_zero()) throw PreconditionError("square-free decomposition of the zero polynomial");
  std::vector<Polynomial<Rational>> out;
  if (p.degree() == 0) return out;
  const Polynomial<Rational> one = Polynomial<Rational>::constant(Rational(1));
  Polynomial<Rational> a = gcd(p, p.derivative());
  Polynomial<Rational> b = exact_quotient(p, a);
  Polynomial<Rational> c = exact_quotient(p.derivative(), a);
  Polynomial<Rational> d = c - b.derivative();
  while (b.degree() > 0) {
    a = gcd(b, d);
    out.push_back(a);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
  }
  // Trailing unit factors carry no roots.
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

}  // namespace hyperspec
