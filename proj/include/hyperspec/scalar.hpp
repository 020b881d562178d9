#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperspec {

using BigInt = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

inline Complex to_complex(const Rational& q) { return {q.get_d(), 0.0}; }
inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(double x) { return {x, 0.0}; }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
inline bool is_zero(double x) { return x == 0.0; }

inline double magnitude(const Rational& q) { return std::abs(q.get_d()); }
inline double magnitude(const Complex& z) { return std::abs(z); }
inline double magnitude(double x) { return std::abs(x); }

// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& q);

// "re+im i" / "re-im i" with 12 significant digits.
std::string format_complex(Complex z);

// Accepts "p" or "p/q" with optional sign; throws PreconditionError.
Rational parse_rational(std::string_view text);

// Inverse of format_complex.
Complex parse_complex(std::string_view text);

Rational rational_pow(const Rational& base, long exponent);
BigInt factorial(unsigned long n);
BigInt binomial(const BigInt& n, unsigned long k);

}  // namespace hyperspec
