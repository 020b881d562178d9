#include "hyperspec/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

#include "hyperspec/error.hpp"

namespace hyperspec {

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::string format_complex(Complex z) {
  double im = z.imag();
  if (im == 0.0) im = 0.0;
  std::string out = format_double(z.real());
  out += std::signbit(im) ? "-" : "+";
  out += format_double(std::abs(im));
  out += "i";
  return out;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  BigInt n(num_str, 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Complex parse_complex(std::string_view text) {
  if (text.empty() || text.back() != 'i') {
    throw PreconditionError("malformed complex '" + std::string(text) + "'");
  }
  // The sign separating real and imaginary parts is the last '+' or '-' that
  // is not at position 0 and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size() - 1; i > 0; --i) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    throw PreconditionError("malformed complex '" + std::string(text) + "'");
  }
  try {
    const double re = std::stod(std::string(text.substr(0, split)));
    const double im = std::stod(std::string(text.substr(split, text.size() - 1 - split)));
    return {re, im};
  } catch (const std::exception&) {
    throw PreconditionError("malformed complex '" + std::string(text) + "'");
  }
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw PreconditionError("zero raised to a negative power");
    Rational inv = 1 / base;
    return rational_pow(inv, -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(const BigInt& n, unsigned long k) {
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

}  // namespace hyperspec
