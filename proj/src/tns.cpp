#include "hyperspec/tns.hpp"

#include <cstdio>
#include <istream>
#include <sstream>
#include <vector>

namespace hyperspec {

namespace {

struct Entry {
  std::vector<int> idx;
  Rational exact;
  Complex approx;
  bool is_complex = false;
  int line = 0;
};

int parse_int(const std::string& tok, int line) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line);
  return static_cast<int>(v);
}

double parse_double(const std::string& tok, int line) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size()) throw ParseError("expected a number, got '" + tok + "'", line);
  return v;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

template <class S>
void write_indices(std::ostringstream& out, const Tensor<S>& t, std::size_t flat) {
  const auto idx = t.indices(flat);
  for (int i : idx) out << i + 1 << ' ';
  out << ' ';
}

}  // namespace

AnyTensor parse_tns(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_tokens = [&](std::vector<std::string>& toks) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream ss(line);
      toks.clear();
      std::string tok;
      while (ss >> tok) toks.push_back(tok);
      return true;
    }
    return false;
  };

  std::vector<std::string> toks;
  if (!next_tokens(toks)) throw ParseError("missing header 'k n'", line_no + 1);
  if (toks.size() != 2) throw ParseError("header must be 'k n'", line_no);
  const int k = parse_int(toks[0], line_no);
  const int n = parse_int(toks[1], line_no);
  if (k < 1 || n < 1) throw ParseError("order and dimension must be positive", line_no);

  std::vector<Entry> entries;
  bool any_complex = false;
  while (next_tokens(toks)) {
    const auto count = static_cast<int>(toks.size());
    if (count != k + 1 && count != k + 2) {
      throw ParseError("expected " + std::to_string(k) + " indices and a value", line_no);
    }
    Entry e;
    e.line = line_no;
    for (int j = 0; j < k; ++j) {
      const int i = parse_int(toks[j], line_no);
      if (i < 1 || i > n) throw ParseError("index " + toks[j] + " out of range", line_no);
      e.idx.push_back(i - 1);
    }
    if (count == k + 1) {
      try {
        e.exact = parse_rational(toks[k]);
      } catch (const PreconditionError& err) {
        throw ParseError(err.what(), line_no);
      }
      e.approx = to_complex(e.exact);
    } else {
      e.approx = {parse_double(toks[k], line_no), parse_double(toks[k + 1], line_no)};
      e.is_complex = true;
      any_complex = true;
    }
    entries.push_back(std::move(e));
  }

  auto fill = [&](auto& t, auto value_of) {
    std::vector<bool> seen(t.size(), false);
    for (const Entry& e : entries) {
      const std::size_t flat = t.flat_index(e.idx);
      if (seen[flat]) throw ParseError("duplicate entry", e.line);
      seen[flat] = true;
      t[flat] = value_of(e);
    }
  };
  if (any_complex) {
    Tensor<Complex> t(k, n);
    fill(t, [](const Entry& e) { return e.approx; });
    return t;
  }
  Tensor<Rational> t(k, n);
  fill(t, [](const Entry& e) { return e.exact; });
  return t;
}

AnyTensor parse_tns(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tns(in);
}

std::string to_tns(const Tensor<Rational>& t) {
  std::ostringstream out;
  out << t.order() << ' ' << t.dim() << '\n';
  for (std::size_t flat : t.nonzeros()) {
    write_indices(out, t, flat);
    out << format_rational(t[flat]) << '\n';
  }
  return out.str();
}

std::string to_tns(const Tensor<Complex>& t) {
  std::ostringstream out;
  out << t.order() << ' ' << t.dim() << '\n';
  for (std::size_t flat : t.nonzeros()) {
    write_indices(out, t, flat);
    out << format_real(t[flat].real()) << ' ' << format_real(t[flat].imag()) << '\n';
  }
  return out.str();
}

}  // namespace hyperspec
