#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "hyperspec/tensor.hpp"

namespace hyperspec {

using AnyTensor = std::variant<Tensor<Rational>, Tensor<Complex>>;

// TNS: header "k n", then one line per nonzero entry with k 1-based indices
// followed by either one exact rational "p/q" or two doubles "re im".
// A file with any complex entry parses as a complex tensor.
AnyTensor parse_tns(std::istream& in);
AnyTensor parse_tns(std::string_view text);

std::string to_tns(const Tensor<Rational>& t);
std::string to_tns(const Tensor<Complex>& t);

}  // namespace hyperspec
