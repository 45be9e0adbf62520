#ifndef CURVEX_FORM_PARSE_HPP
#define CURVEX_FORM_PARSE_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "curvex/binary_form.hpp"
#include "curvex/equiv.hpp"

namespace curvex {

// Malformed command input: syntax errors, unbound parameters, bad flags.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grammar:
//   form   := ['-'] term (('+' | '-') term)*
//   term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
//   factor := ('z' | 'w' | name) ['^' nat]
//   coeff  := nat ['/' nat]
// Names other than z, w are looked up in params; unbound names raise
// UsageError. The result must be homogeneous in z and w.
BinaryForm parse_form(const std::string& text, const std::map<std::string, Rat>& params);

// Parameter expression: a product of factors base['^'exponent] with rational
// base and rational exponent, e.g. "5", "-2/7", "15*5^(-4/5)". Integral
// exponents stay exact; fractional ones evaluate to an interval at the given
// precision (base must be positive).
ParamValue parse_param_value(const std::string& text, unsigned digits);

// "name=p/q" option argument.
std::pair<std::string, Rat> parse_param_binding(const std::string& text);

}  // namespace curvex

#endif
