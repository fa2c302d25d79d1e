#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isobaric {

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for every library-level failure (bad arguments, degenerate
/// parameters, singular cores). The CLI maps it to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q". Whitespace around the token is ignored.
Rational parse_rational(std::string_view text);

/// Parses a comma separated list such as "1,1/2,-3/8".
std::vector<Rational> parse_rational_list(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

std::string join(const std::vector<Rational>& values, std::string_view sep = ",");

Integer factorial(unsigned n);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

} // namespace isobaric
