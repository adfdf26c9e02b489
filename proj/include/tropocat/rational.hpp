#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tropocat {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" with q >= 1, always including the denominator.
std::string to_pq_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);

/// Parses a comma separated list such as "1/2,1/4,1/4".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace tropocat
