#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace equik {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

// Parses an optionally signed decimal string. Throws InvalidArgument.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& value) { return value.get_str(); }

inline Integer abs_value(const Integer& value) { return abs(value); }

inline bool is_zero(const Integer& value) { return sgn(value) == 0; }

bool is_zero(const IntVector& v);

// gcd of all entries; zero for the zero vector.
Integer content(const IntVector& v);

}  // namespace equik
