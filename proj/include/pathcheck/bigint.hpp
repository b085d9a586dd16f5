#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace pathcheck {

// Data values, counters and positions in compressed words.
using Int = boost::multiprecision::cpp_int;

// Accepts an optional leading '-' or '+' followed by decimal digits.
Int parse_int(std::string_view text);
std::string to_string(const Int& v);

// Division rounding towards -inf / +inf.  The divisor must be positive.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Int pow2(unsigned n);

// Throws PreconditionError if v does not fit.
std::size_t to_size(const Int& v);

}  // namespace pathcheck
