#include "pathcheck/bigint.hpp"

#include "pathcheck/errors.hpp"

#include <limits>

namespace pathcheck {

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected an integer", 0);
  Int v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw ParseError("invalid digit in integer '" + std::string(text) + "'", i);
    v *= 10;
    v += c - '0';
  }
  return negative ? Int(-v) : v;
}

std::string to_string(const Int& v) { return v.str(); }

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

Int pow2(unsigned n) {
  Int v = 1;
  v <<= n;
  return v;
}

std::size_t to_size(const Int& v) {
  if (v < 0 || v > Int(std::numeric_limits<std::size_t>::max()))
    throw PreconditionError("value " + v.str() + " does not fit a machine index");
  return static_cast<std::size_t>(v);
}

ParseError::ParseError(const std::string& what, std::size_t offset, std::size_t line)
    : Error(what), offset_(offset), line_(line) {}

}  // namespace pathcheck
