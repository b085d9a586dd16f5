#pragma once

#include "pathcheck/bigint.hpp"
#include "pathcheck/dataword.hpp"
#include "pathcheck/slp.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace pathcheck {

// Word given by straight-line programs: finite when period is empty,
// otherwise prefix (period)^omega_{+offset} with an optional prefix.
struct SlpWord {
  std::optional<Slp> prefix;
  std::optional<Slp> period;
  Int offset = 0;

  bool infinite() const noexcept { return period.has_value(); }
};

using AnyWord = std::variant<DataWord, PeriodicWord, SlpWord>;

// Line-oriented text formats; '#' starts a comment.
//   word finite            then lines `{p,q} 3`
//   word periodic offset=K then `prefix:` and `period:` sections
//   slp output=A0          then rules `A0 = B C` | `B = C + 5` | `C = leaf {p} 7`
// The slp header may also carry `period=P offset=K` (output optional then)
// for an infinite word.
AnyWord parse_word(std::string_view text);

std::string format_word(const DataWord& w);
std::string format_word(const PeriodicWord& w);
std::string format_word(const SlpWord& w);

// Reads a whole file; throws Error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace pathcheck
