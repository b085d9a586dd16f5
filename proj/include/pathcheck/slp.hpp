#pragma once

#include "pathcheck/bigint.hpp"
#include "pathcheck/dataword.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pathcheck {

inline constexpr std::size_t kDefaultExpansionBudget = std::size_t{1} << 20;

// Straight-line program over data points.  Rules are stored in topological
// order: every rule only refers to rules with a smaller index, which makes the
// grammar acyclic by construction.
class Slp {
 public:
  struct Concat {
    std::size_t left;
    std::size_t right;
  };
  struct Shift {
    std::size_t child;
    Int delta;  // natural
  };
  struct Leaf {
    DataPoint point;
  };
  using Rule = std::variant<Concat, Shift, Leaf>;

  Slp(std::vector<Rule> rules, std::size_t output, std::vector<std::string> names = {});

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t output() const noexcept { return output_; }
  std::size_t rule_count() const noexcept { return rules_.size(); }

  // Name of rule i; generated when the program was not parsed from text.
  std::string name(std::size_t i) const;

  // Per-rule aggregates, computed bottom-up at construction.
  const Int& length_of(std::size_t i) const { return length_[i]; }
  const Int& min_of(std::size_t i) const { return min_[i]; }
  const Int& max_of(std::size_t i) const { return max_[i]; }

  // Same rules with a different start symbol.
  Slp with_output(std::size_t output) const;

 private:
  std::vector<Rule> rules_;
  std::size_t output_;
  std::vector<std::string> names_;
  std::vector<Int> length_;
  std::vector<Int> min_;
  std::vector<Int> max_;
};

// Incremental construction with shared rules.
class SlpBuilder {
 public:
  std::size_t leaf(DataPoint p);
  std::size_t concat(std::size_t left, std::size_t right);
  // Shift by zero returns child unchanged.
  std::size_t shift(std::size_t child, const Int& delta);
  // Balanced concatenation of one leaf per point.  Precondition: w nonempty.
  std::size_t word(const DataWord& w);
  // Copies every rule of g and returns the index of its output.
  std::size_t import(const Slp& g);
  // Left-to-right concatenation of several nonempty parts.
  std::size_t concat_all(const std::vector<std::size_t>& parts);

  Slp build(std::size_t output) const;
  std::size_t size() const noexcept { return rules_.size(); }

 private:
  std::vector<Slp::Rule> rules_;
};

Int slp_length(const Slp& g);
Int slp_min(const Slp& g);
Int slp_max(const Slp& g);

// Throws BudgetExceeded if the expansion is longer than budget.
DataWord slp_expand(const Slp& g, std::size_t budget = kDefaultExpansionBudget);

// Throws PreconditionError when i >= slp_length(g).
DataPoint slp_at(const Slp& g, const Int& i);

// Sequential random access.  Amortised constant time when positions are
// visited in increasing order; logarithmic in the expansion otherwise.
class SlpCursor {
 public:
  explicit SlpCursor(const Slp& g);

  // Seeks to position i and returns the point's propositions; the data value
  // is written to value.
  const PropSet& seek(const Int& i, Int& value);

 private:
  struct Frame {
    std::size_t rule;
    Int start;
    Int shift;
  };
  const Slp* g_;
  std::vector<Frame> stack_;
};

// u_{+k} u_{+2k} ... u_{+mk}.  Requires u nonempty, m >= 1 and
// d + i*k >= 0 for all values d of u and 0 <= i <= m.
Slp slp_iterate(const DataWord& u, const Int& m, const Int& k);

// Same rules with every Concat's children swapped: expands to the reverse.
Slp slp_reversed(const Slp& g);

}  // namespace pathcheck
