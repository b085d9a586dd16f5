#pragma once

#include "pathcheck/bigint.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pathcheck {

enum class Rel { Lt, Le, Eq, Ge, Gt };

bool holds(Rel rel, const Int& lhs, const Int& c);
std::string_view rel_symbol(Rel rel);

// Interval over Z; a missing bound is infinite (and then always open).
struct Interval {
  std::optional<Int> lo;
  bool lo_closed = false;
  std::optional<Int> hi;
  bool hi_closed = false;

  static Interval closed(Int a, Int b);
  static Interval all();
  bool contains(const Int& v) const;
  bool empty() const;
  bool is_all() const { return !lo && !hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Nonempty list of nonempty intervals.
class IntervalUnion {
 public:
  explicit IntervalUnion(std::vector<Interval> parts);
  IntervalUnion(Interval single) : IntervalUnion(std::vector<Interval>{std::move(single)}) {}

  const std::vector<Interval>& parts() const noexcept { return parts_; }
  bool contains(const Int& v) const;
  bool is_all() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> parts_;
};

// Immutable TPTL syntax tree with interval-annotated Until.  Subtrees are
// shared, so copies are cheap.
class Formula {
 public:
  enum class Kind { True, Prop, Constraint, Not, And, Or, Until, Release, Freeze, UntilIn };

  static Formula truth();
  static Formula falsity();  // !true
  static Formula prop(std::string name);
  static Formula constraint(std::string reg, Rel rel, Int c);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula until(Formula a, Formula b);
  static Formula release(Formula a, Formula b);
  static Formula freeze(std::string reg, Formula body);
  static Formula until_in(Formula a, IntervalUnion in, Formula b);

  Kind kind() const noexcept;
  // Proposition name, or register name of a constraint or freeze.
  const std::string& name() const;
  Rel rel() const;
  const Int& constant() const;
  const IntervalUnion& intervals() const;
  // Operand of Not and Freeze, left operand of binary nodes.
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is_false() const noexcept;
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Abbreviations, expanded on construction.
Formula next(Formula f);                        // false U f
Formula next_n(Formula f, unsigned n);          // X^n f
Formula eventually(Formula f);                  // true U f
Formula always(Formula f);                      // !F !f
Formula implies(Formula a, Formula b);          // !a | b
Formula next_in(IntervalUnion in, Formula f);   // false U_I f
Formula eventually_in(IntervalUnion in, Formula f);
Formula always_in(IntervalUnion in, Formula f);  // !F_I !f
// Left-nested disjunction; false for an empty list.
Formula disjunction_of(const std::vector<Formula>& fs);

// Grammar, loosest first:  ->  (right)  <  |  <  &  <  U, R (right)  <  unary
//   unary: !f  X f  X^n f  F f  G f  F[I] f  G[I] f  X[I] f  x.f
//   atoms: true  false  p  x ~ c  (f)
// Interval annotations follow the operator directly: U[2,3)  U(-inf,5]
// U([1,2]|[5,7])  F[=2]  F[<=4]  F[>1].  Throws ParseError with the offset.
Formula parse_formula(std::string_view text);

// Re-parses to an equal tree.
std::string to_string(const Formula& f);

}  // namespace pathcheck
