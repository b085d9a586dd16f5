#include "pathcheck/formula.hpp"

#include "pathcheck/errors.hpp"

#include <sstream>

namespace pathcheck {

bool holds(Rel rel, const Int& lhs, const Int& c) {
  switch (rel) {
    case Rel::Lt: return lhs < c;
    case Rel::Le: return lhs <= c;
    case Rel::Eq: return lhs == c;
    case Rel::Ge: return lhs >= c;
    case Rel::Gt: return lhs > c;
  }
  return false;
}

std::string_view rel_symbol(Rel rel) {
  switch (rel) {
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Eq: return "=";
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
  }
  return "?";
}

Interval Interval::closed(Int a, Int b) { return {std::move(a), true, std::move(b), true}; }
Interval Interval::all() { return {}; }

bool Interval::contains(const Int& v) const {
  if (lo && (lo_closed ? v < *lo : v <= *lo)) return false;
  if (hi && (hi_closed ? v > *hi : v >= *hi)) return false;
  return true;
}

bool Interval::empty() const {
  if (!lo || !hi) return false;
  Int a = lo_closed ? *lo : *lo + 1;
  Int b = hi_closed ? *hi : *hi - 1;
  return a > b;
}

IntervalUnion::IntervalUnion(std::vector<Interval> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw PreconditionError("interval union needs at least one interval");
  for (auto& p : parts_) {
    if (!p.lo) p.lo_closed = false;
    if (!p.hi) p.hi_closed = false;
    if (p.empty()) throw PreconditionError("empty interval in annotation");
  }
}

bool IntervalUnion::contains(const Int& v) const {
  for (const auto& p : parts_)
    if (p.contains(v)) return true;
  return false;
}

bool IntervalUnion::is_all() const {
  for (const auto& p : parts_)
    if (p.is_all()) return true;
  return false;
}

struct Formula::Node {
  Kind kind;
  std::string name;
  Rel rel = Rel::Eq;
  Int c;
  std::optional<IntervalUnion> intervals;
  std::optional<Formula> a;
  std::optional<Formula> b;
};

Formula Formula::truth() {
  static const Formula t(std::make_shared<const Node>(Node{Kind::True, {}, Rel::Eq, {}, {}, {}, {}}));
  return t;
}

Formula Formula::falsity() { return negation(truth()); }

Formula Formula::prop(std::string name) {
  if (name.empty()) throw PreconditionError("empty proposition name");
  return Formula(std::make_shared<const Node>(Node{Kind::Prop, std::move(name), Rel::Eq, {}, {}, {}, {}}));
}

Formula Formula::constraint(std::string reg, Rel rel, Int c) {
  if (reg.empty()) throw PreconditionError("empty register name");
  return Formula(std::make_shared<const Node>(Node{Kind::Constraint, std::move(reg), rel, std::move(c), {}, {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, Rel::Eq, {}, {}, std::move(f), {}}));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, Rel::Eq, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, Rel::Eq, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::until(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::Until, {}, Rel::Eq, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::release(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::Release, {}, Rel::Eq, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::freeze(std::string reg, Formula body) {
  if (reg.empty()) throw PreconditionError("empty register name");
  return Formula(std::make_shared<const Node>(Node{Kind::Freeze, std::move(reg), Rel::Eq, {}, {}, std::move(body), {}}));
}

Formula Formula::until_in(Formula a, IntervalUnion in, Formula b) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::UntilIn, {}, Rel::Eq, {}, std::move(in), std::move(a), std::move(b)}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const {
  if (node_->kind != Kind::Prop && node_->kind != Kind::Constraint && node_->kind != Kind::Freeze)
    throw PreconditionError("formula node has no name");
  return node_->name;
}

Rel Formula::rel() const {
  if (node_->kind != Kind::Constraint) throw PreconditionError("not a constraint");
  return node_->rel;
}

const Int& Formula::constant() const {
  if (node_->kind != Kind::Constraint) throw PreconditionError("not a constraint");
  return node_->c;
}

const IntervalUnion& Formula::intervals() const {
  if (!node_->intervals) throw PreconditionError("not an annotated Until");
  return *node_->intervals;
}

const Formula& Formula::lhs() const {
  if (!node_->a) throw PreconditionError("formula node has no operand");
  return *node_->a;
}

const Formula& Formula::rhs() const {
  if (!node_->b) throw PreconditionError("formula node has no second operand");
  return *node_->b;
}

bool Formula::is_false() const noexcept {
  return node_->kind == Kind::Not && node_->a->kind() == Kind::True;
}

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.kind != b.kind || a.name != b.name || a.rel != b.rel || a.c != b.c || a.intervals != b.intervals)
    return false;
  if (a.a.has_value() != b.a.has_value() || a.b.has_value() != b.b.has_value()) return false;
  if (a.a && !(*a.a == *b.a)) return false;
  if (a.b && !(*a.b == *b.b)) return false;
  return true;
}

Formula next(Formula f) { return Formula::until(Formula::falsity(), std::move(f)); }

Formula next_n(Formula f, unsigned n) {
  for (unsigned i = 0; i < n; ++i) f = next(std::move(f));
  return f;
}

Formula eventually(Formula f) { return Formula::until(Formula::truth(), std::move(f)); }
Formula always(Formula f) { return Formula::negation(eventually(Formula::negation(std::move(f)))); }
Formula implies(Formula a, Formula b) { return Formula::disjunction(Formula::negation(std::move(a)), std::move(b)); }

Formula next_in(IntervalUnion in, Formula f) {
  return Formula::until_in(Formula::falsity(), std::move(in), std::move(f));
}

Formula eventually_in(IntervalUnion in, Formula f) {
  return Formula::until_in(Formula::truth(), std::move(in), std::move(f));
}

Formula always_in(IntervalUnion in, Formula f) {
  return Formula::negation(eventually_in(std::move(in), Formula::negation(std::move(f))));
}

Formula disjunction_of(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::falsity();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::disjunction(acc, fs[i]);
  return acc;
}

namespace {

void print_bound(std::ostringstream& out, const std::optional<Int>& b, bool negative_inf) {
  if (b)
    out << *b;
  else
    out << (negative_inf ? "-inf" : "inf");
}

void print_interval(std::ostringstream& out, const Interval& i) {
  out << (i.lo_closed ? '[' : '(');
  print_bound(out, i.lo, true);
  out << ',';
  print_bound(out, i.hi, false);
  out << (i.hi_closed ? ']' : ')');
}

void print_annotation(std::ostringstream& out, const IntervalUnion& in) {
  if (in.parts().size() == 1) {
    print_interval(out, in.parts().front());
    return;
  }
  out << '(';
  for (std::size_t i = 0; i < in.parts().size(); ++i) {
    if (i) out << '|';
    print_interval(out, in.parts()[i]);
  }
  out << ')';
}

void print(std::ostringstream& out, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: out << "true"; return;
    case K::Prop: out << f.name(); return;
    case K::Constraint: out << f.name() << ' ' << rel_symbol(f.rel()) << ' ' << f.constant(); return;
    case K::Not: {
      const Formula& a = f.lhs();
      if (a.kind() == K::True) {
        out << "false";
        return;
      }
      if (a.kind() == K::Until && a.lhs().kind() == K::True && a.rhs().kind() == K::Not) {
        out << "G ";
        print(out, a.rhs().lhs());
        return;
      }
      if (a.kind() == K::UntilIn && a.lhs().kind() == K::True && a.rhs().kind() == K::Not) {
        out << 'G';
        print_annotation(out, a.intervals());
        out << ' ';
        print(out, a.rhs().lhs());
        return;
      }
      out << '!';
      print(out, a);
      return;
    }
    case K::And:
    case K::Or:
    case K::Release:
      out << '(';
      print(out, f.lhs());
      out << (f.kind() == K::And ? " & " : f.kind() == K::Or ? " | " : " R ");
      print(out, f.rhs());
      out << ')';
      return;
    case K::Until: {
      if (f.lhs().is_false()) {
        unsigned n = 0;
        const Formula* g = &f;
        while (g->kind() == K::Until && g->lhs().is_false()) {
          ++n;
          g = &g->rhs();
        }
        if (n == 1)
          out << "X ";
        else
          out << "X^" << n << ' ';
        print(out, *g);
        return;
      }
      if (f.lhs().kind() == K::True) {
        out << "F ";
        print(out, f.rhs());
        return;
      }
      out << '(';
      print(out, f.lhs());
      out << " U ";
      print(out, f.rhs());
      out << ')';
      return;
    }
    case K::UntilIn: {
      if (f.lhs().is_false() || f.lhs().kind() == K::True) {
        out << (f.lhs().is_false() ? 'X' : 'F');
        print_annotation(out, f.intervals());
        out << ' ';
        print(out, f.rhs());
        return;
      }
      out << '(';
      print(out, f.lhs());
      out << " U";
      print_annotation(out, f.intervals());
      out << ' ';
      print(out, f.rhs());
      out << ')';
      return;
    }
    case K::Freeze:
      out << f.name() << '.';
      print(out, f.lhs());
      return;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream out;
  print(out, f);
  return out.str();
}

}  // namespace pathcheck
