#include "pathcheck/transforms.hpp"

#include "pathcheck/errors.hpp"

#include <algorithm>
#include <functional>

namespace pathcheck {

namespace {

using K = Formula::Kind;

void collect_names(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case K::True: return;
    case K::Prop:
    case K::Constraint: out.insert(f.name()); return;
    case K::Freeze: out.insert(f.name()); collect_names(f.lhs(), out); return;
    case K::Not: collect_names(f.lhs(), out); return;
    default: collect_names(f.lhs(), out); collect_names(f.rhs(), out); return;
  }
}

Formula membership(const std::string& z, const Interval& in) {
  std::vector<Formula> bounds;
  if (in.lo) bounds.push_back(Formula::constraint(z, in.lo_closed ? Rel::Ge : Rel::Gt, *in.lo));
  if (in.hi) bounds.push_back(Formula::constraint(z, in.hi_closed ? Rel::Le : Rel::Lt, *in.hi));
  if (bounds.empty()) return Formula::truth();
  if (bounds.size() == 1) return bounds.front();
  return Formula::conjunction(bounds[0], bounds[1]);
}

class Desugarer {
 public:
  explicit Desugarer(const Formula& f) { collect_names(f, used_); }

  Formula run(const Formula& f) {
    switch (f.kind()) {
      case K::True:
      case K::Prop:
      case K::Constraint: return f;
      case K::Not: return Formula::negation(run(f.lhs()));
      case K::And: return Formula::conjunction(run(f.lhs()), run(f.rhs()));
      case K::Or: return Formula::disjunction(run(f.lhs()), run(f.rhs()));
      case K::Until: return Formula::until(run(f.lhs()), run(f.rhs()));
      case K::Release: return Formula::release(run(f.lhs()), run(f.rhs()));
      case K::Freeze: return Formula::freeze(f.name(), run(f.lhs()));
      case K::UntilIn: {
        Formula a = run(f.lhs());
        Formula b = run(f.rhs());
        if (f.intervals().is_all()) return Formula::until(a, b);
        std::string z = fresh();
        std::vector<Formula> parts;
        for (const auto& in : f.intervals().parts()) parts.push_back(membership(z, in));
        return Formula::freeze(z, Formula::until(a, Formula::conjunction(disjunction_of(parts), b)));
      }
    }
    return f;
  }

 private:
  std::set<std::string> used_;
  std::string z_;

  // One register serves every annotated Until: its constraints sit directly
  // under the freeze that binds it, outside any nested rebinding.
  std::string fresh() {
    if (!z_.empty()) return z_;
    for (unsigned n = 1;; ++n) {
      std::string z = "z" + std::to_string(n);
      if (!used_.count(z)) return z_ = z;
    }
  }
};

Formula negate_constraint(const Formula& c) {
  const std::string& x = c.name();
  const Int& k = c.constant();
  switch (c.rel()) {
    case Rel::Lt: return Formula::constraint(x, Rel::Ge, k);
    case Rel::Le: return Formula::constraint(x, Rel::Gt, k);
    case Rel::Ge: return Formula::constraint(x, Rel::Lt, k);
    case Rel::Gt: return Formula::constraint(x, Rel::Le, k);
    case Rel::Eq:
      return Formula::disjunction(Formula::constraint(x, Rel::Lt, k), Formula::constraint(x, Rel::Gt, k));
  }
  return c;
}

Formula nnf_of(const Formula& f, bool negated) {
  switch (f.kind()) {
    case K::True:
    case K::Prop: return negated ? Formula::negation(f) : f;
    case K::Constraint: return negated ? negate_constraint(f) : f;
    case K::Not: return nnf_of(f.lhs(), !negated);
    case K::And:
      return negated ? Formula::disjunction(nnf_of(f.lhs(), true), nnf_of(f.rhs(), true))
                     : Formula::conjunction(nnf_of(f.lhs(), false), nnf_of(f.rhs(), false));
    case K::Or:
      return negated ? Formula::conjunction(nnf_of(f.lhs(), true), nnf_of(f.rhs(), true))
                     : Formula::disjunction(nnf_of(f.lhs(), false), nnf_of(f.rhs(), false));
    case K::Until:
      return negated ? Formula::release(nnf_of(f.lhs(), true), nnf_of(f.rhs(), true))
                     : Formula::until(nnf_of(f.lhs(), false), nnf_of(f.rhs(), false));
    case K::Release:
      return negated ? Formula::until(nnf_of(f.lhs(), true), nnf_of(f.rhs(), true))
                     : Formula::release(nnf_of(f.lhs(), false), nnf_of(f.rhs(), false));
    case K::Freeze: return Formula::freeze(f.name(), nnf_of(f.lhs(), negated));
    case K::UntilIn: throw PreconditionError("nnf needs a desugared formula");
  }
  return f;
}

template <class Fn>
void for_each_node(const Formula& f, Fn&& fn) {
  fn(f);
  switch (f.kind()) {
    case K::True:
    case K::Prop:
    case K::Constraint: return;
    case K::Not:
    case K::Freeze: for_each_node(f.lhs(), fn); return;
    default:
      for_each_node(f.lhs(), fn);
      for_each_node(f.rhs(), fn);
  }
}

void free_regs(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case K::True:
    case K::Prop: return;
    case K::Constraint:
      if (!bound.count(f.name())) out.insert(f.name());
      return;
    case K::Freeze: {
      bool inserted = bound.insert(f.name()).second;
      free_regs(f.lhs(), bound, out);
      if (inserted) bound.erase(f.name());
      return;
    }
    case K::Not: free_regs(f.lhs(), bound, out); return;
    default:
      free_regs(f.lhs(), bound, out);
      free_regs(f.rhs(), bound, out);
  }
}

}  // namespace

Formula desugar(const Formula& f) { return Desugarer(f).run(f); }

Formula nnf(const Formula& f) { return nnf_of(f, false); }

bool is_desugared(const Formula& f) {
  bool ok = true;
  for_each_node(f, [&](const Formula& g) { ok = ok && g.kind() != K::UntilIn; });
  return ok;
}

Int c_phi(const Formula& f) {
  Int c = 0;
  for_each_node(f, [&](const Formula& g) {
    if (g.kind() == K::Constraint) c = std::max(c, g.constant());
  });
  return c;
}

Int abs_constant_bound(const Formula& f) {
  Int c = 0;
  for_each_node(f, [&](const Formula& g) {
    if (g.kind() == K::Constraint) c = std::max(c, Int(abs(g.constant())));
  });
  return c;
}

std::set<std::string> registers(const Formula& f) {
  std::set<std::string> out;
  for_each_node(f, [&](const Formula& g) {
    if (g.kind() == K::Constraint || g.kind() == K::Freeze) out.insert(g.name());
  });
  return out;
}

std::set<std::string> free_registers(const Formula& f) {
  std::set<std::string> bound, out;
  free_regs(f, bound, out);
  return out;
}

std::size_t register_count(const Formula& f) { return registers(f).size(); }

bool is_freeze_ltl(const Formula& f) {
  bool ok = true;
  for_each_node(f, [&](const Formula& g) {
    if (g.kind() == K::Constraint && !(g.rel() == Rel::Eq && g.constant() == 0)) ok = false;
  });
  return ok;
}

bool is_closed(const Formula& f) { return free_registers(f).empty(); }

std::size_t until_rank(const Formula& f) {
  switch (f.kind()) {
    case K::True:
    case K::Prop: return 0;
    case K::Not: return until_rank(f.lhs());
    case K::And:
    case K::Or: return std::max(until_rank(f.lhs()), until_rank(f.rhs()));
    case K::Until:
    case K::Release: return std::max(until_rank(f.lhs()), until_rank(f.rhs())) + 1;
    default: throw PreconditionError("until rank is defined for LTL formulas only");
  }
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 0;
  for_each_node(f, [&](const Formula&) { ++n; });
  return n;
}

std::size_t temporal_depth(const Formula& f) {
  switch (f.kind()) {
    case K::True:
    case K::Prop:
    case K::Constraint: return 0;
    case K::Not:
    case K::Freeze: return temporal_depth(f.lhs());
    case K::And:
    case K::Or: return std::max(temporal_depth(f.lhs()), temporal_depth(f.rhs()));
    default: return std::max(temporal_depth(f.lhs()), temporal_depth(f.rhs())) + 1;
  }
}

std::size_t formula_depth(const Formula& f) {
  switch (f.kind()) {
    case K::True:
    case K::Prop:
    case K::Constraint: return 0;
    case K::Not:
    case K::Freeze: return formula_depth(f.lhs()) + 1;
    default: return std::max(formula_depth(f.lhs()), formula_depth(f.rhs())) + 1;
  }
}

}  // namespace pathcheck
