#include "pathcheck/checker.hpp"
#include "pathcheck/errors.hpp"
#include "pathcheck/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pathcheck {

namespace {

using K = Formula::Kind;

struct ConstraintAtom {
  Rel rel;
  Int c;
};

// Decides closed freeze subformulas bottom-up and reduces each one to a
// constraint-free question over an ultimately periodic word.
class OneRegister {
 public:
  OneRegister(std::vector<DataPoint> u1, std::vector<DataPoint> u2, Int k)
      : u1_(std::move(u1)), u2_(std::move(u2)), k_(std::move(k)) {}

  // Positions i in [0, span) with w[i:] |= body, where the register holds d_i.
  std::vector<char> label(const Formula& body, std::size_t positions) {
    std::vector<Formula> inner;
    collect_freezes(body, inner);
    for (const auto& fz : inner) {
      if (names_.count(fz.identity())) continue;
      auto lab = label(fz.lhs(), span());
      std::string p = "$f" + std::to_string(names_.size());
      names_.emplace(fz.identity(), p);
      mark(p, lab);
    }
    std::vector<ConstraintAtom> atoms;
    Formula residual = strip(body, atoms);
    std::size_t budget = formula_size(residual);
    std::vector<char> out(positions, 0);
    for (std::size_t i = 0; i < positions; ++i) out[i] = decide_at(i, residual, atoms, budget);
    return out;
  }

 private:
  std::vector<DataPoint> u1_;
  std::vector<DataPoint> u2_;
  Int k_;
  std::map<const void*, std::string> names_;

  std::size_t span() const { return u1_.size() + u2_.size(); }

  static void collect_freezes(const Formula& f, std::vector<Formula>& out) {
    switch (f.kind()) {
      case K::True:
      case K::Prop:
      case K::Constraint: return;
      case K::Freeze: out.push_back(f); return;
      case K::Not: collect_freezes(f.lhs(), out); return;
      case K::UntilIn: throw PreconditionError("engines need a desugared formula");
      default:
        collect_freezes(f.lhs(), out);
        collect_freezes(f.rhs(), out);
    }
  }

  void mark(const std::string& p, const std::vector<char>& lab) {
    for (std::size_t i = 0; i < span(); ++i) {
      if (!lab[i]) continue;
      auto& pt = i < u1_.size() ? u1_[i] : u2_[i - u1_.size()];
      pt.props = pt.props.with(p);
    }
  }

  // Freezes become their marker propositions, constraints become "$c<n>".
  Formula strip(const Formula& f, std::vector<ConstraintAtom>& atoms) {
    switch (f.kind()) {
      case K::True:
      case K::Prop: return f;
      case K::Constraint:
        atoms.push_back({f.rel(), f.constant()});
        return Formula::prop("$c" + std::to_string(atoms.size() - 1));
      case K::Freeze: return Formula::prop(names_.at(f.identity()));
      case K::Not: return Formula::negation(strip(f.lhs(), atoms));
      case K::And: return Formula::conjunction(strip(f.lhs(), atoms), strip(f.rhs(), atoms));
      case K::Or: return Formula::disjunction(strip(f.lhs(), atoms), strip(f.rhs(), atoms));
      case K::Until: return Formula::until(strip(f.lhs(), atoms), strip(f.rhs(), atoms));
      case K::Release: return Formula::release(strip(f.lhs(), atoms), strip(f.rhs(), atoms));
      case K::UntilIn: break;
    }
    throw PreconditionError("engines need a desugared formula");
  }

  static DataPoint with_atoms(const DataPoint& pt, const Int& diff, const std::vector<ConstraintAtom>& atoms) {
    std::vector<std::string> names(pt.props.begin(), pt.props.end());
    for (std::size_t j = 0; j < atoms.size(); ++j)
      if (holds(atoms[j].rel, diff, atoms[j].c)) names.push_back("$c" + std::to_string(j));
    return DataPoint(PropSet(std::move(names)), 0);
  }

  // Smallest block index a >= 0 from which (e + a*k) rel c may change value.
  static void switch_points(const Int& e, const Int& k, const ConstraintAtom& at, std::set<Int>& out) {
    auto add = [&](const Int& a) {
      if (a >= 1) out.insert(a);
    };
    switch (at.rel) {
      case Rel::Lt:
      case Rel::Ge: add(ceil_div(at.c - e, k)); break;
      case Rel::Le:
      case Rel::Gt: add(floor_div(at.c - e, k) + 1); break;
      case Rel::Eq: {
        Int a = ceil_div(at.c - e, k);
        add(a);
        add(a + 1);
        break;
      }
    }
  }

  bool decide_at(std::size_t i, const Formula& residual, const std::vector<ConstraintAtom>& atoms,
                 std::size_t budget) {
    std::vector<DataPoint> v1;
    std::vector<DataPoint> v2;
    if (i < u1_.size()) {
      v1.assign(u1_.begin() + static_cast<std::ptrdiff_t>(i), u1_.end());
      v2 = u2_;
    } else {
      std::size_t r = i - u1_.size();
      v2.assign(u2_.begin() + static_cast<std::ptrdiff_t>(r), u2_.end());
      for (std::size_t j = 0; j < r; ++j) v2.emplace_back(u2_[j].props, u2_[j].value + k_);
    }
    const Int d0 = v1.empty() ? v2.front().value : v1.front().value;

    std::vector<DataPoint> prefix;
    for (const auto& pt : v1) prefix.push_back(with_atoms(pt, pt.value - d0, atoms));

    // Block a of the period carries values v2 + a*k; each constraint flips
    // at most once per position as a grows.
    std::vector<Int> starts{0};
    if (!k_.is_zero()) {
      std::set<Int> points;
      for (const auto& pt : v2)
        for (const auto& at : atoms) switch_points(pt.value - d0, k_, at, points);
      starts.insert(starts.end(), points.begin(), points.end());
    }
    auto block = [&](const Int& a) {
      std::vector<DataPoint> b;
      for (const auto& pt : v2) b.push_back(with_atoms(pt, pt.value + a * k_ - d0, atoms));
      return b;
    };
    const Int cap(budget);
    for (std::size_t s = 0; s + 1 < starts.size(); ++s) {
      Int count = std::min(Int(starts[s + 1] - starts[s]), cap);
      auto b = block(starts[s]);
      for (Int c = 0; c < count; ++c) prefix.insert(prefix.end(), b.begin(), b.end());
    }
    PeriodicWord lw(DataWord(std::move(prefix)), DataWord(block(starts.back())), 0);
    return check_periodic(lw, residual).satisfied;
  }
};

}  // namespace

Verdict check_tptl1(const PeriodicWord& w, const Formula& f) {
  Formula g = desugar(f);
  if (register_count(g) > 1) throw PreconditionError("the one-register engine needs at most one register");
  // The initial valuation binds the register to d_0, as a freeze at 0 would.
  OneRegister solver(w.prefix().points(), w.period().points(), w.offset());
  Verdict v;
  v.engine = "tptl1";
  v.satisfied = solver.label(g, 1)[0];
  return v;
}

}  // namespace pathcheck
