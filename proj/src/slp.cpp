#include "pathcheck/slp.hpp"

#include "pathcheck/errors.hpp"

#include <algorithm>

namespace pathcheck {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Slp::Slp(std::vector<Rule> rules, std::size_t output, std::vector<std::string> names)
    : rules_(std::move(rules)), output_(output), names_(std::move(names)) {
  if (rules_.empty()) throw PreconditionError("straight-line program without rules");
  if (output_ >= rules_.size()) throw PreconditionError("output rule out of range");
  if (!names_.empty() && names_.size() != rules_.size())
    throw PreconditionError("one name per rule expected");
  length_.resize(rules_.size());
  min_.resize(rules_.size());
  max_.resize(rules_.size());
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    auto check = [&](std::size_t child) {
      if (child >= i) throw PreconditionError("rule " + name(i) + " refers forward (cyclic or unordered)");
    };
    std::visit(overloaded{
                   [&](const Concat& r) {
                     check(r.left);
                     check(r.right);
                     length_[i] = length_[r.left] + length_[r.right];
                     min_[i] = std::min(min_[r.left], min_[r.right]);
                     max_[i] = std::max(max_[r.left], max_[r.right]);
                   },
                   [&](const Shift& r) {
                     check(r.child);
                     if (r.delta < 0) throw PreconditionError("negative shift in rule " + name(i));
                     length_[i] = length_[r.child];
                     min_[i] = min_[r.child] + r.delta;
                     max_[i] = max_[r.child] + r.delta;
                   },
                   [&](const Leaf& r) {
                     length_[i] = 1;
                     min_[i] = r.point.value;
                     max_[i] = r.point.value;
                   }},
               rules_[i]);
  }
}

std::string Slp::name(std::size_t i) const {
  if (!names_.empty()) return names_[i];
  return "N" + std::to_string(i);
}

Slp Slp::with_output(std::size_t output) const { return Slp(rules_, output, names_); }

std::size_t SlpBuilder::leaf(DataPoint p) {
  rules_.push_back(Slp::Leaf{std::move(p)});
  return rules_.size() - 1;
}

std::size_t SlpBuilder::concat(std::size_t left, std::size_t right) {
  rules_.push_back(Slp::Concat{left, right});
  return rules_.size() - 1;
}

std::size_t SlpBuilder::shift(std::size_t child, const Int& delta) {
  if (delta == 0) return child;
  rules_.push_back(Slp::Shift{child, delta});
  return rules_.size() - 1;
}

std::size_t SlpBuilder::word(const DataWord& w) {
  if (w.empty()) throw PreconditionError("cannot build a rule for the empty word");
  std::vector<std::size_t> parts;
  for (const auto& p : w) parts.push_back(leaf(p));
  while (parts.size() > 1) {
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(concat(parts[i], parts[i + 1]));
    if (parts.size() % 2 == 1) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts.front();
}

std::size_t SlpBuilder::import(const Slp& g) {
  std::size_t base = rules_.size();
  for (const auto& r : g.rules()) {
    rules_.push_back(std::visit(overloaded{[&](const Slp::Concat& c) -> Slp::Rule {
                                             return Slp::Concat{c.left + base, c.right + base};
                                           },
                                           [&](const Slp::Shift& s) -> Slp::Rule {
                                             return Slp::Shift{s.child + base, s.delta};
                                           },
                                           [&](const Slp::Leaf& l) -> Slp::Rule { return l; }},
                                r));
  }
  return g.output() + base;
}

std::size_t SlpBuilder::concat_all(const std::vector<std::size_t>& parts) {
  if (parts.empty()) throw PreconditionError("concatenation of no parts");
  std::size_t acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = concat(acc, parts[i]);
  return acc;
}

Slp SlpBuilder::build(std::size_t output) const { return Slp(rules_, output); }

Int slp_length(const Slp& g) { return g.length_of(g.output()); }
Int slp_min(const Slp& g) { return g.min_of(g.output()); }
Int slp_max(const Slp& g) { return g.max_of(g.output()); }

DataWord slp_expand(const Slp& g, std::size_t budget) {
  if (slp_length(g) > Int(budget))
    throw BudgetExceeded("expansion of " + slp_length(g).str() + " points exceeds the budget of " +
                         std::to_string(budget));
  std::vector<DataPoint> out;
  out.reserve(to_size(slp_length(g)));
  // Explicit stack of (rule, accumulated shift); right children pushed first.
  std::vector<std::pair<std::size_t, Int>> stack{{g.output(), Int(0)}};
  while (!stack.empty()) {
    auto [i, s] = std::move(stack.back());
    stack.pop_back();
    std::visit(overloaded{[&](const Slp::Concat& c) {
                            stack.emplace_back(c.right, s);
                            stack.emplace_back(c.left, s);
                          },
                          [&](const Slp::Shift& r) { stack.emplace_back(r.child, s + r.delta); },
                          [&](const Slp::Leaf& l) { out.emplace_back(l.point.props, l.point.value + s); }},
               g.rules()[i]);
  }
  return DataWord(std::move(out));
}

SlpCursor::SlpCursor(const Slp& g) : g_(&g) { stack_.push_back({g.output(), Int(0), Int(0)}); }

const PropSet& SlpCursor::seek(const Int& i, Int& value) {
  if (i < 0 || i >= g_->length_of(g_->output()))
    throw PreconditionError("position " + i.str() + " out of range");
  while (stack_.size() > 1) {
    const Frame& f = stack_.back();
    if (i >= f.start && i < f.start + g_->length_of(f.rule)) break;
    stack_.pop_back();
  }
  for (;;) {
    Frame f = stack_.back();
    const auto& rule = g_->rules()[f.rule];
    if (const auto* leaf = std::get_if<Slp::Leaf>(&rule)) {
      value = leaf->point.value + f.shift;
      return leaf->point.props;
    }
    if (const auto* c = std::get_if<Slp::Concat>(&rule)) {
      const Int& left_len = g_->length_of(c->left);
      if (i < f.start + left_len)
        stack_.push_back({c->left, f.start, f.shift});
      else
        stack_.push_back({c->right, f.start + left_len, f.shift});
    } else {
      const auto& s = std::get<Slp::Shift>(rule);
      stack_.push_back({s.child, f.start, f.shift + s.delta});
    }
  }
}

DataPoint slp_at(const Slp& g, const Int& i) {
  SlpCursor cursor(g);
  Int value;
  const PropSet& props = cursor.seek(i, value);
  return DataPoint(props, value);
}

namespace {

// prod_{i=0}^{count-1} base_{+i*step} by doubling over the binary expansion of count.
std::size_t product(SlpBuilder& b, std::size_t base, const Int& count, const Int& step) {
  std::vector<std::size_t> doubled{base};  // doubled[n] = U_n, covering 2^n copies
  unsigned top = 0;
  while (pow2(top + 1) <= count) {
    std::size_t u = doubled.back();
    doubled.push_back(b.concat(u, b.shift(u, pow2(top) * step)));
    ++top;
  }
  std::size_t acc = doubled[top];
  Int done = pow2(top);
  for (unsigned n = top; n-- > 0;) {
    if (bit_test(count, n)) {
      acc = b.concat(acc, b.shift(doubled[n], done * step));
      done += pow2(n);
    }
  }
  return acc;
}

}  // namespace

Slp slp_iterate(const DataWord& u, const Int& m, const Int& k) {
  if (u.empty()) throw PreconditionError("slp_iterate needs a nonempty word");
  if (m < 1) throw PreconditionError("slp_iterate needs m >= 1");
  if (u.min_value() + (k < 0 ? m * k : Int(0)) < 0)
    throw PreconditionError("slp_iterate would produce negative data values");
  SlpBuilder b;
  if (k >= 0) {
    std::size_t base = b.shift(b.word(u), k);
    return b.build(product(b, base, m, k));
  }
  // Reverse of prod_{i=0}^{m-1} v_{+i|k|} with v = (u_{+mk})^rev.
  std::size_t base = b.word(reversed(shift(u, m * k)));
  return slp_reversed(b.build(product(b, base, m, -k)));
}

Slp slp_reversed(const Slp& g) {
  std::vector<Slp::Rule> rules = g.rules();
  for (auto& r : rules)
    if (auto* c = std::get_if<Slp::Concat>(&r)) std::swap(c->left, c->right);
  return Slp(std::move(rules), g.output());
}

}  // namespace pathcheck
