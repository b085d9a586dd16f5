#include "support.hpp"

#include <algorithm>
#include <map>

namespace testsupport {

using namespace pathcheck;

long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

namespace {

Rel random_rel(Rng& rng) { return static_cast<Rel>(uniform(rng, 0, 4)); }

IntervalUnion random_intervals(Rng& rng, int max_c) {
  std::vector<Interval> parts;
  int count = static_cast<int>(uniform(rng, 1, 2));
  for (int i = 0; i < count; ++i) {
    Interval in;
    long long a = uniform(rng, -2, max_c);
    long long b = a + uniform(rng, 0, 3);
    int shape = static_cast<int>(uniform(rng, 0, 5));
    if (shape == 0) {
      in.hi = Int(b);
      in.hi_closed = true;
    } else if (shape == 1) {
      in.lo = Int(a);
      in.lo_closed = uniform(rng, 0, 1) == 1;
    } else {
      in = Interval::closed(a, b);
      if (shape == 3 && b > a) in.hi_closed = false;
      if (shape == 4 && b > a) in.lo_closed = false;
    }
    parts.push_back(in);
  }
  return IntervalUnion(parts);
}

Formula atom(Rng& rng, const FormulaShape& s) {
  int pick = static_cast<int>(uniform(rng, 0, s.constraints ? 5 : 2));
  switch (pick) {
    case 0: return Formula::truth();
    case 1: return Formula::prop("p");
    case 2: return Formula::prop("q");
    default: {
      const auto& x = s.registers[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(s.registers.size()) - 1))];
      return Formula::constraint(x, random_rel(rng), uniform(rng, -s.max_constant, s.max_constant));
    }
  }
}

Formula build(Rng& rng, const FormulaShape& s, int depth) {
  if (depth <= 0 || uniform(rng, 0, 5) == 0) return atom(rng, s);
  int top = 11;
  int pick = static_cast<int>(uniform(rng, 0, top));
  auto sub = [&] { return build(rng, s, depth - 1); };
  switch (pick) {
    case 0: return Formula::negation(sub());
    case 1: return Formula::conjunction(sub(), sub());
    case 2: return Formula::disjunction(sub(), sub());
    case 3: return Formula::until(sub(), sub());
    case 4: return Formula::release(sub(), sub());
    case 5: return eventually(sub());
    case 6: return always(sub());
    case 7: return next(sub());
    case 8:
    case 9:
      if (s.freeze && s.constraints) {
        const auto& x =
            s.registers[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(s.registers.size()) - 1))];
        return Formula::freeze(x, sub());
      }
      return Formula::until(sub(), sub());
    default:
      if (s.intervals) {
        Formula a = sub();
        return Formula::until_in(a, random_intervals(rng, s.max_constant), sub());
      }
      return Formula::conjunction(sub(), sub());
  }
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) { return build(rng, shape, shape.depth); }

Formula random_ltl(Rng& rng, int depth) {
  FormulaShape s;
  s.depth = depth;
  s.freeze = false;
  s.constraints = false;
  s.intervals = false;
  return build(rng, s, depth);
}

DataWord random_word(Rng& rng, std::size_t min_len, std::size_t max_len, long long max_value) {
  auto len = static_cast<std::size_t>(uniform(rng, static_cast<long long>(min_len), static_cast<long long>(max_len)));
  std::vector<DataPoint> pts;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> props;
    if (uniform(rng, 0, 1)) props.push_back("p");
    if (uniform(rng, 0, 2) == 0) props.push_back("q");
    pts.emplace_back(PropSet(props), uniform(rng, 0, max_value));
  }
  return DataWord(std::move(pts));
}

PeriodicWord random_periodic(Rng& rng, std::size_t max_prefix, std::size_t max_period, long long max_value,
                             long long max_offset) {
  DataWord u1 = random_word(rng, 0, max_prefix, max_value);
  DataWord u2 = random_word(rng, 1, max_period, max_value);
  return PeriodicWord(u1, u2, uniform(rng, 0, max_offset));
}

PeriodicWord random_quasi_monotonic(Rng& rng, std::size_t max_prefix, std::size_t max_period, long long max_value,
                                    long long max_offset) {
  DataWord u2 = random_word(rng, 1, max_period, max_value);
  Int lo = u2.min_value();
  Int hi = u2.max_value();
  long long spread = static_cast<long long>(hi - lo);
  long long k = uniform(rng, spread, std::max(spread, max_offset));
  std::vector<DataPoint> pre;
  for (const auto& pt : random_word(rng, 0, max_prefix, static_cast<long long>(hi)))
    pre.push_back(pt);
  return PeriodicWord(DataWord(std::move(pre)), u2, k);
}

Slp leaf_slp(const DataWord& w) {
  SlpBuilder b;
  std::size_t top = b.word(w);
  return b.build(top);
}

Slp random_slp(Rng& rng, std::size_t size, long long max_value) {
  SlpBuilder b;
  std::size_t leaves = static_cast<std::size_t>(uniform(rng, 1, std::max<long long>(1, static_cast<long long>(size) / 3)));
  for (std::size_t i = 0; i < leaves; ++i) {
    std::vector<std::string> props;
    if (uniform(rng, 0, 1)) props.push_back("p");
    b.leaf(DataPoint(PropSet(props), uniform(rng, 0, max_value)));
  }
  while (b.size() < size) {
    auto n = static_cast<long long>(b.size());
    if (uniform(rng, 0, 3) == 0) {
      b.shift(static_cast<std::size_t>(uniform(rng, 0, n - 1)), uniform(rng, 1, 5));
    } else {
      b.concat(static_cast<std::size_t>(uniform(rng, 0, n - 1)), static_cast<std::size_t>(uniform(rng, 0, n - 1)));
    }
  }
  return b.build(b.size() - 1);
}

pathcheck::Sam2Circuit random_circuit(Rng& rng, std::size_t levels, std::size_t gates) {
  using pathcheck::GateKind;
  pathcheck::Sam2Circuit c;
  c.gates = gates;
  c.output = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(gates) - 1));
  GateKind k = uniform(rng, 0, 1) ? GateKind::And : GateKind::Or;
  for (std::size_t i = 0; i + 1 < levels; ++i) {
    c.kinds.push_back(k);
    k = k == GateKind::And ? GateKind::Or : GateKind::And;
  }
  c.kinds.push_back(GateKind::Input);
  for (std::size_t g = 0; g < gates; ++g) c.inputs.push_back(uniform(rng, 0, 1) == 1);
  for (std::size_t i = 0; i + 1 < levels; ++i) {
    std::vector<std::size_t> ends;
    for (std::size_t g = 0; g < gates; ++g) ends.insert(ends.end(), {g, g});
    while (true) {
      std::shuffle(ends.begin(), ends.end(), rng);
      bool ok = true;
      for (std::size_t g = 0; i > 0 && g < gates; ++g) ok = ok && ends[2 * g] != ends[2 * g + 1];
      if (ok) break;
    }
    std::vector<std::pair<std::size_t, std::size_t>> wires;
    for (std::size_t g = 0; g < gates; ++g) {
      wires.emplace_back(ends[2 * g], g);
      wires.emplace_back(ends[2 * g + 1], g);
    }
    c.wires.push_back(std::move(wires));
  }
  return c;
}

namespace {

bool ref(const DataWord& w, std::size_t i, std::map<std::string, Int>& nu, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::Prop: return w[i].props.contains(f.name());
    case K::Constraint: {
      auto it = nu.find(f.name());
      Int x = it == nu.end() ? w[0].value : it->second;
      return pathcheck::holds(f.rel(), w[i].value - x, f.constant());
    }
    case K::Not: return !ref(w, i, nu, f.lhs());
    case K::And: return ref(w, i, nu, f.lhs()) && ref(w, i, nu, f.rhs());
    case K::Or: return ref(w, i, nu, f.lhs()) || ref(w, i, nu, f.rhs());
    case K::Freeze: {
      auto saved = nu;
      nu[f.name()] = w[i].value;
      bool r = ref(w, i, nu, f.lhs());
      nu = saved;
      return r;
    }
    case K::Until:
    case K::UntilIn:
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        bool in = f.kind() == K::Until || f.intervals().contains(w[j].value - w[i].value);
        if (in && ref(w, j, nu, f.rhs())) return true;
        if (!ref(w, j, nu, f.lhs())) return false;
      }
      return false;
    case K::Release:
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (!ref(w, j, nu, f.rhs())) return false;
        if (ref(w, j, nu, f.lhs())) return true;
      }
      return true;
  }
  return false;
}

}  // namespace

bool reference_eval(const DataWord& w, const Formula& f) {
  std::map<std::string, Int> nu;
  return ref(w, 0, nu, f);
}

pathcheck::Ocm random_ocm(Rng& rng, std::size_t states, long long max_delta, pathcheck::Encoding enc) {
  pathcheck::Ocm m(enc);
  auto name = [](std::size_t q) { return "q" + std::to_string(q); };
  for (std::size_t q = 0; q < states; ++q) m.add_state(name(q));
  m.set_initial(name(0));
  auto target = [&] { return name(static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(states) - 1))); };
  for (std::size_t q = 0; q < states; ++q) {
    switch (uniform(rng, 0, 5)) {
      case 0:
        break;
      case 1:
        m.add_zero(name(q), target());
        break;
      case 2:
        m.add_zero(name(q), target());
        m.add_add(name(q), Int(-uniform(rng, 1, max_delta)), target());
        break;
      default:
        m.add_add(name(q), Int(uniform(rng, -max_delta, max_delta)), target());
    }
  }
  return m;
}

std::vector<Formula> boolean_formulas(const std::vector<std::string>& props, int depth) {
  std::vector<Formula> out;
  for (const auto& p : props) out.push_back(Formula::prop(p));
  for (int d = 1; d <= depth; ++d) {
    std::vector<Formula> next = out;
    for (std::size_t i = 0; i < out.size(); ++i) {
      next.push_back(Formula::negation(out[i]));
      for (std::size_t j = i; j < out.size(); ++j) {
        next.push_back(Formula::conjunction(out[i], out[j]));
        next.push_back(Formula::disjunction(out[i], out[j]));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace testsupport
