#include "compiled.hpp"
#include "pathcheck/checker.hpp"
#include "pathcheck/errors.hpp"
#include "pathcheck/transforms.hpp"

#include <algorithm>
#include <unordered_map>

namespace pathcheck {

namespace {

using detail::CNode;
using detail::Compiled;
using K = Formula::Kind;

// Absolute semantics straight from the definition.  With a window, every
// Until/Release looks at most window positions ahead.
class AbsoluteEngine {
 public:
  AbsoluteEngine(const Compiled& cf, const DataWord& w, std::optional<std::size_t> window)
      : cf_(cf), w_(w), window_(window) {}

  bool eval(std::uint32_t id, std::size_t i, std::vector<Int>& nu) {
    const CNode& n = cf_.node(id);
    switch (n.kind) {
      case K::True: return true;
      case K::Prop: return w_[i].props.contains(n.prop);
      case K::Constraint: return holds(n.rel, w_[i].value - nu[static_cast<std::size_t>(n.reg)], n.c);
      case K::Not: return !eval(n.a, i, nu);
      case K::And: return eval(n.a, i, nu) && eval(n.b, i, nu);
      case K::Or: return eval(n.a, i, nu) || eval(n.b, i, nu);
      case K::Freeze: {
        auto& slot = nu[static_cast<std::size_t>(n.reg)];
        Int saved = slot;
        slot = w_[i].value;
        bool r = eval(n.a, i, nu);
        slot = std::move(saved);
        return r;
      }
      case K::Until:
      case K::Release: {
        auto key = detail::make_key(n, id, Int(i), nu);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool r = temporal(n, i, nu);
        memo_.emplace(std::move(key), r);
        return r;
      }
      case K::UntilIn: break;
    }
    throw PreconditionError("engines need a desugared formula");
  }

  std::size_t memo_entries() const { return memo_.size(); }

 private:
  const Compiled& cf_;
  const DataWord& w_;
  std::optional<std::size_t> window_;
  std::unordered_map<detail::MemoKey, bool, detail::MemoKeyHash> memo_;

  bool temporal(const CNode& n, std::size_t i, std::vector<Int>& nu) {
    std::size_t end = w_.size() - 1;
    if (window_) end = std::min(end, i + *window_);
    if (n.kind == K::Until) {
      for (std::size_t j = i + 1; j <= end; ++j) {
        if (eval(n.b, j, nu)) return true;
        if (!eval(n.a, j, nu)) return false;
      }
      return false;
    }
    for (std::size_t j = i + 1; j <= end; ++j) {
      if (!eval(n.b, j, nu)) return false;
      if (eval(n.a, j, nu)) return true;
    }
    return true;
  }
};

std::vector<Int> absolute_valuation(const Compiled& cf, const Valuation& nu, const Int& d0) {
  std::vector<Int> out(cf.registers().size(), d0);
  for (const auto& [name, v] : nu) {
    int r = cf.register_index(name);
    if (r >= 0) out[static_cast<std::size_t>(r)] = v;
  }
  return out;
}

}  // namespace

Verdict check_naive(const DataWord& w, const Formula& f) {
  if (w.empty()) throw PreconditionError("empty word");
  Compiled cf(desugar(f));
  AbsoluteEngine eng(cf, w, std::nullopt);
  auto nu = absolute_valuation(cf, {}, w[0].value);
  Verdict v;
  v.engine = "naive";
  v.satisfied = eng.eval(cf.root(), 0, nu);
  v.memo_entries = eng.memo_entries();
  return v;
}

bool eval_absolute(const DataWord& w, std::size_t i, const Valuation& nu, const Formula& f) {
  if (i >= w.size()) throw PreconditionError("position past the end of the word");
  Compiled cf(desugar(f));
  AbsoluteEngine eng(cf, w, std::nullopt);
  auto val = absolute_valuation(cf, nu, w[0].value);
  return eng.eval(cf.root(), i, val);
}

Int unroll_horizon(const PeriodicWord& w, const Formula& f, std::optional<Int> min_delta) {
  const auto p = w.prefix().size();
  const auto q = w.period().size();
  const Int& k = w.offset();
  if (k.is_zero()) return Int(p + 2 * q);
  Formula g = desugar(f);
  Int C = c_phi(g);
  Int m2 = w.period().min_value();
  Int M = w.period().max_value() - m2;
  // Smallest difference d_i - d_p (p <= i) anywhere in the infinite word:
  // pairs inside u1 u2, or across two periods.
  Int md = k - M;
  Int dmax = 0;
  Int running_max = w.value_at(0);
  for (std::size_t i = 0; i < w.span(); ++i) {
    Int d = w.value_at(i);
    running_max = std::max(running_max, d);
    md = std::min(md, Int(d - running_max));
    dmax = std::max(dmax, d);
  }
  if (min_delta && *min_delta < 0) md += *min_delta;
  Int n = ceil_div(C + M + 1 + dmax - md - m2, k) + 1;
  if (n < 2) n = 2;
  return Int(p) + n * Int(q);
}

namespace {

Verdict unrolled(const PeriodicWord& w, const Formula& g, std::size_t start, const Valuation& nu, const Int& H) {
  Compiled cf(g);
  std::size_t depth = std::max<std::size_t>(1, temporal_depth(g));
  std::size_t window = to_size(H);
  std::size_t len = start + depth * window + 1;
  DataWord expanded = w.expand(len);
  AbsoluteEngine eng(cf, expanded, window);
  auto val = absolute_valuation(cf, nu, expanded[0].value);
  Verdict v;
  v.engine = "naive-unrolled";
  v.horizon = H;
  v.satisfied = eng.eval(cf.root(), start, val);
  v.memo_entries = eng.memo_entries();
  return v;
}

}  // namespace

Verdict check_naive_unrolled(const PeriodicWord& w, const Formula& f, std::optional<Int> horizon) {
  Formula g = desugar(f);
  Int H = horizon ? *horizon : unroll_horizon(w, g);
  return unrolled(w, g, 0, {}, H);
}

bool eval_absolute(const PeriodicWord& w, std::size_t i, const Valuation& nu, const Formula& f,
                   std::optional<Int> horizon) {
  Formula g = desugar(f);
  Int H;
  if (horizon) {
    H = *horizon;
  } else {
    Int di = w.value_at(i);
    Int d0 = w.value_at(0);
    std::optional<Int> low;
    for (const auto& x : registers(g)) {
      auto it = nu.find(x);
      Int delta = di - (it == nu.end() ? d0 : it->second);
      if (!low || delta < *low) low = delta;
    }
    H = unroll_horizon(w, g, low);
  }
  return unrolled(w, g, i, nu, H).satisfied;
}

}  // namespace pathcheck
