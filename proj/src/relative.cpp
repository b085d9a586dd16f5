#include "relative.hpp"

#include "pathcheck/errors.hpp"
#include "pathcheck/transforms.hpp"

#include <algorithm>

namespace pathcheck::detail {

using K = Formula::Kind;

PeriodicView::PeriodicView(const PeriodicWord& w) : w_(w), p_(w.prefix().size()), q_(w.period().size()) {}

const PropSet& PeriodicView::at(const Int& pos, Int& value) {
  if (pos < p_) {
    const auto& pt = w_.prefix()[to_size(pos)];
    value = pt.value;
    return pt.props;
  }
  Int r = pos - p_;
  Int rounds = r / q_;
  const auto& pt = w_.period()[to_size(r % q_)];
  value = pt.value + rounds * w_.offset();
  return pt.props;
}

SlpView::SlpView(const std::optional<Slp>& prefix, const Slp* period, const Int& offset)
    : prefix_(prefix ? &*prefix : nullptr), period_(period), k_(offset) {
  if (prefix_) {
    pc_.emplace(*prefix_);
    p_ = slp_length(*prefix_);
  }
  if (period_) {
    qc_.emplace(*period_);
    q_ = slp_length(*period_);
  }
  if (k_ < 0) throw PreconditionError("negative offset");
  if (!period_ && !prefix_) throw PreconditionError("empty word");
}

Int SlpView::period_min() const { return period_ ? slp_min(*period_) : slp_min(*prefix_); }
Int SlpView::period_max() const { return period_ ? slp_max(*period_) : slp_max(*prefix_); }

const PropSet& SlpView::at(const Int& pos, Int& value) {
  if (pos < p_) return pc_->seek(pos, value);
  Int r = pos - p_;
  Int rounds = r / q_;
  const PropSet& props = qc_->seek(r % q_, value);
  value += rounds * k_;
  return props;
}

template <class View>
RelativeEngine<View>::RelativeEngine(const Compiled& cf, View& view, bool memoize)
    : cf_(cf), view_(view), memoize_(memoize) {
  Int lo = view_.period_min();
  Int hi = view_.period_max();
  cap_ = cf_.c_phi() + (hi - lo) + 1;
  m2_ = lo;
  const auto& nodes = cf_.nodes();
  has_choice_.assign(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    switch (n.kind) {
      case K::Or:
      case K::Until:
      case K::Release: has_choice_[i] = 1; break;
      case K::And: has_choice_[i] = has_choice_[n.a] || has_choice_[n.b]; break;
      case K::Freeze: has_choice_[i] = has_choice_[n.a]; break;
      default: break;
    }
  }
}

template <class View>
Int RelativeEngine<View>::fold(const Int& pos) const {
  if (!view_.infinite() || pos < view_.prefix_length()) return pos;
  return (pos - view_.prefix_length()) % view_.period_length() + view_.prefix_length();
}

template <class View>
void RelativeEngine<View>::normalize(Int& pos, std::vector<Int>& delta) const {
  if (!view_.infinite()) {
    if (pos >= view_.length()) throw PreconditionError("position past the end of the word");
    return;
  }
  pos = fold(pos);
  if (pos >= view_.prefix_length())
    for (auto& d : delta)
      if (d > cap_) d = cap_;
}

template <class View>
std::vector<Int> RelativeEngine<View>::moved(const std::vector<Int>& delta, const Int& diff) const {
  std::vector<Int> out(delta);
  if (!diff.is_zero())
    for (auto& d : out) d += diff;
  return out;
}

template <class View>
Int RelativeEngine<View>::last_position(const CNode& n, const Int& f, const Int& df,
                                        const std::vector<Int>& delta) const {
  (void)f;
  if (!view_.infinite()) return view_.length() - 1;
  const Int& k = view_.offset();
  Int rounds = 2;
  if (!k.is_zero() && !n.free.empty()) {
    Int md = delta[static_cast<std::size_t>(n.free.front())];
    for (int r : n.free) md = std::min(md, delta[static_cast<std::size_t>(r)]);
    Int need = ceil_div(cap_ + df - md - m2_, k) + 1;
    if (need > rounds) rounds = need;
  }
  return view_.prefix_length() + rounds * view_.period_length();
}

template <class View>
bool RelativeEngine<View>::eval(std::uint32_t id, const Int& pos_in, std::vector<Int> delta) {
  Int pos = pos_in;
  normalize(pos, delta);
  const CNode& n = cf_.node(id);
  switch (n.kind) {
    case K::True: return true;
    case K::Prop: {
      Int v;
      return view_.at(pos, v).contains(n.prop);
    }
    case K::Constraint: return holds(n.rel, delta[static_cast<std::size_t>(n.reg)], n.c);
    case K::Not: return !eval(n.a, pos, std::move(delta));
    case K::And: return eval(n.a, pos, delta) && eval(n.b, pos, std::move(delta));
    case K::Or: return eval(n.a, pos, delta) || eval(n.b, pos, std::move(delta));
    case K::Freeze:
      delta[static_cast<std::size_t>(n.reg)] = 0;
      return eval(n.a, pos, std::move(delta));
    case K::Until:
    case K::Release: {
      if (!memoize_) return eval_temporal(id, n, pos, delta);
      MemoKey key = make_key(n, id, pos, delta);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
      bool r = eval_temporal(id, n, pos, delta);
      memo_.emplace(std::move(key), r);
      return r;
    }
    case K::UntilIn: break;
  }
  throw PreconditionError("engines need a desugared formula");
}

template <class View>
bool RelativeEngine<View>::eval_temporal(std::uint32_t, const CNode& n, const Int& f, const std::vector<Int>& delta) {
  Int df = value(f);
  Int end = last_position(n, f, df, delta);
  bool left_true = cf_.node(n.a).kind == K::True;
  if (n.kind == K::Until) {
    for (Int j = f + 1; j <= end; ++j) {
      auto dj = moved(delta, value(j) - df);
      if (eval(n.b, j, dj)) return true;
      if (!left_true && !eval(n.a, j, std::move(dj))) return false;
    }
    return false;
  }
  for (Int j = f + 1; j <= end; ++j) {
    auto dj = moved(delta, value(j) - df);
    if (!eval(n.b, j, dj)) return false;
    if (eval(n.a, j, std::move(dj))) return true;
  }
  return true;
}

template <class View>
void RelativeEngine<View>::witness(std::uint32_t id, const Int& pos_in, std::vector<Int> delta,
                                   std::vector<WitnessStep>& out) {
  if (!has_choice_[id]) return;
  const CNode& n = cf_.node(id);
  Int pos = pos_in;
  normalize(pos, delta);
  // Positions reported unfolded: pos_in is the real position, pos its fold.
  switch (n.kind) {
    case K::And:
      witness(n.a, pos_in, delta, out);
      witness(n.b, pos_in, std::move(delta), out);
      return;
    case K::Or:
      if (eval(n.a, pos, delta)) {
        out.push_back({"or", pos_in, 0});
        witness(n.a, pos_in, std::move(delta), out);
      } else {
        out.push_back({"or", pos_in, 1});
        witness(n.b, pos_in, std::move(delta), out);
      }
      return;
    case K::Freeze:
      delta[static_cast<std::size_t>(n.reg)] = 0;
      witness(n.a, pos_in, std::move(delta), out);
      return;
    case K::Until:
    case K::Release: {
      Int df = value(pos);
      Int end = last_position(n, pos, df, delta);
      Int stop = -1;
      for (Int j = pos + 1; j <= end; ++j) {
        auto dj = moved(delta, value(j) - df);
        if (n.kind == K::Until ? eval(n.b, j, dj) : eval(n.a, j, dj)) {
          stop = j;
          break;
        }
      }
      if (stop < 0) {
        out.push_back({"G", pos_in, -1});
        return;
      }
      Int real = pos_in + (stop - pos);
      out.push_back({n.kind == K::Until ? "U" : "R", real, -1});
      std::uint32_t between = n.kind == K::Until ? n.a : n.b;
      std::uint32_t last = n.kind == K::Until ? n.b : n.a;
      if (has_choice_[between])
        for (Int t = pos + 1; t < stop; ++t) witness(between, pos_in + (t - pos), moved(delta, value(t) - df), out);
      if (n.kind == K::Release) witness(n.b, real, moved(delta, value(stop) - df), out);
      witness(last, real, moved(delta, value(stop) - df), out);
      return;
    }
    default: return;
  }
}

template class RelativeEngine<PeriodicView>;
template class RelativeEngine<FiniteView>;
template class RelativeEngine<SlpView>;

namespace {

std::vector<Int> initial_delta(const Compiled& cf, const Valuation& delta) {
  std::vector<Int> d(cf.registers().size(), Int(0));
  for (const auto& [name, v] : delta) {
    int r = cf.register_index(name);
    if (r >= 0) d[static_cast<std::size_t>(r)] = v;
  }
  return d;
}

template <class View>
Verdict run(View& view, const Formula& f, bool memoize, const char* engine) {
  Compiled cf(nnf(desugar(f)));
  RelativeEngine<View> eng(cf, view, memoize);
  Verdict v;
  v.engine = engine;
  auto d0 = initial_delta(cf, {});
  v.satisfied = eng.eval(cf.root(), 0, d0);
  if (v.satisfied) eng.witness(cf.root(), 0, d0, v.witness);
  v.memo_entries = eng.memo_entries();
  return v;
}

}  // namespace

Verdict run_relative_periodic(const PeriodicWord& w, const Formula& f, bool memoize) {
  PeriodicView view(w);
  return run(view, f, memoize, memoize ? "periodic" : "periodic-unmemoized");
}

}  // namespace pathcheck::detail

namespace pathcheck {

using detail::Compiled;
using detail::FiniteView;
using detail::PeriodicView;
using detail::RelativeEngine;
using detail::SlpView;

Verdict check_periodic(const PeriodicWord& w, const Formula& f) { return detail::run_relative_periodic(w, f, true); }

Verdict check_periodic_unmemoized(const PeriodicWord& w, const Formula& f) {
  return detail::run_relative_periodic(w, f, false);
}

bool eval_relative(const PeriodicWord& w, std::size_t i, const Valuation& delta, const Formula& f) {
  Compiled cf(desugar(f));
  PeriodicView view(w);
  RelativeEngine<PeriodicView> eng(cf, view, true);
  return eng.eval(cf.root(), Int(i), detail::initial_delta(cf, delta));
}

bool eval_relative(const DataWord& w, std::size_t i, const Valuation& delta, const Formula& f) {
  if (i >= w.size()) throw PreconditionError("position past the end of the word");
  Compiled cf(desugar(f));
  FiniteView view(w);
  RelativeEngine<FiniteView> eng(cf, view, true);
  return eng.eval(cf.root(), Int(i), detail::initial_delta(cf, delta));
}

Verdict check_slp(const std::optional<Slp>& prefix, const Slp& period, const Int& offset, const Formula& f) {
  SlpView view(prefix, &period, offset);
  return detail::run(view, f, true, "slp");
}

Verdict check_slp(const Slp& g, const Formula& f) {
  std::optional<Slp> word(g);
  SlpView view(word, nullptr, 0);
  return detail::run(view, f, true, "slp");
}

}  // namespace pathcheck
