#pragma once

// Relative-semantics evaluation shared by the periodic, finite and SLP
// engines.  A view supplies points by (unfolded) position; the engine folds
// positions of infinite words into [0, prefix + period) and clamps register
// values once past the prefix.

#include "compiled.hpp"
#include "pathcheck/checker.hpp"
#include "pathcheck/dataword.hpp"
#include "pathcheck/slp.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace pathcheck::detail {

struct PeriodicView {
  explicit PeriodicView(const PeriodicWord& w);

  bool infinite() const { return true; }
  const Int& prefix_length() const { return p_; }
  const Int& period_length() const { return q_; }
  const Int& offset() const { return w_.offset(); }
  const Int& length() const { return p_; }  // unused for infinite words
  Int period_min() const { return w_.period().min_value(); }
  Int period_max() const { return w_.period().max_value(); }

  const PropSet& at(const Int& pos, Int& value);

 private:
  const PeriodicWord& w_;
  Int p_;
  Int q_;
};

struct FiniteView {
  explicit FiniteView(const DataWord& w) : w_(w), n_(w.size()) {}

  bool infinite() const { return false; }
  const Int& prefix_length() const { return n_; }
  const Int& period_length() const { return n_; }
  const Int& offset() const { return zero_; }
  const Int& length() const { return n_; }
  Int period_min() const { return w_.min_value(); }
  Int period_max() const { return w_.max_value(); }

  const PropSet& at(const Int& pos, Int& value) {
    const auto& pt = w_[to_size(pos)];
    value = pt.value;
    return pt.props;
  }

 private:
  const DataWord& w_;
  Int n_;
  Int zero_ = 0;
};

// Infinite word prefix (period)^omega_{+k} or, without a period, the finite
// word val(prefix).
struct SlpView {
  SlpView(const std::optional<Slp>& prefix, const Slp* period, const Int& offset);

  bool infinite() const { return period_ != nullptr; }
  const Int& prefix_length() const { return p_; }
  const Int& period_length() const { return q_; }
  const Int& offset() const { return k_; }
  const Int& length() const { return p_; }
  Int period_min() const;
  Int period_max() const;

  const PropSet& at(const Int& pos, Int& value);

 private:
  const Slp* prefix_;
  const Slp* period_;
  std::optional<SlpCursor> pc_;
  std::optional<SlpCursor> qc_;
  Int p_ = 0;
  Int q_ = 0;
  Int k_ = 0;
};

template <class View>
class RelativeEngine {
 public:
  RelativeEngine(const Compiled& cf, View& view, bool memoize);

  // pos may be any position of the word; delta is indexed by register.
  bool eval(std::uint32_t id, const Int& pos, std::vector<Int> delta);

  // Existential choices of a satisfied run from (pos, delta).
  void witness(std::uint32_t id, const Int& pos, std::vector<Int> delta, std::vector<WitnessStep>& out);

  std::size_t memo_entries() const { return memo_.size(); }
  const Int& cap() const { return cap_; }

 private:
  const Compiled& cf_;
  View& view_;
  bool memoize_;
  Int cap_;  // C + M + 1
  Int m2_;
  std::vector<char> has_choice_;
  std::unordered_map<MemoKey, bool, MemoKeyHash> memo_;

  Int fold(const Int& pos) const;
  void normalize(Int& pos, std::vector<Int>& delta) const;
  Int last_position(const CNode& n, const Int& f, const Int& df, const std::vector<Int>& delta) const;
  Int value(const Int& pos) {
    Int v;
    view_.at(pos, v);
    return v;
  }
  bool eval_temporal(std::uint32_t id, const CNode& n, const Int& f, const std::vector<Int>& delta);
  std::vector<Int> moved(const std::vector<Int>& delta, const Int& diff) const;
};

// Convenience entry points used by the public API.
Verdict run_relative_periodic(const PeriodicWord& w, const Formula& f, bool memoize);

}  // namespace pathcheck::detail
