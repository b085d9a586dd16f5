#include "compiled.hpp"
#include "pathcheck/checker.hpp"
#include "pathcheck/errors.hpp"
#include "pathcheck/transforms.hpp"

#include <algorithm>
#include <map>

namespace pathcheck {

namespace {

using detail::CNode;
using detail::Compiled;
using K = Formula::Kind;
using Labels = std::vector<char>;

// Satisfaction sets per subformula and register valuation, where a valuation
// maps each free register to one of the word's distinct data values.
class Labeller {
 public:
  Labeller(const Compiled& cf, const DataWord& w) : cf_(cf), w_(w) {
    for (const auto& p : w) values_.push_back(p.value);
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    for (const auto& p : w) index_.push_back(value_index(p.value));
  }

  std::size_t value_index(const Int& v) const {
    return static_cast<std::size_t>(std::lower_bound(values_.begin(), values_.end(), v) - values_.begin());
  }

  // nu: value index per register (all registers).
  const Labels& labels(std::uint32_t id, const std::vector<std::size_t>& nu) {
    const CNode& n = cf_.node(id);
    std::vector<std::size_t> key;
    key.reserve(n.free.size() + 1);
    key.push_back(id);
    for (int r : n.free) key.push_back(nu[static_cast<std::size_t>(r)]);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    Labels out = compute(n, nu);
    return table_.emplace(std::move(key), std::move(out)).first->second;
  }

  std::size_t entries() const { return table_.size(); }

 private:
  const Compiled& cf_;
  const DataWord& w_;
  std::vector<Int> values_;
  std::vector<std::size_t> index_;
  std::map<std::vector<std::size_t>, Labels> table_;

  Labels compute(const CNode& n, const std::vector<std::size_t>& nu) {
    const std::size_t len = w_.size();
    Labels out(len, 0);
    switch (n.kind) {
      case K::True: std::fill(out.begin(), out.end(), 1); break;
      case K::Prop:
        for (std::size_t i = 0; i < len; ++i) out[i] = w_[i].props.contains(n.prop);
        break;
      case K::Constraint: {
        const Int& base = values_[nu[static_cast<std::size_t>(n.reg)]];
        for (std::size_t i = 0; i < len; ++i) out[i] = holds(n.rel, w_[i].value - base, n.c);
        break;
      }
      case K::Not: {
        const Labels& a = labels(n.a, nu);
        for (std::size_t i = 0; i < len; ++i) out[i] = !a[i];
        break;
      }
      case K::And:
      case K::Or: {
        Labels a = labels(n.a, nu);
        const Labels& b = labels(n.b, nu);
        for (std::size_t i = 0; i < len; ++i) out[i] = n.kind == K::And ? (a[i] && b[i]) : (a[i] || b[i]);
        break;
      }
      case K::Freeze: {
        auto inner = nu;
        for (std::size_t i = 0; i < len; ++i) {
          inner[static_cast<std::size_t>(n.reg)] = index_[i];
          out[i] = labels(n.a, inner)[i];
        }
        break;
      }
      case K::Until:
      case K::Release: {
        Labels a = labels(n.a, nu);
        const Labels& b = labels(n.b, nu);
        bool until = n.kind == K::Until;
        out[len - 1] = until ? 0 : 1;
        for (std::size_t i = len - 1; i-- > 0;) {
          out[i] = until ? (b[i + 1] || (a[i + 1] && out[i + 1])) : (b[i + 1] && (a[i + 1] || out[i + 1]));
        }
        break;
      }
      case K::UntilIn: throw PreconditionError("engines need a desugared formula");
    }
    return out;
  }
};

}  // namespace

Verdict check_finite(const DataWord& w, const Formula& f) {
  if (w.empty()) throw PreconditionError("empty word");
  Compiled cf(desugar(f));
  Labeller lab(cf, w);
  std::vector<std::size_t> nu(cf.registers().size(), lab.value_index(w[0].value));
  Verdict v;
  v.engine = "finite";
  v.satisfied = lab.labels(cf.root(), nu)[0];
  v.memo_entries = lab.entries();
  return v;
}

}  // namespace pathcheck
