#include "pathcheck/docm.hpp"

#include "pathcheck/errors.hpp"
#include "pathcheck/slp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pathcheck {

std::size_t Ocm::add_state(const std::string& name) {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it != names_.end()) return static_cast<std::size_t>(it - names_.begin());
  names_.push_back(name);
  out_.emplace_back();
  return names_.size() - 1;
}

void Ocm::set_initial(const std::string& name) { initial_ = add_state(name); }

void Ocm::add_zero(const std::string& from, const std::string& to) {
  std::size_t a = add_state(from);
  std::size_t b = add_state(to);
  edges_.push_back({a, true, 0, b});
  out_[a].push_back(edges_.size() - 1);
}

void Ocm::add_add(const std::string& from, const Int& delta, const std::string& to) {
  std::size_t a = add_state(from);
  std::size_t b = add_state(to);
  edges_.push_back({a, false, delta, b});
  out_[a].push_back(edges_.size() - 1);
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

Ocm parse_ocm(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<Ocm> m;
  std::optional<std::string> init;
  std::size_t lineno = 0;
  std::size_t offset = 0;
  for (std::string line; std::getline(in, line); offset += line.size() + 1) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (!m) {
      if (tok.size() != 2 || tok[0] != "ocm" || (tok[1] != "unary" && tok[1] != "binary"))
        throw ParseError("expected `ocm unary` or `ocm binary`", offset, lineno);
      m.emplace(tok[1] == "unary" ? Encoding::Unary : Encoding::Binary);
      continue;
    }
    if (tok[0] == "init") {
      if (tok.size() != 2) throw ParseError("expected `init <state>`", offset, lineno);
      if (init) throw ParseError("initial state given twice", offset, lineno);
      init = tok[1];
      m->set_initial(tok[1]);
      continue;
    }
    if (tok.size() != 3) throw ParseError("expected `<state> zero|add(a) <state>`", offset, lineno);
    const std::string& op = tok[1];
    if (op == "zero") {
      m->add_zero(tok[0], tok[2]);
    } else if (op.size() > 5 && op.compare(0, 4, "add(") == 0 && op.back() == ')') {
      Int a;
      try {
        a = parse_int(std::string_view(op).substr(4, op.size() - 5));
      } catch (const ParseError&) {
        throw ParseError("bad number in `" + op + "`", offset, lineno);
      }
      m->add_add(tok[0], a, tok[2]);
    } else {
      throw ParseError("unknown operation `" + op + "`", offset, lineno);
    }
  }
  if (!m) throw ParseError("missing `ocm` header", 0, 0);
  if (!init) throw ParseError("missing `init` line", offset, lineno);
  return *m;
}

std::string format_ocm(const Ocm& m) {
  std::ostringstream out;
  out << "ocm " << (m.encoding() == Encoding::Unary ? "unary" : "binary") << "\n";
  out << "init " << m.state_name(m.initial()) << "\n";
  for (const auto& e : m.edges()) {
    out << m.state_name(e.from) << ' ';
    if (e.zero)
      out << "zero";
    else
      out << "add(" << e.delta << ")";
    out << ' ' << m.state_name(e.to) << "\n";
  }
  return out.str();
}

std::vector<Config> step(const Ocm& m, std::size_t q, const Int& c) {
  if (c < 0) throw PreconditionError("negative counter");
  std::vector<Config> out;
  for (std::size_t i : m.out(q)) {
    const auto& e = m.edges()[i];
    if (e.zero) {
      if (c.is_zero()) out.push_back({e.to, Int(0)});
    } else if (c + e.delta >= 0) {
      out.push_back({e.to, c + e.delta});
    }
  }
  std::sort(out.begin(), out.end(), [](const Config& a, const Config& b) {
    return a.state != b.state ? a.state < b.state : a.counter < b.counter;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

DataPoint point(const Ocm& m, const Config& c) { return DataPoint(PropSet{m.state_name(c.state)}, c.counter); }

DataWord word_of(const Ocm& m, const std::vector<Config>& cs, std::size_t from, std::size_t to) {
  std::vector<DataPoint> pts;
  for (std::size_t i = from; i < to; ++i) pts.push_back(point(m, cs[i]));
  return DataWord(std::move(pts));
}

Config successor(const Ocm& m, const Config& c, bool& halted) {
  auto next = step(m, c.state, c.counter);
  if (next.size() > 1)
    throw NondeterministicMachine("configuration (" + m.state_name(c.state) + ", " + to_string(c.counter) +
                                  ") has several successors");
  halted = next.empty();
  return halted ? c : next.front();
}

// A loop whose counter grows visits every counter above its start, where
// every add edge of a loop state becomes enabled.
void require_single_add_edges(const Ocm& m, const std::vector<Config>& cs, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    std::size_t adds = 0;
    for (std::size_t e : m.out(cs[i].state))
      if (!m.edges()[e].zero) ++adds;
    if (adds > 1)
      throw NondeterministicMachine("state " + m.state_name(cs[i].state) +
                                    " has several add edges on a loop with a growing counter");
  }
}

// Number of states of the machine with every add(a) split into |a| unit steps.
Int unit_size(const Ocm& m) {
  Int s = m.state_count();
  for (const auto& e : m.edges()) {
    Int a = abs(e.delta);
    if (a > 1) s += a - 1;
  }
  return s;
}

}  // namespace

std::variant<DataWord, PeriodicWord> comp_unary(const Ocm& m) {
  Int S = unit_size(m);
  Int cap = 2 * S * S * S + 2;
  std::vector<Config> cs{{m.initial(), Int(0)}};
  std::vector<std::size_t> zeros{0};  // zero transitions among the first t steps
  std::vector<std::vector<std::size_t>> visits(m.state_count());
  for (std::size_t t = 0;; ++t) {
    const Config cur = cs[t];
    auto& seen = visits[cur.state];
    // Latest earlier (q, m) with m <= n whose stretch up to now can repeat
    // shifted: equal counters, or no zero test on the way.
    for (auto it = seen.rbegin(); it != seen.rend(); ++it) {
      const Config& old = cs[*it];
      if (old.counter > cur.counter) continue;
      if (old.counter != cur.counter && zeros[t] != zeros[*it]) continue;
      Int k = cur.counter - old.counter;
      if (k > 0) require_single_add_edges(m, cs, *it, t);
      return PeriodicWord(word_of(m, cs, 0, *it), word_of(m, cs, *it, t), k);
    }
    seen.push_back(t);
    bool halted = false;
    Config next = successor(m, cur, halted);
    if (halted) return word_of(m, cs, 0, t + 1);
    if (Int(t) > cap) throw Error("run neither halts nor repeats within the step bound");
    // A step from counter 0 to counter 0 is a zero test unless an add(0)
    // edge leads to the same state, which stays enabled at higher counters.
    bool zero_step = cur.counter.is_zero() && next.counter.is_zero();
    for (std::size_t e : m.out(cur.state)) {
      const auto& edge = m.edges()[e];
      if (!edge.zero && edge.delta.is_zero() && edge.to == next.state) zero_step = false;
    }
    zeros.push_back(zeros.back() + (zero_step ? 1 : 0));
    cs.push_back(next);
  }
}

namespace {

struct Segment {
  std::size_t rule = 0;
  bool to_final = false;
  std::size_t next = 0;  // next state when !to_final
  bool periodic = false;
  std::optional<std::size_t> loop_prefix;
  std::size_t loop_period = 0;
  Int offset = 0;
};

// The run from (q, 0) up to the next visit of counter 0, a halt, or a loop.
Segment segment_from(const Ocm& m, std::size_t q, SlpBuilder& b) {
  const std::size_t window = m.state_count() + 1;
  std::vector<Config> cs{{q, Int(0)}};
  for (std::size_t i = 0;; ++i) {
    const Config cur = cs[i];
    bool halted = false;
    Config next = successor(m, cur, halted);
    if (halted) return Segment{b.word(word_of(m, cs, 0, i + 1)), true, 0, false, std::nullopt, 0, 0};
    if (i >= 1 && cur.counter.is_zero())
      return Segment{b.word(word_of(m, cs, 0, i)), false, cur.state, false, std::nullopt, 0, 0};
    if (i == window) break;
    cs.push_back(next);
  }
  // Counters stay positive on 1..window, so some state repeats there.
  std::size_t j = 0;
  std::size_t l = 0;
  for (std::size_t t = 2; t <= window && l == 0; ++t)
    for (std::size_t s = 1; s < t; ++s)
      if (cs[s].state == cs[t].state) {
        j = s;
        l = t;
        break;
      }
  Int k = cs[l].counter - cs[j].counter;
  if (k >= 0) {
    if (k > 0) require_single_add_edges(m, cs, j, l);
    Segment seg;
    seg.to_final = true;
    seg.periodic = true;
    seg.loop_prefix = b.word(word_of(m, cs, 0, j));
    seg.loop_period = b.word(word_of(m, cs, j, l));
    seg.offset = k;
    return seg;
  }
  // The loop lowers the counter by |k| per round until some position would
  // reach zero or below.
  const Int drop = -k;
  Int rounds;
  for (std::size_t i = j; i < l; ++i) {
    Int r = (cs[i].counter - 1) / drop;
    if (i == j || r < rounds) rounds = r;
  }
  const Int last = (rounds + 1) * k;
  std::size_t stop = j;
  while (cs[stop].counter + last > 0) ++stop;

  DataWord v = word_of(m, cs, j, l);
  std::vector<std::size_t> parts{b.word(word_of(m, cs, 0, j)), b.word(v)};
  if (rounds >= 1) parts.push_back(b.import(slp_iterate(v, rounds, k)));
  if (stop > j) parts.push_back(b.word(shift(word_of(m, cs, j, stop), last)));
  std::size_t rule = b.concat_all(parts);
  if (cs[stop].counter + last < 0) return Segment{rule, true, 0, false, std::nullopt, 0, 0};
  return Segment{rule, false, cs[stop].state, false, std::nullopt, 0, 0};
}

SlpWord explore(const Ocm& m) {
  SlpBuilder b;
  std::vector<std::size_t> labels;
  std::map<std::size_t, std::size_t> entered;  // state -> index into labels
  std::size_t q = m.initial();
  for (;;) {
    if (auto it = entered.find(q); it != entered.end()) {
      // The segments from q onwards repeat forever without a shift.
      std::vector<std::size_t> pre(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(it->second));
      std::vector<std::size_t> per(labels.begin() + static_cast<std::ptrdiff_t>(it->second), labels.end());
      SlpWord out;
      if (!pre.empty()) out.prefix = b.build(b.concat_all(pre));
      out.period = b.build(b.concat_all(per));
      return out;
    }
    entered.emplace(q, labels.size());
    Segment seg = segment_from(m, q, b);
    if (!seg.to_final) {
      labels.push_back(seg.rule);
      q = seg.next;
      continue;
    }
    SlpWord out;
    if (!seg.periodic) {
      labels.push_back(seg.rule);
      out.prefix = b.build(b.concat_all(labels));
      return out;
    }
    labels.push_back(*seg.loop_prefix);
    out.prefix = b.build(b.concat_all(labels));
    out.period = b.build(seg.loop_period);
    out.offset = seg.offset;
    return out;
  }
}

}  // namespace

SlpWord comp_binary(const Ocm& m) { return explore(m); }

bool is_deterministic(const Ocm& m) {
  try {
    explore(m);
    return true;
  } catch (const NondeterministicMachine&) {
    return false;
  }
}

DataWord simulate(const Ocm& m, std::size_t n) {
  std::vector<DataPoint> pts;
  Config cur{m.initial(), Int(0)};
  while (pts.size() < n) {
    pts.push_back(point(m, cur));
    bool halted = false;
    Config next = successor(m, cur, halted);
    if (halted) break;
    cur = next;
  }
  return DataWord(std::move(pts));
}

Verdict model_check(const Ocm& m, const Formula& f) {
  if (m.encoding() == Encoding::Unary) {
    auto run = comp_unary(m);
    if (auto* w = std::get_if<DataWord>(&run)) return check_finite(*w, f);
    return check_periodic(std::get<PeriodicWord>(run), f);
  }
  SlpWord run = comp_binary(m);
  if (run.period) return check_slp(run.prefix, *run.period, run.offset, f);
  return check_slp(*run.prefix, f);
}

}  // namespace pathcheck
