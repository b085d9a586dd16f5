#include "pathcheck/generators.hpp"

#include "pathcheck/errors.hpp"
#include "pathcheck/transforms.hpp"

#include <boost/algorithm/string.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace pathcheck {

namespace {

using K = Formula::Kind;

[[noreturn]] void malformed(const std::string& what) { throw MalformedInstance(what); }

std::vector<std::string> words(std::string_view line) {
  std::string s(line);
  boost::algorithm::trim(s);
  std::vector<std::string> out;
  if (s.empty()) return out;
  boost::algorithm::split(out, s, boost::algorithm::is_space(), boost::algorithm::token_compress_on);
  return out;
}

// Non-empty lines with '#' comments removed, paired with 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    boost::algorithm::trim(line);
    if (!line.empty()) out.emplace_back(number, line);
  }
  return out;
}

std::size_t parse_count(const std::string& s, std::size_t line) {
  try {
    Int v = parse_int(s);
    if (v < 0) throw ParseError("negative number `" + s + "`", 0, line);
    return to_size(v);
  } catch (const ParseError&) {
    throw ParseError("bad number `" + s + "`", 0, line);
  }
}

// key=value with a fixed key.
std::string field(const std::string& tok, const std::string& key, std::size_t line) {
  if (!boost::algorithm::starts_with(tok, key + "=")) throw ParseError("expected `" + key + "=`", 0, line);
  return tok.substr(key.size() + 1);
}

std::vector<std::string> comma_list(const std::string& s) {
  std::vector<std::string> out;
  boost::algorithm::split(out, s, boost::algorithm::is_any_of(","));
  for (auto& x : out) boost::algorithm::trim(x);
  return out;
}

Formula interval_jump(GateKind kind, const IntervalUnion& in, Formula body) {
  return kind == GateKind::And ? always_in(in, std::move(body)) : eventually_in(in, std::move(body));
}

Formula last_position() { return Formula::negation(next(Formula::truth())); }

}  // namespace

// ---------------------------------------------------------------- circuits

void validate(const Sam2Circuit& c) {
  const std::size_t L = c.levels();
  const std::size_t n = c.gates;
  if (L < 2) malformed("a circuit needs at least two levels");
  if (n == 0) malformed("a circuit needs at least one gate per level");
  if (c.kinds.back() != GateKind::Input) malformed("the last level must be the input level");
  for (std::size_t i = 0; i + 1 < L; ++i) {
    if (c.kinds[i] == GateKind::Input) malformed("only the last level holds inputs");
    if (i > 0 && c.kinds[i] == c.kinds[i - 1]) malformed("gate levels must alternate between and and or");
  }
  if (c.inputs.size() != n) malformed("expected " + std::to_string(n) + " input values");
  if (c.output >= n) malformed("output gate out of range");
  if (c.wires.size() != L - 1) malformed("wires missing for some level");
  for (std::size_t i = 0; i + 1 < L; ++i) {
    std::vector<std::vector<std::size_t>> in(n);
    std::vector<std::size_t> out(n, 0);
    for (const auto& [from, to] : c.wires[i]) {
      if (from >= n || to >= n) malformed("wire endpoint out of range");
      in[to].push_back(from);
      ++out[from];
    }
    for (std::size_t g = 0; g < n; ++g) {
      std::string where = std::to_string(i + 1) + ":" + std::to_string(g + 1);
      if (in[g].size() != 2) malformed("gate " + where + " needs fanin 2");
      if (i > 0 && in[g][0] == in[g][1]) malformed("gate " + where + " has the same input twice");
      if (out[g] != 2) malformed("gate " + std::to_string(i + 2) + ":" + std::to_string(g + 1) + " needs fanout 2");
    }
  }
}

Sam2Circuit parse_circuit(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty circuit description", 0);
  auto head = words(lines.front().second);
  std::size_t ln = lines.front().first;
  if (head.size() != 4 || head[0] != "circuit")
    throw ParseError("expected `circuit levels=L gates=N output=K`", 0, ln);
  std::size_t L = parse_count(field(head[1], "levels", ln), ln);
  std::size_t n = parse_count(field(head[2], "gates", ln), ln);
  std::size_t k = parse_count(field(head[3], "output", ln), ln);
  if (L < 2 || L > 100000) throw ParseError("levels out of range", 0, ln);
  if (k < 1) throw ParseError("output is 1-based", 0, ln);

  Sam2Circuit c;
  c.gates = n;
  c.output = k - 1;
  std::vector<std::optional<GateKind>> kinds(L);
  c.wires.assign(L - 1, {});
  auto gate_ref = [&](const std::string& s, std::size_t line) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("expected level:gate, got `" + s + "`", 0, line);
    std::size_t lv = parse_count(s.substr(0, colon), line);
    std::size_t g = parse_count(s.substr(colon + 1), line);
    if (lv < 1 || lv > L || g < 1 || g > n) throw ParseError("gate `" + s + "` out of range", 0, line);
    return std::pair{lv - 1, g - 1};
  };
  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const auto& [line, body] = lines[idx];
    auto tok = words(body);
    if (tok[0] == "level") {
      if (tok.size() < 3) throw ParseError("expected `level i and|or|input`", 0, line);
      std::size_t lv = parse_count(tok[1], line);
      if (lv < 1 || lv > L) throw ParseError("level out of range", 0, line);
      if (kinds[lv - 1]) throw ParseError("level " + tok[1] + " given twice", 0, line);
      if (tok[2] == "and" && tok.size() == 3) {
        kinds[lv - 1] = GateKind::And;
      } else if (tok[2] == "or" && tok.size() == 3) {
        kinds[lv - 1] = GateKind::Or;
      } else if (tok[2] == "input" && tok.size() == 4) {
        kinds[lv - 1] = GateKind::Input;
        for (const auto& v : comma_list(tok[3])) {
          if (v != "0" && v != "1") throw ParseError("input values are 0 or 1", 0, line);
          c.inputs.push_back(v == "1");
        }
      } else {
        throw ParseError("expected `level i and|or` or `level i input v,...`", 0, line);
      }
    } else if (tok[0] == "wire") {
      if (tok.size() != 4 || tok[2] != "->") throw ParseError("expected `wire l:g -> l:g`", 0, line);
      auto [fl, fg] = gate_ref(tok[1], line);
      auto [tl, tg] = gate_ref(tok[3], line);
      if (fl != tl + 1) throw ParseError("wires run from level i+1 to level i", 0, line);
      c.wires[tl].emplace_back(fg, tg);
    } else {
      throw ParseError("unknown line `" + tok[0] + "`", 0, line);
    }
  }
  for (std::size_t i = 0; i < L; ++i) {
    if (!kinds[i]) throw ParseError("level " + std::to_string(i + 1) + " not declared", 0);
    c.kinds.push_back(*kinds[i]);
  }
  validate(c);
  return c;
}

std::string format_circuit(const Sam2Circuit& c) {
  std::ostringstream out;
  out << "circuit levels=" << c.levels() << " gates=" << c.gates << " output=" << c.output + 1 << "\n";
  for (std::size_t i = 0; i < c.levels(); ++i) {
    out << "level " << i + 1 << " ";
    switch (c.kinds[i]) {
      case GateKind::And: out << "and"; break;
      case GateKind::Or: out << "or"; break;
      case GateKind::Input: {
        out << "input ";
        for (std::size_t g = 0; g < c.inputs.size(); ++g) out << (g ? "," : "") << (c.inputs[g] ? 1 : 0);
        break;
      }
    }
    out << "\n";
  }
  for (std::size_t i = 0; i < c.wires.size(); ++i)
    for (const auto& [from, to] : c.wires[i])
      out << "wire " << i + 2 << ":" << from + 1 << " -> " << i + 1 << ":" << to + 1 << "\n";
  return out.str();
}

bool eval_circuit(const Sam2Circuit& c) {
  validate(c);
  std::vector<bool> below = c.inputs;
  for (std::size_t i = c.levels() - 1; i-- > 0;) {
    bool conj = c.kinds[i] == GateKind::And;
    std::vector<bool> cur(c.gates, conj);
    for (const auto& [from, to] : c.wires[i]) cur[to] = conj ? (cur[to] && below[from]) : (cur[to] || below[from]);
    below = std::move(cur);
  }
  return below[c.output];
}

namespace {

struct Cycle {
  std::vector<std::size_t> upper;  // gates of level i in walk order
  std::vector<std::size_t> lower;  // gates of level i+1 in walk order
};

// The bipartite multigraph between two levels is 2-regular, so it splits
// into cycles.  Each walk starts at the first unvisited lower gate and
// leaves towards its smaller upper neighbour.
std::vector<Cycle> cycles_between(const std::vector<std::pair<std::size_t, std::size_t>>& wires, std::size_t n) {
  std::vector<std::vector<std::size_t>> at_lower(n);
  std::vector<std::vector<std::size_t>> at_upper(n);
  for (std::size_t e = 0; e < wires.size(); ++e) {
    at_lower[wires[e].first].push_back(e);
    at_upper[wires[e].second].push_back(e);
  }
  auto other = [](const std::vector<std::size_t>& two, std::size_t e) { return two[0] == e ? two[1] : two[0]; };
  std::vector<char> seen(n, 0);
  std::vector<Cycle> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Cycle cyc;
    const auto& es = at_lower[start];
    std::size_t e = wires[es[1]].second < wires[es[0]].second ? es[1] : es[0];
    std::size_t b = start;
    while (true) {
      seen[b] = 1;
      cyc.lower.push_back(b);
      std::size_t a = wires[e].second;
      cyc.upper.push_back(a);
      std::size_t back = other(at_upper[a], e);
      b = wires[back].first;
      if (b == start) break;
      e = other(at_lower[b], back);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

CircuitLayout layout_circuit(const Sam2Circuit& c) {
  validate(c);
  const std::size_t L = c.levels();
  const std::size_t n = c.gates;
  std::vector<std::vector<Cycle>> pairs;
  std::size_t h = 0;
  for (std::size_t i = 0; i + 1 < L; ++i) {
    pairs.push_back(cycles_between(c.wires[i], n));
    h = std::max(h, pairs.back().size());
  }
  CircuitLayout out;
  out.cycles = h;
  out.m = n + h;
  const std::size_t m = out.m;
  constexpr std::size_t none = static_cast<std::size_t>(-1);

  // upper_value[i][g]: value of gate g of level i in its own block.
  std::vector<std::vector<Int>> upper_value(L - 1, std::vector<Int>(n));
  std::vector<std::vector<Int>> upper_block(L - 1);
  // lower_block[i]: gates (or none for padding) of the second block of pair i.
  std::vector<std::vector<std::size_t>> lower_gate(L - 1);
  std::vector<std::vector<Int>> lower_block(L - 1);
  for (std::size_t i = 0; i + 1 < L; ++i) {
    const Int d(i * 2 * m);
    const Int d2 = d + m;
    std::size_t off = 0;
    for (const auto& cyc : pairs[i]) {
      for (std::size_t s = 0; s < cyc.upper.size(); ++s) {
        upper_value[i][cyc.upper[s]] = d + Int(off + s);
        upper_block[i].push_back(d + Int(off + s));
      }
      for (std::size_t s = 0; s < cyc.lower.size(); ++s) {
        lower_gate[i].push_back(cyc.lower[s]);
        lower_block[i].push_back(d2 + Int(off + s));
      }
      lower_gate[i].push_back(cyc.lower.front());
      lower_block[i].push_back(d2 + Int(off + cyc.lower.size()));
      off += cyc.upper.size() + 1;
    }
    // Padding past every reachable value keeps the block length at m.
    while (lower_block[i].size() < m) {
      lower_gate[i].push_back(none);
      lower_block[i].push_back(d2 + Int(lower_block[i].size()));
    }
  }

  auto& w = out.values;
  w = upper_block[0];
  w.insert(w.end(), lower_block[0].begin(), lower_block[0].end());
  for (std::size_t i = 1; i + 1 < L; ++i) {
    for (std::size_t g : lower_gate[i - 1]) w.push_back(g == none ? Int(i * 2 * m + m - 1) : upper_value[i][g]);
    w.insert(w.end(), lower_block[i].begin(), lower_block[i].end());
  }
  for (const auto& cyc : pairs[0]) {
    auto it = std::find(cyc.upper.begin(), cyc.upper.end(), c.output);
    if (it != cyc.upper.end()) out.output_position += static_cast<std::size_t>(it - cyc.upper.begin());
    if (it != cyc.upper.end()) break;
    out.output_position += cyc.upper.size();
  }
  const auto& last = lower_gate[L - 2];
  for (std::size_t s = 0; s < last.size(); ++s)
    if (last[s] != none && c.inputs[last[s]]) out.accepting.push_back(s + 1);
  return out;
}

namespace {

Formula circuit_formula(const Sam2Circuit& c, const CircuitLayout& lay, const Formula& at_end) {
  const std::size_t m = lay.m;
  IntervalUnion step(Interval::closed(Int(m), Int(m + 1)));
  std::vector<Formula> ends;
  for (std::size_t j : lay.accepting) ends.push_back(next_n(at_end, static_cast<unsigned>(m - j)));
  std::size_t L = c.levels();
  Formula phi = interval_jump(c.kinds[L - 2], step, disjunction_of(ends));
  for (std::size_t i = L - 2; i-- > 0;) phi = interval_jump(c.kinds[i], step, next_n(phi, static_cast<unsigned>(m)));
  return next_n(phi, static_cast<unsigned>(lay.output_position));
}

DataWord pure(const std::vector<Int>& values) {
  std::vector<DataPoint> pts;
  pts.reserve(values.size());
  for (const auto& v : values) pts.emplace_back(PropSet{}, v);
  return DataWord(std::move(pts));
}

}  // namespace

FiniteInstance gen_circuit_mtl(const Sam2Circuit& c) {
  CircuitLayout lay = layout_circuit(c);
  return {pure(lay.values), circuit_formula(c, lay, last_position())};
}

PeriodicInstance gen_circuit_mtl_infinite(const Sam2Circuit& c) {
  CircuitLayout lay = layout_circuit(c);
  Formula p = Formula::prop("p");
  Formula at_end = Formula::conjunction(Formula::negation(p), next(p));
  DataWord tail{DataPoint(PropSet{"p"}, Int(5 * lay.m * c.levels()))};
  return {PeriodicWord(pure(lay.values), std::move(tail), 0), circuit_formula(c, lay, at_end)};
}

FiniteInstance gen_circuit_smtl(const Sam2Circuit& c, bool guard) {
  validate(c);
  const std::size_t n = c.gates;
  const std::size_t L = c.levels();
  const Int block(n * (n + 2));
  std::vector<Int> values;
  for (std::size_t j = 0; j + 1 < L; ++j) {
    for (std::size_t i = 1; i <= n; ++i) values.push_back(Int(i) + block * j);
    for (std::size_t i = 1; i <= n; ++i) values.push_back(Int(i * (n + 1)) + block * j);
  }
  // Second-half positions are the ones whose successor is not one higher.
  Formula second_half = Formula::negation(next_in(Interval::closed(1, 1), Formula::truth()));
  auto jump = [&](std::size_t level, Formula body) {
    std::set<Int> s;
    for (const auto& [lower, upper] : c.wires[level]) s.insert(Int((lower + 1) * (n + 1)) - Int(upper + 1));
    std::vector<Interval> parts;
    for (const auto& v : s) parts.push_back(Interval::closed(v, v));
    IntervalUnion in(std::move(parts));
    if (guard) {
      body = c.kinds[level] == GateKind::And ? implies(second_half, body) : Formula::conjunction(second_half, body);
    }
    return interval_jump(c.kinds[level], in, std::move(body));
  };
  std::vector<Formula> ends;
  for (std::size_t i = 1; i <= n; ++i)
    if (c.inputs[i - 1]) ends.push_back(next_n(last_position(), static_cast<unsigned>(n - i)));
  Formula phi = jump(L - 2, disjunction_of(ends));
  for (std::size_t j = L - 2; j-- > 0;) phi = jump(j, next_n(phi, static_cast<unsigned>(n)));
  return {pure(values), next_n(phi, static_cast<unsigned>(c.output))};
}

// -------------------------------------------------------------------- QBF

void validate(const QbfInstance& q) {
  for (char ch : q.prefix)
    if (ch != 'A' && ch != 'E') malformed("quantifier prefix uses A and E only");
  const std::size_t n = q.prefix.size();
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    switch (f.kind()) {
      case K::True: return;
      case K::Prop: {
        const auto& name = f.name();
        if (name.size() >= 2 && name[0] == 'x' && std::all_of(name.begin() + 1, name.end(), ::isdigit) &&
            name[1] != '0') {
          std::size_t i = std::stoul(name.substr(1));
          if (i >= 1 && i <= n) return;
        }
        malformed("variable `" + name + "` is not bound by the prefix");
      }
      case K::Not: walk(f.lhs()); return;
      case K::And:
      case K::Or:
        walk(f.lhs());
        walk(f.rhs());
        return;
      default: malformed("the matrix must be a boolean formula over x1..xn");
    }
  };
  walk(q.matrix);
}

QbfInstance parse_qbf(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty QBF description", 0);
  auto head = words(lines.front().second);
  if (head.size() != 2 || head[0] != "qbf") throw ParseError("expected `qbf <prefix>`", 0, lines.front().first);
  std::string matrix;
  for (std::size_t i = 1; i < lines.size(); ++i) matrix += lines[i].second + " ";
  QbfInstance q{head[1], parse_formula(matrix)};
  validate(q);
  return q;
}

bool eval_qbf(const QbfInstance& q) {
  validate(q);
  std::vector<bool> val(q.prefix.size());
  std::function<bool(const Formula&)> matrix = [&](const Formula& f) -> bool {
    switch (f.kind()) {
      case K::True: return true;
      case K::Prop: return val[std::stoul(f.name().substr(1)) - 1];
      case K::Not: return !matrix(f.lhs());
      case K::And: return matrix(f.lhs()) && matrix(f.rhs());
      default: return matrix(f.lhs()) || matrix(f.rhs());
    }
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == q.prefix.size()) return matrix(q.matrix);
    bool universal = q.prefix[i] == 'A';
    for (bool b : {false, true}) {
      val[i] = b;
      bool r = rec(i + 1);
      if (universal && !r) return false;
      if (!universal && r) return true;
    }
    return universal;
  };
  return rec(0);
}

FiniteInstance gen_qbf(const QbfInstance& q) {
  validate(q);
  const std::size_t n = q.prefix.size();
  auto reg = [](std::size_t i) { return "x" + std::to_string(i); };
  std::function<Formula(const Formula&)> subst = [&](const Formula& f) -> Formula {
    switch (f.kind()) {
      case K::Prop: {
        std::size_t i = std::stoul(f.name().substr(1));
        return Formula::constraint(f.name(), Rel::Eq, Int(2 * (n - i) + 2));
      }
      case K::Not: return Formula::negation(subst(f.lhs()));
      case K::And: return Formula::conjunction(subst(f.lhs()), subst(f.rhs()));
      case K::Or: return Formula::disjunction(subst(f.lhs()), subst(f.rhs()));
      default: return f;
    }
  };
  Formula psi =
      eventually(Formula::conjunction(Formula::constraint("x", Rel::Eq, Int(2 * n + 1)), subst(q.matrix)));
  for (std::size_t i = n; i >= 1; --i) {
    Formula pick = Formula::disjunction(Formula::constraint(reg(i), Rel::Eq, Int(2 * i - 1)),
                                        Formula::constraint(reg(i), Rel::Eq, Int(2 * i)));
    Formula body = Formula::freeze(reg(i), psi);
    psi = q.prefix[i - 1] == 'A' ? always(implies(pick, body)) : eventually(Formula::conjunction(pick, body));
  }
  for (std::size_t i = n; i >= 1; --i) psi = Formula::freeze(reg(i), psi);
  psi = Formula::freeze("x", psi);
  std::vector<Int> values;
  for (std::size_t v = 0; v <= 2 * n + 1; ++v) values.emplace_back(v);
  return {pure(values), psi};
}

// ------------------------------------------------------------------- PQSS

void validate(const PqssInstance& p) {
  if (p.a.empty() || p.a.size() % 2 != 0) malformed("subset-sum needs an even, nonzero count of numbers");
  for (const auto& a : p.a)
    if (a < 1) malformed("subset-sum numbers must be positive");
  if (p.b < 1) malformed("subset-sum target must be positive");
}

PqssInstance parse_pqss(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.size() != 1) throw ParseError("expected one line `pqss a=... b=...`", 0);
  auto tok = words(lines.front().second);
  std::size_t ln = lines.front().first;
  if (tok.size() != 3 || tok[0] != "pqss") throw ParseError("expected `pqss a=... b=...`", 0, ln);
  PqssInstance p;
  try {
    for (const auto& v : comma_list(field(tok[1], "a", ln))) p.a.push_back(parse_int(v));
    p.b = parse_int(field(tok[2], "b", ln));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), 0, ln);
  }
  validate(p);
  return p;
}

bool eval_pqss(const PqssInstance& p) {
  validate(p);
  std::function<bool(std::size_t, const Int&)> rec = [&](std::size_t i, const Int& sum) -> bool {
    if (i == p.a.size()) return sum == p.b;
    bool universal = i % 2 == 0;
    for (const Int& x : {Int(1), p.a[i]}) {
      bool r = rec(i + 1, sum + x);
      if (universal && !r) return false;
      if (!universal && r) return true;
    }
    return universal;
  };
  return rec(0, 0);
}

PeriodicInstance gen_pqss_tptl2(const PqssInstance& p) {
  validate(p);
  Formula phi = Formula::constraint("x", Rel::Eq, p.b);
  for (std::size_t i = p.a.size(); i >= 1; --i) {
    Formula pick =
        Formula::disjunction(Formula::constraint("y", Rel::Eq, 1), Formula::constraint("y", Rel::Eq, p.a[i - 1]));
    Formula body = i % 2 == 1 ? always(implies(pick, phi)) : eventually(Formula::conjunction(pick, phi));
    phi = Formula::freeze("y", body);
  }
  PeriodicWord w(pure_word({0}), pure_word({1}), 1);
  return {std::move(w), Formula::freeze("x", phi)};
}

PeriodicInstance gen_pqss_freezeltl(const PqssInstance& p) {
  validate(p);
  Formula pp = Formula::prop("p");
  Formula q = Formula::prop("q");
  auto f_p = [&](Formula f) { return Formula::until(pp, Formula::conjunction(pp, std::move(f))); };
  auto g_p = [&](Formula f) { return Formula::release(Formula::negation(pp), implies(pp, std::move(f))); };
  Formula phi = Formula::constraint("x", Rel::Eq, 0);
  for (std::size_t i = p.a.size(); i >= 1; --i) {
    Formula jump = Formula::freeze(
        "y", eventually(Formula::conjunction(q, Formula::conjunction(Formula::constraint("y", Rel::Eq, 0), phi))));
    phi = next_n(i % 2 == 1 ? g_p(jump) : f_p(jump), static_cast<unsigned>(3 * (i - 1)));
  }
  std::vector<DataPoint> period{DataPoint(PropSet{"q"}, 0)};
  for (const auto& a : p.a) {
    period.emplace_back(PropSet{"p"}, 1);
    period.emplace_back(PropSet{"p"}, a);
    period.emplace_back(PropSet{"r"}, 0);
  }
  PeriodicWord w(DataWord{DataPoint(PropSet{"r"}, p.b)}, DataWord(std::move(period)), 1);
  return {std::move(w), Formula::freeze("x", Formula::freeze("y", next(phi)))};
}

}  // namespace pathcheck
