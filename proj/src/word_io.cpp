#include "pathcheck/word_io.hpp"

#include "pathcheck/errors.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace pathcheck {

namespace {

struct Line {
  std::string text;
  std::size_t number;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({std::move(t), number});
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool is_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

[[noreturn]] void fail(const Line& l, const std::string& what) {
  throw ParseError("line " + std::to_string(l.number) + ": " + what, 0, l.number);
}

Int parse_value(const Line& l, const std::string& tok) {
  try {
    return parse_int(tok);
  } catch (const ParseError&) {
    fail(l, "expected an integer, got '" + tok + "'");
  }
}

Int parse_natural(const Line& l, const std::string& tok) {
  Int v = parse_value(l, tok);
  if (v < 0) fail(l, "expected a natural number, got '" + tok + "'");
  return v;
}

// `{p,q}` starting at s[pos]; advances pos past the closing brace.
PropSet parse_props(const Line& l, const std::string& s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '{') fail(l, "expected '{'");
  std::size_t close = s.find('}', pos);
  if (close == std::string::npos) fail(l, "missing '}'");
  std::string inner = s.substr(pos + 1, close - pos - 1);
  pos = close + 1;
  std::vector<std::string> names;
  if (trim(inner).empty()) return PropSet{};
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = inner.find(',', start);
    std::string name = trim(inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!is_ident(name)) fail(l, "invalid proposition name '" + name + "'");
    names.push_back(name);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return PropSet(std::move(names));
}

DataPoint parse_point(const Line& l, const std::string& s, std::size_t pos = 0) {
  PropSet props = parse_props(l, s, pos);
  auto rest = split_ws(s.substr(pos));
  if (rest.size() != 1) fail(l, "expected one data value after the proposition set");
  return DataPoint(std::move(props), parse_natural(l, rest[0]));
}

std::map<std::string, std::string> header_keys(const Line& l, const std::vector<std::string>& toks,
                                                std::size_t from) {
  std::map<std::string, std::string> keys;
  for (std::size_t i = from; i < toks.size(); ++i) {
    auto eq = toks[i].find('=');
    if (eq == std::string::npos) fail(l, "expected key=value in header, got '" + toks[i] + "'");
    keys[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
  }
  return keys;
}

DataWord parse_finite(const std::vector<Line>& lines) {
  std::vector<DataPoint> pts;
  for (std::size_t i = 1; i < lines.size(); ++i) pts.push_back(parse_point(lines[i], lines[i].text));
  return DataWord(std::move(pts));
}

PeriodicWord parse_periodic(const std::vector<Line>& lines, const Int& offset) {
  std::vector<DataPoint> prefix, period;
  std::vector<DataPoint>* section = nullptr;
  bool seen_prefix = false, seen_period = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.text == "prefix:") {
      if (seen_prefix || seen_period) fail(l, "unexpected 'prefix:' section");
      seen_prefix = true;
      section = &prefix;
    } else if (l.text == "period:") {
      if (seen_period) fail(l, "duplicate 'period:' section");
      seen_period = true;
      section = &period;
    } else {
      if (!section) fail(l, "point outside of a 'prefix:' or 'period:' section");
      section->push_back(parse_point(l, l.text));
    }
  }
  if (period.empty()) fail(lines.front(), "periodic word needs a nonempty 'period:' section");
  return PeriodicWord(DataWord(std::move(prefix)), DataWord(std::move(period)), offset);
}

SlpWord parse_slp(const std::vector<Line>& lines, const std::map<std::string, std::string>& keys) {
  struct RawRule {
    Line line;
    Slp::Rule rule;  // child indices hold positions in the names table until resolved
    std::vector<std::string> refs;
  };
  std::map<std::string, RawRule> raw;
  std::vector<std::string> order;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    auto eq = l.text.find('=');
    if (eq == std::string::npos) fail(l, "expected a rule 'A = ...'");
    std::string lhs = trim(l.text.substr(0, eq));
    std::string rhs = trim(l.text.substr(eq + 1));
    if (!is_ident(lhs)) fail(l, "invalid variable name '" + lhs + "'");
    if (raw.count(lhs)) fail(l, "variable '" + lhs + "' defined twice");
    auto toks = split_ws(rhs);
    RawRule r{l, Slp::Leaf{}, {}};
    if (!toks.empty() && toks[0] == "leaf") {
      std::size_t pos = rhs.find('{');
      if (pos == std::string::npos) fail(l, "leaf rule needs a proposition set");
      r.rule = Slp::Leaf{parse_point(l, rhs, pos)};
    } else if (toks.size() == 2 && is_ident(toks[0]) && is_ident(toks[1])) {
      r.rule = Slp::Concat{};
      r.refs = {toks[0], toks[1]};
    } else if (toks.size() == 3 && is_ident(toks[0]) && toks[1] == "+") {
      r.rule = Slp::Shift{0, parse_natural(l, toks[2])};
      r.refs = {toks[0]};
    } else {
      fail(l, "unrecognised rule '" + rhs + "'");
    }
    order.push_back(lhs);
    raw.emplace(lhs, std::move(r));
  }

  // Topological order by depth-first search; detects cycles and undefined names.
  std::map<std::string, std::size_t> index;
  std::map<std::string, int> state;  // 1 = on stack, 2 = done
  std::vector<Slp::Rule> rules;
  std::vector<std::string> names;
  std::function<void(const std::string&, const Line&)> visit = [&](const std::string& v, const Line& from) {
    auto it = raw.find(v);
    if (it == raw.end()) fail(from, "undefined variable '" + v + "'");
    if (state[v] == 2) return;
    if (state[v] == 1) fail(it->second.line, "cyclic rule through '" + v + "'");
    state[v] = 1;
    for (const auto& ref : it->second.refs) visit(ref, it->second.line);
    Slp::Rule rule = it->second.rule;
    if (auto* c = std::get_if<Slp::Concat>(&rule)) {
      c->left = index.at(it->second.refs[0]);
      c->right = index.at(it->second.refs[1]);
    } else if (auto* s = std::get_if<Slp::Shift>(&rule)) {
      s->child = index.at(it->second.refs[0]);
    }
    index[v] = rules.size();
    rules.push_back(std::move(rule));
    names.push_back(v);
    state[v] = 2;
  };
  for (const auto& v : order) visit(v, raw.at(v).line);
  if (rules.empty()) fail(lines.front(), "straight-line program without rules");

  auto root = [&](const std::string& key) -> std::optional<Slp> {
    auto it = keys.find(key);
    if (it == keys.end()) return std::nullopt;
    auto ix = index.find(it->second);
    if (ix == index.end()) fail(lines.front(), "undefined " + key + " variable '" + it->second + "'");
    return Slp(rules, ix->second, names);
  };
  SlpWord w;
  w.prefix = root("output");
  w.period = root("period");
  if (auto it = keys.find("offset"); it != keys.end()) w.offset = parse_natural(lines.front(), it->second);
  if (!w.prefix && !w.period) fail(lines.front(), "slp header needs output= or period=");
  if (!w.period && keys.count("offset")) fail(lines.front(), "offset= only applies with period=");
  for (const auto& [k, v] : keys)
    if (k != "output" && k != "period" && k != "offset") fail(lines.front(), "unknown header key '" + k + "'");
  return w;
}

void append_point(std::ostringstream& out, const DataPoint& p) {
  out << '{';
  bool first = true;
  for (const auto& n : p.props) {
    if (!first) out << ',';
    out << n;
    first = false;
  }
  out << "} " << p.value << '\n';
}

void append_rules(std::ostringstream& out, const Slp& g) {
  for (std::size_t i = 0; i < g.rule_count(); ++i) {
    out << g.name(i) << " = ";
    const auto& r = g.rules()[i];
    if (const auto* c = std::get_if<Slp::Concat>(&r)) {
      out << g.name(c->left) << ' ' << g.name(c->right) << '\n';
    } else if (const auto* s = std::get_if<Slp::Shift>(&r)) {
      out << g.name(s->child) << " + " << s->delta << '\n';
    } else {
      out << "leaf ";
      append_point(out, std::get<Slp::Leaf>(r).point);
    }
  }
}

}  // namespace

AnyWord parse_word(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty word description", 0);
  auto head = split_ws(lines.front().text);
  if (head.size() >= 2 && head[0] == "word" && head[1] == "finite") {
    if (head.size() != 2) fail(lines.front(), "unexpected tokens after 'word finite'");
    return parse_finite(lines);
  }
  if (head.size() >= 2 && head[0] == "word" && head[1] == "periodic") {
    auto keys = header_keys(lines.front(), head, 2);
    Int offset = 0;
    for (const auto& [k, v] : keys) {
      if (k != "offset") fail(lines.front(), "unknown header key '" + k + "'");
      offset = parse_natural(lines.front(), v);
    }
    return parse_periodic(lines, offset);
  }
  if (!head.empty() && head[0] == "slp") return parse_slp(lines, header_keys(lines.front(), head, 1));
  fail(lines.front(), "expected 'word finite', 'word periodic' or 'slp' header");
}

std::string format_word(const DataWord& w) {
  std::ostringstream out;
  out << "word finite\n";
  for (const auto& p : w) append_point(out, p);
  return out.str();
}

std::string format_word(const PeriodicWord& w) {
  std::ostringstream out;
  out << "word periodic offset=" << w.offset() << "\nprefix:\n";
  for (const auto& p : w.prefix()) append_point(out, p);
  out << "period:\n";
  for (const auto& p : w.period()) append_point(out, p);
  return out.str();
}

std::string format_word(const SlpWord& w) {
  // Both programs are merged into one rule list so that names stay unique.
  SlpBuilder b;
  std::optional<std::size_t> out_ix, period_ix;
  if (w.prefix) out_ix = b.import(*w.prefix);
  if (w.period) period_ix = b.import(*w.period);
  Slp merged = b.build(out_ix ? *out_ix : *period_ix);
  std::ostringstream out;
  out << "slp";
  if (out_ix) out << " output=" << merged.name(*out_ix);
  if (period_ix) out << " period=" << merged.name(*period_ix) << " offset=" << w.offset;
  out << '\n';
  append_rules(out, merged);
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace pathcheck
