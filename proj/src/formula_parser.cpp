#include "pathcheck/errors.hpp"
#include "pathcheck/formula.hpp"

#include <cctype>
#include <vector>

namespace pathcheck {

namespace {

enum class Tok {
  Ident, Int, NegInf, PosInf, LParen, RParen, LBrack, RBrack, Comma, Dot, Bang, Amp, Bar, Arrow,
  Lt, Le, Eq, Ge, Gt, Caret, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
  bool adjacent;  // no whitespace before this token
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  bool adjacent = false;
  auto push = [&](Tok k, std::size_t start, std::size_t len) {
    out.push_back({k, std::string(s.substr(start, len)), start, adjacent});
    i = start + len;
    adjacent = true;
  };
  auto starts_inf = [&](std::size_t at) { return s.substr(at, 3) == "inf" && !(at + 3 < s.size() && (std::isalnum(static_cast<unsigned char>(s[at + 3])) || s[at + 3] == '_')); };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      adjacent = false;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      if (s.substr(start, j - start) == "inf")
        push(Tok::PosInf, start, j - start);
      else
        push(Tok::Ident, start, j - start);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      push(Tok::Int, start, j - start);
      continue;
    }
    if ((c == '-' || c == '+') && starts_inf(i + 1)) {
      push(c == '-' ? Tok::NegInf : Tok::PosInf, start, 4);
      continue;
    }
    auto two = s.substr(i, 2);
    if (two == "->") { push(Tok::Arrow, start, 2); continue; }
    if (two == "<=") { push(Tok::Le, start, 2); continue; }
    if (two == ">=") { push(Tok::Ge, start, 2); continue; }
    if (two == "&&") { push(Tok::Amp, start, 2); continue; }
    if (two == "||") { push(Tok::Bar, start, 2); continue; }
    switch (c) {
      case '(': push(Tok::LParen, start, 1); continue;
      case ')': push(Tok::RParen, start, 1); continue;
      case '[': push(Tok::LBrack, start, 1); continue;
      case ']': push(Tok::RBrack, start, 1); continue;
      case ',': push(Tok::Comma, start, 1); continue;
      case '.': push(Tok::Dot, start, 1); continue;
      case '!': push(Tok::Bang, start, 1); continue;
      case '&': push(Tok::Amp, start, 1); continue;
      case '|': push(Tok::Bar, start, 1); continue;
      case '<': push(Tok::Lt, start, 1); continue;
      case '=': push(Tok::Eq, start, 1); continue;
      case '>': push(Tok::Gt, start, 1); continue;
      case '^': push(Tok::Caret, start, 1); continue;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i), i);
    }
  }
  out.push_back({Tok::End, "", s.size(), adjacent});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "U" || s == "R" || s == "F" || s == "G" || s == "X" || s == "true" || s == "false";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula parse() {
    Formula f = implication();
    if (peek().kind != Tok::End) error("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(peek().offset), peek().offset);
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) error(std::string("expected ") + what);
  }
  bool at_ident(const char* word) const { return peek().kind == Tok::Ident && peek().text == word; }

  Formula implication() {
    Formula a = disjunction();
    if (accept(Tok::Arrow)) return implies(a, implication());
    return a;
  }

  Formula disjunction() {
    Formula a = conjunction();
    while (accept(Tok::Bar)) a = Formula::disjunction(a, conjunction());
    return a;
  }

  Formula conjunction() {
    Formula a = temporal();
    while (accept(Tok::Amp)) a = Formula::conjunction(a, temporal());
    return a;
  }

  Formula temporal() {
    Formula a = unary();
    if (at_ident("U")) {
      take();
      auto in = annotation();
      Formula b = temporal();
      if (in) return Formula::until_in(a, *in, b);
      return Formula::until(a, b);
    }
    if (at_ident("R")) {
      take();
      return Formula::release(a, temporal());
    }
    return a;
  }

  Formula unary() {
    if (accept(Tok::Bang)) return Formula::negation(unary());
    if (at_ident("F") || at_ident("G") || at_ident("X")) {
      std::string op = take().text;
      unsigned power = 1;
      if (op == "X" && peek().kind == Tok::Caret && peek().adjacent) {
        take();
        if (peek().kind != Tok::Int || peek().text[0] == '-' || peek().text[0] == '+') error("expected exponent");
        Int n = parse_int(take().text);
        if (n > 100000) error("exponent too large");
        power = static_cast<unsigned>(n);
      }
      auto in = annotation();
      if (in && power != 1) error("X^n cannot carry an interval");
      Formula body = unary();
      if (op == "X") return in ? next_in(*in, body) : next_n(body, power);
      if (op == "F") return in ? eventually_in(*in, body) : eventually(body);
      return in ? always_in(*in, body) : always(body);
    }
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::Dot) {
      std::string reg = take().text;
      if (is_keyword(reg)) error("keyword '" + reg + "' cannot be a register");
      take();
      return Formula::freeze(reg, unary());
    }
    return atom();
  }

  Formula atom() {
    if (accept(Tok::LParen)) {
      Formula f = implication();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (peek().kind != Tok::Ident) error("expected a formula");
    if (at_ident("true")) return take(), Formula::truth();
    if (at_ident("false")) return take(), Formula::falsity();
    if (is_keyword(peek().text)) error("misplaced keyword '" + peek().text + "'");
    std::string name = take().text;
    std::optional<Rel> rel;
    switch (peek().kind) {
      case Tok::Lt: rel = Rel::Lt; break;
      case Tok::Le: rel = Rel::Le; break;
      case Tok::Eq: rel = Rel::Eq; break;
      case Tok::Ge: rel = Rel::Ge; break;
      case Tok::Gt: rel = Rel::Gt; break;
      default: break;
    }
    if (!rel) return Formula::prop(name);
    take();
    if (peek().kind != Tok::Int) error("expected an integer constant");
    return Formula::constraint(name, *rel, parse_int(take().text));
  }

  // Annotation directly after an operator; '(' may also open an operand, so
  // that case is parsed tentatively.
  std::optional<IntervalUnion> annotation() {
    const Token& t = peek();
    if (!t.adjacent || (t.kind != Tok::LBrack && t.kind != Tok::LParen)) return std::nullopt;
    if (t.kind == Tok::LBrack) return interval_union();
    std::size_t save = pos_;
    try {
      return interval_union();
    } catch (const ParseError&) {
      pos_ = save;
      return std::nullopt;
    }
  }

  IntervalUnion interval_union() {
    if (peek().kind == Tok::LParen && (peek(1).kind == Tok::LParen || peek(1).kind == Tok::LBrack)) {
      take();
      std::vector<Interval> parts{interval()};
      while (accept(Tok::Bar)) parts.push_back(interval());
      expect(Tok::RParen, "')' closing the interval union");
      return make_union(std::move(parts));
    }
    return make_union({interval()});
  }

  IntervalUnion make_union(std::vector<Interval> parts) {
    for (const auto& p : parts)
      if (p.empty()) error("empty interval");
    return IntervalUnion(std::move(parts));
  }

  Interval interval() {
    bool lo_closed = peek().kind == Tok::LBrack;
    if (!accept(Tok::LBrack) && !accept(Tok::LParen)) error("expected an interval");
    Interval in;
    if (lo_closed) {
      std::optional<Rel> rel;
      switch (peek().kind) {
        case Tok::Lt: rel = Rel::Lt; break;
        case Tok::Le: rel = Rel::Le; break;
        case Tok::Eq: rel = Rel::Eq; break;
        case Tok::Ge: rel = Rel::Ge; break;
        case Tok::Gt: rel = Rel::Gt; break;
        default: break;
      }
      if (rel) {
        take();
        if (peek().kind != Tok::Int) error("expected an integer bound");
        Int c = parse_int(take().text);
        expect(Tok::RBrack, "']'");
        switch (*rel) {
          case Rel::Eq: return Interval::closed(c, c);
          case Rel::Lt: return {std::nullopt, false, c, false};
          case Rel::Le: return {std::nullopt, false, c, true};
          case Rel::Gt: return {c, false, std::nullopt, false};
          case Rel::Ge: return {c, true, std::nullopt, false};
        }
      }
    }
    in.lo_closed = lo_closed;
    if (accept(Tok::NegInf)) {
      in.lo_closed = false;
    } else {
      if (peek().kind != Tok::Int) error("expected a lower bound");
      in.lo = parse_int(take().text);
    }
    expect(Tok::Comma, "','");
    if (accept(Tok::PosInf)) {
      in.hi_closed = false;
      if (!accept(Tok::RBrack)) expect(Tok::RParen, "']' or ')'");
    } else {
      if (peek().kind != Tok::Int) error("expected an upper bound");
      in.hi = parse_int(take().text);
      if (accept(Tok::RBrack))
        in.hi_closed = true;
      else
        expect(Tok::RParen, "']' or ')'");
    }
    return in;
  }
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace pathcheck
