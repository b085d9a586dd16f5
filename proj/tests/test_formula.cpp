#include "support.hpp"

#include "pathcheck/errors.hpp"
#include "pathcheck/transforms.hpp"

#include <doctest.h>

using namespace pathcheck;
using namespace testsupport;

namespace {

Formula P(const char* s) { return parse_formula(s); }
Formula prop(const char* p) { return Formula::prop(p); }
Formula cons(const char* x, Rel r, long long c) { return Formula::constraint(x, r, Int(c)); }

}  // namespace

TEST_CASE("parser") {
  CHECK(P("x.(p U (q & x >= 2 & x < 3))") ==
        Formula::freeze("x", Formula::until(prop("p"), Formula::conjunction(Formula::conjunction(prop("q"),
                                                                                                 cons("x", Rel::Ge, 2)),
                                                                            cons("x", Rel::Lt, 3)))));
  CHECK(P("F[=2] p") == Formula::until_in(Formula::truth(), Interval::closed(2, 2), prop("p")));
  CHECK(P("!X true") == Formula::negation(Formula::until(Formula::falsity(), Formula::truth())));
  CHECK(P("X^3 p") == next(next(next(prop("p")))));
  CHECK(P("p U q U r") == Formula::until(prop("p"), Formula::until(prop("q"), prop("r"))));
  CHECK(P("p R q") == Formula::release(prop("p"), prop("q")));
  CHECK(P("p -> q | r & s") ==
        implies(prop("p"), Formula::disjunction(prop("q"), Formula::conjunction(prop("r"), prop("s")))));
  CHECK(P("x <= -3") == cons("x", Rel::Le, -3));
  Interval upto5;
  upto5.hi = Int(5);
  upto5.hi_closed = true;
  CHECK(P("p U(-inf,5] q") == Formula::until_in(prop("p"), upto5, prop("q")));
  CHECK(P("p U([1,2]|[5,7]) q") ==
        Formula::until_in(prop("p"), IntervalUnion({Interval::closed(1, 2), Interval::closed(5, 7)}), prop("q")));
  CHECK(P("G[1,2] p") == always_in(Interval::closed(1, 2), prop("p")));
  CHECK(P("false") == Formula::falsity());
  for (const char* bad : {"", "p U", "x.(p", "x < ", "p U[3,2] q", "F[] p", "p q", "$u1.F($u1 = 0)"})
    CHECK_THROWS_AS(P(bad), ParseError);
}

TEST_CASE("desugar") {
  Formula d = desugar(P("p U[2,3) q"));
  REQUIRE(d.kind() == Formula::Kind::Freeze);
  const std::string& z = d.name();
  CHECK(d.lhs() == Formula::until(prop("p"), Formula::conjunction(Formula::conjunction(cons(z.c_str(), Rel::Ge, 2),
                                                                                       cons(z.c_str(), Rel::Lt, 3)),
                                                                  prop("q"))));
  CHECK(desugar(P("p U q")) == P("p U q"));
  Formula u = desugar(P("p U([1,2]|[5,7]) q"));
  REQUIRE(u.kind() == Formula::Kind::Freeze);
  std::string y = u.name();
  auto in = [&](long long a, long long b) {
    return Formula::conjunction(cons(y.c_str(), Rel::Ge, a), cons(y.c_str(), Rel::Le, b));
  };
  CHECK(u.lhs() == Formula::until(prop("p"), Formula::conjunction(Formula::disjunction(in(1, 2), in(5, 7)), prop("q"))));
  CHECK(is_desugared(desugar(P("x.F[1,3] (x = 2 & G[0,1] p)"))));
  CHECK(register_count(desugar(P("F[1,2] G[3,4] X[1,1] p"))) == 1);
  // A register already named like the fresh one is not captured.
  Formula clash = desugar(P("z1.F[1,2] (z1 = 0)"));
  CHECK(register_count(clash) == 2);
}

TEST_CASE("negation normal form") {
  CHECK(nnf(P("!(p U q)")) == P("!p R !q"));
  CHECK(nnf(P("!(x < 5)")) == P("x >= 5"));
  CHECK(nnf(P("!x.(p & x = 0)")) == P("x.(!p | (x < 0 | x > 0))"));
  CHECK(nnf(P("!!p")) == P("p"));
  CHECK_THROWS_AS(nnf(P("F[1,2] p")), PreconditionError);
}

TEST_CASE("structural measures") {
  CHECK(c_phi(P("x.F(x = 5 & y <= -2)")) == 5);
  CHECK(c_phi(P("G(p -> F q)")) == 0);
  CHECK(c_phi(P("x.F(x = -5 & y <= -2)")) == 0);
  CHECK(register_count(P("x.F(x = 0)")) == 1);
  CHECK(is_freeze_ltl(P("x.F(x = 0)")));
  CHECK(is_closed(P("x.F(x = 0)")));
  CHECK_FALSE(is_closed(P("F(x = 0)")));
  CHECK(register_count(P("x.(y.(x = 1 & y > 0))")) == 2);
  CHECK_FALSE(is_freeze_ltl(P("x.(y.(x = 1 & y > 0))")));
  CHECK(until_rank(P("p")) == 0);
  CHECK(until_rank(P("p U q")) == 1);
  CHECK(until_rank(P("p U (q U r)")) == 2);
  Rng rng(4);
  for (int iter = 0; iter < 50; ++iter) {
    Formula f = random_ltl(rng, 4);
    CHECK(until_rank(Formula::negation(Formula::negation(f))) == until_rank(f));
  }
}

TEST_CASE("printing round trip") {
  Rng rng(5);
  FormulaShape shape;
  for (int iter = 0; iter < 500; ++iter) {
    Formula f = random_formula(rng, shape);
    CAPTURE(to_string(f));
    CHECK(parse_formula(to_string(f)) == f);
  }
}

TEST_CASE("desugar and nnf preserve verdicts") {
  Rng rng(6);
  FormulaShape shape;
  shape.depth = 4;
  for (int iter = 0; iter < 400; ++iter) {
    Formula f = random_formula(rng, shape);
    DataWord w = random_word(rng, 1, 8, 8);
    CAPTURE(to_string(f));
    Formula d = desugar(f);
    bool expected = reference_eval(w, f);
    CHECK(check_naive(w, d).satisfied == expected);
    CHECK(check_naive(w, nnf(d)).satisfied == expected);
  }
}
