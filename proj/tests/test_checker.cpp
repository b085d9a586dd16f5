#include "support.hpp"

#include "pathcheck/errors.hpp"
#include "pathcheck/transforms.hpp"

#include <doctest.h>

using namespace pathcheck;
using namespace testsupport;

namespace {

PeriodicWord counting() { return PeriodicWord(pure_word({0}), pure_word({1}), 1); }

}  // namespace

TEST_CASE("naive checker basics") {
  CHECK(check_naive(pure_word({0, 2}), parse_formula("X(x=2)")).satisfied);
  CHECK_FALSE(check_naive(pure_word({4}), parse_formula("F p")).satisfied);
  CHECK(check_naive(pure_word({3, 1, 7}), parse_formula("x.(x=0)")).satisfied);
}

TEST_CASE("horizon") {
  Formula f = parse_formula("x.F(x=5)");
  CHECK(unroll_horizon(counting(), f) == 8);
  PeriodicWord flat(pure_word({1, 2}), pure_word({3, 4, 5}), 0);
  CHECK(unroll_horizon(flat, f) == 8);
  CHECK(unroll_horizon(flat, parse_formula("F p")) == 8);
}

TEST_CASE("periodic examples") {
  CHECK(check_periodic(counting(), parse_formula("x.F(x=5)")).satisfied);
  CHECK(check_periodic(counting(), parse_formula("G(x>=0)")).satisfied);
  CHECK(check_naive_unrolled(counting(), parse_formula("x.F(x=5)")).satisfied);
  CHECK_FALSE(check_periodic(counting(), parse_formula("F(x<0)")).satisfied);
  // Strict-future F over an infinite word that never ends.
  CHECK_FALSE(check_periodic(counting(), parse_formula("F(!F true)")).satisfied);
  CHECK_FALSE(check_naive_unrolled(counting(), parse_formula("F(!F true)")).satisfied);
}

TEST_CASE("finite engine examples") {
  CHECK(check_finite(pure_word({5}), parse_formula("!X true")).satisfied);
  for (auto w : {pure_word({1}), pure_word({1, 2}), pure_word({1, 2, 3})}) {
    CHECK(check_finite(w, parse_formula("true U true")).satisfied == (w.size() >= 2));
  }
}

TEST_CASE("one-register examples") {
  CHECK(check_tptl1(counting(), parse_formula("F(x>=3)")).satisfied);
  CHECK(check_tptl1(counting(), parse_formula("G(x.X(x=1))")).satisfied);
  CHECK_THROWS_AS(check_tptl1(counting(), parse_formula("x.y.F(x=1 & y=1)")), PreconditionError);
}

TEST_CASE("quasi-monotonic fast path") {
  PeriodicWord w(DataWord{}, pure_word({0, 100}), 200);
  Formula f = parse_formula("x.F(x>=4)");
  CHECK(check_quasi_monotonic_fast(w, f).satisfied == check_periodic(w, f).satisfied);
  PeriodicWord bad(DataWord{}, pure_word({5, 0}), 1);
  CHECK_THROWS_AS(check_quasi_monotonic_fast(bad, f), PreconditionError);
}

TEST_CASE("slp engine examples") {
  SlpBuilder b;
  auto z = b.leaf(DataPoint({}, 0));
  Slp pre = b.build(z);
  SlpBuilder c;
  Slp per = c.build(c.leaf(DataPoint({}, 1)));
  CHECK(check_slp(pre, per, 1, parse_formula("x.F(x=5)")).satisfied);

  SlpBuilder d;
  auto n = d.leaf(DataPoint({}, 2));
  for (int i = 0; i < 10; ++i) n = d.concat(n, n);
  Slp chain = d.build(n);
  CHECK(slp_length(chain) == 1024);
  CHECK(check_slp(std::nullopt, chain, 0, parse_formula("x.G(x=0)")).satisfied);
  CHECK(check_slp(chain, parse_formula("x.G(x=0)")).satisfied);
  CHECK_FALSE(check_slp(chain, parse_formula("x.F(x=1)")).satisfied);
}

TEST_CASE("differential: periodic against unrolled oracle") {
  Rng rng(7);
  FormulaShape shape;
  shape.depth = 4;
  for (int n = 0; n < 300; ++n) {
    PeriodicWord w = random_periodic(rng, 3, 4, 8, 3);
    Formula f = random_formula(rng, shape);
    bool a = check_periodic(w, f).satisfied;
    bool b = check_naive_unrolled(w, f).satisfied;
    INFO(to_string(f));
    CHECK(a == b);
    CHECK(check_periodic_unmemoized(w, f).satisfied == a);
  }
}

TEST_CASE("differential: finite engines") {
  Rng rng(11);
  FormulaShape shape;
  for (int n = 0; n < 300; ++n) {
    DataWord w = random_word(rng, 1, 8, 8);
    Formula f = random_formula(rng, shape);
    bool a = check_naive(w, f).satisfied;
    INFO(to_string(f));
    CHECK(check_finite(w, f).satisfied == a);
    CHECK(check_slp(leaf_slp(w), f).satisfied == a);
    CHECK(eval_relative(w, 0, {}, f) == a);
  }
}

TEST_CASE("differential: one register") {
  Rng rng(13);
  FormulaShape shape;
  shape.registers = {"x"};
  shape.depth = 4;
  shape.intervals = false;
  FormulaShape mtl;
  mtl.freeze = false;
  mtl.constraints = false;
  for (int n = 0; n < 200; ++n) {
    PeriodicWord w = random_periodic(rng, 3, 4, 8, 3);
    Formula f = random_formula(rng, mtl);
    INFO(to_string(f));
    CHECK(check_tptl1(w, f).satisfied == check_periodic(w, f).satisfied);
  }
  for (int n = 0; n < 200; ++n) {
    PeriodicWord w = random_periodic(rng, 3, 4, 8, 3);
    Formula f = random_formula(rng, shape);
    INFO(to_string(f));
    CHECK(check_tptl1(w, f).satisfied == check_periodic(w, f).satisfied);
  }
}

TEST_CASE("naive engine matches the direct semantics") {
  Rng rng(77);
  FormulaShape shape;
  for (int iter = 0; iter < 500; ++iter) {
    Formula f = random_formula(rng, shape);
    DataWord w = random_word(rng, 1, 7, 8);
    CAPTURE(to_string(f));
    CHECK(check_naive(w, f).satisfied == reference_eval(w, f));
  }
}
