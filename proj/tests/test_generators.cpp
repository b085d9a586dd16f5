#include "support.hpp"

#include "pathcheck/errors.hpp"
#include "pathcheck/generators.hpp"
#include "pathcheck/transforms.hpp"
#include "pathcheck/word_io.hpp"

#include <doctest.h>

#include <algorithm>

using namespace pathcheck;
using namespace testsupport;

namespace {

Sam2Circuit golden() { return parse_circuit(read_file(TEST_DATA_DIR "/golden.cir")); }

std::vector<long long> values_of(const DataWord& w) {
  std::vector<long long> out;
  for (const auto& p : w) out.push_back(static_cast<long long>(p.value));
  return out;
}

Sam2Circuit with_inputs(Sam2Circuit c, bool v) {
  std::fill(c.inputs.begin(), c.inputs.end(), v);
  return c;
}

}  // namespace

TEST_CASE("circuit evaluation") {
  Sam2Circuit c = golden();
  CHECK(c.levels() == 3);
  CHECK_FALSE(eval_circuit(c));
  CHECK(eval_circuit(with_inputs(c, true)));
  CHECK_FALSE(eval_circuit(with_inputs(c, false)));
  CHECK(parse_circuit(format_circuit(c)).wires == c.wires);
}

TEST_CASE("malformed circuits") {
  CHECK_THROWS_AS(parse_circuit("circuit levels=2 gates=1 output=1\nlevel 1 and\nlevel 2 input 1\nwire 2:1 -> 1:1\n"),
                  MalformedInstance);
  CHECK_THROWS_AS(parse_circuit("circuit levels=2 gates=1 output=1\nlevel 1 and\nlevel 2 input 1\nwire 1:1 -> 2:1\n"),
                  ParseError);
  Sam2Circuit c = golden();
  c.kinds[1] = GateKind::And;
  CHECK_THROWS_AS(validate(c), MalformedInstance);
  c = golden();
  // Gate 2:1 reads 3:1 twice; fanouts stay at two.
  c.wires[1][4].first = 0;
  c.wires[1][1].first = 2;
  CHECK_THROWS_AS(validate(c), MalformedInstance);
}

TEST_CASE("golden circuit encoding") {
  Sam2Circuit c = golden();
  auto [w, psi] = gen_circuit_mtl(c);
  std::vector<long long> expected{0,  1,  3,  4,  5,  7,  8,  9,  10, 11, 12, 13, 14,
                                  18, 14, 16, 19, 15, 16, 21, 22, 23, 24, 25, 26, 27};
  CHECK(values_of(w) == expected);
  CHECK(psi == parse_formula("X^2 (G[7,8] X^7 (F[7,8] (X^5 !X true | X^2 !X true | !X true)))"));
  CircuitLayout lay = layout_circuit(c);
  CHECK(lay.m == 7);
  CHECK(lay.accepting == std::vector<std::size_t>{2, 5, 7});
  CHECK_FALSE(check_finite(w, psi).satisfied);
  CHECK_FALSE(check_finite(w, desugar(psi)).satisfied);
  CHECK_FALSE(check_naive(w, psi).satisfied);
}

TEST_CASE("single cycle toy circuit") {
  // Two and-gates fed by inputs 1 and 2 in one cycle: a1 - b1, a1 - b2, a2 - b2, a2 - b1.
  Sam2Circuit c = parse_circuit(
      "circuit levels=2 gates=2 output=1\nlevel 1 and\nlevel 2 input 1,0\n"
      "wire 2:1 -> 1:1\nwire 2:2 -> 1:1\nwire 2:2 -> 1:2\nwire 2:1 -> 1:2\n");
  CircuitLayout lay = layout_circuit(c);
  CHECK(lay.m == 3);
  CHECK(lay.cycles == 1);
  // Last block b1, b2, b1': input 1 is b1 and its copy.
  CHECK(lay.accepting == std::vector<std::size_t>{1, 3});
  CHECK(values_of(gen_circuit_mtl(c).word) == std::vector<long long>{0, 1, 3, 4, 5});
  CHECK_FALSE(check_finite(gen_circuit_mtl(c).word, gen_circuit_mtl(c).formula).satisfied);
  CHECK(check_finite(gen_circuit_mtl(with_inputs(c, true)).word, gen_circuit_mtl(with_inputs(c, true)).formula)
            .satisfied);
}

TEST_CASE("circuit generators agree with evaluation") {
  Rng rng(41);
  int smtl_literal_mismatch = 0;
  for (int iter = 0; iter < 120; ++iter) {
    std::size_t levels = static_cast<std::size_t>(uniform(rng, 2, 4));
    std::size_t gates = static_cast<std::size_t>(uniform(rng, levels > 2 ? 2 : 1, 4));
    Sam2Circuit c = random_circuit(rng, levels, gates);
    const bool expected = eval_circuit(c);
    CAPTURE(format_circuit(c));

    auto fin = gen_circuit_mtl(c);
    CHECK(check_finite(fin.word, fin.formula).satisfied == expected);
    for (const auto& p : fin.word) CHECK(p.value <= Int(4 * gates * levels));
    for (const auto& p : fin.word) CHECK(p.props.empty());

    auto inf = gen_circuit_mtl_infinite(c);
    CHECK(inf.word.offset() == 0);
    CHECK(inf.word.period().size() == 1);
    CHECK(check_periodic(inf.word, inf.formula).satisfied == expected);

    auto sm = gen_circuit_smtl(c);
    for (std::size_t i = 1; i < sm.word.size(); ++i) CHECK(sm.word[i - 1].value < sm.word[i].value);
    Formula t = desugar(sm.formula);
    CHECK(register_count(t) <= 1);
    CHECK(check_finite(sm.word, t).satisfied == expected);

    auto lit = gen_circuit_smtl(c, false);
    if (check_finite(lit.word, lit.formula).satisfied != expected) ++smtl_literal_mismatch;
  }
  // Unguarded jumps may land inside the first half of a block.
  MESSAGE("unguarded SMTL mismatches: " << smtl_literal_mismatch);
}

TEST_CASE("all-one circuits satisfy every encoding") {
  Rng rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    Sam2Circuit c = with_inputs(random_circuit(rng, 3, 3), true);
    auto inf = gen_circuit_mtl_infinite(c);
    CHECK(check_periodic(inf.word, inf.formula).satisfied);
  }
}

TEST_CASE("SMTL word and jump sets") {
  Rng rng(3);
  Sam2Circuit c = random_circuit(rng, 3, 4);
  auto sm = gen_circuit_smtl(c);
  CHECK(values_of(sm.word) == std::vector<long long>{1, 2, 3, 4, 5, 10, 15, 20, 25, 26, 27, 28, 29, 34, 39, 44});
  // A wire from gate 1 to gate 1 of the next level contributes 1*5 - 1.
  Sam2Circuit two = parse_circuit(
      "circuit levels=2 gates=1 output=1\nlevel 1 or\nlevel 2 input 1\nwire 2:1 -> 1:1\nwire 2:1 -> 1:1\n");
  auto lit = gen_circuit_smtl(two, false);
  CHECK(values_of(lit.word) == std::vector<long long>{1, 2});
  CHECK(lit.formula == parse_formula("F[1,1] !X true"));
}

TEST_CASE("QBF") {
  QbfInstance q = parse_qbf("qbf E\nx1\n");
  auto [w, f] = gen_qbf(q);
  CHECK(values_of(w) == std::vector<long long>{0, 1, 2, 3});
  CHECK(f == parse_formula("x.x1.F((x1=1 | x1=2) & x1.F(x=3 & x1=2))"));
  CHECK(eval_qbf(q));
  CHECK(check_finite(w, f).satisfied);
  QbfInstance all = parse_qbf("qbf A\nx1");
  CHECK_FALSE(eval_qbf(all));
  CHECK_FALSE(check_finite(gen_qbf(all).word, gen_qbf(all).formula).satisfied);
  CHECK_THROWS_AS(parse_qbf("qbf A\nx2"), MalformedInstance);
  CHECK_THROWS_AS(parse_qbf("qbf A\nF x1"), MalformedInstance);
  CHECK_THROWS_AS(parse_qbf("qbf AX\nx1"), MalformedInstance);
}

TEST_CASE("QBF reduction on three variables") {
  Rng rng(5);
  auto matrices = boolean_formulas({"x1", "x2", "x3"}, 2);
  std::shuffle(matrices.begin(), matrices.end(), rng);
  matrices.erase(matrices.begin() + 100, matrices.end());
  const char* prefixes[] = {"AAA", "AEA", "EAE", "EEE", "AEE", "EAA"};
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    QbfInstance q{prefixes[i % 6], matrices[i]};
    auto inst = gen_qbf(q);
    CAPTURE(to_string(inst.formula));
    CHECK(values_of(inst.word).size() == 8);
    bool expected = eval_qbf(q);
    CHECK(check_finite(inst.word, inst.formula).satisfied == expected);
    CHECK(check_naive(inst.word, inst.formula).satisfied == expected);
  }
}

TEST_CASE("PQSS") {
  auto p = parse_pqss("pqss a=1,1 b=2");
  CHECK(eval_pqss(p));
  CHECK(check_periodic(gen_pqss_tptl2(p).word, gen_pqss_tptl2(p).formula).satisfied);
  CHECK(check_periodic(gen_pqss_freezeltl(p).word, gen_pqss_freezeltl(p).formula).satisfied);
  CHECK_FALSE(eval_pqss(parse_pqss("pqss a=2,2 b=4")));
  CHECK(eval_pqss(parse_pqss("pqss a=1,2 b=3")));
  CHECK_THROWS_AS(parse_pqss("pqss a=1,2,3 b=3"), MalformedInstance);
  CHECK_THROWS_AS(parse_pqss("pqss a=0,2 b=3"), MalformedInstance);
  CHECK_THROWS_AS(parse_pqss("pqss a=1,2 b=0"), MalformedInstance);

  auto t = gen_pqss_tptl2(p);
  CHECK(t.word == PeriodicWord(pure_word({0}), pure_word({1}), 1));
  CHECK(register_count(t.formula) == 2);
  auto fz = gen_pqss_freezeltl(p);
  CHECK(is_freeze_ltl(fz.formula));
  CHECK(register_count(fz.formula) <= 2);
}

TEST_CASE("PQSS reductions agree with the game value") {
  for (long long a1 = 1; a1 <= 4; ++a1)
    for (long long a2 = 1; a2 <= 4; ++a2)
      for (long long b = 1; b <= 10; ++b) {
        PqssInstance p{{a1, a2}, b};
        bool expected = eval_pqss(p);
        auto t = gen_pqss_tptl2(p);
        auto fz = gen_pqss_freezeltl(p);
        CAPTURE(a1);
        CAPTURE(a2);
        CAPTURE(b);
        CHECK(check_periodic(t.word, t.formula).satisfied == expected);
        CHECK(check_periodic(fz.word, fz.formula).satisfied == expected);
      }
  Rng rng(9);
  for (int iter = 0; iter < 30; ++iter) {
    PqssInstance p;
    for (int i = 0; i < 4; ++i) p.a.push_back(uniform(rng, 1, 4));
    p.b = uniform(rng, 1, 12);
    bool expected = eval_pqss(p);
    auto t = gen_pqss_tptl2(p);
    auto fz = gen_pqss_freezeltl(p);
    CHECK(check_periodic(t.word, t.formula).satisfied == expected);
    CHECK(check_periodic(fz.word, fz.formula).satisfied == expected);
  }
}
