#pragma once

// Random instances and small reference helpers shared by the test binaries.

#include "pathcheck/checker.hpp"
#include "pathcheck/dataword.hpp"
#include "pathcheck/docm.hpp"
#include "pathcheck/formula.hpp"
#include "pathcheck/generators.hpp"
#include "pathcheck/slp.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using pathcheck::DataPoint;
using pathcheck::DataWord;
using pathcheck::Formula;
using pathcheck::Int;
using pathcheck::PeriodicWord;

using Rng = std::mt19937_64;

long long uniform(Rng& rng, long long lo, long long hi);

struct FormulaShape {
  int depth = 5;
  std::vector<std::string> registers{"x", "y"};
  int max_constant = 6;
  bool freeze = true;
  bool constraints = true;
  bool intervals = true;  // annotated Until
};

Formula random_formula(Rng& rng, const FormulaShape& shape);
// Closed, freeze-free LTL over p, q.
Formula random_ltl(Rng& rng, int depth);

DataWord random_word(Rng& rng, std::size_t min_len, std::size_t max_len, long long max_value);
PeriodicWord random_periodic(Rng& rng, std::size_t max_prefix, std::size_t max_period, long long max_value,
                             long long max_offset);
PeriodicWord random_quasi_monotonic(Rng& rng, std::size_t max_prefix, std::size_t max_period, long long max_value,
                                    long long max_offset);

// Same word as one leaf per point.
pathcheck::Slp leaf_slp(const DataWord& w);
// Random SLP with at most size rules.
pathcheck::Slp random_slp(Rng& rng, std::size_t size, long long max_value);

// Random well-formed circuit; gates >= 2 once there are three levels.
pathcheck::Sam2Circuit random_circuit(Rng& rng, std::size_t levels, std::size_t gates);

// Direct recursive semantics over a finite word, with interval-annotated
// Until read as d_j - d_i in I.  Free registers start at the first value.
bool reference_eval(const DataWord& w, const Formula& f);

// Random machine with states q0..q{states-1}; each state halts, has one add
// edge, one zero edge, or a zero edge beside a decrement.  The result is
// deterministic but may still get stuck.
pathcheck::Ocm random_ocm(Rng& rng, std::size_t states, long long max_delta,
                          pathcheck::Encoding enc = pathcheck::Encoding::Unary);

// Every boolean formula over the given propositions with at most depth
// nested connectives, using !, & and |.  Each unordered pair of operands
// appears once under & and once under |.
std::vector<Formula> boolean_formulas(const std::vector<std::string>& props, int depth);

}  // namespace testsupport
