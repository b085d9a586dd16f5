#pragma once

#include "pathcheck/bigint.hpp"
#include "pathcheck/dataword.hpp"
#include "pathcheck/formula.hpp"
#include "pathcheck/slp.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pathcheck {

// Register -> integer.  Registers missing from the map take their initial
// value: d_0 for absolute valuations, 0 for relative ones.
using Valuation = std::map<std::string, Int>;

// One existential choice of a satisfied run: the position an Until was
// witnessed at ("U"), a Release discharged by its left operand ("R"), or the
// branch taken by a disjunction ("or", branch 0 or 1) at the given position.
struct WitnessStep {
  std::string op;
  Int position;
  int branch = -1;

  friend bool operator==(const WitnessStep&, const WitnessStep&) = default;
};

struct Verdict {
  bool satisfied = false;
  std::vector<WitnessStep> witness;
  std::string engine;
  std::size_t memo_entries = 0;
  std::optional<Int> horizon;
};

// All engines accept sugared formulas and desugar them first.

// Direct evaluation of the absolute semantics on a nonempty finite word.
Verdict check_naive(const DataWord& w, const Formula& f);
// Absolute semantics at position i under nu.
bool eval_absolute(const DataWord& w, std::size_t i, const Valuation& nu, const Formula& f);

// Window H such that every Until/Release witness of the periodic word lies at
// most H positions after the position it is evaluated at.  min_delta lowers
// the assumed smallest relative register value below what runs from the
// initial state can reach (used when starting from arbitrary valuations).
Int unroll_horizon(const PeriodicWord& w, const Formula& f, std::optional<Int> min_delta = std::nullopt);

// Absolute semantics over the expansion of length depth*H+1, with every
// Until/Release search capped at H positions.  horizon defaults to
// unroll_horizon(w, f).
Verdict check_naive_unrolled(const PeriodicWord& w, const Formula& f, std::optional<Int> horizon = std::nullopt);
bool eval_absolute(const PeriodicWord& w, std::size_t i, const Valuation& nu, const Formula& f,
                   std::optional<Int> horizon = std::nullopt);

// Memoised relative-semantics engine over folded positions.
Verdict check_periodic(const PeriodicWord& w, const Formula& f);
// Relative semantics at position i (folded into the first period).
bool eval_relative(const PeriodicWord& w, std::size_t i, const Valuation& delta, const Formula& f);
// Relative semantics over a finite word.
bool eval_relative(const DataWord& w, std::size_t i, const Valuation& delta, const Formula& f);

// Same engine over straight-line programs, without expansion.  A missing
// prefix means an empty prefix.
Verdict check_slp(const std::optional<Slp>& prefix, const Slp& period, const Int& offset, const Formula& f);
// Finite word val(g).
Verdict check_slp(const Slp& g, const Formula& f);

// Bottom-up labelling over all valuations into the word's data values.
Verdict check_finite(const DataWord& w, const Formula& f);

// One-register engine.  Throws PreconditionError for more than one register.
Verdict check_tptl1(const PeriodicWord& w, const Formula& f);

// shrink(w, largest |c|) followed by check_periodic.  Throws
// PreconditionError if w is not quasi-monotonic.
Verdict check_quasi_monotonic_fast(const PeriodicWord& w, const Formula& f);

// Memo tables are usually the fastest route; exposed for the differential
// tests that compare against a table-free run.
Verdict check_periodic_unmemoized(const PeriodicWord& w, const Formula& f);

}  // namespace pathcheck
