#include "pathcheck/checker.hpp"

#include "pathcheck/errors.hpp"
#include "pathcheck/transforms.hpp"

namespace pathcheck {

Verdict check_quasi_monotonic_fast(const PeriodicWord& w, const Formula& f) {
  if (!is_quasi_monotonic(w)) throw PreconditionError("word is not quasi-monotonic");
  // Negative constants compare differences from below, so the clamp has to
  // cover the largest |c|, not only the largest c.
  Formula g = desugar(f);
  Verdict v = check_periodic(shrink(w, abs_constant_bound(g)), g);
  v.engine = "quasimono";
  return v;
}

}  // namespace pathcheck
