#pragma once

#include "pathcheck/bigint.hpp"
#include "pathcheck/formula.hpp"

#include <cstddef>
#include <set>
#include <string>

namespace pathcheck {

// Replaces every interval-annotated Until by a freeze over one fresh register:
// a U_I b  becomes  z.(a U (z in I & b)).  Unannotated (I = Z) needs no register.
Formula desugar(const Formula& f);

// Negations pushed onto true and propositions.  Requires a desugared formula.
Formula nnf(const Formula& f);

bool is_desugared(const Formula& f);

// Largest constraint constant, floored at 0.
Int c_phi(const Formula& f);
// Largest absolute value of a constraint constant.
Int abs_constant_bound(const Formula& f);

std::set<std::string> registers(const Formula& f);
std::set<std::string> free_registers(const Formula& f);
std::size_t register_count(const Formula& f);
// Every constraint reads x = 0.
bool is_freeze_ltl(const Formula& f);
// Every register occurrence lies below a freeze of that register.
bool is_closed(const Formula& f);

// Atoms 0, negation unchanged, binary boolean max, Until/Release max + 1.
// Throws PreconditionError on constraints, freezes or annotated Until.
std::size_t until_rank(const Formula& f);

// Number of syntax-tree nodes.
std::size_t formula_size(const Formula& f);
// Nesting depth of temporal operators.
std::size_t temporal_depth(const Formula& f);
// Nesting depth of all operators (atoms have depth 0).
std::size_t formula_depth(const Formula& f);

}  // namespace pathcheck
