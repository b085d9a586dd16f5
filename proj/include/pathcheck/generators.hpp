#pragma once

#include "pathcheck/bigint.hpp"
#include "pathcheck/dataword.hpp"
#include "pathcheck/formula.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pathcheck {

enum class GateKind { And, Or, Input };

// Synchronous alternating monotone circuit with fanin 2 and fanout 2.
// Levels and gates are 0-based here; the text format is 1-based.
struct Sam2Circuit {
  std::size_t gates = 0;
  std::size_t output = 0;       // gate of level 0
  std::vector<GateKind> kinds;  // one per level, the last is Input
  std::vector<bool> inputs;     // values of the last level
  // wires[i]: (gate in level i+1, gate in level i)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> wires;

  std::size_t levels() const noexcept { return kinds.size(); }
};

// Throws MalformedInstance.
void validate(const Sam2Circuit& c);

// circuit levels=3 gates=5 output=3
// level 1 and
// level 2 or
// level 3 input 0,1,1,0,0
// wire 2:1 -> 1:1
Sam2Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Sam2Circuit& c);

bool eval_circuit(const Sam2Circuit& c);

// Cycle-walk encoding shared by the finite and infinite circuit generators.
struct CircuitLayout {
  std::size_t m = 0;                // gates plus cycles per level pair
  std::size_t cycles = 0;           // largest cycle count over level pairs
  std::vector<Int> values;          // the pure word
  std::size_t output_position = 0;  // output gate inside the first block
  std::vector<std::size_t> accepting;  // 1-based positions of true inputs in the last block
};
CircuitLayout layout_circuit(const Sam2Circuit& c);

struct FiniteInstance {
  DataWord word;
  Formula formula;
};

struct PeriodicInstance {
  PeriodicWord word;
  Formula formula;
};

// Pure MTL(F,X) over a finite pure word; satisfied iff the output is 1.
FiniteInstance gen_circuit_mtl(const Sam2Circuit& c);
// The finite word followed by (p, 5ml) repeated with offset 0.
PeriodicInstance gen_circuit_mtl_infinite(const Sam2Circuit& c);
// Pure SMTL(F,X) over a strictly monotonic word.  With guard set, every jump
// also requires the target to lie in the second half of a block (its next
// value is not one higher); without it, jumps may land inside the first half.
FiniteInstance gen_circuit_smtl(const Sam2Circuit& c, bool guard = true);

// Quantified boolean formula over x1..xn; prefix[i] is 'A' or 'E' for x{i+1}.
struct QbfInstance {
  std::string prefix;
  Formula matrix;
};

// Throws MalformedInstance unless the matrix is boolean over x1..xn.
void validate(const QbfInstance& q);
// First line `qbf AE`, the rest is the matrix.
QbfInstance parse_qbf(std::string_view text);
bool eval_qbf(const QbfInstance& q);
// Word 0..2n+1 and a pure TPTL(F) formula.
FiniteInstance gen_qbf(const QbfInstance& q);

// Forall x1 in {1,a1} exists x2 in {1,a2} ... : sum = b.
struct PqssInstance {
  std::vector<Int> a;
  Int b;
};

void validate(const PqssInstance& p);
// pqss a=1,2,3,4 b=6
PqssInstance parse_pqss(std::string_view text);
bool eval_pqss(const PqssInstance& p);
// Word 0 (1)^omega_{+1} with a two-register TPTL(F) formula.
PeriodicInstance gen_pqss_tptl2(const PqssInstance& p);
// Binary FreezeLTL with two registers.
PeriodicInstance gen_pqss_freezeltl(const PqssInstance& p);

}  // namespace pathcheck
