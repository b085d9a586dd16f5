#pragma once

#include "pathcheck/bigint.hpp"
#include "pathcheck/checker.hpp"
#include "pathcheck/dataword.hpp"
#include "pathcheck/formula.hpp"
#include "pathcheck/word_io.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace pathcheck {

enum class Encoding { Unary, Binary };

struct OcmEdge {
  std::size_t from;
  bool zero = false;  // zero test; otherwise add(delta)
  Int delta;
  std::size_t to;
};

// One-counter machine.  States are numbered in order of first mention.
class Ocm {
 public:
  explicit Ocm(Encoding enc = Encoding::Binary) : encoding_(enc) {}

  std::size_t add_state(const std::string& name);  // existing index if known
  void set_initial(const std::string& name);
  void add_zero(const std::string& from, const std::string& to);
  void add_add(const std::string& from, const Int& delta, const std::string& to);

  Encoding encoding() const noexcept { return encoding_; }
  std::size_t initial() const noexcept { return initial_; }
  std::size_t state_count() const noexcept { return names_.size(); }
  const std::string& state_name(std::size_t q) const { return names_.at(q); }
  const std::vector<OcmEdge>& edges() const noexcept { return edges_; }
  // Edge indices leaving q.
  const std::vector<std::size_t>& out(std::size_t q) const { return out_.at(q); }

 private:
  Encoding encoding_;
  std::size_t initial_ = 0;
  std::vector<std::string> names_;
  std::vector<OcmEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

// Text format: header `ocm unary` or `ocm binary`, a line `init q0`, and edge
// lines `q0 zero q1` or `q0 add(-3) q2`.  '#' starts a comment.
Ocm parse_ocm(std::string_view text);
std::string format_ocm(const Ocm& m);

struct Config {
  std::size_t state;
  Int counter;

  friend bool operator==(const Config&, const Config&) = default;
};

// Successors of (q, c).  Precondition: c >= 0.
std::vector<Config> step(const Ocm& m, std::size_t q, const Int& c);

// Every configuration reachable from (q0, 0) has at most one successor.
bool is_deterministic(const Ocm& m);

// The unique run as a data word; each point carries the proposition {state}.
// Throws NondeterministicMachine.
std::variant<DataWord, PeriodicWord> comp_unary(const Ocm& m);
SlpWord comp_binary(const Ocm& m);

// First n configurations by direct simulation (fewer if the run halts).
DataWord simulate(const Ocm& m, std::size_t n);

// Extracts the run (unary or binary route by the machine's encoding) and
// checks it.  Propositions in f may name states.
Verdict model_check(const Ocm& m, const Formula& f);

}  // namespace pathcheck
