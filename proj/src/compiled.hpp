#pragma once

// Flat, hash-consed form of a desugared formula shared by the engines.

#include "pathcheck/bigint.hpp"
#include "pathcheck/formula.hpp"

#include <boost/functional/hash.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace pathcheck::detail {

struct CNode {
  Formula::Kind kind;
  std::string prop;
  int reg = -1;
  Rel rel = Rel::Eq;
  Int c;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::vector<int> free;  // sorted register indices occurring free
};

class Compiled {
 public:
  // f must be desugared.
  explicit Compiled(const Formula& f);

  const std::vector<CNode>& nodes() const noexcept { return nodes_; }
  const CNode& node(std::uint32_t i) const { return nodes_[i]; }
  std::uint32_t root() const noexcept { return root_; }
  const std::vector<std::string>& registers() const noexcept { return registers_; }
  int register_index(const std::string& name) const;  // -1 if absent
  const Int& c_phi() const noexcept { return c_; }

 private:
  std::vector<CNode> nodes_;
  std::vector<std::string> registers_;
  std::uint32_t root_ = 0;
  Int c_ = 0;
};

// Memo key: node, position, and register values restricted to the node's
// free registers.
struct MemoKey {
  std::uint32_t node;
  Int pos;
  std::vector<Int> regs;

  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    std::size_t h = k.node;
    boost::hash_combine(h, hash_value(k.pos));
    for (const auto& v : k.regs) boost::hash_combine(h, hash_value(v));
    return h;
  }
};

inline MemoKey make_key(const CNode& n, std::uint32_t id, const Int& pos, const std::vector<Int>& regs) {
  MemoKey k{id, pos, {}};
  k.regs.reserve(n.free.size());
  for (int r : n.free) k.regs.push_back(regs[static_cast<std::size_t>(r)]);
  return k;
}

}  // namespace pathcheck::detail
