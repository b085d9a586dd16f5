#include "compiled.hpp"

#include "pathcheck/errors.hpp"
#include "pathcheck/transforms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pathcheck::detail {

namespace {

using K = Formula::Kind;

class Builder {
 public:
  Builder(std::vector<CNode>& nodes, std::vector<std::string>& regs) : nodes_(nodes), regs_(regs) {}

  std::uint32_t add(const Formula& f) {
    if (auto it = seen_.find(f.identity()); it != seen_.end()) return it->second;
    CNode n{f.kind(), {}, -1, Rel::Eq, {}, 0, 0, {}};
    switch (f.kind()) {
      case K::True: break;
      case K::Prop: n.prop = f.name(); break;
      case K::Constraint:
        n.reg = reg(f.name());
        n.rel = f.rel();
        n.c = f.constant();
        n.free = {n.reg};
        break;
      case K::Not:
        n.a = add(f.lhs());
        n.free = nodes_[n.a].free;
        break;
      case K::Freeze: {
        n.reg = reg(f.name());
        n.a = add(f.lhs());
        n.free = nodes_[n.a].free;
        n.free.erase(std::remove(n.free.begin(), n.free.end(), n.reg), n.free.end());
        break;
      }
      case K::And:
      case K::Or:
      case K::Until:
      case K::Release: {
        n.a = add(f.lhs());
        n.b = add(f.rhs());
        const auto& fa = nodes_[n.a].free;
        const auto& fb = nodes_[n.b].free;
        std::set_union(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(n.free));
        break;
      }
      case K::UntilIn: throw PreconditionError("engines need a desugared formula");
    }
    std::ostringstream key;
    key << static_cast<int>(n.kind) << '|' << n.prop << '|' << n.reg << '|' << static_cast<int>(n.rel) << '|'
        << n.c << '|' << n.a << '|' << n.b;
    auto [it, inserted] = by_key_.emplace(key.str(), static_cast<std::uint32_t>(nodes_.size()));
    if (inserted) nodes_.push_back(std::move(n));
    seen_.emplace(f.identity(), it->second);
    return it->second;
  }

 private:
  std::vector<CNode>& nodes_;
  std::vector<std::string>& regs_;
  std::map<std::string, std::uint32_t> by_key_;
  std::map<const void*, std::uint32_t> seen_;

  int reg(const std::string& name) {
    auto it = std::find(regs_.begin(), regs_.end(), name);
    if (it != regs_.end()) return static_cast<int>(it - regs_.begin());
    regs_.push_back(name);
    return static_cast<int>(regs_.size() - 1);
  }
};

}  // namespace

Compiled::Compiled(const Formula& f) {
  Builder b(nodes_, registers_);
  root_ = b.add(f);
  c_ = pathcheck::c_phi(f);
}

int Compiled::register_index(const std::string& name) const {
  auto it = std::find(registers_.begin(), registers_.end(), name);
  return it == registers_.end() ? -1 : static_cast<int>(it - registers_.begin());
}

}  // namespace pathcheck::detail
