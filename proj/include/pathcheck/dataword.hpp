#pragma once

#include "pathcheck/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace pathcheck {

// Sorted, duplicate-free proposition names.
class PropSet {
 public:
  PropSet() = default;
  PropSet(std::initializer_list<std::string> names);
  explicit PropSet(std::vector<std::string> names);

  bool contains(std::string_view p) const;
  bool empty() const noexcept { return names_.empty(); }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  auto begin() const noexcept { return names_.begin(); }
  auto end() const noexcept { return names_.end(); }

  PropSet with(const std::string& p) const;

  friend bool operator==(const PropSet&, const PropSet&) = default;

 private:
  std::vector<std::string> names_;
};

struct DataPoint {
  PropSet props;
  Int value;

  DataPoint() = default;
  DataPoint(PropSet p, Int v);

  friend bool operator==(const DataPoint&, const DataPoint&) = default;
};

class DataWord {
 public:
  DataWord() = default;
  DataWord(std::initializer_list<DataPoint> points) : points_(points) {}
  explicit DataWord(std::vector<DataPoint> points) : points_(std::move(points)) {}

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const DataPoint& operator[](std::size_t i) const { return points_[i]; }
  const DataPoint& at(std::size_t i) const;
  const std::vector<DataPoint>& points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  // Both throw PreconditionError on the empty word.
  const Int& min_value() const;
  const Int& max_value() const;

  friend bool operator==(const DataWord&, const DataWord&) = default;

 private:
  std::vector<DataPoint> points_;
};

// Pure word: all proposition sets empty.
DataWord pure_word(std::initializer_list<long long> values);

// w_{+k}.  Throws PreconditionError if some value would become negative.
DataWord shift(const DataWord& w, const Int& k);
DataWord concat(const DataWord& u, const DataWord& v);
DataWord reversed(const DataWord& w);

// u1 (u2)^omega_{+k}.
class PeriodicWord {
 public:
  PeriodicWord(DataWord prefix, DataWord period, Int offset);

  const DataWord& prefix() const noexcept { return prefix_; }
  const DataWord& period() const noexcept { return period_; }
  const Int& offset() const noexcept { return offset_; }

  // |u1| + |u2|: the folded positions are [0, span()).
  std::size_t span() const noexcept { return prefix_.size() + period_.size(); }

  DataPoint at(std::size_t i) const;
  Int value_at(std::size_t i) const;

  // First n points.
  DataWord expand(std::size_t n) const;

  friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;

 private:
  DataWord prefix_;
  DataWord period_;
  Int offset_;
};

// Length of a word where infinite words report nothing.
struct Length {
  bool infinite = false;
  std::size_t points = 0;
};
Length length(const DataWord& w);
Length length(const PeriodicWord& w);

// max(u1) <= max(u2) <= min(u2) + k, with max over an empty prefix read as 0.
bool is_quasi_monotonic(const PeriodicWord& w);

// Gap-clamped copy of a quasi-monotonic word: every difference between two
// values keeps its region relative to -C..C.  Throws PreconditionError if w
// is not quasi-monotonic.
PeriodicWord shrink(const PeriodicWord& w, const Int& C);

}  // namespace pathcheck
