#include "pathcheck/dataword.hpp"

#include "pathcheck/errors.hpp"

#include <algorithm>

namespace pathcheck {

PropSet::PropSet(std::initializer_list<std::string> names) : PropSet(std::vector<std::string>(names)) {}

PropSet::PropSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (const auto& n : names_)
    if (n.empty()) throw PreconditionError("empty proposition name");
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

bool PropSet::contains(std::string_view p) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), p,
                             [](const std::string& a, std::string_view b) { return a < b; });
  return it != names_.end() && *it == p;
}

PropSet PropSet::with(const std::string& p) const {
  auto names = names_;
  names.push_back(p);
  return PropSet(std::move(names));
}

DataPoint::DataPoint(PropSet p, Int v) : props(std::move(p)), value(std::move(v)) {
  if (value < 0) throw PreconditionError("negative data value " + value.str());
}

const DataPoint& DataWord::at(std::size_t i) const {
  if (i >= points_.size()) throw PreconditionError("position " + std::to_string(i) + " out of range");
  return points_[i];
}

const Int& DataWord::min_value() const {
  if (points_.empty()) throw PreconditionError("min of empty word");
  return std::min_element(points_.begin(), points_.end(),
                          [](const DataPoint& a, const DataPoint& b) { return a.value < b.value; })
      ->value;
}

const Int& DataWord::max_value() const {
  if (points_.empty()) throw PreconditionError("max of empty word");
  return std::max_element(points_.begin(), points_.end(),
                          [](const DataPoint& a, const DataPoint& b) { return a.value < b.value; })
      ->value;
}

DataWord pure_word(std::initializer_list<long long> values) {
  std::vector<DataPoint> pts;
  for (long long v : values) pts.emplace_back(PropSet{}, Int(v));
  return DataWord(std::move(pts));
}

DataWord shift(const DataWord& w, const Int& k) {
  std::vector<DataPoint> pts;
  pts.reserve(w.size());
  for (const auto& p : w) {
    Int v = p.value + k;
    if (v < 0) throw PreconditionError("shift by " + k.str() + " makes a data value negative");
    pts.emplace_back(p.props, std::move(v));
  }
  return DataWord(std::move(pts));
}

DataWord concat(const DataWord& u, const DataWord& v) {
  std::vector<DataPoint> pts(u.begin(), u.end());
  pts.insert(pts.end(), v.begin(), v.end());
  return DataWord(std::move(pts));
}

DataWord reversed(const DataWord& w) {
  std::vector<DataPoint> pts(w.begin(), w.end());
  std::reverse(pts.begin(), pts.end());
  return DataWord(std::move(pts));
}

PeriodicWord::PeriodicWord(DataWord prefix, DataWord period, Int offset)
    : prefix_(std::move(prefix)), period_(std::move(period)), offset_(std::move(offset)) {
  if (period_.empty()) throw PreconditionError("period of a periodic word must be nonempty");
  if (offset_ < 0) throw PreconditionError("offset of a periodic word must be nonnegative");
}

DataPoint PeriodicWord::at(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  std::size_t r = i - prefix_.size();
  const DataPoint& p = period_[r % period_.size()];
  return DataPoint(p.props, p.value + offset_ * (r / period_.size()));
}

Int PeriodicWord::value_at(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i].value;
  std::size_t r = i - prefix_.size();
  return period_[r % period_.size()].value + offset_ * (r / period_.size());
}

DataWord PeriodicWord::expand(std::size_t n) const {
  std::vector<DataPoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back(at(i));
  return DataWord(std::move(pts));
}

Length length(const DataWord& w) { return {false, w.size()}; }
Length length(const PeriodicWord&) { return {true, 0}; }

bool is_quasi_monotonic(const PeriodicWord& w) {
  Int max1 = w.prefix().empty() ? Int(0) : w.prefix().max_value();
  const Int& max2 = w.period().max_value();
  const Int& min2 = w.period().min_value();
  return max1 <= max2 && max2 <= min2 + w.offset();
}

PeriodicWord shrink(const PeriodicWord& w, const Int& C) {
  if (C < 0) throw PreconditionError("shrink needs C >= 0");
  if (!is_quasi_monotonic(w)) throw PreconditionError("word is not quasi-monotonic");

  std::vector<Int> values;
  for (const auto& p : w.prefix()) values.push_back(p.value);
  for (const auto& p : w.period()) values.push_back(p.value);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<Int> image(values.size());
  image[0] = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    Int gap = values[i] - values[i - 1];
    image[i] = image[i - 1] + (gap > C ? Int(C + 1) : gap);
  }
  auto map = [&](const DataWord& u) {
    std::vector<DataPoint> pts;
    for (const auto& p : u) {
      auto it = std::lower_bound(values.begin(), values.end(), p.value);
      pts.emplace_back(p.props, image[static_cast<std::size_t>(it - values.begin())]);
    }
    return DataWord(std::move(pts));
  };
  DataWord v1 = map(w.prefix());
  DataWord v2 = map(w.period());
  Int delta = w.period().min_value() + w.offset() - w.period().max_value();
  Int l = v2.max_value() - v2.min_value() + std::min(delta, Int(C + 1));
  return PeriodicWord(std::move(v1), std::move(v2), std::move(l));
}

}  // namespace pathcheck
