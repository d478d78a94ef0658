// Copyright 2026 The biasgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "biasgraph/interval_set.h"

#include <algorithm>
#include <utility>

namespace biasgraph {
namespace {

bool HiLess(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

}  // namespace

IntervalSet IntervalSet::NonNegative() {
  IntervalSet set;
  set.intervals_.push_back(Interval{Rational(0), std::nullopt});
  return set;
}

IntervalSet IntervalSet::FromIntervals(std::vector<Interval> intervals) {
  std::erase_if(intervals, [](const Interval& i) { return i.hi && *i.hi < i.lo; });
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet set;
  for (Interval& next : intervals) {
    if (!set.intervals_.empty()) {
      Interval& last = set.intervals_.back();
      // Closed intervals that touch or overlap merge.
      if (!last.hi || next.lo <= *last.hi) {
        if (HiLess(last.hi, next.hi)) last.hi = next.hi;
        continue;
      }
    }
    set.intervals_.push_back(std::move(next));
  }
  return set;
}

bool IntervalSet::Contains(const Rational& x) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& i) { return i.Contains(x); });
}

std::optional<Rational> IntervalSet::Min() const {
  if (intervals_.empty()) return std::nullopt;
  return intervals_.front().lo;
}

IntervalSet IntervalSet::Intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  size_t i = 0, j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const Interval& a = intervals_[i];
    const Interval& b = other.intervals_[j];
    Interval cut{std::max(a.lo, b.lo), HiLess(a.hi, b.hi) ? a.hi : b.hi};
    if (!cut.hi || cut.lo <= *cut.hi) out.push_back(std::move(cut));
    // Advance whichever interval ends first.
    if (HiLess(a.hi, b.hi)) {
      ++i;
    } else {
      ++j;
    }
  }
  return FromIntervals(std::move(out));
}

IntervalSet IntervalSet::Union(const IntervalSet& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return FromIntervals(std::move(all));
}

std::string IntervalSet::DebugString() const {
  if (intervals_.empty()) return "{}";
  std::string out = "{";
  for (size_t i = 0; i < intervals_.size(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + FormatRational(intervals_[i].lo) + ", " +
           (intervals_[i].hi ? FormatRational(*intervals_[i].hi) : "inf") + "]";
  }
  return out + "}";
}

}  // namespace biasgraph
