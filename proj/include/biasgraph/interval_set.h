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

#ifndef BIASGRAPH_INTERVAL_SET_H_
#define BIASGRAPH_INTERVAL_SET_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biasgraph/rational.h"

namespace biasgraph {

// Closed interval [lo, hi]; hi == nullopt means unbounded above.
struct Interval {
  Rational lo;
  std::optional<Rational> hi;

  bool Contains(const Rational& x) const {
    return lo <= x && (!hi || x <= *hi);
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of disjoint closed intervals, kept sorted with touching pieces
// merged so that equal sets compare equal.
class IntervalSet {
 public:
  IntervalSet() = default;

  // [0, inf): the identity for Intersect on nonnegative rewards.
  static IntervalSet NonNegative();
  static IntervalSet FromIntervals(std::vector<Interval> intervals);

  std::span<const Interval> intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  size_t size() const { return intervals_.size(); }

  bool Contains(const Rational& x) const;
  std::optional<Rational> Min() const;

  // Pairwise intersection of the two families, linear in the total size.
  IntervalSet Intersect(const IntervalSet& other) const;
  IntervalSet Union(const IntervalSet& other) const;

  std::string DebugString() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

inline IntervalSet PairwiseIntersect(const IntervalSet& a, const IntervalSet& b) {
  return a.Intersect(b);
}

}  // namespace biasgraph

#endif  // BIASGRAPH_INTERVAL_SET_H_
