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

#ifndef BIASGRAPH_RATIONAL_H_
#define BIASGRAPH_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace biasgraph {

// Exact arbitrary-precision rational. Every cost, reward and bias used by the
// pure-equilibrium code is one of these.
using Rational = boost::multiprecision::mpq_rational;

// Parses "3", "-2.75", "1/3" or "1.5e2" exactly. Throws Error(kInvalidInput).
Rational ParseRational(std::string_view text);

// Canonical rendering: "a" for integers, otherwise "a/b" in lowest terms.
std::string FormatRational(const Rational& value);

double ToDouble(const Rational& value);

}  // namespace biasgraph

#endif  // BIASGRAPH_RATIONAL_H_
