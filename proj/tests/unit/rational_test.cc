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

#include "biasgraph/rational.h"

#include "biasgraph/error.h"
#include "gtest/gtest.h"

namespace biasgraph {
namespace {

TEST(RationalTest, ParsesIntegersDecimalsFractionsAndExponents) {
  EXPECT_EQ(ParseRational("3"), 3);
  EXPECT_EQ(ParseRational("+3"), 3);
  EXPECT_EQ(ParseRational("-2.75"), Rational(-11, 4));
  EXPECT_EQ(ParseRational("0.1"), Rational(1, 10));
  EXPECT_EQ(ParseRational("1/3"), Rational(1, 3));
  EXPECT_EQ(ParseRational("6/4"), Rational(3, 2));
  EXPECT_EQ(ParseRational("-1/3"), Rational(-1, 3));
  EXPECT_EQ(ParseRational("1.5e2"), 150);
  EXPECT_EQ(ParseRational("2e-1"), Rational(1, 5));
  EXPECT_EQ(ParseRational(" 7 "), 7);
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1/", "/2", "--1", "1e"}) {
    try {
      ParseRational(bad);
      ADD_FAILURE() << "accepted \"" << bad << "\"";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidInput) << bad;
    }
  }
}

TEST(RationalTest, FormatsCanonically) {
  EXPECT_EQ(FormatRational(Rational(3)), "3");
  EXPECT_EQ(FormatRational(Rational(0)), "0");
  EXPECT_EQ(FormatRational(Rational(2, 6)), "1/3");
  EXPECT_EQ(FormatRational(Rational(-11, 4)), "-11/4");
  EXPECT_EQ(ParseRational(FormatRational(Rational(243, 32))), Rational(243, 32));
}

TEST(RationalTest, ConvertsToDouble) {
  EXPECT_DOUBLE_EQ(ToDouble(Rational(81, 16)), 5.0625);
  EXPECT_DOUBLE_EQ(ToDouble(Rational(-1, 4)), -0.25);
}

}  // namespace
}  // namespace biasgraph
