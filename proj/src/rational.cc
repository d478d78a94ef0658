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

#include <cctype>
#include <string>

#include "biasgraph/error.h"

namespace biasgraph {
namespace {

using boost::multiprecision::mpz_int;

[[noreturn]] void Reject(std::string_view text) {
  throw Error(ErrorCode::kInvalidInput,
              "not a rational number: '" + std::string(text) + "'");
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_int Pow10(long exponent) {
  mpz_int result = 1;
  for (long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

// Unsigned decimal with optional fraction and exponent, e.g. "12.50e-1".
Rational ParseDecimal(std::string_view text, std::string_view original) {
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    bool negative = false;
    if (!exp_part.empty() && (exp_part[0] == '+' || exp_part[0] == '-')) {
      negative = exp_part[0] == '-';
      exp_part.remove_prefix(1);
    }
    if (!AllDigits(exp_part) || exp_part.size() > 6) Reject(original);
    exponent = std::stol(std::string(exp_part));
    if (negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string_view whole = text;
  std::string_view fraction;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    fraction = text.substr(dot + 1);
  }
  if (whole.empty() && fraction.empty()) Reject(original);
  if (!whole.empty() && !AllDigits(whole)) Reject(original);
  if (!fraction.empty() && !AllDigits(fraction)) Reject(original);

  std::string digits = std::string(whole) + std::string(fraction);
  mpz_int numerator(digits.empty() ? std::string("0") : digits);
  exponent -= static_cast<long>(fraction.size());
  if (exponent >= 0) return Rational(numerator * Pow10(exponent));
  return Rational(numerator, Pow10(-exponent));
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) Reject(original);

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) Reject(original);
    mpz_int d{std::string(den)};
    if (d == 0) Reject(original);
    value = Rational(mpz_int{std::string(num)}, d);
  } else {
    value = ParseDecimal(text, original);
  }
  return negative ? Rational(-value) : value;
}

std::string FormatRational(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

}  // namespace biasgraph
