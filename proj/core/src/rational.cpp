// Copyright 2026 The actionconv Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "actionconv/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace actionconv {

Weight ExactRational(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("ExactRational: non-finite value");
  }
  if (x == 0.0) return Weight(0);
  int exponent = 0;
  const double fraction = std::frexp(x, &exponent);
  // fraction * 2^53 is an integer for every finite double.
  const auto mantissa = static_cast<std::int64_t>(std::ldexp(fraction, 53));
  exponent -= 53;
  if (exponent >= 0) {
    return Weight(BigInt(mantissa) << exponent);
  }
  return Weight(BigInt(mantissa), BigInt(1) << (-exponent));
}

double ToDouble(const Weight& w) {
  BigInt num = boost::multiprecision::numerator(w);
  const BigInt den = boost::multiprecision::denominator(w);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;

  // Scale so that the integer quotient q lies in [2^63, 2^64).
  long shift = 63 - (static_cast<long>(boost::multiprecision::msb(num)) -
                     static_cast<long>(boost::multiprecision::msb(den)));
  BigInt q, r;
  for (;;) {
    const BigInt scaled_num = shift >= 0 ? BigInt(num << shift) : BigInt(num);
    const BigInt scaled_den = shift >= 0 ? den : BigInt(den << (-shift));
    boost::multiprecision::divide_qr(scaled_num, scaled_den, q, r);
    const auto top = boost::multiprecision::msb(q);
    if (top == 63) break;
    shift += (top < 63) ? 1 : -1;
  }
  auto bits = q.convert_to<std::uint64_t>();
  const bool sticky = r != 0;

  // Keep 53 significant bits, round to nearest even on the dropped 11.
  std::uint64_t mantissa = bits >> 11;
  const std::uint64_t dropped = bits & 0x7FF;
  const std::uint64_t half = 0x400;
  if (dropped > half || (dropped == half && (sticky || (mantissa & 1U)))) {
    ++mantissa;
  }
  double value = std::ldexp(static_cast<double>(mantissa),
                            11 - static_cast<int>(shift));
  return negative ? -value : value;
}

std::string FormatWeight(const Weight& w) {
  const BigInt num = boost::multiprecision::numerator(w);
  const BigInt den = boost::multiprecision::denominator(w);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt ParseInteger(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("ParseWeight: malformed '" +
                                std::string(whole) + "'");
  }
  std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
  if (start == digits.size()) {
    throw std::invalid_argument("ParseWeight: malformed '" +
                                std::string(whole) + "'");
  }
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '9') {
      throw std::invalid_argument("ParseWeight: malformed '" +
                                  std::string(whole) + "'");
    }
  }
  BigInt value(std::string(digits.substr(start)));
  return digits[0] == '-' ? BigInt(-value) : value;
}

}  // namespace

Weight ParseWeight(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = ParseInteger(text.substr(0, slash), text);
    const BigInt den = ParseInteger(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("ParseWeight: zero denominator");
    return Weight(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    const bool negative = !int_part.empty() && int_part[0] == '-';
    const BigInt whole =
        (int_part.empty() || int_part == "-" || int_part == "+")
            ? BigInt(0)
            : ParseInteger(int_part, text);
    BigInt frac = frac_part.empty() ? BigInt(0) : ParseInteger(frac_part, text);
    if (!frac_part.empty() && (frac_part[0] == '-' || frac_part[0] == '+')) {
      throw std::invalid_argument("ParseWeight: malformed '" +
                                  std::string(text) + "'");
    }
    BigInt scale = boost::multiprecision::pow(BigInt(10),
                                              static_cast<unsigned>(frac_part.size()));
    Weight magnitude = Weight(boost::multiprecision::abs(whole)) +
                       Weight(frac, scale);
    return negative ? Weight(-magnitude) : magnitude;
  }
  return Weight(ParseInteger(text, text));
}

double ExactWeightedSum(std::span<const double> values,
                        std::span<const Weight> weights) {
  if (values.size() != weights.size()) {
    throw std::invalid_argument("ExactWeightedSum: length mismatch");
  }
  Weight total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0.0 || weights[i] == 0) continue;
    total += ExactRational(values[i]) * weights[i];
  }
  return ToDouble(total);
}

}  // namespace actionconv
