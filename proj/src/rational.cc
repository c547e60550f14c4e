// Copyright 2026 The qegraph Authors
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

#include "qegraph/rational.h"

#include <cctype>
#include <stdexcept>
#include <string>

namespace qegraph {
namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

cpp_int parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    negative = digits[0] == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw std::invalid_argument("not a rational number: '" +
                                std::string(whole) + "'");
  }
  // A leading 0 would make the string constructor read octal.
  while (digits.size() > 1 && digits[0] == '0') digits.remove_prefix(1);
  cpp_int value{std::string(digits)};
  return negative ? cpp_int(-value) : value;
}

}  // namespace

std::string to_string(const Rational& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const cpp_int num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("bad denominator in '" + std::string(text) +
                                  "'");
    }
    const cpp_int den = parse_integer(den_text, text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                  "'");
    }
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.empty() || !all_digits(frac_part)) {
      throw std::invalid_argument("not a rational number: '" +
                                  std::string(text) + "'");
    }
    // "-0.5" becomes "-05" over 10.
    std::string joined(int_part);
    if (joined.empty() || joined == "-" || joined == "+") joined += "0";
    joined += frac_part;
    cpp_int scaled = parse_integer(joined, text);
    cpp_int den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    return Rational(scaled, den);
  }
  return Rational(parse_integer(text, text));
}

}  // namespace qegraph
