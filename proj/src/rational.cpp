// Copyright 2026 The gamedec Authors. All rights reserved.
//
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

#include "gamedec/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "gamedec/errors.hpp"

namespace gamedec {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view full) {
  if (!is_integer_token(s)) {
    throw ParseError("not a rational literal: '" + std::string(full) + "'");
  }
  // mpz accepts a leading '-' but not a leading '+'.
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

Rat parse_fraction(std::string_view s, size_t slash) {
  mpz_class num = parse_integer(s.substr(0, slash), s);
  mpz_class den = parse_integer(s.substr(slash + 1), s);
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(s) + "'");
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// [+-]? digits [. digits]? ([eE] [+-]? digits)? with at least one mantissa
// digit somewhere.
Rat parse_decimal(std::string_view s) {
  size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = (s[i] == '-');
    ++i;
  }
  std::string digits;
  long frac_len = 0;
  bool seen_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits.push_back(s[i]);
    seen_digit = true;
    ++i;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits.push_back(s[i]);
      seen_digit = true;
      ++frac_len;
      ++i;
    }
  }
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      exp_neg = (s[i] == '-');
      ++i;
    }
    if (i >= s.size()) throw ParseError("bad exponent in '" + std::string(s) + "'");
    long value = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      value = value * 10 + (s[i] - '0');
      if (value > 100000) {
        throw ParseError("exponent out of range in '" + std::string(s) + "'");
      }
      ++i;
    }
    exponent = exp_neg ? -value : value;
  }
  if (!seen_digit || i != s.size()) {
    throw ParseError("not a rational literal: '" + std::string(s) + "'");
  }

  mpz_class mantissa = digits.empty() ? mpz_class(0) : mpz_class(digits, 10);
  if (negative) mantissa = -mantissa;
  long shift = exponent - frac_len;
  Rat q;
  if (shift >= 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    q = Rat(mantissa * scale);
  } else {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    q = Rat(mantissa, scale);
  }
  q.canonicalize();
  return q;
}

}  // namespace

Rat make_rat(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_from_string(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) {
    throw ParseError("empty rational literal");
  }
  std::string_view s = text.substr(begin, end - begin + 1);

  if (size_t slash = s.find('/'); slash != std::string_view::npos) {
    return parse_fraction(s, slash);
  }
  if (s.find('.') != std::string_view::npos ||
      s.find('e') != std::string_view::npos ||
      s.find('E') != std::string_view::npos) {
    return parse_decimal(s);
  }
  return Rat(parse_integer(s, s));
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string rat_vector_to_string(const std::vector<Rat>& values) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ",";
    out << rat_to_string(values[i]);
  }
  out << "]";
  return out.str();
}

}  // namespace gamedec
