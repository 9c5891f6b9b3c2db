// Copyright 2026 The plconvex Authors.
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

#include "plconvex/rational.hpp"

#include <cassert>
#include <cctype>
#include <string>

#include "plconvex/error.hpp"

namespace plconvex {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_number(std::string_view text, const char* what) {
  throw Error(Code::PARSE_ERROR,
              "invalid number '" + std::string(text) + "': " + what);
}

}  // namespace

RVec make_vec(std::initializer_list<long> coords) {
  RVec v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

RVec zero_vec(std::size_t n) { return RVec(n, Rational(0)); }

RVec operator+(const RVec& a, const RVec& b) {
  assert(a.size() == b.size());
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVec operator-(const RVec& a, const RVec& b) {
  assert(a.size() == b.size());
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RVec operator*(const Rational& s, const RVec& a) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Rational dot(const RVec& a, const RVec& b) {
  assert(a.size() == b.size());
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  return acc;
}

RVec cross(const RVec& a, const RVec& b) {
  assert(a.size() == 3 && b.size() == 3);
  return RVec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
              a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const RVec& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) bad_number(text, "expected p/q");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) bad_number(text, "zero denominator");
  Rational r(negative ? mpz_class(-p) : p, q);
  r.canonicalize();
  return r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) bad_number(text, "bad exponent");
    exponent = std::stol(std::string(exp));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      bad_number(text, "not a decimal");
    }
  }
  if (digits.empty()) bad_number(text, "no digits");
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational r = shift < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string format_vec(const RVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(v[i]);
  }
  return out + ")";
}

}  // namespace plconvex
