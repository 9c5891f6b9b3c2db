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

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plconvex {

/// Arbitrary-precision rational, always kept in canonical form (reduced,
/// positive denominator). Every geometric decision in the library is taken
/// on values of this type.
using Rational = mpq_class;

/// Coordinate vector of rationals; its length is the ambient dimension of
/// the context it lives in (n for surface points, 3 after projection).
using RVec = std::vector<Rational>;

inline int sign(const Rational& x) { return sgn(x); }

RVec make_vec(std::initializer_list<long> coords);
RVec zero_vec(std::size_t n);

RVec operator+(const RVec& a, const RVec& b);
RVec operator-(const RVec& a, const RVec& b);
RVec operator*(const Rational& s, const RVec& a);
Rational dot(const RVec& a, const RVec& b);
RVec cross(const RVec& a, const RVec& b);
bool is_zero(const RVec& a);

/// Parses "p/q", "p" or "-p/q" (decimal digits only, q != 0). Throws
/// Error(PARSE_ERROR) otherwise.
Rational parse_rational(std::string_view text);

/// Exact conversion of a decimal literal such as "-1.25e-3" to a rational.
Rational parse_decimal(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string format_rational(const Rational& x);

std::string format_vec(const RVec& v);

}  // namespace plconvex
