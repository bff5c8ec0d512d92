// Copyright 2026 The torusflow Authors
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

#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "torusflow/rational.hpp"

namespace torusflow {

// Working precision for declared-irrational basis values and angle reduction:
// 50 decimal digits, comfortably past the 30 the basis contract requires.
using Real50 = boost::multiprecision::cpp_bin_float_50;

inline const Real50& pi50() {
  static const Real50 v = boost::math::constants::pi<Real50>();
  return v;
}

inline const Real50& two_pi50() {
  static const Real50 v = 2 * boost::math::constants::pi<Real50>();
  return v;
}

inline Real50 to_real50(const Rational& q) {
  return Real50(numerator(q)) / Real50(denominator(q));
}

// 2*pi rounded to the nearest double.
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Reduces x into [0, 2*pi) at Real50 precision and narrows to double,
/// clamping so the double also stays inside [0, kTwoPi).
inline double reduce_angle(const Real50& x) {
  Real50 t = fmod(x, two_pi50());
  if (t < 0) t += two_pi50();
  double d = t.convert_to<double>();
  if (d >= kTwoPi) d -= kTwoPi;
  if (d < 0) d = 0.0;
  return d;
}

inline double reduce_angle(double x) { return reduce_angle(Real50(x)); }

}  // namespace torusflow
