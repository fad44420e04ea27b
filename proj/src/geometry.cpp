// SPDX-License-Identifier: Apache-2.0
//
// ris-dps: optimal configuration of reconfigurable intelligent surfaces
// with arbitrary discrete phase shifts
// Copyright (C) 2026 The ris-dps authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risdps/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace risdps
{

double wrap_2pi(double angle)
{
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    // fmod of a tiny negative number plus 2pi can round up to exactly 2pi
    if (r >= kTwoPi)
        r = 0.0;
    return r;
}

double arg_mod_2pi(const ComplexVec &v)
{
    if (v.re == 0.0 && v.im == 0.0)
        throw std::domain_error("argument of zero vector undefined");
    return wrap_2pi(std::atan2(v.im, v.re));
}

double angle_between_args(double a, double b)
{
    const double d = std::fabs(wrap_2pi(a) - wrap_2pi(b));
    return std::min(d, kTwoPi - d);
}

double angle_between(const ComplexVec &a, const ComplexVec &b)
{
    return angle_between_args(arg_mod_2pi(a), arg_mod_2pi(b));
}

ComplexVec unit_from_arg(double theta)
{
    const double t = wrap_2pi(theta);
    return {std::cos(t), std::sin(t)};
}

ComplexVec rotate(const ComplexVec &v, double angle)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {v.re * c - v.im * s, v.re * s + v.im * c};
}

double ccw_distance(double from, double to)
{
    return wrap_2pi(to - from);
}

} // namespace risdps
