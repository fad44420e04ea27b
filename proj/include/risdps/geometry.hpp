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

#ifndef RISDPS_GEOMETRY_HPP_
#define RISDPS_GEOMETRY_HPP_

#include <cmath>
#include <complex>
#include <numbers>

namespace risdps
{

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

/// Absolute band used wherever two angles are compared for "<", "=" or ">".
inline constexpr double kAngleEps = 1e-9;

/**
 * A point in the complex plane.
 *
 * Every channel quantity in this library (direct path, concatenated element
 * coefficient, candidate contribution, overall channel) is carried as a
 * ComplexVec. Arithmetic is plain vector arithmetic; the type is a literal
 * value type and all operations are side-effect free.
 */
struct ComplexVec
{
    double re = 0.0;
    double im = 0.0;

    constexpr ComplexVec() = default;
    constexpr ComplexVec(double re_, double im_) : re(re_), im(im_) {}
    explicit ComplexVec(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_complex() const { return {re, im}; }

    double amplitude() const { return std::hypot(re, im); }
    constexpr double norm() const { return re * re + im * im; }

    constexpr ComplexVec &operator+=(const ComplexVec &o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    constexpr ComplexVec &operator-=(const ComplexVec &o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend constexpr ComplexVec operator+(ComplexVec a, const ComplexVec &b) { return a += b; }
    friend constexpr ComplexVec operator-(ComplexVec a, const ComplexVec &b) { return a -= b; }
    friend constexpr ComplexVec operator-(const ComplexVec &a) { return {-a.re, -a.im}; }
    friend constexpr ComplexVec operator*(double s, const ComplexVec &a) { return {s * a.re, s * a.im}; }
    friend constexpr bool operator==(const ComplexVec &, const ComplexVec &) = default;
};

/// Reduces an angle into [0, 2pi). An exact multiple of 2pi maps to 0.
double wrap_2pi(double angle);

/// Counterclockwise angle of `v` from the positive real axis, in [0, 2pi).
/// Throws std::domain_error for the zero vector.
double arg_mod_2pi(const ComplexVec &v);

/// Smaller of the two angles between directions `a` and `b` (radians), in [0, pi].
double angle_between_args(double a, double b);

/// Smaller of the two angles between vectors `a` and `b`, in [0, pi].
/// Throws std::domain_error if either vector is zero.
double angle_between(const ComplexVec &a, const ComplexVec &b);

/// Unit vector with argument `theta`.
ComplexVec unit_from_arg(double theta);

/// `v` rotated counterclockwise by `angle`; amplitude is preserved.
ComplexVec rotate(const ComplexVec &v, double angle);

/// Counterclockwise distance from direction `from` to direction `to`, in [0, 2pi).
double ccw_distance(double from, double to);

} // namespace risdps

#endif // RISDPS_GEOMETRY_HPP_
