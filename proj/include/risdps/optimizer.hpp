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

#ifndef RISDPS_OPTIMIZER_HPP_
#define RISDPS_OPTIMIZER_HPP_

#include "risdps/channel.hpp"
#include "risdps/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace risdps
{

/*!
# Separation lines

As the assumed direction of the optimal overall channel rotates
counterclockwise, the best choice of a single element changes only at a
finite set of directions, its separation lines. Between two consecutive
candidate vectors F_i and F_{i+1} of an element:

- gap < pi: one line on the bisector; the choice switches ON(i) -> ON(i+1).
- gap > pi: two lines, a quarter turn past F_i (ON(i) -> OFF) and a quarter
  turn before F_{i+1} (OFF -> ON(i+1)).
- gap == pi (within kAngleEps): one line; the OFF sector has zero width.

At most one gap of a phase set exceeds pi, so every element owns the same
number L of lines, L = K or K + 1.
!*/

enum class LineKind
{
    kBisector,  // gap < pi
    kCollapsed, // gap == pi
    kOffEntry,  // gap > pi, first line: ON(i) -> OFF
    kOffExit,   // gap > pi, second line: OFF -> ON(i+1)
};

const char *to_string(LineKind kind);

struct SeparationLine
{
    double argument = 0.0; // [0, 2pi)
    std::size_t element = 0;
    std::size_t column = 0;
    ElementChoice starting;
    ElementChoice ending;
    LineKind kind = LineKind::kBisector;

    /// 1-based index of the phase pair (i, i+1) this line separates.
    std::size_t gap_index = 1;
};

/// N x L row-major matrix of separation lines; row n belongs to element n.
class LineMatrix
{
public:
    LineMatrix() = default;
    LineMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    SeparationLine &at(std::size_t r, std::size_t c) { return lines_[r * cols_ + c]; }
    const SeparationLine &at(std::size_t r, std::size_t c) const { return lines_[r * cols_ + c]; }
    std::span<const SeparationLine> row(std::size_t r) const { return {lines_.data() + r * cols_, cols_}; }
    const std::vector<SeparationLine> &flat() const { return lines_; }

    /// Argument of the element owning row r.
    double row_argument(std::size_t r) const { return row_args_.at(r); }
    void set_row_argument(std::size_t r, double a) { row_args_.at(r) = a; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SeparationLine> lines_;
    std::vector<double> row_args_;
};

/// Number of separation lines each element owns under `set`.
std::size_t lines_per_element(const PhaseShiftSet &set);

/// Classification of the gap following phase i (1-based).
LineKind gap_kind(const PhaseShiftSet &set, std::size_t i);

/// Separation lines of every element, one row per element, columns in
/// counterclockwise order starting at the gap after phase 1.
/// Throws std::invalid_argument when the realization has no elements.
LineMatrix separation_lines(const ChannelRealization &real, const PhaseShiftSet &set);

struct SortStats
{
    std::uint64_t heap_comparisons = 0;
};

/**
 * Sorts all N*L line arguments ascending.
 *
 * Rows must be ordered by element argument (non-decreasing; ties allowed).
 * Under that ordering each column is a sorted sequence rotated at a single
 * break point, so it is sorted in O(N) by locating the break; the L sorted
 * columns are then merged through a min-heap. Equal arguments come out in
 * (element, column) order.
 *
 * Throws std::invalid_argument when the rows are not ordered by argument.
 */
std::vector<SeparationLine> sort_separation_lines(const LineMatrix &matrix, SortStats *stats = nullptr);

/**
 * Best choice of every element when the optimal overall channel is assumed
 * to point along `theta`.
 *
 * Each element takes the candidate vector with the smallest angle to
 * `theta` (lowest phase index on ties) if that angle is below pi/2, and is
 * switched off if it is above pi/2. Inside the +-kAngleEps band around pi/2
 * the element stays on.
 */
Configuration config_given_direction(const ChannelRealization &real, const PhaseShiftSet &set, double theta);

/// Choice of a single element for direction `theta` (see config_given_direction).
ElementChoice choose_for_direction(const ComplexVec &v_n, const PhaseShiftSet &set, double theta);

/// h after crossing `line`: h_prev - g(starting) + g(ending).
ComplexVec update_h(const ComplexVec &h_prev, const SeparationLine &line, const ChannelRealization &real,
                    const PhaseShiftSet &set);

struct SweepResult
{
    Configuration config;
    ComplexVec h_star;
    /// Winning sector in sweep order; empty for solvers without sectors.
    std::optional<std::size_t> sector_index;
    /// Per-sector |h| when requested; NaN marks zero-width sectors.
    std::vector<double> candidates;

    double amplitude() const { return h_star.amplitude(); }
};

struct SweepOptions
{
    /// Recompute h from scratch every ceil(N/4) crossings and throw
    /// std::logic_error if the incremental value drifted by more than 1e-9
    /// relative to |h_d| + sum |v_n|.
    bool verify = false;
    bool record_candidates = false;
};

struct SweepStats
{
    /// Additions spent on the candidate chain: N for the first sector plus
    /// two per crossed line.
    std::uint64_t vector_additions = 0;
    std::uint64_t heap_comparisons = 0;
    std::size_t lines = 0;
    std::size_t candidates = 0;
    ComplexVec initial_h;
    /// Incremental h after crossing every line, back in the first sector.
    ComplexVec final_h;
};

/**
 * Optimal configuration by a counterclockwise sweep over all sectors.
 *
 * Elements are ordered by argument, their separation lines are built and
 * sorted, the configuration of the sector that wraps through angle 0 is
 * formed directly (N additions), and every further sector's h follows from
 * the previous one with one subtraction and one addition. The sector with
 * the largest |h| wins; ties go to the lowest sector index. Sector 0 is the
 * wrap sector, sector j >= 1 is the one entered by crossing the j-th sorted
 * line.
 */
SweepResult sweep_optimize(const ChannelRealization &real, const PhaseShiftSet &set,
                           const SweepOptions &options = {}, SweepStats *stats = nullptr);

inline constexpr std::uint64_t kDefaultExhaustiveCap = std::uint64_t{1} << 24;

/// (K+1)^N, saturating at UINT64_MAX.
std::uint64_t exhaustive_space_size(std::size_t k, std::size_t n);

/// Brute force over {OFF, ON(1..K)}^N. Ties go to the lexicographically
/// smallest configuration (OFF < ON(1) < ... < ON(K), element 0 most
/// significant). Throws std::length_error when (K+1)^N exceeds `cap`.
SweepResult exhaustive_optimize(const ChannelRealization &real, const PhaseShiftSet &set,
                                std::uint64_t cap = kDefaultExhaustiveCap);

enum class CppMode
{
    kOffEnabled,
    kAlwaysOn,
};

/// Closest point projection: every element aligned as closely as possible
/// with the direct path. Throws std::domain_error when h_d is zero.
SweepResult cpp_optimize(const ChannelRealization &real, const PhaseShiftSet &set,
                         CppMode mode = CppMode::kOffEnabled);

/// |h_d| + sum |v_n|, the value reached with continuous phases.
double continuous_upper_bound(const ChannelRealization &real);

} // namespace risdps

#endif // RISDPS_OPTIMIZER_HPP_
