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

#include "risdps/optimizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace risdps
{

const char *to_string(LineKind kind)
{
    switch (kind)
    {
    case LineKind::kBisector:
        return "bisector";
    case LineKind::kCollapsed:
        return "collapsed";
    case LineKind::kOffEntry:
        return "off_entry";
    case LineKind::kOffExit:
        return "off_exit";
    }
    return "unknown";
}

LineMatrix::LineMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), lines_(rows * cols), row_args_(rows, 0.0)
{
}

LineKind gap_kind(const PhaseShiftSet &set, std::size_t i)
{
    const double g = set.gap(i);
    if (g < kPi - kAngleEps)
        return LineKind::kBisector;
    if (g > kPi + kAngleEps)
        return LineKind::kOffEntry;
    return LineKind::kCollapsed;
}

std::size_t lines_per_element(const PhaseShiftSet &set)
{
    std::size_t l = 0;
    for (std::size_t i = 1; i <= set.size(); ++i)
        l += gap_kind(set, i) == LineKind::kOffEntry ? 2 : 1;
    return l;
}

namespace
{

// Per-column template shared by every element: offset from the element
// argument (already reduced into [0, 2pi)) plus the transition it encodes.
struct ColumnTemplate
{
    double offset;
    ElementChoice starting;
    ElementChoice ending;
    LineKind kind;
    std::size_t gap_index;
};

std::vector<ColumnTemplate> column_templates(const PhaseShiftSet &set)
{
    std::vector<ColumnTemplate> cols;
    const std::size_t k = set.size();
    for (std::size_t i = 1; i <= k; ++i)
    {
        const std::size_t j = set.next_index(i);
        const double lo = set.phase(i);
        const double hi = lo + set.gap(i); // phase j, unwrapped past 2pi for the last gap
        const auto on_i = ElementChoice::on(i);
        const auto on_j = ElementChoice::on(j);
        switch (gap_kind(set, i))
        {
        case LineKind::kBisector:
            cols.push_back({wrap_2pi(0.5 * (lo + hi)), on_i, on_j, LineKind::kBisector, i});
            break;
        case LineKind::kCollapsed:
            cols.push_back({wrap_2pi(lo + kHalfPi), on_i, on_j, LineKind::kCollapsed, i});
            break;
        case LineKind::kOffEntry:
        case LineKind::kOffExit:
            cols.push_back({wrap_2pi(lo + kHalfPi), on_i, ElementChoice::off(), LineKind::kOffEntry, i});
            cols.push_back({wrap_2pi(hi - kHalfPi), ElementChoice::off(), on_j, LineKind::kOffExit, i});
            break;
        }
    }
    return cols;
}

} // namespace

LineMatrix separation_lines(const ChannelRealization &real, const PhaseShiftSet &set)
{
    if (real.size() == 0)
        throw std::invalid_argument("separation lines need at least one element");
    const auto cols = column_templates(set);
    LineMatrix m(real.size(), cols.size());
    for (std::size_t n = 0; n < real.size(); ++n)
    {
        const double a = arg_mod_2pi(real.element(n));
        m.set_row_argument(n, a);
        for (std::size_t c = 0; c < cols.size(); ++c)
        {
            const auto &t = cols[c];
            // both terms lie in [0, 2pi): the reduction is a single exact
            // subtraction, keeping each column monotone in the element argument
            m.at(n, c) = {wrap_2pi(a + t.offset), n, c, t.starting, t.ending, t.kind, t.gap_index};
        }
    }
    return m;
}

std::vector<SeparationLine> sort_separation_lines(const LineMatrix &matrix, SortStats *stats)
{
    const std::size_t rows = matrix.rows();
    const std::size_t cols = matrix.cols();
    for (std::size_t r = 1; r < rows; ++r)
        if (matrix.row_argument(r) < matrix.row_argument(r - 1))
            throw std::invalid_argument("rows must be ordered by element argument");

    // Rotate each column at its single break point.
    std::vector<std::vector<const SeparationLine *>> sorted_cols(cols);
    for (std::size_t c = 0; c < cols; ++c)
    {
        auto &col = sorted_cols[c];
        col.reserve(rows);
        std::size_t start = 0;
        for (std::size_t r = 0; r + 1 < rows; ++r)
        {
            if (matrix.at(r, c).argument > matrix.at(r + 1, c).argument)
            {
                start = r + 1;
                break;
            }
        }
        for (std::size_t i = 0; i < rows; ++i)
            col.push_back(&matrix.at((start + i) % rows, c));
    }

    // L-way merge through a binary min-heap of column cursors.
    struct Cursor
    {
        std::size_t col;
        std::size_t pos;
    };
    std::uint64_t comparisons = 0;
    auto key = [&](const Cursor &cur) {
        const SeparationLine *l = sorted_cols[cur.col][cur.pos];
        return std::tie(l->argument, l->element, l->column);
    };
    // std heap algorithms build a max-heap, so "less" means "later".
    auto later = [&](const Cursor &a, const Cursor &b) {
        ++comparisons;
        return key(b) < key(a);
    };

    std::vector<Cursor> heap;
    heap.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c)
    {
        if (rows == 0)
            break;
        heap.push_back({c, 0});
        std::push_heap(heap.begin(), heap.end(), later);
    }

    std::vector<SeparationLine> out;
    out.reserve(rows * cols);
    while (!heap.empty())
    {
        std::pop_heap(heap.begin(), heap.end(), later);
        Cursor cur = heap.back();
        heap.pop_back();
        out.push_back(*sorted_cols[cur.col][cur.pos]);
        if (++cur.pos < rows)
        {
            heap.push_back(cur);
            std::push_heap(heap.begin(), heap.end(), later);
        }
    }

    if (stats)
        stats->heap_comparisons += comparisons;
    return out;
}

} // namespace risdps
