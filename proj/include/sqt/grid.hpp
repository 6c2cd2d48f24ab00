#pragma once

#include "sqt/tiling.hpp"

#include <string>
#include <vector>

namespace sqt {

// Contiguous grid-index intervals of one square, 1-based inclusive, matching
// the y_1..y_k / z_1..z_l numbering of the grid columns and rows.
struct SquareSpan {
    int col_lo = 0, col_hi = 0;
    int row_lo = 0, row_hi = 0;
    friend bool operator==(const SquareSpan&, const SquareSpan&) = default;
};

// The refinement of the rectangle by all square boundary lines extended to
// the rectangle edges: k column widths, l row heights, and per-square spans.
struct ExtendedGrid {
    std::vector<Rational> col_widths;   // left to right, sums to a
    std::vector<Rational> row_heights;  // bottom to top, sums to 1
    std::vector<SquareSpan> spans;      // one per square, canonical order

    int k() const { return static_cast<int>(col_widths.size()); }
    int l() const { return static_cast<int>(row_heights.size()); }
};

// Total on valid tilings. The cut positions are exactly the square edges
// together with the rectangle border, which for square tilings coincides
// with extending every boundary segment.
ExtendedGrid build_extended_grid(const Tiling& t);

struct SegmentBoundReport {
    int k = 0, l = 0, n = 0;
    bool holds = false;  // k + l <= n + 1
};

SegmentBoundReport check_segment_bound(const ExtendedGrid& g, int n);

// Maps each of the k column left-boundary lines and l row bottom-boundary
// lines to its origin square: for a vertical line the square whose
// bottom-left corner is the lowest corner on the line, for a horizontal line
// the leftmost such square. On a valid tiling the rectangle's bottom-left
// square receives exactly two lines and every other square at most one.
struct LineOriginReport {
    std::vector<int> vertical_origin;    // size k, square index per column line
    std::vector<int> horizontal_origin;  // size l, square index per row line
    int bottom_left_square = -1;
    int bottom_left_lines = 0;
    int max_other_lines = 0;
    bool holds = false;
};

LineOriginReport line_origin_mapping(const Tiling& t, const ExtendedGrid& g);

// Stable text table of widths, heights and spans, for golden-file tests.
std::string grid_dump(const ExtendedGrid& g);

}  // namespace sqt
