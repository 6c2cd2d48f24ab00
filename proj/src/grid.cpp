#include "sqt/grid.hpp"

#include "sqt/check.hpp"

#include <algorithm>

namespace sqt {

namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Index of value in the sorted cut list; the value is always present.
int cut_index(const std::vector<Rational>& cuts, const Rational& value) {
    auto it = std::lower_bound(cuts.begin(), cuts.end(), value);
    internal_check(it != cuts.end() && *it == value, "square edge missing from the cut set");
    return static_cast<int>(it - cuts.begin());
}

}  // namespace

ExtendedGrid build_extended_grid(const Tiling& t) {
    const int n = t.order();

    std::vector<Rational> xcuts{Rational(0), t.a};
    std::vector<Rational> ycuts{Rational(0), Rational(1)};
    for (const auto& s : t.squares) {
        xcuts.push_back(s.x);
        xcuts.push_back(s.x + s.side);
        ycuts.push_back(s.y);
        ycuts.push_back(s.y + s.side);
    }
    xcuts = sorted_unique(std::move(xcuts));
    ycuts = sorted_unique(std::move(ycuts));

    ExtendedGrid g;
    for (size_t i = 0; i + 1 < xcuts.size(); ++i) g.col_widths.push_back(xcuts[i + 1] - xcuts[i]);
    for (size_t i = 0; i + 1 < ycuts.size(); ++i) g.row_heights.push_back(ycuts[i + 1] - ycuts[i]);

    const int k = g.k(), l = g.l();
    internal_check(k <= n && l <= n, "more grid lines than squares");

    for (const auto& s : t.squares) {
        SquareSpan sp;
        sp.col_lo = cut_index(xcuts, s.x) + 1;
        sp.col_hi = cut_index(xcuts, s.x + s.side);
        sp.row_lo = cut_index(ycuts, s.y) + 1;
        sp.row_hi = cut_index(ycuts, s.y + s.side);
        g.spans.push_back(sp);
    }

    // Span sums reproduce the side lengths and grid totals reproduce the
    // rectangle; the spans partition the k x l cell grid; every internal
    // boundary is some square's edge.
    Rational wsum(0), hsum(0);
    for (const auto& w : g.col_widths) wsum += w;
    for (const auto& h : g.row_heights) hsum += h;
    internal_check(wsum == t.a && hsum == Rational(1), "grid totals do not match the rectangle");

    std::vector<int> cover(static_cast<size_t>(k) * l, 0);
    for (int i = 0; i < n; ++i) {
        const auto& sp = g.spans[i];
        Rational cw(0), rh(0);
        for (int c = sp.col_lo; c <= sp.col_hi; ++c) cw += g.col_widths[c - 1];
        for (int r = sp.row_lo; r <= sp.row_hi; ++r) rh += g.row_heights[r - 1];
        internal_check(cw == t.squares[i].side && rh == t.squares[i].side,
                       "span sums do not reproduce the square side");
        for (int c = sp.col_lo; c <= sp.col_hi; ++c)
            for (int r = sp.row_lo; r <= sp.row_hi; ++r) cover[(r - 1) * static_cast<size_t>(k) + (c - 1)] += 1;
    }
    for (int v : cover) internal_check(v == 1, "spans do not partition the cell grid");

    for (int b = 1; b <= k - 1; ++b) {
        bool used = false;
        for (const auto& sp : g.spans) used = used || sp.col_lo == b + 1 || sp.col_hi == b;
        internal_check(used, "internal column boundary without a square edge");
    }
    for (int b = 1; b <= l - 1; ++b) {
        bool used = false;
        for (const auto& sp : g.spans) used = used || sp.row_lo == b + 1 || sp.row_hi == b;
        internal_check(used, "internal row boundary without a square edge");
    }

    return g;
}

SegmentBoundReport check_segment_bound(const ExtendedGrid& g, int n) {
    SegmentBoundReport r;
    r.k = g.k();
    r.l = g.l();
    r.n = n;
    r.holds = r.k + r.l <= n + 1;
    return r;
}

LineOriginReport line_origin_mapping(const Tiling& t, const ExtendedGrid& g) {
    const int n = t.order();
    const int k = g.k(), l = g.l();

    // Reconstruct the cut positions from the widths and heights.
    std::vector<Rational> xcuts{Rational(0)}, ycuts{Rational(0)};
    for (const auto& w : g.col_widths) xcuts.push_back(xcuts.back() + w);
    for (const auto& h : g.row_heights) ycuts.push_back(ycuts.back() + h);

    LineOriginReport rep;
    std::vector<int> lines(n, 0);

    for (int j = 0; j < k; ++j) {
        int best = -1;
        for (int i = 0; i < n; ++i) {
            if (t.squares[i].x != xcuts[j]) continue;
            if (best < 0 || t.squares[i].y < t.squares[best].y) best = i;
        }
        internal_check(best >= 0, "vertical grid line without a square corner on it");
        rep.vertical_origin.push_back(best);
        lines[best] += 1;
    }
    for (int m = 0; m < l; ++m) {
        int best = -1;
        for (int i = 0; i < n; ++i) {
            if (t.squares[i].y != ycuts[m]) continue;
            if (best < 0 || t.squares[i].x < t.squares[best].x) best = i;
        }
        internal_check(best >= 0, "horizontal grid line without a square corner on it");
        rep.horizontal_origin.push_back(best);
        lines[best] += 1;
    }

    for (int i = 0; i < n; ++i)
        if (t.squares[i].x.is_zero() && t.squares[i].y.is_zero()) rep.bottom_left_square = i;
    internal_check(rep.bottom_left_square >= 0, "no square at the rectangle's bottom-left corner");

    rep.bottom_left_lines = lines[rep.bottom_left_square];
    rep.max_other_lines = 0;
    for (int i = 0; i < n; ++i)
        if (i != rep.bottom_left_square) rep.max_other_lines = std::max(rep.max_other_lines, lines[i]);
    rep.holds = rep.bottom_left_lines == 2 && rep.max_other_lines <= 1;
    return rep;
}

std::string grid_dump(const ExtendedGrid& g) {
    std::string out;
    out += "k " + std::to_string(g.k()) + "\n";
    out += "l " + std::to_string(g.l()) + "\n";
    out += "y";
    for (const auto& w : g.col_widths) out += " " + w.str();
    out += "\nz";
    for (const auto& h : g.row_heights) out += " " + h.str();
    out += "\n";
    for (size_t i = 0; i < g.spans.size(); ++i) {
        const auto& sp = g.spans[i];
        out += "span " + std::to_string(i + 1) + " cols " + std::to_string(sp.col_lo) + ".." +
               std::to_string(sp.col_hi) + " rows " + std::to_string(sp.row_lo) + ".." +
               std::to_string(sp.row_hi) + "\n";
    }
    return out;
}

}  // namespace sqt
