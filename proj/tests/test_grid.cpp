#include "sqt/grid.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace sqt;

namespace {

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

Tiling fig1() { return parse_tiling(test::read_file(test::data_path("fig1.tiling"))); }

}  // namespace

TEST_CASE("figure-1 grid matches the hand construction") {
    ExtendedGrid g = build_extended_grid(fig1());
    CHECK(g.k() == 4);
    CHECK(g.l() == 4);
    CHECK(g.col_widths == std::vector<Rational>{frac(1, 5), frac(2, 5), frac(1, 5), frac(1, 5)});
    CHECK(g.row_heights == std::vector<Rational>{frac(1, 5), frac(1, 5), frac(1, 5), frac(2, 5)});
    CHECK(g.spans[2] == SquareSpan{1, 2, 3, 4});  // Y_3 = {y1,y2}, Z_3 = {z3,z4}
    CHECK(g.spans[0] == SquareSpan{1, 1, 1, 1});
    CHECK(g.spans[6] == SquareSpan{3, 4, 4, 4});
}

TEST_CASE("trivial grids") {
    ExtendedGrid unit = build_extended_grid(parse_tiling("a 1/1\n0/1 0/1 1/1\n"));
    CHECK(unit.k() == 1);
    CHECK(unit.l() == 1);
    CHECK(unit.spans[0] == SquareSpan{1, 1, 1, 1});

    ExtendedGrid row = build_extended_grid(parse_tiling("a 2/1\n0/1 0/1 1/1\n1/1 0/1 1/1\n"));
    CHECK(row.k() == 2);
    CHECK(row.l() == 1);
    CHECK(row.col_widths == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("segment bound") {
    Tiling t = fig1();
    SegmentBoundReport r = check_segment_bound(build_extended_grid(t), t.order());
    CHECK(r.k + r.l == 8);
    CHECK(r.holds);

    Tiling unit = parse_tiling("a 1/1\n0/1 0/1 1/1\n");
    SegmentBoundReport ru = check_segment_bound(build_extended_grid(unit), 1);
    CHECK(ru.k + ru.l == 2);  // tight: k + l == n + 1
    CHECK(ru.holds);
}

TEST_CASE("line origin mapping on the unit square") {
    Tiling unit = parse_tiling("a 1/1\n0/1 0/1 1/1\n");
    LineOriginReport r = line_origin_mapping(unit, build_extended_grid(unit));
    CHECK(r.bottom_left_square == 0);
    CHECK(r.bottom_left_lines == 2);
    CHECK(r.max_other_lines == 0);
    CHECK(r.holds);
}

TEST_CASE("line origin mapping on figure 1") {
    Tiling t = fig1();
    LineOriginReport r = line_origin_mapping(t, build_extended_grid(t));
    CHECK(r.bottom_left_square == 0);
    CHECK(r.bottom_left_lines == 2);
    CHECK(r.max_other_lines == 1);
    CHECK(r.holds);
    CHECK(r.vertical_origin == std::vector<int>{0, 3, 4, 7});
    CHECK(r.horizontal_origin == std::vector<int>{0, 1, 2, 6});
}

TEST_CASE("line origin mapping on two stacked squares") {
    Tiling t = parse_tiling("a 1/2\n0/1 0/1 1/2\n0/1 1/2 1/2\n");
    LineOriginReport r = line_origin_mapping(t, build_extended_grid(t));
    CHECK(r.bottom_left_lines == 2);
    CHECK(r.max_other_lines == 1);
    CHECK(r.vertical_origin == std::vector<int>{0});
    CHECK(r.horizontal_origin == std::vector<int>{0, 1});
    CHECK(r.holds);
}

TEST_CASE("four squares meeting at the center") {
    Tiling t = parse_tiling("a 1/1\n0/1 0/1 1/2\n0/1 1/2 1/2\n1/2 0/1 1/2\n1/2 1/2 1/2\n");
    ExtendedGrid g = build_extended_grid(t);
    CHECK(g.k() == 2);
    CHECK(g.l() == 2);
    CHECK(g.spans == std::vector<SquareSpan>{{1, 1, 1, 1}, {1, 1, 2, 2}, {2, 2, 1, 1}, {2, 2, 2, 2}});
    LineOriginReport r = line_origin_mapping(t, g);
    CHECK(r.bottom_left_lines == 2);
    CHECK(r.max_other_lines == 1);
    CHECK(r.holds);
}

TEST_CASE("grid dump golden for figure 1") {
    std::string dump = grid_dump(build_extended_grid(fig1()));
    CHECK(dump == test::read_file(test::golden_path("fig1_grid.txt")));
}
