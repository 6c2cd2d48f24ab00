#include "sqt/incidence.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <set>

using namespace sqt;

namespace {

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

Tiling fig1() { return parse_tiling(test::read_file(test::data_path("fig1.tiling"))); }

Tiling two_in_row() { return parse_tiling("a 2/1\n0/1 0/1 1/1\n1/1 0/1 1/1\n"); }

Tiling unit() { return parse_tiling("a 1/1\n0/1 0/1 1/1\n"); }

}  // namespace

TEST_CASE("unit-square incidence matrix, smallest instance") {
    Tiling t = unit();
    IncidenceMatrix M = build_incidence_matrix(build_extended_grid(t));
    CHECK(M.m.rows() == 4);
    CHECK(M.cols() == 5);
    // rows: 1 = z1, a = y1, x1 = y1, x1 = z1 over columns (1, a, x1, y1, z1)
    long expect[4][5] = {{-1, 0, 0, 0, 1}, {0, -1, 0, 1, 0}, {0, 0, -1, 1, 0}, {0, 0, -1, 0, 1}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 5; ++c) CHECK(M.m.at(r, c) == expect[r][c]);

    RankReport rr = rank_and_kernel_dimension(M);
    CHECK(rr.rank == 4);
    CHECK(rr.nullity == 1);

    auto basis = select_row_basis(M);
    CHECK(basis == std::vector<int>{0, 1, 2, 3});  // n+1-k-l = 0 removals

    KernelSolution ks = cofactor_kernel(M, basis);
    CHECK(ks.u == std::vector<BigInt>{1, 1, 1, 1, 1});
    CHECK(ks.D == 1);
    CHECK(ks.kept_pairs == std::vector<int>{0});

    BoundsReport b = verify_denominator_bounds(ks, M);
    CHECK(b.bound_kl1 == 2);
    CHECK(b.bound_kl2 == 1);  // k+l = 2 needs no special casing
    CHECK(b.all());
}

TEST_CASE("two squares in a row") {
    Tiling t = two_in_row();
    ExtendedGrid g = build_extended_grid(t);
    IncidenceMatrix M = build_incidence_matrix(g);
    CHECK(M.m.rows() == 6);
    CHECK(M.cols() == 7);
    CHECK(g.spans == std::vector<SquareSpan>{{1, 1, 1, 1}, {2, 2, 1, 1}});

    auto basis = select_row_basis(M);
    // Full row rank: n+1-k-l = 0 rows removed, both pairs intact (k+l-1 = 2).
    CHECK(basis.size() == 6);
    KernelSolution ks = cofactor_kernel(M, basis);
    CHECK(ks.kept_pairs == std::vector<int>{0, 1});
    CHECK(ks.X == std::vector<Rational>{1, 2, 1, 1, 1, 1, 1});
    CHECK(ks.D == 1);
}

TEST_CASE("figure-1 kernel and bounds") {
    Tiling t = fig1();
    ExtendedGrid g = build_extended_grid(t);
    IncidenceMatrix M = build_incidence_matrix(g);
    CHECK(M.m.rows() == 18);
    CHECK(M.cols() == 18);

    CHECK(annihilates(M.m, geometric_vector(t, g)));

    RankReport rr = rank_and_kernel_dimension(M);
    CHECK(rr.rank == 17);
    CHECK(rr.nullity == 1);

    auto basis = select_row_basis(M);
    CHECK(basis.size() == 17);  // exactly one row removed
    KernelSolution ks = cofactor_kernel(M, basis);
    CHECK(ks.kept_pairs.size() == 7);  // k+l-1

    std::vector<Rational> expectX{1,          1,          frac(1, 5), frac(1, 5), frac(3, 5),
                                  frac(2, 5), frac(2, 5), frac(1, 5), frac(2, 5), frac(1, 5),
                                  frac(1, 5), frac(2, 5), frac(1, 5), frac(1, 5), frac(1, 5),
                                  frac(1, 5), frac(1, 5), frac(2, 5)};
    CHECK(ks.X == expectX);
    CHECK(ks.D == 5);

    BoundsReport b = verify_denominator_bounds(ks, M);
    CHECK(b.bound_kl1 == 128);
    CHECK(b.bound_kl2 == 64);
    CHECK(b.max_kept_dx == 3);  // D * x_3 = 5 * 3/5
    CHECK(b.d_times_a == 5);
    CHECK(b.all());
}

TEST_CASE("reference cofactor path agrees with elimination") {
    for (const auto& t : {unit(), two_in_row(), fig1()}) {
        IncidenceMatrix M = build_incidence_matrix(build_extended_grid(t));
        auto basis = select_row_basis(M);
        KernelSolution ks = cofactor_kernel(M, basis);
        CHECK(cofactor_kernel_reference(M, basis) == ks.u);
    }
}

TEST_CASE("consecutive ones holds by construction and fails on a gap") {
    IncidenceMatrix M = build_incidence_matrix(build_extended_grid(fig1()));
    CHECK(consecutive_ones_check(M));

    IncidenceMatrix bad;
    bad.n = 1;
    bad.k = 3;
    bad.l = 1;
    bad.m = IntMatrix(1, bad.cols());
    bad.m.at(0, bad.col_y(0)) = 1;
    bad.m.at(0, bad.col_y(2)) = 1;  // +1 at y1 and y3 only
    CHECK(!consecutive_ones_check(bad));
}

TEST_CASE("minor sampling stays unimodular and is seed-deterministic") {
    IncidenceMatrix M = build_incidence_matrix(build_extended_grid(fig1()));
    MinorSampleReport a = tu_minor_sample(M, 1000, 42);
    CHECK(a.all_unimodular);
    CHECK(a.max_abs_det <= 1);
    CHECK(a.max_size == 8);
    MinorSampleReport b = tu_minor_sample(M, 1000, 42);
    CHECK(a.max_abs_det == b.max_abs_det);
    CHECK(a.max_size == b.max_size);

    IncidenceMatrix Mu = build_incidence_matrix(build_extended_grid(unit()));
    CHECK(tu_minor_sample(Mu, 100, 1).all_unimodular);
}

TEST_CASE("degenerate span system: nullity one but no tiling") {
    // Two squares both assigned the full cell of a 1 x 1 grid.
    std::vector<SquareSpan> spans{{1, 1, 1, 1}, {1, 1, 1, 1}};
    IncidenceMatrix M = build_incidence_matrix(1, 1, spans);
    RankReport rr = rank_and_kernel_dimension(M);
    CHECK(rr.nullity == 1);
    CHECK(rr.rank == 5);
}

TEST_CASE("full analysis passes on small corpus") {
    for (const auto& t : {unit(), two_in_row(), fig1(),
                          parse_tiling("a 3/2\n0/1 0/1 1/1\n1/1 0/1 1/2\n1/1 1/2 1/2\n")}) {
        Analysis a = analyze_tiling(t, 200, 7);
        CHECK(a.all_pass);
        CHECK(a.kernel_matches_geometry);
        CHECK(a.pseudo_area);
    }
}

TEST_CASE("analysis report has the stable keys") {
    Analysis a = analyze_tiling(fig1(), 10, 42);
    std::string json = analysis_report_json(a);
    for (const char* key : {"\"n\"", "\"a\"", "\"k\"", "\"l\"", "\"rank\"", "\"nullity\"", "\"D\"",
                            "\"bound\"", "\"segment_bound\"", "\"line_origin\"", "\"bounds\"",
                            "\"consecutive_ones\"", "\"minor_sample\"", "\"all_pass\""})
        CHECK(json.find(key) != std::string::npos);
}

TEST_CASE("figure-1 report matches the golden file") {
    Analysis a = analyze_tiling(fig1());
    CHECK(analysis_report_json(a) == test::read_file(test::golden_path("fig1_report.json")));
}

TEST_CASE("order-9 perfect squared rectangle, 33x32") {
    Tiling t = parse_tiling(test::read_file(test::data_path("moron_32x33.tiling")));
    Analysis a = analyze_tiling(t, 500, 9);
    CHECK(a.matrix.n == 9);
    CHECK(a.tiling.a == frac(33, 32));
    CHECK(a.matrix.k == 5);
    CHECK(a.matrix.l == 5);
    CHECK(a.segment.k + a.segment.l == 10);  // k + l = n + 1, tight
    CHECK(a.rank.rank == 20);
    CHECK(a.kernel.D == 32);
    CHECK(a.all_pass);
    // All nine sides distinct.
    std::set<Rational> sides;
    for (const auto& s : t.squares) sides.insert(s.side);
    CHECK(sides.size() == 9);
}

TEST_CASE("order-21 simple perfect squared square, 112x112") {
    Tiling t = parse_tiling(test::read_file(test::data_path("duijvestijn_112.tiling")));
    Analysis a = analyze_tiling(t, 500, 21);
    CHECK(a.matrix.n == 21);
    CHECK(a.tiling.a == Rational(1));
    CHECK(a.matrix.k == 12);
    CHECK(a.matrix.l == 10);
    CHECK(a.segment.k + a.segment.l == 22);  // tight again
    CHECK(a.rank.rank == 44);
    CHECK(a.kernel.D == 112);
    CHECK(a.all_pass);
    std::set<Rational> sides;
    for (const auto& s : t.squares) sides.insert(s.side);
    CHECK(sides.size() == 21);
}
