#include "sqt/tiling.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace sqt;

namespace {

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

Tiling fig1() { return parse_tiling(test::read_file(test::data_path("fig1.tiling"))); }

}  // namespace

TEST_CASE("figure-1 file parses to the order-8 tiling") {
    Tiling t = fig1();
    CHECK(t.order() == 8);
    CHECK(t.a == Rational(1));
    std::vector<Rational> sides;
    for (const auto& s : t.squares) sides.push_back(s.side);
    std::vector<Rational> expect{frac(1, 5), frac(1, 5), frac(3, 5), frac(2, 5),
                                 frac(2, 5), frac(1, 5), frac(2, 5), frac(1, 5)};
    CHECK(sides == expect);
}

TEST_CASE("trivial tilings parse") {
    Tiling unit = parse_tiling("a 1/1\n0/1 0/1 1/1\n");
    CHECK(unit.order() == 1);
    Tiling row = parse_tiling("a 2/1\n0/1 0/1 1/1\n1/1 0/1 1/1\n");
    CHECK(row.order() == 2);
    CHECK(row.a == Rational(2));
}

TEST_CASE("input order is irrelevant, output is canonical") {
    std::string shuffled = "a 1/1\n3/5 3/5 2/5\n0/1 0/1 1/5\n4/5 2/5 1/5\n0/1 2/5 3/5\n"
                           "3/5 0/1 2/5\n0/1 1/5 1/5\n1/5 0/1 2/5\n3/5 2/5 1/5\n";
    CHECK(parse_tiling(shuffled) == fig1());
}

TEST_CASE("serialize then parse is the identity") {
    for (const auto& t : {fig1(), parse_tiling("a 1/1\n0/1 0/1 1/1\n")}) {
        std::string text = serialize_tiling(t);
        CHECK(parse_tiling(text) == t);
        CHECK(serialize_tiling(parse_tiling(text)) == text);
    }
}

TEST_CASE("validation faults carry witnesses") {
    SUBCASE("duplicate placement overlaps") {
        std::vector<SquarePlacement> sq{{Rational(0), Rational(0), Rational(1)},
                                        {Rational(0), Rational(0), Rational(1)}};
        CHECK_THROWS_WITH_AS(validate_tiling(Rational(2), sq), doctest::Contains("overlap"),
                             ValidationError);
        try {
            validate_tiling(Rational(2), sq);
        } catch (const ValidationError& e) {
            CHECK(e.fault == ValidationFault::Overlap);
        }
    }
    SUBCASE("area deficit is a gap") {
        std::vector<SquarePlacement> sq{{Rational(0), Rational(0), frac(1, 2)}};
        try {
            validate_tiling(Rational(1), sq);
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(e.fault == ValidationFault::Gap);
        }
    }
    SUBCASE("square leaving the rectangle protrudes") {
        std::vector<SquarePlacement> sq{{frac(1, 2), Rational(0), Rational(1)}};
        try {
            validate_tiling(Rational(1), sq);
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(e.fault == ValidationFault::Protrusion);
        }
    }
    SUBCASE("non-positive side") {
        std::vector<SquarePlacement> sq{{Rational(0), Rational(0), Rational(0)}};
        try {
            validate_tiling(Rational(1), sq);
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(e.fault == ValidationFault::BadSide);
        }
    }
    SUBCASE("bad rectangle") {
        CHECK_THROWS_AS(validate_tiling(Rational(0), {{Rational(0), Rational(0), Rational(1)}}),
                        ValidationError);
        CHECK_THROWS_AS(validate_tiling(Rational(1), {}), ValidationError);
    }
}

TEST_CASE("parse errors report line numbers") {
    try {
        parse_tiling("# c\nb 1/1\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    try {
        parse_tiling("a 1/1\n0/1 0/1\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    try {
        parse_tiling("a 1/1\n0/1 0/1 1/0\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_tiling("# only comments\n"), ParseError);
}

TEST_CASE("normalize_rectangle applies the homothety") {
    std::vector<SquarePlacement> fig1Int{
        {Rational(0), Rational(0), Rational(1)}, {Rational(0), Rational(1), Rational(1)},
        {Rational(0), Rational(2), Rational(3)}, {Rational(1), Rational(0), Rational(2)},
        {Rational(3), Rational(0), Rational(2)}, {Rational(3), Rational(2), Rational(1)},
        {Rational(3), Rational(3), Rational(2)}, {Rational(4), Rational(2), Rational(1)}};
    CHECK(normalize_rectangle(Rational(5), Rational(5), fig1Int) == fig1());

    Tiling strip = normalize_rectangle(Rational(3), Rational(2),
                                       {{Rational(0), Rational(0), Rational(2)},
                                        {Rational(2), Rational(0), Rational(1)},
                                        {Rational(2), Rational(1), Rational(1)}});
    CHECK(strip.a == frac(3, 2));

    Tiling unit = parse_tiling("a 1/1\n0/1 0/1 1/1\n");
    CHECK(normalize_rectangle(Rational(1), Rational(1), unit.squares) == unit);
}

TEST_CASE("transpose flips and renormalizes") {
    Tiling row = parse_tiling("a 2/1\n0/1 0/1 1/1\n1/1 0/1 1/1\n");
    Tiling col = transpose_tiling(row);
    CHECK(col.a == frac(1, 2));
    CHECK(col.order() == 2);
    CHECK(transpose_tiling(col) == row);
    CHECK(transpose_tiling(transpose_tiling(fig1())) == fig1());
}

TEST_CASE("validate_tiling agrees with the pairwise + cell-center oracle") {
    auto verdict = [](const Rational& a, const std::vector<SquarePlacement>& sq) {
        try {
            validate_tiling(a, sq);
            return true;
        } catch (const ValidationError&) {
            return false;
        }
    };

    int validSeen = 0, invalidSeen = 0;
    std::mt19937_64 rng(11);
    for (int W = 1; W <= 3; ++W) {
        for (int H = 1; H <= 3; ++H) {
            for (const auto& tl : oracle::integer_tilings(W, H)) {
                Tiling t = oracle::to_tiling(W, H, tl);
                CHECK(oracle::valid_tiling(t.a, t.squares));
                CHECK(verdict(t.a, t.squares));
                ++validSeen;

                // Mutations should fail in both implementations.
                auto mutate = t.squares;
                switch (rng() % 3) {
                    case 0:
                        if (mutate.size() > 1) mutate.pop_back();
                        break;
                    case 1:
                        mutate.push_back(mutate.front());
                        break;
                    default:
                        mutate.front().x += Rational(BigInt(1), BigInt(7));
                        break;
                }
                if (mutate != t.squares) {
                    bool lib = verdict(t.a, mutate);
                    bool orc = oracle::valid_tiling(t.a, mutate);
                    CHECK(lib == orc);
                    if (!lib) ++invalidSeen;
                }
            }
        }
    }
    CHECK(validSeen >= 15);
    CHECK(invalidSeen >= 15);
}

TEST_CASE("random placements: validator and oracle always agree") {
    std::mt19937_64 rng(2024);
    auto rnd = [&](long den) { return Rational(BigInt(static_cast<long>(rng() % (2 * den + 1))), BigInt(den)); };
    const Rational widths[] = {frac(1, 2), Rational(1), frac(3, 2), Rational(2)};

    for (int rep = 0; rep < 2000; ++rep) {
        const Rational a = widths[rng() % 4];
        const int n = 1 + static_cast<int>(rng() % 4);
        const long den = 1 + static_cast<long>(rng() % 4);
        std::vector<SquarePlacement> sq;
        for (int i = 0; i < n; ++i) sq.push_back({rnd(den), rnd(den), rnd(den) + frac(1, den)});

        bool lib;
        try {
            validate_tiling(a, sq);
            lib = true;
        } catch (const ValidationError&) {
            lib = false;
        }
        CHECK(lib == oracle::valid_tiling(a, sq));
    }
}
