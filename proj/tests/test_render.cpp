#include "sqt/render.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <sstream>

using namespace sqt;

namespace {

Tiling fig1() { return parse_tiling(test::read_file(test::data_path("fig1.tiling"))); }

}  // namespace

TEST_CASE("unit square renders with decimal coordinates") {
    Tiling t = parse_tiling("a 1/1\n0/1 0/1 1/1\n");
    ExtendedGrid g = build_extended_grid(t);
    RenderOptions opts;
    std::string svg = to_svg(t, &g, opts);
    CHECK(svg.find("viewBox=\"0 0 100 100\"") != std::string::npos);
    CHECK(svg.find("<rect x=\"0\" y=\"0\" width=\"100\" height=\"100\"") != std::string::npos);
    CHECK(svg == to_svg(t, &g, opts));
}

TEST_CASE("non-decimal denominators get an integer viewBox") {
    Tiling t = parse_tiling("a 1/3\n0/1 0/1 1/3\n0/1 1/3 1/3\n0/1 2/3 1/3\n");
    RenderOptions opts;
    std::string svg = to_svg(t, nullptr, opts);
    // scale = 2 * lcm(3) * 100 = 600, so the viewBox is 200 x 600.
    CHECK(svg.find("viewBox=\"0 0 200 600\"") != std::string::npos);
    bool hasDecimalPoint = svg.find("=\"0.") != std::string::npos;
    CHECK(!hasDecimalPoint);
}

TEST_CASE("figure-1 SVG matches the golden file") {
    Tiling t = fig1();
    ExtendedGrid g = build_extended_grid(t);
    RenderOptions opts;
    opts.show_grid = true;
    opts.show_labels = true;
    CHECK(to_svg(t, &g, opts) == test::read_file(test::golden_path("fig1.svg")));
}

TEST_CASE("order-3 catalog matches the golden file and round-trips") {
    auto records = enumerate_tilings(3);
    std::string text = write_catalog(records);
    CHECK(text == test::read_file(test::golden_path("n3_catalog.jsonl")));

    std::istringstream in(text);
    auto parsed = read_catalog(in);
    CHECK(write_catalog(parsed) == text);
}

TEST_CASE("catalog round-trips for the first orders") {
    for (int n = 1; n <= 3; ++n) {
        std::string text = write_catalog(enumerate_tilings(n));
        std::istringstream in(text);
        CHECK(write_catalog(read_catalog(in)) == text);
    }
}

TEST_CASE("catalog reading reports bad lines") {
    auto expectLine = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_catalog(in);
            CHECK(false);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    std::string good = write_catalog(enumerate_tilings(1));

    expectLine("not json\n", 1);
    expectLine(good + "{\"n\":1}\n", 2);
    expectLine(good + R"({"n":1,"a":"1/0","k":1,"l":1,"D":"1","squares":[["0/1","0/1","1/1"]]})" "\n", 2);
    expectLine(good + R"({"n":2,"a":"1/1","k":1,"l":1,"D":"1","squares":[["0/1","0/1","1/1"]]})" "\n", 2);
    expectLine(good + R"({"n":1,"a":"1/1","k":1,"l":1,"D":"7","squares":[["0/1","0/1","1/1"]]})" "\n", 2);

    // Validation failures surface as such.
    std::istringstream bad(R"({"n":1,"a":"1/1","k":1,"l":1,"D":"1","squares":[["0/1","0/1","1/2"]]})" "\n");
    CHECK_THROWS_AS(read_catalog(bad), ValidationError);
}
