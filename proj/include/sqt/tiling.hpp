#pragma once

#include "sqt/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqt {

// Axis-aligned square with bottom-left corner (x, y) inside an a x 1 rectangle.
struct SquarePlacement {
    Rational x, y, side;
    friend bool operator==(const SquarePlacement&, const SquarePlacement&) = default;
};

// A rectangle of width a and height 1 tiled by squares. Squares are kept in
// canonical order, sorted by (x, y). Construct through validate_tiling,
// parse_tiling or normalize_rectangle so the invariants hold.
struct Tiling {
    Rational a;
    std::vector<SquarePlacement> squares;

    int order() const { return static_cast<int>(squares.size()); }
    friend bool operator==(const Tiling&, const Tiling&) = default;
};

enum class ValidationFault {
    BadRectangle,  // a <= 0 or no squares
    BadSide,       // side <= 0
    Protrusion,    // square leaves the rectangle
    Overlap,       // two squares with intersecting interiors
    Gap,           // uncovered interval in some vertical slab
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationFault f, std::string message, int a = -1, int b = -1)
        : std::runtime_error(std::move(message)), fault(f), first(a), second(b) {}

    ValidationFault fault;
    // Witness squares (0-based, canonical order) where applicable.
    int first;
    int second;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}

    int line;
};

// Checks containment, the exact area identity and the slab partition, then
// returns the canonically ordered tiling. Input order is irrelevant.
Tiling validate_tiling(const Rational& a, std::vector<SquarePlacement> squares);

// Scales a width x height rectangle by 1/height so it becomes (width/height) x 1,
// then validates. No transposition happens even when width < height.
Tiling normalize_rectangle(const Rational& width, const Rational& height,
                           std::vector<SquarePlacement> squares);

// Tiling file format: first data line "a <num>/<den>", then one square per
// line as "<x> <y> <side>" fractions. '#' starts a comment, blank lines are
// ignored.
Tiling parse_tiling(std::string_view text);

// Canonical text form; parse_tiling(serialize_tiling(t)) == t bit-exactly.
std::string serialize_tiling(const Tiling& t);

// Reflects across the main diagonal and rescales so the height is 1 again.
// The result is a tiling of width 1/a.
Tiling transpose_tiling(const Tiling& t);

}  // namespace sqt
