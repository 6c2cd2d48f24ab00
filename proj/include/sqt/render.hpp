#pragma once

#include "sqt/enumerate.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sqt {

struct RenderOptions {
    int pixels_per_unit = 100;  // >= 1
    bool show_grid = false;     // dashed extended-grid cut lines
    bool show_labels = false;   // x1..xn labels in canonical order
};

// Deterministic SVG. When every coordinate denominator factors over {2, 5}
// the coordinates are written as exact decimals; otherwise the viewBox is
// scaled by the lcm of the denominators so every emitted number is an exact
// integer. grid may be null; when given it must be built from t.
std::string to_svg(const Tiling& t, const ExtendedGrid* grid, const RenderOptions& opts);

// JSONL catalog, one record per line:
// {"n":..,"a":"p/q","k":..,"l":..,"D":"..","squares":[["x","y","side"],..]}
std::string write_catalog(const std::vector<CatalogRecord>& records);

// Parses and fully revalidates a catalog: every tiling passes validate_tiling
// and the record's n, k, l and D match the recomputed values. Malformed lines
// raise ParseError with the line number.
std::vector<CatalogRecord> read_catalog(std::istream& in);

}  // namespace sqt
