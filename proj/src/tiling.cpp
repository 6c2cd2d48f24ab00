#include "sqt/tiling.hpp"

#include "sqt/check.hpp"

#include <algorithm>

namespace sqt {

namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

}  // namespace

Tiling validate_tiling(const Rational& a, std::vector<SquarePlacement> squares) {
    if (!a.is_positive())
        throw ValidationError(ValidationFault::BadRectangle,
                              "rectangle width must be positive, got " + a.str());
    if (squares.empty())
        throw ValidationError(ValidationFault::BadRectangle, "tiling needs at least one square");

    std::sort(squares.begin(), squares.end(), [](const SquarePlacement& p, const SquarePlacement& q) {
        if (p.x != q.x) return p.x < q.x;
        return p.y < q.y;
    });

    const Rational one(1);
    for (size_t i = 0; i < squares.size(); ++i) {
        const auto& s = squares[i];
        if (!s.side.is_positive())
            throw ValidationError(ValidationFault::BadSide,
                                  "square " + std::to_string(i + 1) + " has non-positive side " + s.side.str(),
                                  static_cast<int>(i));
        if (s.x.is_negative() || s.y.is_negative() || s.x + s.side > a || s.y + s.side > one)
            throw ValidationError(ValidationFault::Protrusion,
                                  "square " + std::to_string(i + 1) + " leaves the rectangle",
                                  static_cast<int>(i));
    }

    // Vertical slab sweep. The cut set contains every square edge, so a
    // square meeting the open slab (lo, hi) spans it entirely; inside one
    // slab the y-intervals must partition [0, 1] exactly.
    std::vector<Rational> cuts{Rational(0), a};
    for (const auto& s : squares) {
        cuts.push_back(s.x);
        cuts.push_back(s.x + s.side);
    }
    cuts = sorted_unique(std::move(cuts));

    struct Entry {
        Rational lo, hi;
        int idx;
    };
    for (size_t c = 0; c + 1 < cuts.size(); ++c) {
        const Rational& lo = cuts[c];
        const Rational& hi = cuts[c + 1];
        std::vector<Entry> stack;
        for (size_t i = 0; i < squares.size(); ++i) {
            const auto& s = squares[i];
            if (s.x <= lo && s.x + s.side >= hi)
                stack.push_back({s.y, s.y + s.side, static_cast<int>(i)});
        }
        std::sort(stack.begin(), stack.end(), [](const Entry& p, const Entry& q) { return p.lo < q.lo; });
        Rational cur(0);
        int owner = -1;
        for (const auto& e : stack) {
            if (e.lo < cur)
                throw ValidationError(ValidationFault::Overlap,
                                      "squares " + std::to_string(owner + 1) + " and " +
                                          std::to_string(e.idx + 1) + " overlap in slab (" + lo.str() +
                                          ", " + hi.str() + ")",
                                      owner, e.idx);
            if (e.lo > cur)
                throw ValidationError(ValidationFault::Gap,
                                      "slab (" + lo.str() + ", " + hi.str() + ") uncovered between y=" +
                                          cur.str() + " and y=" + e.lo.str());
            cur = e.hi;
            owner = e.idx;
        }
        if (cur != one)
            throw ValidationError(ValidationFault::Gap,
                                  "slab (" + lo.str() + ", " + hi.str() + ") uncovered between y=" +
                                      cur.str() + " and y=" + one.str());
    }

    // Exact slab partitions force the area identity; keep the direct check.
    Rational area(0);
    for (const auto& s : squares) area += s.side * s.side;
    internal_check(area == a, "area identity failed after a successful sweep");

    for (size_t i = 0; i + 1 < squares.size(); ++i)
        internal_check(squares[i].x != squares[i + 1].x || squares[i].y != squares[i + 1].y,
                       "two squares share a bottom-left corner in a valid tiling");

    return Tiling{a, std::move(squares)};
}

Tiling normalize_rectangle(const Rational& width, const Rational& height,
                           std::vector<SquarePlacement> squares) {
    if (!height.is_positive())
        throw ValidationError(ValidationFault::BadRectangle,
                              "rectangle height must be positive, got " + height.str());
    if (!width.is_positive())
        throw ValidationError(ValidationFault::BadRectangle,
                              "rectangle width must be positive, got " + width.str());
    for (auto& s : squares) {
        s.x = s.x / height;
        s.y = s.y / height;
        s.side = s.side / height;
    }
    return validate_tiling(width / height, std::move(squares));
}

Tiling parse_tiling(std::string_view text) {
    bool haveA = false;
    Rational a;
    std::vector<SquarePlacement> squares;

    int lineNo = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_tokens(line);
        if (!tokens.empty()) {
            try {
                if (!haveA) {
                    if (tokens.size() != 2 || tokens[0] != "a")
                        throw ParseError(lineNo, "expected header 'a <num>/<den>'");
                    a = Rational::parse(tokens[1]);
                    haveA = true;
                } else {
                    if (tokens.size() != 3)
                        throw ParseError(lineNo, "expected '<x> <y> <side>' fractions");
                    squares.push_back({Rational::parse(tokens[0]), Rational::parse(tokens[1]),
                                       Rational::parse(tokens[2])});
                }
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineNo, e.what());
            } catch (const std::domain_error& e) {
                throw ParseError(lineNo, e.what());
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (!haveA) throw ParseError(lineNo, "missing header 'a <num>/<den>'");
    return validate_tiling(a, std::move(squares));
}

std::string serialize_tiling(const Tiling& t) {
    std::string out = "a " + t.a.str() + "\n";
    for (const auto& s : t.squares)
        out += s.x.str() + " " + s.y.str() + " " + s.side.str() + "\n";
    return out;
}

Tiling transpose_tiling(const Tiling& t) {
    std::vector<SquarePlacement> flipped;
    flipped.reserve(t.squares.size());
    for (const auto& s : t.squares) flipped.push_back({s.y, s.x, s.side});
    // The reflected rectangle is 1 wide and a tall; rescale height to 1.
    return normalize_rectangle(Rational(1), t.a, std::move(flipped));
}

}  // namespace sqt
