#include "sqt/render.hpp"

#include "sqt/check.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>

namespace sqt {

namespace {

// den = 2^e2 * 5^e5 exactly?
bool decimal_exact(const BigInt& den, unsigned long& e2, unsigned long& e5) {
    BigInt d = den;
    e2 = 0;
    e5 = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
        ++e2;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
        ++e5;
    }
    return d == 1;
}

// Exact decimal string of a rational whose denominator factors over {2, 5}.
std::string decimal_string(const Rational& v) {
    unsigned long e2 = 0, e5 = 0;
    internal_check(decimal_exact(v.den(), e2, e5), "not decimal exact");
    const unsigned long digits = std::max(e2, e5);
    BigInt scaled = v.num();
    for (unsigned long i = e2; i < digits; ++i) scaled *= 2;
    for (unsigned long i = e5; i < digits; ++i) scaled *= 5;
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s = scaled.get_str();
    if (digits > 0) {
        if (s.size() <= digits) s.insert(0, std::string(digits + 1 - s.size(), '0'));
        s.insert(s.size() - digits, ".");
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return neg ? "-" + s : s;
}

struct Scaler {
    Rational factor;
    bool decimal;

    std::string operator()(const Rational& v) const {
        Rational scaled = v * factor;
        if (decimal) return decimal_string(scaled);
        internal_check(scaled.is_integer(), "scaled SVG coordinate is not an integer");
        return scaled.num().get_str();
    }
};

std::string fraction_triplet(const SquarePlacement& s) {
    return "[\"" + s.x.str() + "\",\"" + s.y.str() + "\",\"" + s.side.str() + "\"]";
}

BigInt parse_positive_bigint(const std::string& text, int line) {
    if (text.empty()) throw ParseError(line, "empty integer");
    for (char ch : text)
        if (ch < '0' || ch > '9') throw ParseError(line, "bad integer '" + text + "'");
    return BigInt(text, 10);
}

}  // namespace

std::string to_svg(const Tiling& t, const ExtendedGrid* grid, const RenderOptions& opts) {
    internal_check(opts.pixels_per_unit >= 1, "pixels_per_unit must be at least 1");

    std::vector<Rational> values{t.a};
    for (const auto& s : t.squares) {
        values.push_back(s.x);
        values.push_back(s.y);
        values.push_back(s.side);
    }
    BigInt L = denominator_lcm(values);
    unsigned long e2 = 0, e5 = 0;
    const bool dec = decimal_exact(L, e2, e5);

    // Label centers introduce halves, so the integer viewBox carries one
    // extra factor of 2.
    const BigInt scaleInt =
        dec ? BigInt(opts.pixels_per_unit) : BigInt(BigInt(2) * L * opts.pixels_per_unit);
    Scaler sc{Rational(scaleInt), dec};
    const Rational height(1);
    auto flip_y = [&](const Rational& y) { return height - y; };
    BigInt sw = scaleInt / 200;
    if (sw < 1) sw = 1;
    BigInt fontSize = scaleInt / 12;
    if (fontSize < 1) fontSize = 1;

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " + sc(t.a) +
           " " + sc(height) + "\">\n";

    if (grid && opts.show_grid) {
        std::string dash = BigInt(sw * 4).get_str() + " " + BigInt(sw * 2).get_str();
        Rational x(0);
        for (int j = 0; j + 1 < grid->k(); ++j) {
            x += grid->col_widths[j];
            svg += "<line x1=\"" + sc(x) + "\" y1=\"0\" x2=\"" + sc(x) + "\" y2=\"" + sc(height) +
                   "\" stroke=\"gray\" stroke-width=\"" + sw.get_str() + "\" stroke-dasharray=\"" +
                   dash + "\"/>\n";
        }
        Rational y(0);
        for (int r = 0; r + 1 < grid->l(); ++r) {
            y += grid->row_heights[r];
            svg += "<line x1=\"0\" y1=\"" + sc(flip_y(y)) + "\" x2=\"" + sc(t.a) + "\" y2=\"" +
                   sc(flip_y(y)) + "\" stroke=\"gray\" stroke-width=\"" + sw.get_str() +
                   "\" stroke-dasharray=\"" + dash + "\"/>\n";
        }
    }

    for (const auto& s : t.squares) {
        svg += "<rect x=\"" + sc(s.x) + "\" y=\"" + sc(flip_y(s.y + s.side)) + "\" width=\"" +
               sc(s.side) + "\" height=\"" + sc(s.side) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
               sw.get_str() + "\"/>\n";
    }

    svg += "<rect x=\"0\" y=\"0\" width=\"" + sc(t.a) + "\" height=\"" + sc(height) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + BigInt(sw * 2).get_str() + "\"/>\n";

    if (opts.show_labels) {
        const Rational half(BigInt(1), BigInt(2));
        for (size_t i = 0; i < t.squares.size(); ++i) {
            const auto& s = t.squares[i];
            Rational cx = s.x + s.side * half;
            Rational cy = flip_y(s.y + s.side * half);
            svg += "<text x=\"" + sc(cx) + "\" y=\"" + sc(cy) + "\" font-size=\"" +
                   fontSize.get_str() +
                   "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"black\">x" +
                   std::to_string(i + 1) + "</text>\n";
        }
    }

    svg += "</svg>\n";
    return svg;
}

std::string write_catalog(const std::vector<CatalogRecord>& records) {
    std::string out;
    for (const auto& rec : records) {
        out += "{\"n\":" + std::to_string(rec.n) + ",\"a\":\"" + rec.a.str() + "\",\"k\":" +
               std::to_string(rec.k) + ",\"l\":" + std::to_string(rec.l) + ",\"D\":\"" +
               rec.D.get_str() + "\",\"squares\":[";
        for (size_t i = 0; i < rec.tiling.squares.size(); ++i) {
            if (i) out += ",";
            out += fraction_triplet(rec.tiling.squares[i]);
        }
        out += "]}\n";
    }
    return out;
}

std::vector<CatalogRecord> read_catalog(std::istream& in) {
    std::vector<CatalogRecord> records;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty()) continue;

        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(lineNo, std::string("malformed JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("n") || !j.contains("a") || !j.contains("k") ||
            !j.contains("l") || !j.contains("D") || !j.contains("squares"))
            throw ParseError(lineNo, "record needs fields n, a, k, l, D, squares");

        CatalogRecord rec;
        try {
            rec.n = j.at("n").get<int>();
            rec.k = j.at("k").get<int>();
            rec.l = j.at("l").get<int>();
            rec.a = Rational::parse(j.at("a").get<std::string>());
            rec.D = parse_positive_bigint(j.at("D").get<std::string>(), lineNo);
            std::vector<SquarePlacement> squares;
            for (const auto& sq : j.at("squares")) {
                if (!sq.is_array() || sq.size() != 3)
                    throw ParseError(lineNo, "each square needs [x, y, side]");
                squares.push_back({Rational::parse(sq.at(0).get<std::string>()),
                                   Rational::parse(sq.at(1).get<std::string>()),
                                   Rational::parse(sq.at(2).get<std::string>())});
            }
            rec.tiling = validate_tiling(rec.a, std::move(squares));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(lineNo, std::string("bad field: ") + e.what());
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineNo, e.what());
        } catch (const std::domain_error& e) {
            throw ParseError(lineNo, e.what());
        }

        if (rec.tiling.order() != rec.n) throw ParseError(lineNo, "order does not match n");
        ExtendedGrid g = build_extended_grid(rec.tiling);
        if (g.k() != rec.k || g.l() != rec.l) throw ParseError(lineNo, "grid does not match k, l");
        rec.blocks = g.spans;
        BigInt D = denominator_lcm(geometric_vector(rec.tiling, g));
        if (D != rec.D) throw ParseError(lineNo, "D does not match the tiling");
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace sqt
