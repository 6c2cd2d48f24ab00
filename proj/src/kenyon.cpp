#include "sqt/kenyon.hpp"

#include "sqt/check.hpp"

#include <algorithm>
#include <numeric>

namespace sqt {

namespace {

void check_query(long p, long q) {
    if (p < 1 || q <= p) throw std::invalid_argument("need q > p >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
}

// Backtracking over integer-sided square tilings of a W x H board, W <= H.
// Cells are filled from the lowest-leftmost empty one; a square there is
// tried with the largest feasible side first.
class BoardSearch {
public:
    BoardSearch(int W, int H) : W_(W), H_(H), occ_(static_cast<size_t>(W) * H, 0) {}

    struct Placement {
        int x, y, s;
    };

    bool solve(int cap, std::vector<Placement>& out) {
        empty_ = W_ * H_;
        cur_.clear();
        if (dfs(cap)) {
            out = cur_;
            return true;
        }
        return false;
    }

private:
    bool occupied(int x, int y) const { return occ_[static_cast<size_t>(y) * W_ + x] != 0; }

    void fill(int x, int y, int s, uint8_t v) {
        for (int j = y; j < y + s; ++j)
            for (int i = x; i < x + s; ++i) occ_[static_cast<size_t>(j) * W_ + i] = v;
        empty_ += (v ? -1 : 1) * s * s;
    }

    bool dfs(int cap) {
        if (empty_ == 0) return true;
        const int used = static_cast<int>(cur_.size());
        if (used == cap) return false;
        // Area prune: the largest square that still fits anywhere has side W.
        if (static_cast<long>(cap - used) * W_ * W_ < empty_) return false;

        int cx = -1, cy = -1;
        for (int y = 0; y < H_ && cx < 0; ++y)
            for (int x = 0; x < W_; ++x) {
                if (!occupied(x, y)) {
                    cx = x;
                    cy = y;
                    break;
                }
            }

        int maxS = std::min(W_ - cx, H_ - cy);
        // Growing the square adds one column and one row ring; stop at the
        // first occupied cell.
        int s = 1;
        while (s < maxS) {
            bool free = true;
            for (int j = cy; j <= cy + s && free; ++j) free = !occupied(cx + s, j);
            for (int i = cx; i < cx + s && free; ++i) free = !occupied(i, cy + s);
            if (!free) break;
            ++s;
        }
        for (int side = s; side >= 1; --side) {
            fill(cx, cy, side, 1);
            cur_.push_back({cx, cy, side});
            if (dfs(cap)) return true;
            cur_.pop_back();
            fill(cx, cy, side, 0);
        }
        return false;
    }

    int W_, H_;
    std::vector<uint8_t> occ_;
    int empty_ = 0;
    std::vector<Placement> cur_;
};

}  // namespace

bool kenyon_bound_check(long p, long q, int n) {
    check_query(p, q);
    if (n < 1) return false;
    return BigInt(n) * BigInt(p) >= BigInt(q) && pow2(static_cast<unsigned long>(n)) >= BigInt(q);
}

KenyonResult min_squares_integer(long p, long q, int cap) {
    check_query(p, q);
    KenyonResult res;
    res.p = p;
    res.q = q;

    // Portrait board, p wide and q tall, so the height-normalized witness has
    // a = p/q, the orientation with a <= 1.
    BoardSearch search(static_cast<int>(p), static_cast<int>(q));
    std::vector<BoardSearch::Placement> placements;
    for (int depth = 1; depth <= cap; ++depth) {
        if (!search.solve(depth, placements)) continue;
        res.found = true;
        res.min_squares = depth;
        std::vector<SquarePlacement> squares;
        squares.reserve(placements.size());
        for (const auto& pl : placements)
            squares.push_back({Rational(pl.x), Rational(pl.y), Rational(pl.s)});
        res.witness = normalize_rectangle(Rational(p), Rational(q), std::move(squares));
        internal_check(res.witness.order() == depth, "witness order mismatch");
        break;
    }
    return res;
}

KenyonBatchReport verify_kenyon_via_enumeration(const std::vector<CatalogRecord>& catalog) {
    KenyonBatchReport rep;
    for (const auto& rec : catalog) {
        const BigInt s = rec.a.num();
        const BigInt t = rec.a.den();
        const BigInt q = s > t ? s : t;
        const BigInt p = s > t ? t : s;
        const int n = rec.n;

        auto fail = [&](const std::string& why) {
            rep.holds = false;
            rep.failure = "order " + std::to_string(n) + ", a = " + rec.a.str() + ": " + why;
        };

        if (BigInt(n) * p < q) {
            fail("n*p < q");
            return rep;
        }
        if (pow2(static_cast<unsigned long>(n)) < q) {
            fail("2^n < q");
            return rep;
        }

        // Denominator chain on the a <= 1 orientation: q divides D, then
        // D <= 2^{k+l-1} <= 2^n closes q <= 2^n.
        const Tiling oriented = rec.a <= Rational(1) ? rec.tiling : transpose_tiling(rec.tiling);
        internal_check(oriented.a.den() == q && oriented.a.num() == p,
                       "orientation did not produce a = p/q");
        ExtendedGrid g = build_extended_grid(oriented);
        std::vector<Rational> X = geometric_vector(oriented, g);
        BigInt D = denominator_lcm(X);
        if (mpz_divisible_p(D.get_mpz_t(), q.get_mpz_t()) == 0) {
            fail("q does not divide D");
            return rep;
        }
        const int kl = g.k() + g.l();
        if (D > pow2(static_cast<unsigned long>(kl - 1))) {
            fail("D > 2^{k+l-1}");
            return rep;
        }
        if (kl - 1 > n) {
            fail("k+l-1 > n");
            return rep;
        }
        rep.checked += 1;
    }
    return rep;
}

KenyonBatchReport verify_kenyon_via_enumeration(int max_order, int jobs) {
    KenyonBatchReport total;
    for (int n = 1; n <= max_order; ++n) {
        KenyonBatchReport r = verify_kenyon_via_enumeration(enumerate_tilings(n, jobs));
        total.checked += r.checked;
        if (!r.holds) {
            total.holds = false;
            total.failure = r.failure;
            return total;
        }
    }
    return total;
}

}  // namespace sqt
