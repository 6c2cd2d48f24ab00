#include "sqt/enumerate.hpp"

#include "sqt/check.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace sqt {

namespace {

bool span_canonical_less(const SquareSpan& a, const SquareSpan& b) {
    if (a.col_lo != b.col_lo) return a.col_lo < b.col_lo;
    return a.row_lo < b.row_lo;
}

// Lexicographic over (col_lo, col_hi, row_lo, row_hi).
bool span_tuple_less(const SquareSpan& a, const SquareSpan& b) {
    if (a.col_lo != b.col_lo) return a.col_lo < b.col_lo;
    if (a.col_hi != b.col_hi) return a.col_hi < b.col_hi;
    if (a.row_lo != b.row_lo) return a.row_lo < b.row_lo;
    return a.row_hi < b.row_hi;
}

class PartitionSearch {
public:
    PartitionSearch(int k, int l, int n, const std::function<void(const GridPartition&)>& emit)
        : k_(k), l_(l), n_(n), emit_(emit), covered_(static_cast<size_t>(k) * l, 0),
          col_uncov_(k + 1, l), row_uncov_(l + 1, k), col_edge_(k + 1, 0), row_edge_(l + 1, 0),
          uncovered_(k * l) {}

    void run() {
        dfs();
    }

    void run_with_first(const SquareSpan& first) {
        place(first);
        dfs();
        unplace(first);
    }

private:
    bool covered(int c, int r) const { return covered_[(r - 1) * static_cast<size_t>(k_) + (c - 1)] != 0; }

    void mark(int c, int r, int delta) {
        covered_[(r - 1) * static_cast<size_t>(k_) + (c - 1)] += delta;
        col_uncov_[c] -= delta;
        row_uncov_[r] -= delta;
        uncovered_ -= delta;
    }

    void place(const SquareSpan& b) {
        for (int c = b.col_lo; c <= b.col_hi; ++c)
            for (int r = b.row_lo; r <= b.row_hi; ++r) mark(c, r, 1);
        if (b.col_lo > 1) col_edge_[b.col_lo - 1] += 1;
        if (b.col_hi < k_) col_edge_[b.col_hi] += 1;
        if (b.row_lo > 1) row_edge_[b.row_lo - 1] += 1;
        if (b.row_hi < l_) row_edge_[b.row_hi] += 1;
        blocks_.push_back(b);
    }

    void unplace(const SquareSpan& b) {
        blocks_.pop_back();
        if (b.col_lo > 1) col_edge_[b.col_lo - 1] -= 1;
        if (b.col_hi < k_) col_edge_[b.col_hi] -= 1;
        if (b.row_lo > 1) row_edge_[b.row_lo - 1] -= 1;
        if (b.row_hi < l_) row_edge_[b.row_hi] -= 1;
        for (int c = b.col_lo; c <= b.col_hi; ++c)
            for (int r = b.row_lo; r <= b.row_hi; ++r) mark(c, r, -1);
    }

    // A boundary becomes unreachable once every cell on its small side is
    // covered; future blocks start at later cells and cannot touch it.
    bool dead_boundary() const {
        int firstUncovCol = k_ + 1;
        for (int c = 1; c <= k_; ++c) {
            if (col_uncov_[c] > 0) {
                firstUncovCol = c;
                break;
            }
        }
        for (int b = 1; b <= std::min(firstUncovCol - 2, k_ - 1); ++b)
            if (col_edge_[b] == 0) return true;
        int firstUncovRow = l_ + 1;
        for (int r = 1; r <= l_; ++r) {
            if (row_uncov_[r] > 0) {
                firstUncovRow = r;
                break;
            }
        }
        for (int b = 1; b <= std::min(firstUncovRow - 2, l_ - 1); ++b)
            if (row_edge_[b] == 0) return true;
        return false;
    }

    void dfs() {
        const int used = static_cast<int>(blocks_.size());
        if (uncovered_ == 0) {
            if (used != n_) return;
            for (int b = 1; b <= k_ - 1; ++b)
                if (col_edge_[b] == 0) return;
            for (int b = 1; b <= l_ - 1; ++b)
                if (row_edge_[b] == 0) return;
            emit_(GridPartition{k_, l_, blocks_});
            return;
        }
        if (used == n_ || n_ - used > uncovered_) return;
        if (dead_boundary()) return;

        int c0 = 0, r0 = 0;
        for (int r = 1; r <= l_ && r0 == 0; ++r) {
            if (row_uncov_[r] == 0) continue;
            for (int c = 1; c <= k_; ++c) {
                if (!covered(c, r)) {
                    c0 = c;
                    r0 = r;
                    break;
                }
            }
        }

        int maxW = 0;
        while (c0 + maxW <= k_ && !covered(c0 + maxW, r0)) ++maxW;
        for (int w = 1; w <= maxW; ++w) {
            for (int h = 1; r0 + h - 1 <= l_; ++h) {
                bool free = true;
                for (int c = c0; c <= c0 + w - 1 && free; ++c) free = !covered(c, r0 + h - 1);
                if (!free) break;
                SquareSpan b{c0, c0 + w - 1, r0, r0 + h - 1};
                place(b);
                dfs();
                unplace(b);
            }
        }
    }

    int k_, l_, n_;
    const std::function<void(const GridPartition&)>& emit_;
    std::vector<uint8_t> covered_;
    std::vector<int> col_uncov_, row_uncov_;  // uncovered cells per column / row, 1-based
    std::vector<int> col_edge_, row_edge_;    // boundary use counters, 1-based
    int uncovered_;
    std::vector<SquareSpan> blocks_;
};

}  // namespace

void enumerate_partitions(int k, int l, int n,
                          const std::function<void(const GridPartition&)>& emit) {
    internal_check(k >= 1 && l >= 1 && n >= 1, "partition grid needs positive dimensions");
    internal_check(k + l <= n + 1, "grid exceeds the segment bound");
    if (k * l < n) return;
    PartitionSearch(k, l, n, emit).run();
}

Realization realize_partition(const GridPartition& p) {
    Realization res;

    std::vector<SquareSpan> spans = p.blocks;
    std::sort(spans.begin(), spans.end(), span_canonical_less);
    const int n = static_cast<int>(spans.size());

    IncidenceMatrix M = build_incidence_matrix(p.k, p.l, spans);
    std::vector<Rational> ker = kernel_vector(M.m);
    if (ker.empty()) {
        res.reject = RejectReason::NullityNotOne;
        return res;
    }
    std::vector<BigInt> w = to_primitive(ker);
    for (const auto& e : w) {
        if (e <= 0) {
            res.reject = RejectReason::NonpositiveCoordinate;
            return res;
        }
    }

    const Rational w0(w[0]);
    std::vector<Rational> X;
    X.reserve(w.size());
    for (const auto& e : w) X.push_back(Rational(e) / w0);

    std::vector<Rational> xpos{Rational(0)}, ypos{Rational(0)};
    for (int j = 0; j < p.k; ++j) xpos.push_back(xpos.back() + X[M.col_y(j)]);
    for (int r = 0; r < p.l; ++r) ypos.push_back(ypos.back() + X[M.col_z(r)]);

    std::vector<SquarePlacement> placements;
    placements.reserve(spans.size());
    for (int i = 0; i < n; ++i)
        placements.push_back({xpos[spans[i].col_lo - 1], ypos[spans[i].row_lo - 1], X[M.col_x(i)]});

    Tiling t;
    try {
        t = validate_tiling(X[M.col_a()], std::move(placements));
    } catch (const ValidationError&) {
        res.reject = RejectReason::GridMismatch;
        return res;
    }

    ExtendedGrid g = build_extended_grid(t);
    if (g.k() != p.k || g.l() != p.l || g.spans != spans) {
        res.reject = RejectReason::GridMismatch;
        return res;
    }

    res.accepted = true;
    res.tiling = std::move(t);
    res.spans = std::move(spans);
    res.D = denominator_lcm(X);
    return res;
}

bool record_less(const CatalogRecord& x, const CatalogRecord& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.k != y.k) return x.k < y.k;
    if (x.l != y.l) return x.l < y.l;
    const size_t m = std::min(x.blocks.size(), y.blocks.size());
    for (size_t i = 0; i < m; ++i) {
        if (x.blocks[i] == y.blocks[i]) continue;
        return span_tuple_less(x.blocks[i], y.blocks[i]);
    }
    return x.blocks.size() < y.blocks.size();
}

std::vector<CatalogRecord> enumerate_tilings(int n, int jobs) {
    internal_check(n >= 1, "order must be positive");

    struct Unit {
        int k, l;
        SquareSpan first;
    };
    std::vector<Unit> units;
    for (int k = 1; k <= n; ++k) {
        for (int l = 1; k + l <= n + 1; ++l) {
            if (k * l < n) continue;
            for (int w = 1; w <= k; ++w)
                for (int h = 1; h <= l; ++h) units.push_back({k, l, SquareSpan{1, w, 1, h}});
        }
    }

    auto run_unit = [n](const Unit& u, std::vector<CatalogRecord>& out) {
        auto emit = [&](const GridPartition& p) {
            Realization r = realize_partition(p);
            if (!r.accepted) return;
            CatalogRecord rec;
            rec.n = n;
            rec.a = r.tiling.a;
            rec.k = p.k;
            rec.l = p.l;
            rec.D = r.D;
            rec.tiling = std::move(r.tiling);
            rec.blocks = std::move(r.spans);
            out.push_back(std::move(rec));
        };
        std::function<void(const GridPartition&)> cb = emit;
        PartitionSearch(u.k, u.l, n, cb).run_with_first(u.first);
    };

    std::vector<std::vector<CatalogRecord>> buckets(units.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < units.size(); ++i) run_unit(units[i], buckets[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= units.size()) return;
                run_unit(units[i], buckets[i]);
            }
        };
        std::vector<std::thread> pool;
        const int count = std::max(1, std::min<int>(jobs, static_cast<int>(units.size())));
        for (int t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<CatalogRecord> all;
    for (auto& b : buckets)
        for (auto& rec : b) all.push_back(std::move(rec));
    std::sort(all.begin(), all.end(), record_less);

    for (size_t i = 0; i + 1 < all.size(); ++i) {
        const auto& x = all[i];
        const auto& y = all[i + 1];
        internal_check(x.k != y.k || x.l != y.l || x.blocks != y.blocks,
                       "duplicate span signature in the catalog");
    }
    return all;
}

BigInt order_count_bound(int n) {
    internal_check(n >= 1, "order must be positive");
    BigInt total = 0;
    for (int k = 1; k <= n; ++k) {
        for (int l = 1; k + l <= n + 1; ++l) {
            BigInt p = binomial(BigInt(k + 1), 2) * binomial(BigInt(l + 1), 2);
            total += binomial(p, static_cast<unsigned long>(n));
        }
    }
    return total;
}

}  // namespace sqt
