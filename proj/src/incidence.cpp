#include "sqt/incidence.hpp"

#include "sqt/check.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>

namespace sqt {

IncidenceMatrix build_incidence_matrix(int k, int l, const std::vector<SquareSpan>& spans) {
    const int n = static_cast<int>(spans.size());
    IncidenceMatrix M;
    M.n = n;
    M.k = k;
    M.l = l;
    M.m = IntMatrix(2 * n + 2, M.cols());

    M.m.at(M.row_l1(), M.col_one()) = -1;
    for (int r = 0; r < l; ++r) M.m.at(M.row_l1(), M.col_z(r)) = 1;

    M.m.at(M.row_l2(), M.col_a()) = -1;
    for (int j = 0; j < k; ++j) M.m.at(M.row_l2(), M.col_y(j)) = 1;

    for (int i = 0; i < n; ++i) {
        const auto& sp = spans[i];
        M.m.at(M.row_r1(i), M.col_x(i)) = -1;
        for (int j = sp.col_lo; j <= sp.col_hi; ++j) M.m.at(M.row_r1(i), M.col_y(j - 1)) = 1;
        M.m.at(M.row_r2(i), M.col_x(i)) = -1;
        for (int r = sp.row_lo; r <= sp.row_hi; ++r) M.m.at(M.row_r2(i), M.col_z(r - 1)) = 1;
    }
    return M;
}

IncidenceMatrix build_incidence_matrix(const ExtendedGrid& g) {
    return build_incidence_matrix(g.k(), g.l(), g.spans);
}

std::vector<Rational> geometric_vector(const Tiling& t, const ExtendedGrid& g) {
    std::vector<Rational> X;
    X.reserve(2 + t.order() + g.k() + g.l());
    X.push_back(Rational(1));
    X.push_back(t.a);
    for (const auto& s : t.squares) X.push_back(s.side);
    for (const auto& w : g.col_widths) X.push_back(w);
    for (const auto& h : g.row_heights) X.push_back(h);
    return X;
}

bool annihilates(const IntMatrix& m, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != m.cols()) return false;
    for (int r = 0; r < m.rows(); ++r) {
        Rational acc(0);
        for (int c = 0; c < m.cols(); ++c) {
            if (m.at(r, c) == 0) continue;
            acc += Rational(m.at(r, c)) * v[c];
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

RankReport rank_and_kernel_dimension(const IncidenceMatrix& M) {
    RankReport r;
    r.rank = rank_bareiss(M.m);
    r.nullity = M.cols() - r.rank;
    return r;
}

std::vector<int> select_row_basis(const IncidenceMatrix& M) {
    const int N = M.cols();
    const int rows = M.m.rows();

    // Incremental exact row reduction; a candidate joins the basis iff it is
    // independent of the rows already kept. Row order equals the preference
    // order L1, L2, R1 ascending, R2 ascending.
    std::vector<std::vector<Rational>> reduced;  // rows with recorded pivots
    std::vector<int> pivotCol;
    std::vector<int> basis;

    for (int r = 0; r < rows && static_cast<int>(basis.size()) < N - 1; ++r) {
        std::vector<Rational> row(N);
        for (int c = 0; c < N; ++c) row[c] = Rational(M.m.at(r, c));
        for (size_t t = 0; t < reduced.size(); ++t) {
            const int pc = pivotCol[t];
            if (row[pc].is_zero()) continue;
            Rational f = row[pc] / reduced[t][pc];
            for (int c = 0; c < N; ++c) {
                if (reduced[t][c].is_zero()) continue;
                row[c] -= f * reduced[t][c];
            }
        }
        int pc = -1;
        for (int c = 0; c < N; ++c) {
            if (!row[c].is_zero()) {
                pc = c;
                break;
            }
        }
        if (pc < 0) continue;
        reduced.push_back(std::move(row));
        pivotCol.push_back(pc);
        basis.push_back(r);
    }

    internal_check(static_cast<int>(basis.size()) == N - 1, "row basis needs nullity 1");
    internal_check(std::find(basis.begin(), basis.end(), M.row_l1()) != basis.end() &&
                       std::find(basis.begin(), basis.end(), M.row_l2()) != basis.end(),
                   "rows L1 and L2 must survive in the row basis");

    std::vector<char> inBasis(rows, 0);
    for (int r : basis) inBasis[r] = 1;
    int removed = 0;
    for (int i = 0; i < M.n; ++i) {
        const bool r1 = inBasis[M.row_r1(i)], r2 = inBasis[M.row_r2(i)];
        internal_check(r1 || r2, "both rows of a pair removed");
        removed += (!r1 ? 1 : 0) + (!r2 ? 1 : 0);
    }
    internal_check(removed == M.n + 1 - M.k - M.l, "unexpected number of removed rows");
    return basis;
}

namespace {

KernelSolution finish_solution(const IncidenceMatrix& M, std::vector<int> rowBasis,
                               std::vector<BigInt> u) {
    KernelSolution s;
    s.row_basis = std::move(rowBasis);
    s.u = std::move(u);

    for (const auto& e : s.u)
        internal_check(e != 0, "cofactor kernel vector has a zero coordinate");

    const Rational u0(s.u[0]);
    s.X.reserve(s.u.size());
    for (const auto& e : s.u) s.X.push_back(Rational(e) / u0);
    s.D = denominator_lcm(s.X);

    std::vector<char> inBasis(M.m.rows(), 0);
    for (int r : s.row_basis) inBasis[r] = 1;
    for (int i = 0; i < M.n; ++i)
        if (inBasis[M.row_r1(i)] && inBasis[M.row_r2(i)]) s.kept_pairs.push_back(i);
    internal_check(static_cast<int>(s.kept_pairs.size()) == M.k + M.l - 1,
                   "kept pair count must be k+l-1");
    return s;
}

}  // namespace

KernelSolution cofactor_kernel(const IncidenceMatrix& M, const std::vector<int>& rowBasis) {
    const int N = M.cols();
    IntMatrix sub = M.m.select_rows(rowBasis);
    internal_check(sub.rows() == N - 1, "row basis must have N-1 rows");

    std::vector<Rational> ker = kernel_vector(sub);
    internal_check(!ker.empty(), "selected rows are rank deficient");
    std::vector<BigInt> w = to_primitive(ker);
    internal_check(w[0] != 0, "kernel vector with zero first coordinate");

    BigInt d1 = det_bareiss(sub.without_column(0));
    internal_check(d1 != 0, "det of M' without the first column vanished");
    if (d1 < 0) d1 = -d1;

    // u is the integer kernel vector with u[0] = |det(M'_1)|; the primitive
    // vector divides it, so the scale factor is an exact integer.
    BigInt scale;
    internal_check(mpz_divisible_p(d1.get_mpz_t(), w[0].get_mpz_t()) != 0,
                   "primitive kernel vector does not divide the cofactor vector");
    mpz_divexact(scale.get_mpz_t(), d1.get_mpz_t(), w[0].get_mpz_t());
    std::vector<BigInt> u;
    u.reserve(w.size());
    for (const auto& e : w) u.push_back(e * scale);

    return finish_solution(M, rowBasis, std::move(u));
}

std::vector<BigInt> cofactor_kernel_reference(const IncidenceMatrix& M,
                                              const std::vector<int>& rowBasis) {
    const int N = M.cols();
    IntMatrix sub = M.m.select_rows(rowBasis);
    internal_check(sub.rows() == N - 1, "row basis must have N-1 rows");

    std::vector<BigInt> u(N);
    int sign = 1;
    for (int j = 0; j < N; ++j) {
        u[j] = sign > 0 ? det_bareiss(sub.without_column(j))
                        : BigInt(-det_bareiss(sub.without_column(j)));
        sign = -sign;
    }
    if (u[0] < 0)
        for (auto& e : u) e = -e;
    return u;
}

BoundsReport verify_denominator_bounds(const KernelSolution& s, const IncidenceMatrix& M) {
    BoundsReport r;
    const int kl = M.k + M.l;
    r.D = s.D;
    r.bound_kl1 = pow2(static_cast<unsigned long>(kl - 1));
    r.bound_kl2 = pow2(static_cast<unsigned long>(kl - 2));

    r.d_le_bound = r.D <= r.bound_kl1;
    r.bound_le_2n = kl - 1 <= M.n;

    auto d_times = [&](const Rational& v) {
        BigInt t = v.num() * (s.D / v.den());
        return t;
    };

    r.refined_holds = true;
    r.max_kept_dx = 0;
    for (int i : s.kept_pairs) {
        BigInt dx = d_times(s.X[M.col_x(i)]);
        if (dx > r.max_kept_dx) r.max_kept_dx = dx;
        if (dx > r.bound_kl2) r.refined_holds = false;
    }

    r.d_times_a = d_times(s.X[M.col_a()]);
    r.a_column_holds = r.d_times_a <= r.bound_kl1;

    r.divisibility = true;
    for (size_t j = 0; j < s.X.size(); ++j) {
        BigInt dx = d_times(s.X[j]);
        if (dx == 0 || mpz_divisible_p(s.u[j].get_mpz_t(), dx.get_mpz_t()) == 0) {
            r.divisibility = false;
            break;
        }
    }
    return r;
}

bool consecutive_ones_check(const IncidenceMatrix& M) {
    auto blockOk = [&](int r, int first, int count) {
        int lo = -1, hi = -1;
        for (int c = 0; c < count; ++c) {
            if (M.m.at(r, first + c) == 0) continue;
            if (M.m.at(r, first + c) != 1) return false;
            if (lo < 0) lo = c;
            hi = c;
        }
        if (lo < 0) return true;
        for (int c = lo; c <= hi; ++c)
            if (M.m.at(r, first + c) != 1) return false;
        return true;
    };
    for (int r = 0; r < M.m.rows(); ++r) {
        if (!blockOk(r, M.col_y(0), M.k)) return false;
        if (!blockOk(r, M.col_z(0), M.l)) return false;
    }
    return true;
}

MinorSampleReport tu_minor_sample(const IncidenceMatrix& M, int trials, unsigned long seed) {
    MinorSampleReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.max_abs_det = 0;

    const int rows = M.m.rows();
    const int blockCols = M.k + M.l;
    const int maxSize = std::min(rows, blockCols);

    // mt19937_64 output is standardized; modulo sampling keeps the stream
    // identical across platforms.
    std::mt19937_64 rng(seed);
    auto bounded = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned long>(n)); };
    auto sample_distinct = [&](int count, int limit) {
        std::vector<int> idx(limit);
        for (int i = 0; i < limit; ++i) idx[i] = i;
        for (int i = 0; i < count; ++i) std::swap(idx[i], idx[i + bounded(limit - i)]);
        idx.resize(count);
        std::sort(idx.begin(), idx.end());
        return idx;
    };

    for (int t = 0; t < trials; ++t) {
        const int size = 1 + bounded(maxSize);
        rep.max_size = std::max(rep.max_size, size);
        std::vector<int> rsel = sample_distinct(size, rows);
        std::vector<int> csel = sample_distinct(size, blockCols);
        for (int& c : csel) c += M.col_y(0);
        BigInt d = det_bareiss(M.m.select(rsel, csel));
        if (d < 0) d = -d;
        if (d > rep.max_abs_det) rep.max_abs_det = d;
        if (d > 1) rep.all_unimodular = false;
    }
    return rep;
}

Analysis analyze_tiling(const Tiling& t, int minorTrials, unsigned long seed) {
    Analysis a;
    a.tiling = t;
    a.grid = build_extended_grid(t);
    a.segment = check_segment_bound(a.grid, t.order());
    a.lines = line_origin_mapping(t, a.grid);
    a.matrix = build_incidence_matrix(a.grid);
    a.rank = rank_and_kernel_dimension(a.matrix);
    a.rank_matches =
        a.rank.rank == a.matrix.n + a.matrix.k + a.matrix.l + 1 && a.rank.nullity == 1;

    std::vector<Rational> geom = geometric_vector(t, a.grid);
    a.residual_zero = annihilates(a.matrix.m, geom);

    a.kernel = cofactor_kernel(a.matrix, select_row_basis(a.matrix));
    a.kernel_positive = true;
    for (const auto& e : a.kernel.u)
        if (e <= 0) a.kernel_positive = false;
    a.kernel_matches_geometry = a.kernel.X == geom;

    // Pseudo-area conservation holds for every kernel vector, so it can be
    // checked on u in pure integers.
    BigInt lhs = a.kernel.u[a.matrix.col_one()] * a.kernel.u[a.matrix.col_a()];
    BigInt rhs(0);
    for (int i = 0; i < a.matrix.n; ++i) {
        const BigInt& ux = a.kernel.u[a.matrix.col_x(i)];
        rhs += ux * ux;
    }
    a.pseudo_area = lhs == rhs;

    a.bounds = verify_denominator_bounds(a.kernel, a.matrix);
    a.consecutive_ones = consecutive_ones_check(a.matrix);
    if (minorTrials > 0) {
        a.minors = tu_minor_sample(a.matrix, minorTrials, seed);
    } else {
        a.minors.trials = 0;
        a.minors.seed = seed;
    }

    a.all_pass = a.segment.holds && a.lines.holds && a.rank_matches && a.residual_zero &&
                 a.kernel_positive && a.kernel_matches_geometry && a.pseudo_area &&
                 a.bounds.all() && a.consecutive_ones && a.minors.all_unimodular;
    return a;
}

std::string analysis_report_json(const Analysis& a) {
    nlohmann::ordered_json j;
    j["n"] = a.matrix.n;
    j["a"] = a.tiling.a.str();
    j["k"] = a.matrix.k;
    j["l"] = a.matrix.l;
    j["rank"] = a.rank.rank;
    j["nullity"] = a.rank.nullity;
    j["D"] = a.kernel.D.get_str();
    j["bound"] = a.bounds.bound_kl1.get_str();
    j["segment_bound"] = {{"k_plus_l", a.segment.k + a.segment.l},
                          {"n_plus_1", a.segment.n + 1},
                          {"holds", a.segment.holds}};
    j["line_origin"] = {{"bottom_left_lines", a.lines.bottom_left_lines},
                        {"max_other_lines", a.lines.max_other_lines},
                        {"holds", a.lines.holds}};
    j["residual_zero"] = a.residual_zero;
    j["kernel_positive"] = a.kernel_positive;
    j["kernel_matches_geometry"] = a.kernel_matches_geometry;
    j["pseudo_area"] = a.pseudo_area;
    nlohmann::ordered_json kept = nlohmann::ordered_json::array();
    for (int i : a.kernel.kept_pairs) kept.push_back(i + 1);
    j["bounds"] = {{"d_le_bound", a.bounds.d_le_bound},
                   {"bound_le_2n", a.bounds.bound_le_2n},
                   {"refined",
                    {{"bound", a.bounds.bound_kl2.get_str()},
                     {"kept_pairs", kept},
                     {"max_kept_dx", a.bounds.max_kept_dx.get_str()},
                     {"holds", a.bounds.refined_holds}}},
                   {"a_column", {{"d_times_a", a.bounds.d_times_a.get_str()}, {"holds", a.bounds.a_column_holds}}},
                   {"divisibility", a.bounds.divisibility}};
    j["consecutive_ones"] = a.consecutive_ones;
    j["minor_sample"] = {{"trials", a.minors.trials},
                         {"seed", a.minors.seed},
                         {"max_size", a.minors.max_size},
                         {"max_abs_det", a.minors.max_abs_det.get_str()},
                         {"all_unimodular", a.minors.all_unimodular}};
    j["all_pass"] = a.all_pass;
    return j.dump(2) + "\n";
}

}  // namespace sqt
