#include "sqt/matrix.hpp"

#include "sqt/check.hpp"

#include <utility>

namespace sqt {

void IntMatrix::swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
}

IntMatrix IntMatrix::without_column(int col) const {
    IntMatrix out(rows_, cols_ - 1);
    for (int r = 0; r < rows_; ++r) {
        int t = 0;
        for (int c = 0; c < cols_; ++c) {
            if (c == col) continue;
            out.at(r, t++) = at(r, c);
        }
    }
    return out;
}

IntMatrix IntMatrix::select_rows(const std::vector<int>& rows) const {
    IntMatrix out(static_cast<int>(rows.size()), cols_);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols_; ++c) out.at(static_cast<int>(r), c) = at(rows[r], c);
    return out;
}

IntMatrix IntMatrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
    IntMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            out.at(static_cast<int>(r), static_cast<int>(c)) = at(rows[r], cols[c]);
    return out;
}

namespace {

struct Echelon {
    IntMatrix m;
    std::vector<int> pivot_cols;  // ascending; pivot t sits at row t
};

// Fraction-free row echelon with column skipping. Each update divides exactly
// by the previous pivot, keeping every entry an integer minor of the input.
Echelon echelon_bareiss(IntMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    BigInt prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        m.swap_rows(r, pr);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                BigInt t = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
                BigInt q;
                mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = std::move(q);
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        pivots.push_back(c);
        ++r;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

}  // namespace

BigInt det_bareiss(IntMatrix m) {
    const int n = m.rows();
    internal_check(n == m.cols(), "determinant of a non-square matrix");
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev(1);
    for (int k = 0; k < n - 1; ++k) {
        int pr = -1;
        for (int i = k; i < n; ++i) {
            if (m.at(i, k) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) return 0;
        if (pr != k) {
            m.swap_rows(k, pr);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                BigInt q;
                mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = std::move(q);
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    BigInt d = m.at(n - 1, n - 1);
    return sign > 0 ? d : BigInt(-d);
}

int rank_bareiss(IntMatrix m) {
    return static_cast<int>(echelon_bareiss(std::move(m)).pivot_cols.size());
}

std::vector<Rational> kernel_vector(IntMatrix m) {
    const int cols = m.cols();
    Echelon e = echelon_bareiss(std::move(m));
    const int rank = static_cast<int>(e.pivot_cols.size());
    if (cols - rank != 1) return {};

    int freeCol = -1;
    {
        std::vector<char> isPivot(cols, 0);
        for (int c : e.pivot_cols) isPivot[c] = 1;
        for (int c = 0; c < cols; ++c)
            if (!isPivot[c]) freeCol = c;
    }

    std::vector<Rational> x(cols, Rational(0));
    x[freeCol] = Rational(1);
    for (int t = rank - 1; t >= 0; --t) {
        const int c = e.pivot_cols[t];
        Rational sum(0);
        for (int j = c + 1; j < cols; ++j) {
            if (e.m.at(t, j) == 0 || x[j].is_zero()) continue;
            sum += Rational(e.m.at(t, j)) * x[j];
        }
        x[c] = -sum / Rational(e.m.at(t, c));
    }
    return x;
}

std::vector<BigInt> to_primitive(const std::vector<Rational>& v) {
    BigInt scale = denominator_lcm(v);
    std::vector<BigInt> w;
    w.reserve(v.size());
    BigInt g(0);
    for (const auto& r : v) {
        BigInt t = r.num() * (scale / r.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
        w.push_back(std::move(t));
    }
    internal_check(g != 0, "primitive scaling of the zero vector");
    int sign = 0;
    for (const auto& t : w) {
        if (t != 0) {
            sign = sgn(t);
            break;
        }
    }
    if (sign < 0) g = -g;
    for (auto& t : w) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t());
        t = std::move(q);
    }
    return w;
}

}  // namespace sqt
