#pragma once

#include "sqt/grid.hpp"
#include "sqt/matrix.hpp"

#include <string>
#include <vector>

namespace sqt {

// The (2n+2) x (n+k+l+2) incidence matrix of a tiling, entries in {-1, 0, 1}.
// Column order: "1", a, x_1..x_n, y_1..y_k, z_1..z_l.
// Row order: L1 (1 = sum z), L2 (a = sum y), R1_1..R1_n (x_i = sum of Y_i),
// R2_1..R2_n (x_i = sum of Z_i).
struct IncidenceMatrix {
    int n = 0, k = 0, l = 0;
    IntMatrix m;

    int cols() const { return n + k + l + 2; }
    int col_one() const { return 0; }
    int col_a() const { return 1; }
    int col_x(int i) const { return 2 + i; }
    int col_y(int j) const { return 2 + n + j; }
    int col_z(int r) const { return 2 + n + k + r; }
    int row_l1() const { return 0; }
    int row_l2() const { return 1; }
    int row_r1(int i) const { return 2 + i; }
    int row_r2(int i) const { return 2 + n + i; }
};

IncidenceMatrix build_incidence_matrix(const ExtendedGrid& g);
IncidenceMatrix build_incidence_matrix(int k, int l, const std::vector<SquareSpan>& spans);

// The geometric solution (1, a, sides, widths, heights); M annihilates it.
std::vector<Rational> geometric_vector(const Tiling& t, const ExtendedGrid& g);

bool annihilates(const IntMatrix& m, const std::vector<Rational>& v);

struct RankReport {
    int rank = 0;
    int nullity = 0;
};

// Raw rank and nullity, usable on arbitrary span systems; tiling-derived
// matrices have rank n+k+l+1 and nullity 1.
RankReport rank_and_kernel_dimension(const IncidenceMatrix& M);

// Deterministic maximal independent row selection, preferring L1, L2, then
// R1 rows ascending, then R2 rows ascending. Keeps L1 and L2, removes at most
// one row per (R1_i, R2_i) pair, removes exactly n+1-k-l rows in total.
// Requires nullity 1.
std::vector<int> select_row_basis(const IncidenceMatrix& M);

struct KernelSolution {
    std::vector<int> row_basis;   // the N-1 rows forming M'
    std::vector<BigInt> u;        // cofactor kernel vector, u[0] > 0
    std::vector<Rational> X;      // u / u[0]
    BigInt D;                     // lcm of the denominators of X
    std::vector<int> kept_pairs;  // 0-based squares with both rows in M'
};

// Kernel of M' via elimination, rescaled so u[0] = |det of M' without the
// "1" column|, which makes it equal the cofactor vector up to the global
// sign normalization u[0] > 0.
KernelSolution cofactor_kernel(const IncidenceMatrix& M, const std::vector<int>& rowBasis);

// Reference path: u_j as alternating-sign determinants of M' with column j
// removed, one exact determinant per column, normalized to u[0] > 0.
std::vector<BigInt> cofactor_kernel_reference(const IncidenceMatrix& M,
                                              const std::vector<int>& rowBasis);

struct BoundsReport {
    BigInt D;
    BigInt bound_kl1;      // 2^{k+l-1}
    BigInt bound_kl2;      // 2^{k+l-2}
    BigInt d_times_a;
    BigInt max_kept_dx;    // max over kept pairs of D * x_i
    bool d_le_bound = false;       // D <= 2^{k+l-1}
    bool bound_le_2n = false;      // 2^{k+l-1} <= 2^n
    bool refined_holds = false;    // D * x_i <= 2^{k+l-2} for every kept pair
    bool a_column_holds = false;   // D * a <= 2^{k+l-1}
    bool divisibility = false;     // D * X_j divides |u_j| for every j

    bool all() const {
        return d_le_bound && bound_le_2n && refined_holds && a_column_holds && divisibility;
    }
};

// All comparisons are exact integer comparisons; D * x_i and D * a are
// integers since D is the lcm of all denominators.
BoundsReport verify_denominator_bounds(const KernelSolution& s, const IncidenceMatrix& M);

// True iff the +1 entries are consecutive within the y block and within the
// z block of every row.
bool consecutive_ones_check(const IncidenceMatrix& M);

struct MinorSampleReport {
    int trials = 0;
    unsigned long seed = 0;
    int max_size = 0;
    BigInt max_abs_det;
    bool all_unimodular = true;
};

// Samples random square submatrices of the y/z column block and checks each
// exact determinant lies in {-1, 0, 1}. Fully determined by the seed.
MinorSampleReport tu_minor_sample(const IncidenceMatrix& M, int trials, unsigned long seed);

// Full verification pipeline for one tiling.
struct Analysis {
    Tiling tiling;
    ExtendedGrid grid;
    IncidenceMatrix matrix;
    RankReport rank;
    SegmentBoundReport segment;
    LineOriginReport lines;
    KernelSolution kernel;
    BoundsReport bounds;
    bool rank_matches = false;        // rank == n+k+l+1 and nullity == 1
    bool residual_zero = false;       // M * geometric vector == 0
    bool kernel_positive = false;     // every u_j > 0
    bool kernel_matches_geometry = false;  // X equals the geometric vector
    bool pseudo_area = false;         // u_1 * u_a == sum of u_{x_i}^2
    bool consecutive_ones = false;
    MinorSampleReport minors;
    bool all_pass = false;
};

Analysis analyze_tiling(const Tiling& t, int minorTrials = 1000, unsigned long seed = 42);

// Stable-key JSON report for the analysis.
std::string analysis_report_json(const Analysis& a);

}  // namespace sqt
