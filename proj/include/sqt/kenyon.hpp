#pragma once

#include "sqt/enumerate.hpp"

#include <string>

namespace sqt {

// The two lower-bound inequalities for tiling a p x q rectangle (coprime,
// q > p >= 1) with n squares, in exact integer form: n*p >= q and 2^n >= q.
bool kenyon_bound_check(long p, long q, int n);

struct KenyonResult {
    long p = 0, q = 0;
    bool found = false;
    int min_squares = -1;  // valid when found
    Tiling witness;        // normalized to height 1, so a = p/q; valid when found
};

// Minimum number of integer-sided squares tiling a p x q rectangle, by
// iterative-deepening backtracking on the lowest-leftmost empty cell with
// largest sides first. found == false when the minimum exceeds cap. This is
// an upper bound on the unrestricted rational-sided minimum.
KenyonResult min_squares_integer(long p, long q, int cap);

struct KenyonBatchReport {
    int checked = 0;
    bool holds = true;
    std::string failure;  // first violation, human readable, empty when holds
};

// For every catalog tiling with a = s/t in lowest terms, sets q = max(s,t),
// p = min(s,t) and asserts n*p >= q and 2^n >= q. Additionally replays the
// denominator chain on the a <= 1 orientation: q divides D, D <= 2^{k+l-1},
// and k+l-1 <= n.
KenyonBatchReport verify_kenyon_via_enumeration(const std::vector<CatalogRecord>& catalog);

// Convenience overload enumerating every order up to max_order.
KenyonBatchReport verify_kenyon_via_enumeration(int max_order, int jobs = 1);

}  // namespace sqt
