#pragma once

#include "sqt/incidence.hpp"

#include <functional>
#include <vector>

namespace sqt {

// Partition of a k x l cell grid into axis-aligned rectangular blocks
// (1-based inclusive index intervals) such that every internal grid boundary
// touches some block edge.
struct GridPartition {
    int k = 0, l = 0;
    std::vector<SquareSpan> blocks;
};

// Emits every partition of the k x l grid into exactly n blocks satisfying
// the minimality condition. Deterministic order: backtracking on the
// lowest-leftmost uncovered cell, candidate blocks by width then height.
void enumerate_partitions(int k, int l, int n,
                          const std::function<void(const GridPartition&)>& emit);

enum class RejectReason { NullityNotOne, NonpositiveCoordinate, GridMismatch };

struct Realization {
    bool accepted = false;
    RejectReason reject = RejectReason::NullityNotOne;
    Tiling tiling;                  // valid when accepted
    std::vector<SquareSpan> spans;  // canonical order, equal to the blocks
    BigInt D;
};

// Solves the incidence system of the partition. Accepts iff the kernel is
// one-dimensional, strictly positive after sign normalization, and the
// realized tiling's extended grid reproduces the partition.
Realization realize_partition(const GridPartition& p);

struct CatalogRecord {
    int n = 0;
    Rational a;
    int k = 0, l = 0;
    BigInt D;
    Tiling tiling;
    std::vector<SquareSpan> blocks;  // canonical order; (k, l, blocks) is the dedup signature
};

bool record_less(const CatalogRecord& x, const CatalogRecord& y);

// Every distinct square tiling of order n, sorted by (a, signature). Output
// is identical for any worker count.
std::vector<CatalogRecord> enumerate_tilings(int n, int jobs = 1);

// Exact intermediate counting bound: sum over k+l <= n+1 of C(P_{k,l}, n)
// with P_{k,l} = C(k+1,2) * C(l+1,2).
BigInt order_count_bound(int n);

}  // namespace sqt
