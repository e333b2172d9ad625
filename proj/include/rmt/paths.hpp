#pragma once

#include <functional>
#include <vector>

#include "rmt/exact.hpp"
#include "rmt/moments.hpp"

namespace rmt {

/// Index path (i_1, ..., i_k); labels are positive integers.
using PathWord = std::vector<int>;

/// Number of distinct labels r.
int distinct_labels(const PathWord& path);

/// Unique canonical representative of the isomorphism class: labels renumbered
/// by first occurrence, so the first label is 1 and each new label is at most
/// the running maximum plus one.
PathWord canonicalize(const PathWord& path);

bool is_canonical(const PathWord& path);

/// Output of the path-shortening pass: the canonical shortened path, the count
/// of singleton deletions R, and the count of run erasures.
struct ShorteningRecord {
    PathWord shortened;
    int removed = 0;
    int runs = 0;
};

/// Iterates run erasure (cyclic neighbor equality, lowest index first, one
/// element per pass) and singleton deletion until the path stops changing.
/// The cyclic-run check is disabled for paths of length 1, so a final lone
/// element leaves through the singleton step; that choice keeps
/// F(I) = F(S(I)) n^{-R(I)} exact on the edge case.
ShorteningRecord path_shorten(const PathWord& path);

/// True iff the expectation f(I, T) is positive for symmetric entries:
/// within every row's multiset of t-values (row i_j contributes t_{j-1} and
/// t_j, cyclically) each value must appear an even number of times.
bool f_positive(const PathWord& path, const std::vector<int>& t_word);

/// g(I): maximum number of distinct t-values over assignments with
/// f(I, T) > 0; brute force over set partitions of the positions.
/// g of the empty path is 1. Length cap 12.
int g_value(const PathWord& path);

/// d(I) = k - r + 1 - g(I).
int d_value(const PathWord& path);

inline constexpr int kEnumerateCap = 8;

/// All canonical r-paths of length k in lexicographic order. r <= k <= 8.
std::vector<PathWord> enumerate_canonical(int r, int k);

/// The subset with d(I) == u.
std::vector<PathWord> enumerate_canonical(int r, int k, int u);

/// |I_{r,k}(0)| = (1/r) C(k, r-1) C(k-1, r-1), exact.
Int count_d0(int r, int k);

inline constexpr int kExactCap = 6;

/// Exact F(I) = sum over t-assignments of the product of per-row mixed
/// moments, grouped by set partitions of the positions and weighted by
/// falling factorials n(n-1)...(n-|T|+1). F of the empty path is n.
/// Length cap 6.
Rat F_exact(const PathWord& path, unsigned n, const MomentOracle& oracle);

/// F(I) == F(S(I)) n^{-R(I)}, checked exactly.
bool verify_shortening_identity(const PathWord& path, unsigned n, const MomentOracle& oracle);

/// F(I) <= 2 n^{1-r-d} (2k)^d q^d, checked exactly for rational q.
bool verify_bound(const PathWord& path, unsigned n, const Rat& q, const MomentOracle& oracle);

/// |I_{r,k}(u)| <= |I_{r,k}(0)| (k^2/2)^u, by enumeration.
bool switching_bound_check(int r, int k, int u);

/// Visits every set partition of {0, ..., k-1} as a restricted growth string
/// (block id of each element; block ids are first-occurrence ordered).
/// The callback receives (assignment, block_count).
void for_each_set_partition(int k,
                            const std::function<void(const std::vector<int>&, int)>& visit);

}  // namespace rmt
