#include "rmt/paths.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "rmt/mp_law.hpp"

namespace rmt {

int distinct_labels(const PathWord& path) {
    std::vector<int> seen;
    for (int label : path) {
        if (std::find(seen.begin(), seen.end(), label) == seen.end()) seen.push_back(label);
    }
    return static_cast<int>(seen.size());
}

PathWord canonicalize(const PathWord& path) {
    PathWord out;
    out.reserve(path.size());
    std::vector<int> first_seen;  // first_seen[new_label-1] = old label
    for (int label : path) {
        auto it = std::find(first_seen.begin(), first_seen.end(), label);
        if (it == first_seen.end()) {
            first_seen.push_back(label);
            out.push_back(static_cast<int>(first_seen.size()));
        } else {
            out.push_back(static_cast<int>(it - first_seen.begin()) + 1);
        }
    }
    return out;
}

bool is_canonical(const PathWord& path) {
    int running_max = 0;
    for (int label : path) {
        if (label < 1 || label > running_max + 1) return false;
        running_max = std::max(running_max, label);
    }
    return true;
}

ShorteningRecord path_shorten(const PathWord& path) {
    if (path.empty()) throw std::invalid_argument("path_shorten: empty input");
    PathWord current = path;
    int removed = 0;
    int runs = 0;
    for (;;) {
        const PathWord before = current;
        // Step 1: erase cyclic runs one element at a time, lowest index first.
        // Disabled at length 1 so the last element goes through Step 2.
        bool erased = true;
        while (erased && current.size() > 1) {
            erased = false;
            const std::size_t len = current.size();
            for (std::size_t j = 0; j < len; ++j) {
                const std::size_t next = (j + 1 == len) ? 0 : j + 1;
                if (current[j] == current[next]) {
                    current.erase(current.begin() + static_cast<long>(j));
                    ++runs;
                    erased = true;
                    break;
                }
            }
        }
        // Step 2: delete every label that occurs exactly once.
        PathWord kept;
        kept.reserve(current.size());
        for (std::size_t j = 0; j < current.size(); ++j) {
            int count = 0;
            for (int label : current) count += (label == current[j]);
            if (count == 1) {
                ++removed;
            } else {
                kept.push_back(current[j]);
            }
        }
        current = std::move(kept);
        // Step 3: stop once a full pass leaves the path unchanged.
        if (current == before) break;
    }
    return ShorteningRecord{canonicalize(current), removed, runs};
}

bool f_positive(const PathWord& path, const std::vector<int>& t_word) {
    const std::size_t k = path.size();
    if (k == 0 || t_word.size() != k) {
        throw std::invalid_argument("f_positive: T must match the path length");
    }
    // counts[row][t] over the canonical relabelings; both alphabets fit in k.
    const PathWord rows = canonicalize(path);
    const std::vector<int> ts = canonicalize(t_word);
    std::vector<int> counts(k * k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        const int row = rows[j] - 1;
        const int t_prev = ts[(j + k - 1) % k] - 1;
        const int t_cur = ts[j] - 1;
        counts[static_cast<std::size_t>(row) * k + t_prev] += 1;
        counts[static_cast<std::size_t>(row) * k + t_cur] += 1;
    }
    for (int c : counts) {
        if (c % 2 != 0) return false;
    }
    return true;
}

void for_each_set_partition(int k,
                            const std::function<void(const std::vector<int>&, int)>& visit) {
    if (k < 0) throw std::invalid_argument("for_each_set_partition: negative size");
    if (k == 0) return;
    std::vector<int> assignment(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> recurse = [&](int pos, int max_used) {
        if (pos == k) {
            visit(assignment, max_used);
            return;
        }
        for (int block = 0; block <= max_used; ++block) {
            assignment[static_cast<std::size_t>(pos)] = block;
            recurse(pos + 1, std::max(max_used, block + 1));
        }
    };
    recurse(0, 0);
}

int g_value(const PathWord& path) {
    if (path.empty()) return 1;
    const int k = static_cast<int>(path.size());
    if (k > 12) throw std::invalid_argument("g_value: length cap 12 exceeded");
    int best = 0;
    std::vector<int> t_word(path.size());
    for_each_set_partition(k, [&](const std::vector<int>& assignment, int blocks) {
        if (blocks <= best) return;
        for (std::size_t j = 0; j < assignment.size(); ++j) t_word[j] = assignment[j] + 1;
        if (f_positive(path, t_word)) best = blocks;
    });
    return best;
}

int d_value(const PathWord& path) {
    const int k = static_cast<int>(path.size());
    const int r = distinct_labels(path);
    return k - r + 1 - g_value(path);
}

std::vector<PathWord> enumerate_canonical(int r, int k) {
    if (r < 1 || r > k) throw std::invalid_argument("enumerate_canonical: need 1 <= r <= k");
    if (k > kEnumerateCap) throw std::invalid_argument("enumerate_canonical: length cap exceeded");
    std::vector<PathWord> out;
    PathWord word(static_cast<std::size_t>(k));
    std::function<void(int, int)> recurse = [&](int pos, int max_used) {
        if (k - pos < r - max_used) return;  // cannot reach r distinct labels
        if (pos == k) {
            if (max_used == r) out.push_back(word);
            return;
        }
        const int limit = std::min(max_used + 1, r);
        for (int label = 1; label <= limit; ++label) {
            word[static_cast<std::size_t>(pos)] = label;
            recurse(pos + 1, std::max(max_used, label));
        }
    };
    recurse(0, 0);
    return out;
}

std::vector<PathWord> enumerate_canonical(int r, int k, int u) {
    std::vector<PathWord> all = enumerate_canonical(r, k);
    std::vector<PathWord> out;
    for (auto& path : all) {
        if (d_value(path) == u) out.push_back(std::move(path));
    }
    return out;
}

Int count_d0(int r, int k) {
    if (r < 1 || r > k) throw std::invalid_argument("count_d0: need 1 <= r <= k");
    return narayana_coefficient(static_cast<unsigned>(k), static_cast<unsigned>(r));
}

namespace {

/// Per-row mixed-moment product for one set partition of the positions.
/// Returns 0 when any row sees a block an odd number of times.
Rat partition_value(const PathWord& rows, const std::vector<int>& assignment, int blocks,
                    unsigned n, const MomentOracle& oracle) {
    const std::size_t k = rows.size();
    const int r = *std::max_element(rows.begin(), rows.end());
    Rat product = 1;
    std::vector<unsigned> counts(static_cast<std::size_t>(blocks));
    for (int row = 1; row <= r; ++row) {
        std::fill(counts.begin(), counts.end(), 0u);
        for (std::size_t j = 0; j < k; ++j) {
            if (rows[j] != row) continue;
            counts[static_cast<std::size_t>(assignment[(j + k - 1) % k])] += 1;
            counts[static_cast<std::size_t>(assignment[j])] += 1;
        }
        std::vector<unsigned> exponents;
        for (unsigned c : counts) {
            if (c % 2 != 0) return Rat(0);
            if (c > 0) exponents.push_back(c / 2);
        }
        product *= oracle.mixed_even_moment(MomentSignature::create(std::move(exponents), n));
    }
    return product;
}

}  // namespace

Rat F_exact(const PathWord& path, unsigned n, const MomentOracle& oracle) {
    if (path.empty()) return Rat(n);
    const int k = static_cast<int>(path.size());
    if (k > kExactCap) throw std::invalid_argument("F_exact: length cap exceeded");
    if (n < path.size()) throw std::invalid_argument("F_exact: need n >= path length");
    const PathWord rows = canonicalize(path);
    Rat total = 0;
    for_each_set_partition(k, [&](const std::vector<int>& assignment, int blocks) {
        const Rat value = partition_value(rows, assignment, blocks, n, oracle);
        if (value != 0) {
            total += Rat(falling_factorial(Int(n), static_cast<unsigned>(blocks))) * value;
        }
    });
    return total;
}

bool verify_shortening_identity(const PathWord& path, unsigned n, const MomentOracle& oracle) {
    const ShorteningRecord record = path_shorten(path);
    const Rat lhs = F_exact(path, n, oracle);
    const Rat rhs = F_exact(record.shortened, n, oracle) /
                    Rat(rat_pow(Rat(n), static_cast<unsigned>(record.removed)));
    return lhs == rhs;
}

bool verify_bound(const PathWord& path, unsigned n, const Rat& q, const MomentOracle& oracle) {
    const int k = static_cast<int>(path.size());
    const int r = distinct_labels(path);
    const int d = d_value(path);
    const Rat lhs = F_exact(path, n, oracle);
    // 2 n^{1-r-d} (2k)^d q^d, with the n-power cleared to stay in integers.
    const int exponent = 1 - r - d;
    Rat bound = 2 * rat_pow(Rat(2 * k), static_cast<unsigned>(d)) *
                rat_pow(q, static_cast<unsigned>(d));
    if (exponent >= 0) {
        bound *= rat_pow(Rat(n), static_cast<unsigned>(exponent));
    } else {
        bound /= rat_pow(Rat(n), static_cast<unsigned>(-exponent));
    }
    return lhs <= bound;
}

bool switching_bound_check(int r, int k, int u) {
    const Int lhs = static_cast<Int>(enumerate_canonical(r, k, u).size());
    const Rat rhs = Rat(count_d0(r, k)) * rat_pow(Rat(Int(k) * k, 2), static_cast<unsigned>(u));
    return Rat(lhs) <= rhs;
}

}  // namespace rmt
