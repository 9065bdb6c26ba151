#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "core.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "qpoly.hpp"

namespace invtab {

inline bigint factorial(int n) {
    bigint r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline bigint binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    bigint r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline bigint catalan(int j) { return binomial(2 * j, j) / (j + 1); }

// [p]_q = 1 + q + ... + q^{p-1}; [0]_q = 0.
inline qpolynomial q_number(int p) {
    if (p <= 0) return qpolynomial();
    return qpolynomial(std::vector<bigint>(p, 1));
}

inline qpolynomial q_factorial(int p) {
    qpolynomial r(bigint(1));
    for (int k = 2; k <= p; ++k) r *= q_number(k);
    return r;
}

// Division-free q-Pascal recurrence: C(i,j) = C(i-1,j) + q^{i-j} C(i-1,j-1).
inline qpolynomial q_binomial(int a, int b) {
    if (b > a || b < 0 || a < 0)
        throw domain_error("q_binomial requires 0 <= b <= a");
    std::vector<qpolynomial> row(b + 1);
    row[0] = qpolynomial(bigint(1));
    for (int i = 1; i <= a; ++i)
        for (int j = std::min(i, b); j >= 1; --j)
            row[j] = row[j] + qpolynomial::monomial(i - j) * row[j - 1];
    return row[b];
}

// q-multinomial [M]_q! / prod [mu_k]_q!, computed as a product of
// q-binomials over the prefix sums.
inline qpolynomial one_column_gf(const content& mu) {
    qpolynomial r(bigint(1));
    int prefix = 0;
    for (int k = 1; k <= mu.max_value(); ++k) {
        prefix += mu.count(k);
        r *= q_binomial(prefix, mu.count(k));
    }
    return r;
}

struct max_inversion_report {
    long long value = 0;
    tableau witness;
};

// Greedy witness build: columns right to left, each taking the largest
// remaining values in decreasing order, each value dropped into the lowest
// unused height slot whose right neighbour (if any) still exceeds it.
inline max_inversion_report max_inversions(const shape& s, const content& mu) {
    if (mu.total() != s.cells())
        throw size_mismatch("content size must equal the number of cells");
    for (int k = 1; k <= mu.max_value(); ++k)
        if (mu.count(k) > s.rows())
            throw empty_family("a value repeated beyond the row count cannot be placed");

    long long value = 0;
    for (int c = 0; c < s.cols(); ++c) {
        long long h = s.col_height(c);
        value += h * (h - 1) / 2;
    }
    for (int k = 1; k <= mu.max_value(); ++k) {
        long long m = mu.count(k);
        value -= m * (m - 1) / 2;
    }

    int ncols = s.cols();
    std::vector<std::vector<int>> rows(s.rows());
    for (int r = 0; r < s.rows(); ++r) rows[r].resize(s.row_len(r));
    std::vector<int> remaining = mu.multiplicities();
    std::vector<int> ht_right;  // heights in the column just built

    for (int c = ncols - 1; c >= 0; --c) {
        int h = s.col_height(c);
        int hr = c + 1 < ncols ? s.col_height(c + 1) : 0;
        std::vector<int> slot_row(h);  // slot s (1-based) -> row index
        std::vector<int> order(hr);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            int vx = rows[x][c + 1], vy = rows[y][c + 1];
            if (vx != vy) return vx < vy;
            return ht_right[x] < ht_right[y];
        });
        for (int i = 0; i < hr; ++i) slot_row[i] = order[i];
        for (int r = hr; r < h; ++r) slot_row[r] = r;

        // Largest remaining values first; a value whose every open slot is
        // blocked (its copy already sits immediately to the right) is passed
        // over and spills into a column further left.
        std::vector<bool> used(h, false);
        std::vector<int> ht_cur(h);
        int filled = 0;
        for (int v = mu.max_value(); v >= 1 && filled < h; --v) {
            while (remaining[v - 1] > 0 && filled < h) {
                int found = -1;
                for (int slot = 0; slot < h && found < 0; ++slot) {
                    if (used[slot]) continue;
                    int r = slot_row[slot];
                    if (r < hr && rows[r][c + 1] <= v) continue;
                    found = slot;
                }
                if (found < 0) break;
                int r = slot_row[found];
                rows[r][c] = v;
                ht_cur[r] = found + 1;
                used[found] = true;
                --remaining[v - 1];
                ++filled;
            }
        }
        if (filled < h) throw empty_family("no row-strict filling exists");
        ht_right = std::move(ht_cur);
    }

    for (const auto& row : rows)
        for (std::size_t c = 1; c < row.size(); ++c)
            require_internal(row[c] > row[c - 1], "witness must be row-strict");
    max_inversion_report rep{value, tableau::unchecked(s, std::move(rows))};
    require_internal(n_inv(rep.witness) == value,
                     "witness inversion count must match the formula");
    return rep;
}

// Distribution over shape (n,n).  Any value repeated three or more times
// leaves an empty family; otherwise with m doubled values and n' = n - m,
// counts[i] = A(i) + A(i+1) where A(p) sums Catalan products over the
// compositions of n' into p positive parts.
inline distribution two_row_distribution(int n, const content& mu) {
    if (n < 1) throw domain_error("two-row shape needs n >= 1");
    shape s(std::vector<int>{n, n});
    if (mu.total() != 2 * n)
        throw size_mismatch("content size must equal the number of cells");
    for (int k = 1; k <= mu.max_value(); ++k)
        if (mu.count(k) > 2) return {s, mu, {0}};

    int doubled = 0;
    for (int k = 1; k <= mu.max_value(); ++k)
        if (mu.count(k) == 2) ++doubled;
    int np = n - doubled;
    if (np == 0) return {s, mu, {1}};

    // A[p][t]: compositions of t into p positive parts, Catalan-weighted.
    std::vector<std::vector<bigint>> A(np + 2, std::vector<bigint>(np + 1, 0));
    A[0][0] = 1;
    for (int p = 1; p <= np + 1; ++p)
        for (int t = 1; t <= np; ++t)
            for (int part = 1; part <= t; ++part)
                A[p][t] += A[p - 1][t - part] * catalan(part);

    std::vector<bigint> counts(np + 1, 0);
    for (int i = 0; i <= np; ++i)
        counts[i] = A[i][np] + A[i + 1][np];
    return {s, mu, std::move(counts)};
}

// Closed-form |I(lambda,mu)| for the three covered families.
inline bigint total_counts(const shape& s, const content& mu) {
    if (mu.total() != s.cells())
        throw size_mismatch("content size must equal the number of cells");

    if (s.cols() <= 1) {  // one column: M!/prod mu_k!
        bigint r = factorial(s.cells());
        for (int k = 1; k <= mu.max_value(); ++k) r /= factorial(mu.count(k));
        return r;
    }

    bool distinct = true;
    for (int k = 1; k <= mu.max_value(); ++k)
        if (mu.count(k) != 1) distinct = false;
    if (distinct) {  // any shape: N!/prod lambda_i!
        bigint r = factorial(s.cells());
        for (int i = 0; i < s.rows(); ++i) r /= factorial(s.row_len(i));
        return r;
    }

    if (s.rows() == 2 && s.row_len(0) == s.row_len(1)) {
        int doubled = 0;
        for (int k = 1; k <= mu.max_value(); ++k) {
            if (mu.count(k) > 2)
                throw unsupported("no closed form for this family");
            if (mu.count(k) == 2) ++doubled;
        }
        int np = s.row_len(0) - doubled;
        return binomial(2 * np, np);
    }

    throw unsupported("no closed form for this family");
}

}  // namespace invtab
