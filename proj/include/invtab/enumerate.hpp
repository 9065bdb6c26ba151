#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "qpoly.hpp"

namespace invtab {

// Visits every row-strict filling of s with content mu exactly once, in
// lexicographic order of the row-major reading word.  The tableau passed to
// fn is reused between calls; copy it to keep it.
template <typename Fn>
void for_each_tableau(const shape& s, const content& mu, Fn&& fn) {
    if (mu.total() != s.cells())
        throw size_mismatch("content size must equal the number of cells");
    for (int k = 1; k <= mu.max_value(); ++k)
        if (mu.count(k) > s.rows()) return;  // a value fits at most once per row

    tableau t;
    t.shape_ = s;
    t.rows_.resize(s.rows());
    for (int r = 0; r < s.rows(); ++r) t.rows_[r].resize(s.row_len(r));

    struct pos {
        int r, c;
    };
    std::vector<pos> order;
    for (int r = 0; r < s.rows(); ++r)
        for (int c = 0; c < s.row_len(r); ++c) order.push_back({r, c});

    std::vector<int> remaining = mu.multiplicities();
    int m = mu.max_value();
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
            fn(static_cast<const tableau&>(t));
            return;
        }
        auto [r, c] = order[idx];
        int lo = c > 0 ? t.rows_[r][c - 1] + 1 : 1;
        for (int v = lo; v <= m; ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            t.rows_[r][c] = v;
            self(self, idx + 1);
            ++remaining[v - 1];
        }
    };
    rec(rec, 0);
}

// counts[i] = number of fillings with exactly i inversions; trailing zeros
// trimmed, a single 0 when the family is empty.
struct distribution {
    shape shp;
    content cnt;
    std::vector<bigint> counts;

    qpolynomial gf() const { return qpolynomial(counts); }
    bigint total() const {
        bigint s = 0;
        for (const bigint& c : counts) s += c;
        return s;
    }
    int max_index() const { return static_cast<int>(counts.size()) - 1; }
};

inline distribution inversion_distribution(const shape& s, const content& mu) {
    std::vector<bigint> counts;
    for_each_tableau(s, mu, [&](const tableau& t) {
        int i = n_inv(t);
        if (i >= static_cast<int>(counts.size())) counts.resize(i + 1, 0);
        ++counts[i];
    });
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    if (counts.empty()) counts.push_back(0);
    return {s, mu, std::move(counts)};
}

// All partitions of n, largest part first within each partition;
// deterministic order.
inline std::vector<shape> partitions_of(int n) {
    std::vector<shape> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            parts.push_back(p);
            self(self, rest - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// All ordered tuples of positive integers summing to n (the gap-free contents
// of total size n).
inline std::vector<content> compositions_of(int n) {
    std::vector<content> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            parts.push_back(p);
            self(self, rest - p);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

}  // namespace invtab
