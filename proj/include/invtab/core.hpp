#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace invtab {

// Partition shape: non-increasing positive row lengths.  The empty shape is
// allowed and denotes the empty tableau.
class shape {
public:
    shape() = default;

    explicit shape(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw shape_error("row lengths must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw shape_error("row lengths must be non-increasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int cols() const { return parts_.empty() ? 0 : parts_[0]; }
    int row_len(int r) const { return parts_[r]; }

    // Height of column c (0-based): number of rows reaching past it.
    int col_height(int c) const {
        int h = 0;
        while (h < rows() && parts_[h] > c) ++h;
        return h;
    }

    int cells() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool operator==(const shape&) const = default;
    auto operator<=>(const shape&) const = default;

private:
    std::vector<int> parts_;
};

// Content: multiplicities of the values 1..m, every value present at least once.
class content {
public:
    content() = default;

    explicit content(std::vector<int> mult) : mult_(std::move(mult)) {
        for (int m : mult_)
            if (m < 1) throw skipped_value("every multiplicity must be at least 1");
    }

    const std::vector<int>& multiplicities() const { return mult_; }
    int max_value() const { return static_cast<int>(mult_.size()); }
    int count(int value) const { return mult_[value - 1]; }
    int total() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

    bool operator==(const content&) const = default;
    auto operator<=>(const content&) const = default;

private:
    std::vector<int> mult_;
};

// Exchanges the multiplicities of a and a+1.
inline content swap_adjacent(const content& mu, int a) {
    if (a < 1 || a + 1 > mu.max_value())
        throw domain_error("value and its successor must both occur");
    std::vector<int> m = mu.multiplicities();
    std::swap(m[a - 1], m[a]);
    return content(std::move(m));
}

class tableau;
tableau validate(std::vector<std::vector<int>> rows);

// Row-strict filling of a partition shape whose entry multiset is a gap-free
// initial segment 1..M.  Columns are unconstrained; immutable after creation.
class tableau {
public:
    tableau() = default;

    const shape& shp() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int r, int c) const { return rows_[r][c]; }
    int cells() const { return shape_.cells(); }

    int max_value() const {
        int m = 0;
        for (const auto& row : rows_)
            for (int v : row) m = std::max(m, v);
        return m;
    }

    content derive_content() const {
        std::vector<int> mult(max_value(), 0);
        for (const auto& row : rows_)
            for (int v : row) ++mult[v - 1];
        return content(std::move(mult));
    }

    bool operator==(const tableau& o) const { return rows_ == o.rows_; }
    auto operator<=>(const tableau& o) const { return rows_ <=> o.rows_; }

    // Bypasses validation; callers must guarantee the invariants hold.
    static tableau unchecked(shape s, std::vector<std::vector<int>> rows) {
        tableau t;
        t.shape_ = std::move(s);
        t.rows_ = std::move(rows);
        return t;
    }

private:
    friend tableau validate(std::vector<std::vector<int>> rows);
    template <typename Fn>
    friend void for_each_tableau(const shape&, const content&, Fn&&);

    shape shape_;
    std::vector<std::vector<int>> rows_;
};

// Checks the partition, row-strictness, and gap-free-content invariants.
inline tableau validate(std::vector<std::vector<int>> rows) {
    std::vector<int> lens;
    lens.reserve(rows.size());
    for (const auto& row : rows) lens.push_back(static_cast<int>(row.size()));
    shape s(std::move(lens));  // throws shape_error on bad row lengths

    int max_v = 0;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1)
                throw skipped_value("entries must be positive integers");
            if (c > 0 && row[c] <= row[c - 1])
                throw row_violation("rows must strictly increase left to right");
            max_v = std::max(max_v, row[c]);
        }

    std::vector<int> mult(max_v, 0);
    for (const auto& row : rows)
        for (int v : row) ++mult[v - 1];
    for (int v = 1; v <= max_v; ++v)
        if (mult[v - 1] == 0)
            throw skipped_value("entry values must not skip any integer");

    tableau t;
    t.shape_ = std::move(s);
    t.rows_ = std::move(rows);
    return t;
}

// ---------------------------------------------------------------------------
// Height order.
//
// Each column receives a total order on its cells, computed right to left.
// Cells with a right neighbour sort by (right value, right height); the
// remaining cells form the bottom segment of the column and keep their
// vertical order below all of the former.  ht(cell) is its 1-based rank.
// ---------------------------------------------------------------------------

// heights[c][r] = height of the cell at row r, column c (both 0-based).
inline std::vector<std::vector<int>> height_orders(const tableau& t) {
    const shape& s = t.shp();
    int ncols = s.cols();
    std::vector<std::vector<int>> ht(ncols);
    for (int c = ncols - 1; c >= 0; --c) {
        int h = s.col_height(c);
        int hr = c + 1 < ncols ? s.col_height(c + 1) : 0;
        ht[c].resize(h);
        std::vector<int> order(hr);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            int vx = t.at(x, c + 1), vy = t.at(y, c + 1);
            if (vx != vy) return vx < vy;
            return ht[c + 1][x] < ht[c + 1][y];
        });
        for (int i = 0; i < hr; ++i) ht[c][order[i]] = i + 1;
        for (int r = hr; r < h; ++r) ht[c][r] = r + 1;
    }
    return ht;
}

struct height_order {
    int column;                // 1-based
    std::vector<int> ranking;  // ranking[r] = height of the cell in row r
};

// k is the 1-based column index.
inline height_order height_order_of(const tableau& t, int k) {
    if (k < 1 || k > t.shp().cols())
        throw domain_error("column index out of range");
    return {k, height_orders(t)[k - 1]};
}

// ---------------------------------------------------------------------------
// Inversion pairs.  (i,j)^k: values i < j in column k whose height order is
// reversed (the j cell sits at the smaller height).
// ---------------------------------------------------------------------------

struct inversion_pair {
    int smaller = 0;
    int larger = 0;
    int column = 0;  // 1-based

    bool operator==(const inversion_pair&) const = default;
    auto operator<=>(const inversion_pair&) const = default;
};

// Sorted by column, then by the height of the lower (larger-height) member,
// then by the height of the other member, so output is deterministic.
inline std::vector<inversion_pair> inversion_pairs(const tableau& t) {
    auto ht = height_orders(t);
    const shape& s = t.shp();
    struct keyed {
        int col, hmax, hmin;
        inversion_pair p;
    };
    std::vector<keyed> acc;
    for (int c = 0; c < s.cols(); ++c) {
        int h = s.col_height(c);
        for (int r1 = 0; r1 < h; ++r1)
            for (int r2 = r1 + 1; r2 < h; ++r2) {
                int v1 = t.at(r1, c), v2 = t.at(r2, c);
                if (v1 == v2) continue;
                int ri = v1 < v2 ? r1 : r2;  // cell of the smaller value
                int rj = v1 < v2 ? r2 : r1;
                if (ht[c][rj] < ht[c][ri]) {
                    acc.push_back({c + 1, ht[c][ri], ht[c][rj],
                                   {t.at(ri, c), t.at(rj, c), c + 1}});
                }
            }
    }
    std::sort(acc.begin(), acc.end(), [](const keyed& x, const keyed& y) {
        return std::tie(x.col, x.hmax, x.hmin) < std::tie(y.col, y.hmax, y.hmin);
    });
    std::vector<inversion_pair> out;
    out.reserve(acc.size());
    for (auto& k : acc) out.push_back(k.p);
    return out;
}

inline int n_inv(const tableau& t) {
    auto ht = height_orders(t);
    const shape& s = t.shp();
    int count = 0;
    for (int c = 0; c < s.cols(); ++c) {
        int h = s.col_height(c);
        for (int r1 = 0; r1 < h; ++r1)
            for (int r2 = r1 + 1; r2 < h; ++r2) {
                int v1 = t.at(r1, c), v2 = t.at(r2, c);
                if (v1 == v2) continue;
                int ri = v1 < v2 ? r1 : r2;
                int rj = v1 < v2 ? r2 : r1;
                if (ht[c][rj] < ht[c][ri]) ++count;
            }
    }
    return count;
}

// Physically column-sorted; equivalent to n_inv == 0.
inline bool is_semistandard(const tableau& t) {
    const shape& s = t.shp();
    for (int c = 0; c < s.cols(); ++c) {
        int h = s.col_height(c);
        for (int r = 1; r < h; ++r)
            if (t.at(r, c) < t.at(r - 1, c)) return false;
    }
    return true;
}

// Sorts every column weakly increasing top to bottom; the unique semistandard
// tableau with the same columns.
inline tableau standardize(const tableau& t) {
    auto rows = t.rows();
    const shape& s = t.shp();
    for (int c = 0; c < s.cols(); ++c) {
        int h = s.col_height(c);
        std::vector<int> col(h);
        for (int r = 0; r < h; ++r) col[r] = rows[r][c];
        std::sort(col.begin(), col.end());
        for (int r = 0; r < h; ++r) rows[r][c] = col[r];
    }
    for (const auto& row : rows)
        for (std::size_t c = 1; c < row.size(); ++c)
            require_internal(row[c] > row[c - 1],
                             "standardization must stay row-strict");
    return tableau::unchecked(t.shp(), std::move(rows));
}

// ---------------------------------------------------------------------------
// Height-sequence coordinates: S[c][h-1] is the value at height h of column c.
// The map tableau <-> sequences is bijective; rebuilding works right to left
// because each column's cell/height assignment depends only on the column to
// its right.
// ---------------------------------------------------------------------------

inline std::vector<std::vector<int>> height_sequences(const tableau& t) {
    auto ht = height_orders(t);
    const shape& s = t.shp();
    std::vector<std::vector<int>> seq(s.cols());
    for (int c = 0; c < s.cols(); ++c) {
        int h = s.col_height(c);
        seq[c].resize(h);
        for (int r = 0; r < h; ++r) seq[c][ht[c][r] - 1] = t.at(r, c);
    }
    return seq;
}

// Returns nullopt when the rebuilt filling is not row-strict.
inline std::optional<tableau> tableau_from_height_sequences(
    const shape& s, const std::vector<std::vector<int>>& seq) {
    int ncols = s.cols();
    require_internal(static_cast<int>(seq.size()) == ncols,
                     "one height sequence per column");
    std::vector<std::vector<int>> rows(s.rows());
    for (int r = 0; r < s.rows(); ++r) rows[r].resize(s.row_len(r));
    std::vector<int> ht_right;  // heights of the column just rebuilt
    for (int c = ncols - 1; c >= 0; --c) {
        int h = s.col_height(c);
        require_internal(static_cast<int>(seq[c].size()) == h,
                         "sequence length must match column height");
        int hr = c + 1 < ncols ? s.col_height(c + 1) : 0;
        std::vector<int> ht_cur(h);
        std::vector<int> order(hr);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            int vx = rows[x][c + 1], vy = rows[y][c + 1];
            if (vx != vy) return vx < vy;
            return ht_right[x] < ht_right[y];
        });
        for (int i = 0; i < hr; ++i) ht_cur[order[i]] = i + 1;
        for (int r = hr; r < h; ++r) ht_cur[r] = r + 1;
        for (int r = 0; r < h; ++r) rows[r][c] = seq[c][ht_cur[r] - 1];
        ht_right = std::move(ht_cur);
    }
    for (const auto& row : rows)
        for (std::size_t c = 1; c < row.size(); ++c)
            if (row[c] <= row[c - 1]) return std::nullopt;
    return tableau::unchecked(s, std::move(rows));
}

}  // namespace invtab
