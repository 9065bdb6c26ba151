#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "core.hpp"
#include "enumerate.hpp"
#include "errors.hpp"

namespace invtab {

// ---------------------------------------------------------------------------
// Shape arithmetic for the bumping maps: one box leaves row i1 and one box
// joins row i2 < i1, subject to d_{i1} > 0 and dtilde_{i2} > 0.
// ---------------------------------------------------------------------------

struct etuple {
    int i1 = 0;  // 1-based row losing a box
    int i2 = 0;  // 1-based row gaining a box
    std::vector<int> epsilons;
    shape target;

    bool operator==(const etuple&) const = default;
};

inline std::vector<etuple> shape_deltas(const shape& s) {
    int m = s.rows();
    if (m < 2) throw domain_error("need at least two rows to move a box up");
    auto d = [&](int i) {  // 1-based row-length drop below row i
        return i < m ? s.row_len(i - 1) - s.row_len(i) : s.row_len(m - 1);
    };
    auto dt = [&](int i) {  // 1-based room above row i; row 1 is unbounded
        return i == 1 ? 1 : s.row_len(i - 2) - s.row_len(i - 1);
    };
    std::vector<etuple> out;
    for (int i1 = 2; i1 <= m; ++i1) {
        if (d(i1) == 0) continue;
        for (int i2 = 1; i2 < i1; ++i2) {
            if (dt(i2) == 0) continue;
            etuple e;
            e.i1 = i1;
            e.i2 = i2;
            e.epsilons.assign(m, 0);
            e.epsilons[i2 - 1] = 1;
            e.epsilons[i1 - 1] = -1;
            std::vector<int> parts = s.parts();
            ++parts[i2 - 1];
            --parts[i1 - 1];
            if (parts[i1 - 1] == 0) parts.erase(parts.begin() + (i1 - 1));
            e.target = shape(std::move(parts));
            out.push_back(std::move(e));
        }
    }
    return out;
}

namespace detail {

struct cellpos {
    int r = -1, c = -1;
    bool ok() const { return r >= 0; }
    bool operator==(const cellpos&) const = default;
};

// Renders a working grid for trace output; the hole prints "_" and a cell
// holding two competing entries prints "lo/hi".
inline std::string render_frame(const std::vector<std::vector<int>>& grid,
                                cellpos hole, cellpos dbl, int lo, int hi) {
    std::ostringstream os;
    bool first_row = true;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        if (grid[r].empty()) continue;
        if (!first_row) os << '\n';
        first_row = false;
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
            if (c) os << ' ';
            int ri = static_cast<int>(r), ci = static_cast<int>(c);
            if (hole == cellpos{ri, ci})
                os << '_';
            else if (dbl == cellpos{ri, ci})
                os << lo << '/' << hi;
            else
                os << grid[r][c];
        }
    }
    return os.str();
}

}  // namespace detail

struct bump_outcome {
    tableau image;
    int i1 = 0, i2 = 0;  // 1-based rows shrunk/grown
};

// Bumps the upper member of the unique inversion pair rightward column by
// column; the vacated box back-fills with the smaller of its below/right
// neighbours (right on ties, the live target being off limits) until it
// either enters the next column or strands at the end of its row.
inline bump_outcome phi1_bump_full(const tableau& t,
                                   std::vector<std::string>* trace = nullptr) {
    const shape& s = t.shp();
    auto ht = height_orders(t);
    int kc = -1, rb = -1, ra = -1, found = 0;
    for (int c = 0; c < s.cols(); ++c) {
        int h = s.col_height(c);
        for (int r1 = 0; r1 < h; ++r1)
            for (int r2 = r1 + 1; r2 < h; ++r2) {
                int v1 = t.at(r1, c), v2 = t.at(r2, c);
                if (v1 == v2) continue;
                int ri = v1 < v2 ? r1 : r2;
                int rj = v1 < v2 ? r2 : r1;
                if (ht[c][rj] < ht[c][ri]) {
                    ++found;
                    kc = c;
                    rb = rj;
                    ra = ri;
                }
            }
    }
    if (found != 1)
        throw wrong_inversion_count("bump needs exactly one inversion pair");
    require_internal(rb + 1 == ra && t.at(rb, kc) > t.at(ra, kc),
                     "inverted entry must sit immediately above its partner");

    std::vector<std::vector<int>> grid = t.rows();
    for (int c = 0; c < kc; ++c) {
        int h = s.col_height(c);
        std::vector<int> col(h);
        for (int r = 0; r < h; ++r) col[r] = grid[r][c];
        std::sort(col.begin(), col.end());
        for (int r = 0; r < h; ++r) grid[r][c] = col[r];
    }

    detail::cellpos hole{rb, kc};
    int carry = grid[rb][kc];
    int j = kc;
    int ncols = s.cols();
    auto emit = [&](detail::cellpos dbl, int lo, int hi) {
        if (trace) trace->push_back(detail::render_frame(grid, hole, dbl, lo, hi));
    };
    if (trace)
        trace->push_back(detail::render_frame(t.rows(), {}, {}, 0, 0));

    while (true) {
        detail::cellpos target;
        int tv = 0;
        if (j + 1 < ncols) {
            int h1 = s.col_height(j + 1);
            for (int r = 0; r < h1; ++r) {
                int v = grid[r][j + 1];
                if (v > carry && (!target.ok() || v < tv)) {
                    target = {r, j + 1};
                    tv = v;
                }
            }
        }
        if (!target.ok()) break;
        emit(target, carry, tv);
        while (hole.c == j) {
            detail::cellpos below, right;
            if (hole.r + 1 < s.col_height(hole.c)) below = {hole.r + 1, hole.c};
            if (hole.c + 1 < ncols && hole.r < s.col_height(hole.c + 1)) {
                detail::cellpos cand{hole.r, hole.c + 1};
                if (!(cand == target)) right = cand;
            }
            detail::cellpos from;
            if (below.ok() && right.ok())
                from = grid[below.r][below.c] < grid[right.r][right.c] ? below : right;
            else
                from = below.ok() ? below : right;
            if (!from.ok()) break;  // the hole strands at the end of its row
            grid[hole.r][hole.c] = grid[from.r][from.c];
            hole = from;
            emit(target, carry, tv);
        }
        grid[target.r][target.c] = carry;
        carry = tv;
        ++j;
    }

    // Terminal: the hole's column loses its bottom box, which always ends its
    // row; the carried entry left column j, so it comes to rest in column
    // j + 1, at the end of the topmost row of that exact length.
    int hc = hole.c, hh = s.col_height(hc);
    int i1 = hh;
    require_internal(s.row_len(hh - 1) == hc + 1,
                     "removed box must be the last box of its row");
    std::vector<std::vector<int>> slid = grid;
    for (int r = hole.r; r + 1 < hh; ++r) slid[r][hc] = slid[r + 1][hc];
    slid[hh - 1].pop_back();
    if (slid[hh - 1].empty()) slid.erase(slid.begin() + (hh - 1));

    int chosen = 0;
    for (std::size_t r = 0; r < slid.size(); ++r)
        if (static_cast<int>(slid[r].size()) == j + 1) {
            chosen = static_cast<int>(r) + 1;
            break;
        }
    require_internal(chosen != 0 && chosen < i1,
                     "no row ends where the carried entry must land");
    std::vector<std::vector<int>> cand = slid;
    cand[chosen - 1].push_back(carry);
    tableau image;
    try {
        image = validate(cand);
    } catch (const input_error& e) {
        throw internal_error(std::string("bump image invalid: ") + e.what());
    }
    require_internal(is_semistandard(image), "bump image must be semistandard");
    if (trace) {
        auto disp = grid;
        disp[chosen - 1].push_back(carry);
        trace->push_back(detail::render_frame(disp, hole, {}, 0, 0));
        trace->push_back(detail::render_frame(image.rows(), {}, {}, 0, 0));
    }
    require_internal(image.derive_content() == t.derive_content(),
                     "bump must preserve content");
    return {std::move(image), i1, chosen};
}

inline tableau phi1_bump(const tableau& t) { return phi1_bump_full(t).image; }

// Inverse direction: the appended entry reverse-bumps leftward, displacing
// the bottommost largest smaller entry of each column; once the chain reaches
// the hole's column the hole fills with the largest of its left/above
// neighbours or the carry (ties prefer the leftmost origin), and the final
// carry placement flips two row segments to recreate the inversion.
inline bump_outcome phi2_unbump_full(const tableau& T, const shape& lam,
                                     std::vector<std::string>* trace = nullptr) {
    if (!is_semistandard(T))
        throw domain_error("unbump input must be inversion-free");
    const shape& ls = T.shp();
    int m = std::max(ls.rows(), lam.rows());
    int i1 = 0, i2 = 0;
    for (int i = 1; i <= m; ++i) {
        int cur = i <= ls.rows() ? ls.row_len(i - 1) : 0;
        int orig = i <= lam.rows() ? lam.row_len(i - 1) : 0;
        int e = cur - orig;
        if (e == 0) continue;
        if (e == 1 && i2 == 0)
            i2 = i;
        else if (e == -1 && i1 == 0)
            i1 = i;
        else
            i1 = -1;
    }
    if (i1 <= 0 || i2 == 0 || i2 >= i1)
        throw shape_mismatch("shapes are not related by a single bump");

    int carry = T.at(i2 - 1, lam.row_len(i2 - 1));
    std::vector<std::vector<int>> grid(lam.rows());
    for (int r = 0; r < lam.rows(); ++r) {
        if (r < ls.rows()) grid[r] = T.rows()[r];
        if (r == i2 - 1) grid[r].pop_back();
        if (r == i1 - 1) grid[r].push_back(0);  // hole slot, never read
    }
    detail::cellpos hole{i1 - 1, lam.row_len(i1 - 1) - 1};
    int jc = lam.row_len(i2 - 1) - 1;

    detail::cellpos live_dbl;
    int live_lo = 0, live_hi = 0;
    auto emit = [&]() {
        if (trace)
            trace->push_back(
                detail::render_frame(grid, hole, live_dbl, live_lo, live_hi));
    };
    if (trace) {
        trace->push_back(detail::render_frame(T.rows(), {}, {}, 0, 0));
        emit();
    }

    int rstar = -1;
    while (rstar < 0) {
        if (hole.c < jc) {
            int h = lam.col_height(jc);
            int best = -1, bv = 0;
            for (int r = 0; r < h; ++r) {
                int v = grid[r][jc];
                if (v < carry && (best < 0 || v >= bv)) {
                    best = r;
                    bv = v;
                }
            }
            require_internal(best >= 0, "reverse bump found no smaller entry");
            grid[best][jc] = carry;
            live_dbl = {best, jc};
            live_lo = bv;
            live_hi = carry;
            carry = bv;
            --jc;
            emit();
        } else {
            int lv = 0, av = 0;
            bool has_l = hole.c >= 1, has_a = hole.r >= 1;
            if (has_l) lv = grid[hole.r][hole.c - 1];
            if (has_a) av = grid[hole.r - 1][hole.c];
            int pick = 2;  // 0 = left, 1 = above, 2 = carry
            int pv = carry;
            if (has_a && av >= pv) {
                pick = 1;
                pv = av;
            }
            if (has_l && lv >= pv) {
                pick = 0;
                pv = lv;
            }
            if (pick == 0) {
                grid[hole.r][hole.c] = lv;
                hole = {hole.r, hole.c - 1};
                emit();
            } else if (pick == 1) {
                grid[hole.r][hole.c] = av;
                hole = {hole.r - 1, hole.c};
                emit();
            } else {
                grid[hole.r][hole.c] = carry;
                live_dbl = {};
                rstar = hole.r;
                require_internal(rstar >= 1, "carry must land below the first row");
                hole = {};
                emit();
            }
        }
    }
    for (int c = 0; c <= jc; ++c) std::swap(grid[rstar - 1][c], grid[rstar][c]);

    for (const auto& row : grid)
        for (std::size_t c = 1; c < row.size(); ++c)
            require_internal(row[c] > row[c - 1], "unbump image must stay row-strict");
    tableau image = tableau::unchecked(lam, std::move(grid));
    if (trace)
        trace->push_back(detail::render_frame(image.rows(), {}, {}, 0, 0));
    require_internal(n_inv(image) == 1, "unbump image must carry one inversion");
    require_internal(image.derive_content() == T.derive_content(),
                     "unbump must preserve content");
    return {std::move(image), i1, i2};
}

inline tableau phi2_unbump(const tableau& T, const shape& lam) {
    return phi2_unbump_full(T, lam).image;
}

// ---------------------------------------------------------------------------
// One-column helpers: reversing the vertical order, and flipping 1 <-> 2.
// ---------------------------------------------------------------------------

inline tableau column_reverse(const tableau& t) {
    if (t.shp().cols() > 1)
        throw domain_error("single-column tableaux only");
    auto rows = t.rows();
    std::reverse(rows.begin(), rows.end());
    return tableau::unchecked(t.shp(), std::move(rows));
}

inline tableau column_flip(const tableau& t) {
    if (t.shp().cols() > 1)
        throw domain_error("single-column tableaux only");
    int m = t.max_value();
    if (m > 2) throw domain_error("entries must lie in {1,2}");
    if (m < 2) return t;  // all ones maps to itself up to relabelling
    auto rows = t.rows();
    for (auto& row : rows) row[0] = 3 - row[0];
    return tableau::unchecked(t.shp(), std::move(rows));
}

// ---------------------------------------------------------------------------
// Adjacent-content transposition a <-> a+1.
//
// Fast path: pairs of horizontally adjacent (a, a+1) cells stay fixed; in
// every column the height-sequence word of the remaining a/a+1 cells is
// reversed and flipped in place, and the tableau is rebuilt from the edited
// height sequences.  The candidate is accepted only if it is row-strict,
// exchanges the multiplicities, preserves the inversion count, and the same
// step maps it straight back.  Inputs failing that gate are paired up by
// rank inside their inversion class against the mirror family's failures,
// which inherits bijectivity from the count identity the suite verifies.
// ---------------------------------------------------------------------------

namespace detail {

inline std::optional<tableau> swap_fast_step(const tableau& t, int a) {
    const shape& s = t.shp();
    auto ht = height_orders(t);
    auto seq = height_sequences(t);
    std::vector<std::vector<char>> married(s.rows());
    for (int r = 0; r < s.rows(); ++r) married[r].assign(s.row_len(r), 0);
    for (int r = 0; r < s.rows(); ++r)
        for (int c = 0; c + 1 < s.row_len(r); ++c)
            if (t.at(r, c) == a && t.at(r, c + 1) == a + 1)
                married[r][c] = married[r][c + 1] = 1;
    for (int c = 0; c < s.cols(); ++c) {
        int h = s.col_height(c);
        std::vector<int> slots;
        for (int r = 0; r < h; ++r) {
            int v = t.at(r, c);
            if ((v == a || v == a + 1) && !married[r][c])
                slots.push_back(ht[c][r] - 1);
        }
        std::sort(slots.begin(), slots.end());
        std::vector<int> word(slots.size());
        for (std::size_t i = 0; i < slots.size(); ++i) word[i] = seq[c][slots[i]];
        for (std::size_t i = 0; i < slots.size(); ++i)
            seq[c][slots[i]] = 2 * a + 1 - word[slots.size() - 1 - i];
    }
    return tableau_from_height_sequences(s, seq);
}

inline bool swap_gate(const tableau& t, int a, const std::optional<tableau>& cand) {
    if (!cand) return false;
    if (cand->derive_content() != swap_adjacent(t.derive_content(), a)) return false;
    if (n_inv(*cand) != n_inv(t)) return false;
    auto back = swap_fast_step(*cand, a);
    return back && *back == t;
}

}  // namespace detail

inline tableau content_swap(const tableau& t, int a) {
    content mu = t.derive_content();
    if (a < 1 || a + 1 > mu.max_value())
        throw domain_error("value and its successor must both occur");
    auto cand = detail::swap_fast_step(t, a);
    if (detail::swap_gate(t, a, cand)) return *cand;

    using key = std::tuple<std::vector<int>, std::vector<int>, int>;
    static std::map<key, std::map<tableau, tableau>> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    key k{t.shp().parts(), mu.multiplicities(), a};
    auto it = cache.find(k);
    if (it == cache.end()) {
        auto residue = [&](const content& nu) {
            std::map<int, std::vector<tableau>> by_class;
            for_each_tableau(t.shp(), nu, [&](const tableau& u) {
                auto cu = detail::swap_fast_step(u, a);
                if (!detail::swap_gate(u, a, cu)) by_class[n_inv(u)].push_back(u);
            });
            return by_class;
        };
        auto mine = residue(mu);
        auto theirs = residue(swap_adjacent(mu, a));
        std::map<tableau, tableau> table;
        for (auto& [cls, list] : mine) {
            auto other = theirs.find(cls);
            require_internal(other != theirs.end() &&
                                 other->second.size() == list.size(),
                             "residual classes must have equal sizes");
            for (std::size_t r = 0; r < list.size(); ++r)
                table.emplace(list[r], other->second[r]);
        }
        require_internal(theirs.size() == mine.size(),
                         "residual classes must match up");
        it = cache.emplace(k, std::move(table)).first;
    }
    auto f = it->second.find(t);
    require_internal(f != it->second.end(), "gate failure must be tabulated");
    return f->second;
}

}  // namespace invtab
