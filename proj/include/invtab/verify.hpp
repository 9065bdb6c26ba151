#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bijections.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "io.hpp"
#include "qpoly.hpp"

namespace invtab {

struct check_result {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline int thread_budget() {
    if (const char* e = std::getenv("INVTAB_THREADS")) {
        int v = std::atoi(e);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Runs fn over [0, n) on a worker pool; returns the non-empty failure
// messages in index order, so output is independent of scheduling.
inline std::vector<std::string> run_units(
    std::size_t n, const std::function<std::string(std::size_t)>& fn) {
    std::vector<std::string> out(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                out[i] = fn(i);
            } catch (const std::exception& e) {
                out[i] = std::string("exception: ") + e.what();
            }
        }
    };
    std::size_t nt = std::min(static_cast<std::size_t>(thread_budget()),
                              std::max<std::size_t>(n, 1));
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < nt; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::vector<std::string> fails;
    for (auto& s : out)
        if (!s.empty()) fails.push_back(s);
    return fails;
}

inline std::vector<std::pair<shape, content>> desk_pairs(int max_cells) {
    std::vector<std::pair<shape, content>> out;
    for (int n = 0; n <= max_cells; ++n)
        for (const shape& s : partitions_of(n))
            for (const content& mu : compositions_of(n)) out.emplace_back(s, mu);
    return out;
}

inline std::string describe(const shape& s, const content& mu) {
    std::ostringstream os;
    os << "shape=(" << shape_to_string(s) << ") content=(";
    const auto& m = mu.multiplicities();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ',';
        os << m[i];
    }
    os << ')';
    return os.str();
}

inline check_result summarize(std::string name, std::size_t cases,
                              const std::vector<std::string>& fails) {
    check_result r;
    r.name = std::move(name);
    r.pass = fails.empty();
    if (r.pass) {
        r.detail = std::to_string(cases) + " cases";
    } else {
        r.detail = fails.front();
        if (fails.size() > 1)
            r.detail += " (and " + std::to_string(fails.size() - 1) + " more)";
    }
    return r;
}

}  // namespace detail

inline check_result check_standardize_kills_inversions(int max_cells) {
    auto prs = detail::desk_pairs(max_cells);
    auto fails = detail::run_units(prs.size(), [&](std::size_t i) {
        const auto& [s, mu] = prs[i];
        std::string bad;
        for_each_tableau(s, mu, [&](const tableau& t) {
            if (!bad.empty()) return;
            tableau st = standardize(t);
            if (n_inv(st) != 0 || !inversion_pairs(st).empty())
                bad = "residual inversions after standardize, " + detail::describe(s, mu);
        });
        return bad;
    });
    return detail::summarize("standardize-kills-inversions", prs.size(), fails);
}

inline check_result check_standardize_idempotent(int max_cells) {
    auto prs = detail::desk_pairs(max_cells);
    auto fails = detail::run_units(prs.size(), [&](std::size_t i) {
        const auto& [s, mu] = prs[i];
        std::string bad;
        for_each_tableau(s, mu, [&](const tableau& t) {
            if (!bad.empty()) return;
            tableau st = standardize(t);
            if (standardize(st) != st || st.shp() != t.shp() ||
                st.derive_content() != t.derive_content())
                bad = "standardize not idempotence-preserving, " + detail::describe(s, mu);
        });
        return bad;
    });
    return detail::summarize("standardize-idempotent-preserving", prs.size(), fails);
}

inline check_result check_pairs_strictly_ordered(int max_cells) {
    auto prs = detail::desk_pairs(max_cells);
    auto fails = detail::run_units(prs.size(), [&](std::size_t i) {
        const auto& [s, mu] = prs[i];
        std::string bad;
        for_each_tableau(s, mu, [&](const tableau& t) {
            if (!bad.empty()) return;
            auto ps = inversion_pairs(t);
            if (static_cast<int>(ps.size()) != n_inv(t)) {
                bad = "pair count disagrees with n_inv, " + detail::describe(s, mu);
                return;
            }
            for (const auto& p : ps)
                if (p.smaller >= p.larger)
                    bad = "non-strict pair emitted, " + detail::describe(s, mu);
        });
        return bad;
    });
    return detail::summarize("pairs-strictly-ordered", prs.size(), fails);
}

inline check_result check_semistandard_heights(int max_cells) {
    auto prs = detail::desk_pairs(max_cells);
    auto fails = detail::run_units(prs.size(), [&](std::size_t i) {
        const auto& [s, mu] = prs[i];
        std::string bad;
        for_each_tableau(s, mu, [&](const tableau& t) {
            if (!bad.empty() || !is_semistandard(t)) return;
            auto ht = height_orders(t);
            for (int c = 0; c < s.cols(); ++c)
                for (int r = 0; r < s.col_height(c); ++r)
                    if (ht[c][r] != r + 1)
                        bad = "semistandard height differs from row, " +
                              detail::describe(s, mu);
        });
        return bad;
    });
    return detail::summarize("semistandard-heights-match-rows", prs.size(), fails);
}

inline check_result check_single_column_permutation(int max_cells) {
    std::vector<int> sizes;
    for (int n = 1; n <= max_cells; ++n) sizes.push_back(n);
    auto fails = detail::run_units(sizes.size(), [&](std::size_t i) {
        int n = sizes[i];
        shape s(std::vector<int>(n, 1));
        content mu(std::vector<int>(n, 1));
        std::string bad;
        for_each_tableau(s, mu, [&](const tableau& t) {
            if (!bad.empty()) return;
            int perm_inv = 0;
            for (int r1 = 0; r1 < n; ++r1)
                for (int r2 = r1 + 1; r2 < n; ++r2)
                    if (t.at(r1, 0) > t.at(r2, 0)) ++perm_inv;
            if (n_inv(t) != perm_inv)
                bad = "column inversions differ from permutation inversions, n=" +
                      std::to_string(n);
        });
        return bad;
    });
    return detail::summarize("single-column-permutation-inversions", sizes.size(), fails);
}

inline check_result check_permutation_invariance(int max_cells) {
    auto prs = detail::desk_pairs(max_cells);
    std::vector<std::vector<bigint>> counts(prs.size());
    detail::run_units(prs.size(), [&](std::size_t i) {
        counts[i] = inversion_distribution(prs[i].first, prs[i].second).counts;
        return std::string();
    });
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> index;
    for (std::size_t i = 0; i < prs.size(); ++i)
        index[{prs[i].first.parts(), prs[i].second.multiplicities()}] = i;
    std::vector<std::string> fails;
    std::size_t cases = 0;
    for (std::size_t i = 0; i < prs.size(); ++i) {
        const auto& [s, mu] = prs[i];
        for (int a = 1; a + 1 <= mu.max_value(); ++a) {
            ++cases;
            content smu = swap_adjacent(mu, a);
            std::size_t j = index.at({s.parts(), smu.multiplicities()});
            if (counts[i] != counts[j]) {
                fails.push_back("distribution changed under transposition at " +
                                std::to_string(a) + ", " + detail::describe(s, mu));
            }
        }
    }
    return detail::summarize("distribution-permutation-invariant", cases, fails);
}

inline check_result check_top_class(int max_cells) {
    auto prs = detail::desk_pairs(max_cells);
    auto fails = detail::run_units(prs.size(), [&](std::size_t i) {
        const auto& [s, mu] = prs[i];
        std::vector<bigint> counts;
        int best = -1;
        tableau maximizer;
        for_each_tableau(s, mu, [&](const tableau& t) {
            int v = n_inv(t);
            if (v >= static_cast<int>(counts.size())) counts.resize(v + 1, 0);
            ++counts[v];
            if (v > best) {
                best = v;
                maximizer = t;
            }
        });
        bigint total = 0;
        for (const bigint& c : counts) total += c;
        if (total == 0) {
            try {
                max_inversions(s, mu);
                return "empty family but witness construction succeeded, " +
                       detail::describe(s, mu);
            } catch (const empty_family&) {
                return std::string();
            }
        }
        max_inversion_report rep = max_inversions(s, mu);
        if (rep.value != best)
            return "formula max differs from enumerated max, " + detail::describe(s, mu);
        if (counts[best] != 1)
            return "top inversion class not a singleton, " + detail::describe(s, mu);
        if (!(rep.witness == maximizer))
            return "witness differs from the unique maximizer, " + detail::describe(s, mu);
        return std::string();
    });
    return detail::summarize("top-class-unique-maximizer", prs.size(), fails);
}

inline check_result check_distinct_totals(int max_cells) {
    std::vector<shape> shapes;
    for (int n = 1; n <= max_cells; ++n)
        for (const shape& s : partitions_of(n)) shapes.push_back(s);
    auto fails = detail::run_units(shapes.size(), [&](std::size_t i) {
        const shape& s = shapes[i];
        content mu(std::vector<int>(s.cells(), 1));
        bigint want = factorial(s.cells());
        for (int r = 0; r < s.rows(); ++r) want /= factorial(s.row_len(r));
        distribution d = inversion_distribution(s, mu);
        if (d.total() != want || total_counts(s, mu) != want)
            return "distinct-content total mismatch, " + detail::describe(s, mu);
        return std::string();
    });
    return detail::summarize("distinct-content-product-total", shapes.size(), fails);
}

inline check_result check_q_binomial_symmetry(int limit = 12) {
    std::vector<std::string> fails;
    std::size_t cases = 0;
    for (int a = 0; a <= limit; ++a)
        for (int b = 0; b <= a; ++b) {
            ++cases;
            if (!(q_binomial(a, b) == q_binomial(a, a - b)))
                fails.push_back("q-binomial asymmetry at a=" + std::to_string(a) +
                                " b=" + std::to_string(b));
        }
    return detail::summarize("q-binomial-symmetric", cases, fails);
}

inline check_result check_one_column_gf(int max_cells) {
    std::vector<content> contents;
    for (int n = 0; n <= max_cells; ++n)
        for (const content& mu : compositions_of(n)) contents.push_back(mu);
    auto fails = detail::run_units(contents.size(), [&](std::size_t i) {
        const content& mu = contents[i];
        shape s(std::vector<int>(mu.total(), 1));
        qpolynomial gf = one_column_gf(mu);
        distribution d = inversion_distribution(s, mu);
        if (!(gf == d.gf()))
            return "one-column gf differs from enumeration, " + detail::describe(s, mu);
        if (gf.eval_at_one() != total_counts(s, mu))
            return "gf at q=1 differs from closed-form total, " + detail::describe(s, mu);
        return std::string();
    });
    return detail::summarize("one-column-gf-exact", contents.size(), fails);
}

inline check_result check_two_row(int max_cells) {
    std::vector<std::pair<int, content>> units;
    for (int n = 1; 2 * n <= max_cells; ++n)
        for (const content& mu : compositions_of(2 * n)) units.emplace_back(n, mu);
    auto fails = detail::run_units(units.size(), [&](std::size_t i) {
        auto [n, mu] = units[i];
        shape s(std::vector<int>{n, n});
        distribution formula = two_row_distribution(n, mu);
        distribution brute = inversion_distribution(s, mu);
        if (formula.counts != brute.counts)
            return "two-row formula differs from enumeration, " + detail::describe(s, mu);
        bool small = true;
        int doubled = 0;
        for (int k = 1; k <= mu.max_value(); ++k) {
            if (mu.count(k) > 2) small = false;
            if (mu.count(k) == 2) ++doubled;
        }
        if (small) {
            int np = n - doubled;
            if (brute.total() != binomial(2 * np, np))
                return "two-row total differs from binomial, " + detail::describe(s, mu);
        }
        return std::string();
    });
    return detail::summarize("two-row-distribution-exact", units.size(), fails);
}

inline check_result check_content_swap(int max_cells) {
    auto prs = detail::desk_pairs(max_cells);
    std::vector<std::tuple<shape, content, int>> units;
    for (const auto& [s, mu] : prs)
        for (int a = 1; a + 1 <= mu.max_value(); ++a) units.emplace_back(s, mu, a);
    auto fails = detail::run_units(units.size(), [&](std::size_t i) {
        const auto& [s, mu, a] = units[i];
        content smu = swap_adjacent(mu, a);
        std::map<int, std::set<tableau>> want;
        for_each_tableau(s, smu, [&](const tableau& u) { want[n_inv(u)].insert(u); });
        std::map<int, std::set<tableau>> got;
        std::size_t total = 0;
        std::string bad;
        for_each_tableau(s, mu, [&](const tableau& t) {
            if (!bad.empty()) return;
            ++total;
            tableau u = content_swap(t, a);
            if (u.shp() != s || n_inv(u) != n_inv(t) ||
                u.derive_content() != smu) {
                bad = "swap image breaks an invariant, " + detail::describe(s, mu);
                return;
            }
            if (!(content_swap(u, a) == t)) {
                bad = "swap applied twice is not the identity, " + detail::describe(s, mu);
                return;
            }
            got[n_inv(u)].insert(u);
        });
        if (!bad.empty()) return bad;
        std::size_t image = 0;
        for (auto& [cls, st] : got) image += st.size();
        if (image != total || got != want)
            return "swap is not a per-class bijection, " + detail::describe(s, mu);
        return std::string();
    });
    return detail::summarize("content-swap-bijection", units.size(), fails);
}

inline check_result check_bump_roundtrip(int max_cells) {
    auto prs = detail::desk_pairs(max_cells);
    std::vector<std::pair<shape, content>> units;
    for (const auto& pr : prs)
        if (pr.first.rows() >= 2) units.push_back(pr);
    auto fails = detail::run_units(units.size(), [&](std::size_t i) {
        const auto& [s, mu] = units[i];
        std::vector<tableau> s1;
        for_each_tableau(s, mu, [&](const tableau& t) {
            if (n_inv(t) == 1) s1.push_back(t);
        });
        auto deltas = shape_deltas(s);
        std::set<std::vector<int>> targets;
        std::size_t s0_total = 0;
        std::string bad;
        for (const etuple& e : deltas) {
            targets.insert(e.target.parts());
            std::vector<tableau> s0;
            for_each_tableau(e.target, mu, [&](const tableau& t) {
                if (n_inv(t) == 0) s0.push_back(t);
            });
            s0_total += s0.size();
            for (const tableau& T : s0) {
                tableau back = phi2_unbump(T, s);
                if (!(phi1_bump(back) == T)) {
                    bad = "bump of unbump is not the identity, " +
                          detail::describe(s, mu);
                    break;
                }
            }
            if (!bad.empty()) break;
        }
        if (!bad.empty()) return bad;
        if (s1.size() != s0_total)
            return "|S_1| differs from the summed |S_0|, " + detail::describe(s, mu);
        for (const tableau& t : s1) {
            tableau out = phi1_bump(t);
            if (n_inv(out) != 0 || !targets.count(out.shp().parts()))
                return "bump image leaves the target family, " + detail::describe(s, mu);
            if (!(phi2_unbump(out, s) == t))
                return "unbump of bump is not the identity, " + detail::describe(s, mu);
        }
        return std::string();
    });
    return detail::summarize("bump-roundtrip-counts", units.size(), fails);
}

inline check_result check_column_involutions(int max_cells) {
    std::vector<std::pair<int, int>> units;  // (N, count of 1s)
    for (int n = 1; n <= max_cells; ++n)
        for (int j = 1; j <= n; ++j) units.emplace_back(n, j);
    auto fails = detail::run_units(units.size(), [&](std::size_t i) {
        auto [n, j] = units[i];
        shape s(std::vector<int>(n, 1));
        std::vector<int> mult{j};
        if (j < n) mult.push_back(n - j);
        content mu(mult);
        int rhs = j * (n - j);
        std::string bad;
        for_each_tableau(s, mu, [&](const tableau& t) {
            if (!bad.empty()) return;
            if (n_inv(t) + n_inv(column_reverse(t)) != rhs ||
                n_inv(t) + n_inv(column_flip(t)) != rhs)
                bad = "column involution sum violated, " + detail::describe(s, mu);
        });
        return bad;
    });
    return detail::summarize("column-involution-sums", units.size(), fails);
}

inline std::vector<check_result> run_all_checks(int max_cells) {
    return {
        check_standardize_kills_inversions(max_cells),
        check_standardize_idempotent(max_cells),
        check_pairs_strictly_ordered(max_cells),
        check_semistandard_heights(max_cells),
        check_single_column_permutation(max_cells),
        check_permutation_invariance(max_cells),
        check_top_class(max_cells),
        check_distinct_totals(max_cells),
        check_q_binomial_symmetry(),
        check_one_column_gf(max_cells),
        check_two_row(max_cells),
        check_content_swap(max_cells),
        check_bump_roundtrip(max_cells),
        check_column_involutions(max_cells),
    };
}

}  // namespace invtab
