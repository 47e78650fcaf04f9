#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// Oracles deliberately avoid the library's own algorithms: containment by raw
// subsequence scan, crossing/nesting by arc-subset enumeration, tableaux by
// direct recursive generation.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "wilf/fillings.hpp"
#include "wilf/matching.hpp"
#include "wilf/paths.hpp"
#include "wilf/permutation.hpp"
#include "wilf/tableaux.hpp"

namespace testsupport {

using namespace wilf;

// Runs fn, returning the exception message ("" when nothing was thrown).
template <typename Fn>
inline std::string capture_error(Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

// A symmetric 321-avoiding transversal on the board (8,8,8,8,8,5,5,5) and the
// 123-avoiding transversal the seven-stage map sends it to, with every
// intermediate object of the chain. Used as the bit-exact worked example.
inline Transversal sample_321_transversal() {
    return Transversal(YoungDiagram({8, 8, 8, 8, 8, 5, 5, 5}), {6, 2, 8, 4, 7, 1, 5, 3});
}

inline Transversal sample_123_transversal() {
    return Transversal(YoungDiagram({8, 8, 8, 8, 8, 5, 5, 5}), {6, 4, 8, 2, 7, 1, 5, 3});
}

inline Matching sample_crossing_matching() {
    return Matching({{1, 8}, {2, 15}, {3, 6}, {4, 13}, {5, 7}, {9, 16}, {10, 12}, {11, 14}});
}

inline Matching sample_nesting_matching() {
    return Matching({{1, 8}, {2, 13}, {3, 6}, {4, 15}, {5, 7}, {9, 16}, {10, 12}, {11, 14}});
}

inline OscillatingTableau sample_two_row_tableau() {
    auto part = [](std::vector<int> p) { return Partition(std::move(p)); };
    return OscillatingTableau({part({}), part({1}), part({1, 1}), part({2, 1}), part({2, 2}),
                               part({3, 2}), part({3, 1}), part({2, 1}), part({2}), part({2, 1}),
                               part({3, 1}), part({3, 2}), part({2, 2}), part({2, 1}), part({1, 1}),
                               part({1}), part({})});
}

inline OscillatingTableau sample_two_col_tableau() {
    auto part = [](std::vector<int> p) { return Partition(std::move(p)); };
    return OscillatingTableau({part({}), part({1}), part({1, 1}), part({2, 1}), part({2, 1, 1}),
                               part({2, 2, 1}), part({2, 1, 1}), part({1, 1, 1}), part({1, 1}),
                               part({1, 1, 1}), part({2, 1, 1}), part({2, 2, 1}), part({2, 1, 1}),
                               part({2, 1}), part({1, 1}), part({1}), part({})});
}

inline const char* kSampleTypeWord = "UUUUUDDDUUUDDDDD";
inline const char* kSamplePWord = "UUUUUDDDUUUDDDDD";
inline const char* kSampleQWord = "UDUDUUDUDUDDUDUD";
inline const char* kSampleQPrimeWord = "UUDUDUUDUDDUDUDD";

// Containment by scanning every subsequence of pattern length.
inline bool contains_by_scan(const Permutation& p, const Permutation& pat) {
    const int n = p.size(), m = pat.size();
    if (m == 0) return true;
    if (m > n) return false;
    std::vector<int> idx(static_cast<size_t>(m));
    std::function<bool(int, int)> rec = [&](int k, int from) {
        if (k == m) {
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    if ((pat.at(a + 1) < pat.at(b + 1)) !=
                        (p.at(idx[static_cast<size_t>(a)]) < p.at(idx[static_cast<size_t>(b)])))
                        return false;
            return true;
        }
        for (int i = from; i <= n - (m - k) + 1; ++i) {
            idx[static_cast<size_t>(k)] = i;
            if (rec(k + 1, i + 1)) return true;
        }
        return false;
    };
    return rec(0, 1);
}

inline int lis_by_scan(const Permutation& p) {
    const int n = p.size();
    int best = 0;
    std::vector<int> len(static_cast<size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j < i; ++j)
            if (p.at(j) < p.at(i))
                len[static_cast<size_t>(i)] = std::max(len[static_cast<size_t>(i)], len[static_cast<size_t>(j)] + 1);
        best = std::max(best, len[static_cast<size_t>(i)]);
    }
    return best;
}

// Largest k-crossing / k-nesting by checking every subset of arcs.
inline std::pair<int, int> crossing_nesting_by_subsets(const Matching& m) {
    const auto& arcs = m.arcs();
    const int k = static_cast<int>(arcs.size());
    int cr = 0, ne = 0;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<std::pair<int, int>> sub;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) sub.push_back(arcs[static_cast<size_t>(i)]);
        int sz = static_cast<int>(sub.size());
        bool crossing = true, nesting = true;
        for (int a = 0; a + 1 < sz; ++a) {
            crossing = crossing && sub[static_cast<size_t>(a)].first < sub[static_cast<size_t>(a) + 1].first;
            nesting = nesting && sub[static_cast<size_t>(a)].first < sub[static_cast<size_t>(a) + 1].first;
        }
        for (int a = 0; a + 1 < sz && crossing; ++a)
            crossing = sub[static_cast<size_t>(a)].second < sub[static_cast<size_t>(a) + 1].second;
        crossing = crossing && (sz < 2 || sub[static_cast<size_t>(sz) - 1].first < sub[0].second);
        for (int a = 0; a + 1 < sz && nesting; ++a)
            nesting = nesting && sub[static_cast<size_t>(a)].second > sub[static_cast<size_t>(a) + 1].second;
        nesting = nesting && (sz < 2 || sub[static_cast<size_t>(sz) - 1].first < sub[static_cast<size_t>(sz) - 1].second);
        if (crossing) cr = std::max(cr, sz);
        if (nesting) ne = std::max(ne, sz);
    }
    return {cr, ne};
}

// All standard Young tableaux with n cells and at most max_cols columns,
// generated directly by placing 1..n at addable corners.
inline std::vector<StandardYoungTableau> all_syt(int n, int max_cols) {
    std::vector<StandardYoungTableau> out;
    std::vector<std::vector<int>> rows;
    std::function<void(int)> rec = [&](int next) {
        if (next > n) {
            out.emplace_back(rows);
            return;
        }
        for (size_t r = 0; r <= rows.size(); ++r) {
            size_t len = r < rows.size() ? rows[r].size() : 0;
            if (static_cast<int>(len) >= max_cols) continue;
            if (r > 0 && rows[r - 1].size() <= len) continue;
            if (r == rows.size()) rows.emplace_back();
            rows[r].push_back(next);
            rec(next + 1);
            rows[r].pop_back();
            if (rows.back().empty()) rows.pop_back();
        }
    };
    rec(1);
    return out;
}

// All oscillating tableaux of length 2n whose shapes have at most two rows,
// generated directly on (x, y) pairs.
inline std::vector<OscillatingTableau> all_two_row_oscillating(int n) {
    std::vector<OscillatingTableau> out;
    std::vector<Partition> shapes{Partition{}};
    std::function<void(int, int, int)> rec = [&](int left, int x, int y) {
        if (left == 0) {
            if (x == 0 && y == 0) out.emplace_back(shapes);
            return;
        }
        const int moves[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (auto [dx, dy] : moves) {
            int nx = x + dx, ny = y + dy;
            if (nx < 0 || ny < 0 || nx < ny) continue;
            if (nx + ny > left - 1) continue;  // cannot return to empty in time
            std::vector<int> parts;
            if (nx > 0) parts.push_back(nx);
            if (ny > 0) parts.push_back(ny);
            shapes.emplace_back(std::move(parts));
            rec(left - 1, nx, ny);
            shapes.pop_back();
        }
    };
    rec(2 * n, 0, 0);
    return out;
}

}  // namespace testsupport
