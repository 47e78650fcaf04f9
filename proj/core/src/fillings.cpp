#include "wilf/fillings.hpp"

#include <algorithm>

namespace wilf {

YoungDiagram::YoungDiagram(std::vector<int> rows) : row_lengths(std::move(rows)) {
    for (size_t i = 0; i < row_lengths.size(); ++i) {
        if (row_lengths[i] <= 0) throw domain_error("diagram row lengths must be positive");
        if (i > 0 && row_lengths[i] > row_lengths[i - 1])
            throw domain_error("diagram row lengths must weakly decrease");
    }
}

YoungDiagram YoungDiagram::square(int n) {
    return YoungDiagram(std::vector<int>(static_cast<size_t>(n), n));
}

YoungDiagram YoungDiagram::from_type(const std::string& word) {
    if (word.empty()) return YoungDiagram();
    // The d-th D from the left closes the d-th row from the bottom; its length
    // is the number of U's before it.
    int total_d = 0;
    for (char c : word) {
        if (c != 'U' && c != 'D') throw domain_error("type word must be over {U,D}");
        total_d += (c == 'D');
    }
    std::vector<int> rows(static_cast<size_t>(total_d), 0);
    int us = 0, ds = 0;
    for (char c : word) {
        if (c == 'U') {
            ++us;
        } else {
            rows[static_cast<size_t>(total_d - 1 - ds)] = us;
            ++ds;
        }
    }
    YoungDiagram d(std::move(rows));
    if (type_of(d) != word) throw domain_error("word does not trace a Young diagram boundary");
    return d;
}

int YoungDiagram::col_height(int c) const {
    int h = 0;
    for (int len : row_lengths) h += (len >= c);
    return h;
}

YoungDiagram YoungDiagram::conjugate() const {
    std::vector<int> conj(static_cast<size_t>(cols()));
    for (int c = 1; c <= cols(); ++c) conj[static_cast<size_t>(c) - 1] = col_height(c);
    return YoungDiagram(std::move(conj));
}

Transversal::Transversal(YoungDiagram diagram, std::vector<int> rows_of_ones)
    : diagram_(std::move(diagram)), ones_(std::move(rows_of_ones)) {
    const int k = diagram_.cols();
    if (static_cast<int>(ones_.size()) != k)
        throw domain_error("transversal needs one entry per column");
    if (diagram_.rows() != k)
        throw domain_error("transversal requires as many rows as columns");
    std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
    for (int c = 1; c <= k; ++c) {
        int r = one_in_column(c);
        if (r < 1 || r > k || seen[static_cast<size_t>(r)])
            throw domain_error("transversal rows must form a bijection with columns");
        seen[static_cast<size_t>(r)] = 1;
        if (!diagram_.contains_cell(c, r))
            throw domain_error("transversal has a 1 outside the diagram");
    }
}

bool Transversal::is_symmetric() const {
    if (!diagram_.self_conjugate()) return false;
    for (int c = 1; c <= cols(); ++c)
        if (one_in_column(one_in_column(c)) != c) return false;
    return true;
}

Transversal Transversal::from_permutation(const Permutation& p) {
    return Transversal(YoungDiagram::square(p.size()), p.word());
}

Permutation Transversal::to_permutation() const {
    if (diagram_ != YoungDiagram::square(cols()))
        throw domain_error("to_permutation requires a square diagram");
    return Permutation(ones_);
}

std::string type_of(const YoungDiagram& d) {
    // Trace the right boundary from bottom-left to top-right: one east step
    // under each column, one north step past each row.
    std::string t;
    t.reserve(static_cast<size_t>(d.rows() + d.cols()));
    int col = 1;
    for (int r = d.rows(); r >= 1; --r) {
        while (col <= d.row_length(r)) {
            t.push_back('U');
            ++col;
        }
        t.push_back('D');
    }
    return t;
}

std::string type_of(const Transversal& t) { return type_of(t.diagram()); }

namespace {

// Backtracking over cells sorted by column; maintains order-isomorphism of
// the chosen rows with the pattern and prunes columns too short to cover the
// rows already chosen.
bool search_filling(const YoungDiagram& board, const std::vector<std::pair<int, int>>& cells,
                    const Permutation& pat, size_t k, size_t from, std::vector<size_t>& chosen,
                    int max_row) {
    const size_t m = static_cast<size_t>(pat.size());
    if (k == m) return true;
    for (size_t i = from; i + (m - k) <= cells.size(); ++i) {
        auto [col, row] = cells[i];
        if (board.col_height(col) < std::max(max_row, row)) continue;
        bool ok = true;
        for (size_t t = 0; t < k && ok; ++t) {
            bool pat_less = pat.at(static_cast<int>(t) + 1) < pat.at(static_cast<int>(k) + 1);
            bool row_less = cells[chosen[t]].second < row;
            ok = (pat_less == row_less);
        }
        if (!ok) continue;
        chosen.push_back(i);
        if (search_filling(board, cells, pat, k + 1, i + 1, chosen, std::max(max_row, row))) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool filling_contains(const YoungDiagram& board, const std::vector<std::pair<int, int>>& cells,
                      const Permutation& pattern) {
    if (pattern.empty()) return true;
    if (static_cast<size_t>(pattern.size()) > cells.size()) return false;
    std::vector<std::pair<int, int>> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    std::vector<size_t> chosen;
    return search_filling(board, sorted, pattern, 0, 0, chosen, 0);
}

std::optional<std::vector<int>> find_transversal_pattern(const Transversal& t, const Permutation& pattern) {
    if (pattern.empty()) return std::vector<int>{};
    std::vector<std::pair<int, int>> cells;
    cells.reserve(static_cast<size_t>(t.cols()));
    for (int c = 1; c <= t.cols(); ++c) cells.emplace_back(c, t.one_in_column(c));
    std::vector<size_t> chosen;
    if (static_cast<size_t>(pattern.size()) <= cells.size() &&
        search_filling(t.diagram(), cells, pattern, 0, 0, chosen, 0)) {
        std::vector<int> cols;
        for (size_t i : chosen) cols.push_back(cells[i].first);
        return cols;
    }
    return std::nullopt;
}

bool transversal_contains(const Transversal& t, const Permutation& pattern) {
    return find_transversal_pattern(t, pattern).has_value();
}

std::set<int> transversal_peaks(const Transversal& t) {
    std::set<int> peaks;
    const auto& d = t.diagram();
    for (int i = 2; i < t.cols(); ++i) {
        if (d.col_height(i - 1) != d.col_height(i) || d.col_height(i) != d.col_height(i + 1)) continue;
        if (t.one_in_column(i - 1) < t.one_in_column(i) && t.one_in_column(i) > t.one_in_column(i + 1))
            peaks.insert(i);
    }
    return peaks;
}

Matching chi(const Transversal& t) {
    const std::string word = type_of(t);
    const int n2 = static_cast<int>(word.size());
    std::vector<int> opener_at, closer_at;  // ordinal -> position
    for (int p = 1; p <= n2; ++p)
        (word[static_cast<size_t>(p) - 1] == 'U' ? opener_at : closer_at).push_back(p);
    std::reverse(closer_at.begin(), closer_at.end());  // j-th right-to-left closer = row j
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<size_t>(t.cols()));
    for (int c = 1; c <= t.cols(); ++c) {
        int r = t.one_in_column(c);
        arcs.emplace_back(opener_at[static_cast<size_t>(c) - 1], closer_at[static_cast<size_t>(r) - 1]);
    }
    return Matching(std::move(arcs));
}

Transversal chi_inv(const Matching& m) {
    const std::string word = m.type();
    YoungDiagram d = YoungDiagram::from_type(word);
    const int n2 = m.points();
    std::vector<int> opener_ordinal(static_cast<size_t>(n2) + 1, 0);
    std::vector<int> closer_ordinal(static_cast<size_t>(n2) + 1, 0);
    int o = 0;
    for (int p = 1; p <= n2; ++p)
        if (m.is_opener(p)) opener_ordinal[static_cast<size_t>(p)] = ++o;
    int c = 0;
    for (int p = n2; p >= 1; --p)
        if (!m.is_opener(p)) closer_ordinal[static_cast<size_t>(p)] = ++c;
    std::vector<int> ones(static_cast<size_t>(o), 0);
    for (auto [i, j] : m.arcs())
        ones[static_cast<size_t>(opener_ordinal[static_cast<size_t>(i)]) - 1] =
            closer_ordinal[static_cast<size_t>(j)];
    return Transversal(std::move(d), std::move(ones));
}

namespace {

void symmetric_rec(const YoungDiagram& d, std::vector<int>& ones,
                   const std::function<void(const Transversal&)>& fn) {
    const int k = d.cols();
    int col = 1;
    while (col <= k && ones[static_cast<size_t>(col) - 1]) ++col;
    if (col > k) {
        fn(Transversal(d, ones));
        return;
    }
    for (int row = 1; row <= d.col_height(col); ++row) {
        bool row_used = false;
        for (int c2 = 1; c2 < col && !row_used; ++c2) row_used = (ones[static_cast<size_t>(c2) - 1] == row);
        if (row_used) continue;
        if (row == col) {
            ones[static_cast<size_t>(col) - 1] = row;
            symmetric_rec(d, ones, fn);
            ones[static_cast<size_t>(col) - 1] = 0;
        } else {
            // mirror column must be free and the mirror cell inside the board
            if (ones[static_cast<size_t>(row) - 1]) continue;
            if (!d.contains_cell(row, col)) continue;
            ones[static_cast<size_t>(col) - 1] = row;
            ones[static_cast<size_t>(row) - 1] = col;
            symmetric_rec(d, ones, fn);
            ones[static_cast<size_t>(col) - 1] = 0;
            ones[static_cast<size_t>(row) - 1] = 0;
        }
    }
}

}  // namespace

void for_each_symmetric_transversal(const YoungDiagram& d,
                                    const std::function<void(const Transversal&)>& fn) {
    if (!d.self_conjugate()) throw domain_error("symmetric transversals need a self-conjugate diagram");
    if (d.rows() == 0) {
        fn(Transversal());
        return;
    }
    if (d.rows() != d.cols()) return;  // no transversal exists
    std::vector<int> ones(static_cast<size_t>(d.cols()), 0);
    symmetric_rec(d, ones, fn);
}

std::vector<YoungDiagram> self_conjugate_diagrams(int max_cols) {
    // Self-conjugate diagrams in the box correspond to strictly decreasing
    // sequences of principal hook lengths 2a-1 with a <= max_cols.
    std::vector<YoungDiagram> out;
    std::vector<int> arms;  // arm+1 of each principal hook, strictly decreasing
    std::function<void(int)> rec = [&](int next) {
        if (!arms.empty()) {
            // Build the diagram from its principal hooks.
            int diag = static_cast<int>(arms.size());
            std::vector<int> rows;
            for (int i = 0; i < diag; ++i) rows.push_back(arms[static_cast<size_t>(i)] + i);
            for (int r = diag + 1; r <= arms[0]; ++r) {
                int len = 0;
                while (len < diag && arms[static_cast<size_t>(len)] + len >= r) ++len;
                rows.push_back(len);
            }
            out.emplace_back(std::move(rows));
        }
        for (int a = next; a >= 1; --a) {
            if (!arms.empty() && a >= arms.back()) continue;
            arms.push_back(a);
            rec(a - 1);
            arms.pop_back();
        }
    };
    rec(max_cols);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wilf
