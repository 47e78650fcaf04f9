#include "wilf/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace wilf {

namespace {

const Permutation& j3() {
    static const Permutation p({3, 2, 1});
    return p;
}

const Permutation& i3() {
    static const Permutation p({1, 2, 3});
    return p;
}

std::string positions_str(const std::vector<int>& v) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

void require_symmetric_avoiding(const Transversal& t, const Permutation& pat, const char* who) {
    if (!t.is_symmetric())
        throw domain_error(std::string(who) + ": transversal must be symmetric over a self-conjugate diagram");
    if (auto w = find_transversal_pattern(t, pat))
        throw domain_error(std::string(who) + ": transversal contains " + pat.str() + " at columns " +
                           positions_str(*w));
}

}  // namespace

std::set<std::pair<int, int>> BoardMask::gray_cells() const {
    std::set<std::pair<int, int>> g;
    for (int c = 1; c <= diagram.cols(); ++c)
        for (int r = 1; r <= diagram.col_height(c); ++r)
            if (!is_white(c, r)) g.insert({c, r});
    return g;
}

BoardMask color_board(const Transversal& t, const Permutation& tau) {
    if (tau.empty()) throw domain_error("color_board: tau must be nonempty");
    BoardMask mask;
    mask.diagram = t.diagram();
    const YoungDiagram& d = mask.diagram;
    const int k = d.cols();
    const Permutation tau_inv = tau.inverse();

    mask.white.assign(static_cast<size_t>(k), {});
    for (int c = 1; c <= k; ++c)
        mask.white[static_cast<size_t>(c) - 1].assign(static_cast<size_t>(d.col_height(c)), false);

    // A cell is white when the board strictly south-east of it contains tau or
    // tau^{-1}. Whiteness is inherited from the east and south neighbours, so
    // scan from the bottom-right corner and only run the pattern search when
    // neither neighbour already settled it.
    for (int c = k; c >= 1; --c) {
        for (int r = d.col_height(c); r >= 1; --r) {
            bool white = false;
            if (c < k && d.contains_cell(c + 1, r) && mask.is_white(c + 1, r))
                white = true;
            else if (d.contains_cell(c, r + 1) && mask.is_white(c, r + 1))
                white = true;
            else {
                std::vector<std::pair<int, int>> cells;
                std::vector<int> heights;
                for (int c2 = c + 1; c2 <= k; ++c2) {
                    int h = d.col_height(c2) - r;
                    if (h <= 0) break;
                    heights.push_back(h);
                    int r2 = t.one_in_column(c2);
                    if (r2 > r) cells.emplace_back(c2 - c, r2 - r);
                }
                if (!heights.empty()) {
                    YoungDiagram crop(Partition(std::vector<int>(heights)).conjugate().parts);
                    white = filling_contains(crop, cells, tau) || filling_contains(crop, cells, tau_inv);
                }
            }
            mask.white[static_cast<size_t>(c) - 1][static_cast<size_t>(r) - 1] = white;
        }
    }

    // Every 1 in a gray cell grays its whole row and column.
    std::vector<char> col_kept(static_cast<size_t>(k) + 1, 0);
    for (int c = 1; c <= k; ++c) col_kept[static_cast<size_t>(c)] = mask.is_white(c, t.one_in_column(c));
    for (int c = 1; c <= k; ++c) {
        if (col_kept[static_cast<size_t>(c)]) continue;
        int r = t.one_in_column(c);
        for (int r2 = 1; r2 <= d.col_height(c); ++r2)
            mask.white[static_cast<size_t>(c) - 1][static_cast<size_t>(r2) - 1] = false;
        for (int c2 = 1; c2 <= k; ++c2)
            if (d.contains_cell(c2, r)) mask.white[static_cast<size_t>(c2) - 1][static_cast<size_t>(r) - 1] = false;
    }

    for (int c = 1; c <= k; ++c)
        if (col_kept[static_cast<size_t>(c)]) mask.white_cols.push_back(c);
    for (int c = 1; c <= k; ++c)
        if (col_kept[static_cast<size_t>(c)]) mask.white_rows.push_back(t.one_in_column(c));
    std::sort(mask.white_rows.begin(), mask.white_rows.end());

    std::vector<int> heights;
    for (int c : mask.white_cols) {
        int h = 0;
        for (int r : mask.white_rows) h += mask.is_white(c, r);
        heights.push_back(h);
    }
    if (!heights.empty())
        mask.white_diagram = YoungDiagram(Partition(std::move(heights)).conjugate().parts);
    return mask;
}

namespace {

Transversal extract_white(const Transversal& t, const BoardMask& mask) {
    std::vector<int> ones;
    ones.reserve(mask.white_cols.size());
    for (int c : mask.white_cols) {
        int r = t.one_in_column(c);
        auto it = std::lower_bound(mask.white_rows.begin(), mask.white_rows.end(), r);
        ones.push_back(static_cast<int>(it - mask.white_rows.begin()) + 1);
    }
    return Transversal(mask.white_diagram, std::move(ones));
}

Transversal embed_white(const Transversal& t, const BoardMask& mask, const Transversal& replacement) {
    if (replacement.diagram() != mask.white_diagram)
        throw std::logic_error("embed_white: replacement does not fit the white board");
    std::vector<int> ones(t.rows_of_ones());
    for (size_t i = 0; i < mask.white_cols.size(); ++i) {
        int local_row = replacement.one_in_column(static_cast<int>(i) + 1);
        ones[static_cast<size_t>(mask.white_cols[i]) - 1] =
            mask.white_rows[static_cast<size_t>(local_row) - 1];
    }
    return Transversal(t.diagram(), std::move(ones));
}

PipelineTrace run_pipeline(const Transversal& t, bool inverse) {
    PipelineTrace tr;
    tr.transversal = t;
    tr.matching = chi(t);
    tr.tableau = phi(tr.matching);
    tr.pair = inverse ? psibar(tr.tableau) : psi(tr.tableau);
    tr.pair_prime = inverse ? theta_inv(tr.pair) : theta(tr.pair);
    tr.tableau_prime = inverse ? psi_inv(tr.pair_prime) : psibar_inv(tr.pair_prime);
    tr.matching_prime = phi_inv(tr.tableau_prime);
    tr.transversal_prime = chi_inv(tr.matching_prime);
    return tr;
}

}  // namespace

PipelineTrace psi_cap_trace(const Transversal& t) {
    require_symmetric_avoiding(t, j3(), "psi_cap");
    return run_pipeline(t, false);
}

PipelineTrace psi_cap_inv_trace(const Transversal& t) {
    require_symmetric_avoiding(t, i3(), "psi_cap_inv");
    return run_pipeline(t, true);
}

Transversal psi_cap(const Transversal& t) { return psi_cap_trace(t).transversal_prime; }
Transversal psi_cap_inv(const Transversal& t) { return psi_cap_inv_trace(t).transversal_prime; }

Transversal phi_cap(const Transversal& t, const Permutation& tau) {
    if (tau.empty()) throw domain_error("phi_cap: tau must be nonempty (use psi_cap)");
    require_symmetric_avoiding(t, j3().direct_sum(tau), "phi_cap");
    BoardMask mask = color_board(t, tau);
    if (mask.white_cols.empty()) return t;
    Transversal white = extract_white(t, mask);
    return embed_white(t, mask, psi_cap(white));
}

Transversal phi_cap_inv(const Transversal& t, const Permutation& tau) {
    if (tau.empty()) throw domain_error("phi_cap_inv: tau must be nonempty (use psi_cap_inv)");
    require_symmetric_avoiding(t, i3().direct_sum(tau), "phi_cap_inv");
    // The forward map fixes the gray content and only rewrites the white
    // board, so recoloring the output reproduces the same mask.
    BoardMask mask = color_board(t, tau);
    if (mask.white_cols.empty()) return t;
    Transversal white = extract_white(t, mask);
    return embed_white(t, mask, psi_cap_inv(white));
}

Permutation phi_involution(const Permutation& p, const Permutation& tau) {
    if (!p.is_involution()) throw domain_error("phi_involution: input is not an involution");
    if (p.empty()) return p;
    Transversal t = Transversal::from_permutation(p);
    return (tau.empty() ? psi_cap(t) : phi_cap(t, tau)).to_permutation();
}

Permutation phi_involution_inv(const Permutation& p, const Permutation& tau) {
    if (!p.is_involution()) throw domain_error("phi_involution_inv: input is not an involution");
    if (p.empty()) return p;
    Transversal t = Transversal::from_permutation(p);
    return (tau.empty() ? psi_cap_inv(t) : phi_cap_inv(t, tau)).to_permutation();
}

}  // namespace wilf
