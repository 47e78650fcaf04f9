#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wilf/matching.hpp"
#include "wilf/permutation.hpp"

namespace wilf {

/// A Young diagram given by its row lengths (rows numbered top to bottom,
/// columns left to right, both 1-indexed).
struct YoungDiagram {
    std::vector<int> row_lengths;

    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);
    static YoungDiagram square(int n);
    /// Reconstructs the diagram whose right boundary, traced from bottom-left
    /// to top-right, spells `word` (U = east, D = north).
    static YoungDiagram from_type(const std::string& word);

    int rows() const { return static_cast<int>(row_lengths.size()); }
    int cols() const { return row_lengths.empty() ? 0 : row_lengths.front(); }
    int row_length(int r) const {
        return r <= rows() ? row_lengths[static_cast<size_t>(r) - 1] : 0;
    }
    int col_height(int c) const;
    bool contains_cell(int col, int row) const { return col >= 1 && row >= 1 && col <= row_length(row); }
    YoungDiagram conjugate() const;
    bool self_conjugate() const { return row_lengths == conjugate().row_lengths; }

    auto operator<=>(const YoungDiagram&) const = default;
};

/// A 01-filling of a Young diagram with exactly one 1 per row and per column.
/// Column i holds its 1 in row rows_of_ones()[i-1].
class Transversal {
public:
    Transversal() = default;
    Transversal(YoungDiagram diagram, std::vector<int> rows_of_ones);

    const YoungDiagram& diagram() const { return diagram_; }
    const std::vector<int>& rows_of_ones() const { return ones_; }
    int cols() const { return static_cast<int>(ones_.size()); }
    int one_in_column(int c) const { return ones_[static_cast<size_t>(c) - 1]; }

    bool is_symmetric() const;
    /// Permutation matrix of p on the square diagram.
    static Transversal from_permutation(const Permutation& p);
    /// Inverse of from_permutation; requires a square diagram.
    Permutation to_permutation() const;

    auto operator<=>(const Transversal&) const = default;

private:
    YoungDiagram diagram_;
    std::vector<int> ones_;
};

std::string type_of(const YoungDiagram& d);
std::string type_of(const Transversal& t);

/// Pattern containment for arbitrary 01-fillings of a Young board: cells are
/// (col,row) pairs, at most one per row and column. An occurrence needs
/// columns c_1<...<c_m and rows r_1<...<r_m realizing the pattern matrix with
/// the whole m x m grid inside the board.
bool filling_contains(const YoungDiagram& board, const std::vector<std::pair<int, int>>& cells,
                      const Permutation& pattern);

bool transversal_contains(const Transversal& t, const Permutation& pattern);
/// Columns of an occurrence, ascending, or nullopt.
std::optional<std::vector<int>> find_transversal_pattern(const Transversal& t, const Permutation& pattern);

/// Columns i with three equal neighbouring column heights and a strict local
/// maximum of the 1-rows: c_{i-1}=c_i=c_{i+1} and t_{i-1} < t_i > t_{i+1}.
std::set<int> transversal_peaks(const Transversal& t);

/// Arc between the i-th left-to-right opener and the j-th right-to-left
/// closer for every 1 in square (i, j); type is preserved.
Matching chi(const Transversal& t);
Transversal chi_inv(const Matching& m);

/// All symmetric transversals of a self-conjugate diagram, deterministic
/// order (smallest unfixed column first, candidate rows ascending).
void for_each_symmetric_transversal(const YoungDiagram& d,
                                    const std::function<void(const Transversal&)>& fn);

/// All self-conjugate Young diagrams with at most `max_cols` columns,
/// excluding the empty one, in a fixed deterministic order.
std::vector<YoungDiagram> self_conjugate_diagrams(int max_cols);

}  // namespace wilf
