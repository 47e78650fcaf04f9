#pragma once

#include <vector>

#include "wilf/fillings.hpp"
#include "wilf/paths.hpp"

namespace wilf {

/// White/gray cell mask of a diagram together with the induced white
/// sub-diagram and the column/row index maps between the two.
struct BoardMask {
    YoungDiagram diagram;
    std::vector<std::vector<bool>> white;  // white[c-1][r-1], cells of `diagram` only
    std::vector<int> white_cols;           // ascending original column indices kept
    std::vector<int> white_rows;           // ascending original row indices kept
    YoungDiagram white_diagram;            // compacted white board

    bool is_white(int col, int row) const {
        return diagram.contains_cell(col, row) &&
               white[static_cast<size_t>(col) - 1][static_cast<size_t>(row) - 1];
    }
    std::set<std::pair<int, int>> gray_cells() const;
};

/// Colors (c,r) white when the board strictly below and to the right of it
/// contains tau or its inverse as a filling pattern, then grays the full rows
/// and columns of every 1 located in a gray cell.
BoardMask color_board(const Transversal& t, const Permutation& tau);

/// The seven-stage composed bijection on symmetric transversals: 321-avoiding
/// to 123-avoiding over the same self-conjugate diagram, peak set preserved.
Transversal psi_cap(const Transversal& t);
Transversal psi_cap_inv(const Transversal& t);

struct PipelineTrace {
    Transversal transversal;
    Matching matching;
    OscillatingTableau tableau;
    DyckPair pair;
    DyckPair pair_prime;
    OscillatingTableau tableau_prime;
    Matching matching_prime;
    Transversal transversal_prime;
};

PipelineTrace psi_cap_trace(const Transversal& t);
PipelineTrace psi_cap_inv_trace(const Transversal& t);

/// Color the board for tau, apply psi_cap to the white part, restore the gray
/// content: maps symmetric transversals avoiding 321(+)tau to ones avoiding
/// 123(+)tau over the same diagram with the same peak set.
Transversal phi_cap(const Transversal& t, const Permutation& tau);
Transversal phi_cap_inv(const Transversal& t, const Permutation& tau);

/// phi_cap on the permutation matrix of an involution; an empty tau routes to
/// the plain seven-stage map.
Permutation phi_involution(const Permutation& p, const Permutation& tau);
Permutation phi_involution_inv(const Permutation& p, const Permutation& tau);

}  // namespace wilf
