#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wilf/permutation.hpp"

namespace wilf {

/// An integer partition: weakly decreasing positive parts. The empty
/// sequence is the empty partition.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int rows() const { return static_cast<int>(parts.size()); }
    int cols() const { return parts.empty() ? 0 : parts.front(); }
    int size() const;  // number of cells
    int part(int r) const { return r <= rows() ? parts[static_cast<size_t>(r) - 1] : 0; }
    bool contains_cell(int row, int col) const { return row >= 1 && col >= 1 && col <= part(row); }
    Partition conjugate() const;
    bool self_conjugate() const { return *this == conjugate(); }

    auto operator<=>(const Partition&) const = default;
};

/// (row, col) of the unique cell of `larger` not in `smaller`, if the two
/// shapes differ by exactly one cell.
std::optional<std::pair<int, int>> added_cell(const Partition& smaller, const Partition& larger);

/// A standard Young tableau: entries 1..n, rows and columns strictly increasing.
class StandardYoungTableau {
public:
    StandardYoungTableau() = default;
    explicit StandardYoungTableau(std::vector<std::vector<int>> rows);

    int size() const;
    int row_count() const { return static_cast<int>(rows_.size()); }
    int column_count() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
    int column_height(int c) const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int row, int col) const { return rows_[static_cast<size_t>(row) - 1][static_cast<size_t>(col) - 1]; }
    Partition shape() const;
    /// 1-indexed (row, col) of a value.
    std::pair<int, int> position_of(int value) const;
    bool empty() const { return rows_.empty(); }

    /// RSK row insertion; returns the cells touched on the bumping path,
    /// ending with the newly created cell.
    std::vector<std::pair<int, int>> insert(int value);
    /// Reverse RSK insertion starting from the corner cell (row, col):
    /// removes it, bumps upward, and returns the value expelled from row 1.
    int reverse_insert(int row, int col);
    /// Removes the cell holding `value`, which must be the maximum entry and
    /// occupy a removable corner.
    void remove_max(int value);
    /// Appends `value` at the end of `row` (creating the row if it is one past
    /// the last). The new cell must extend the shape and keep rows and columns
    /// strictly increasing; entries need not be 1..n.
    void place_at(int row, int value);

    auto operator<=>(const StandardYoungTableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

struct RankProfile {
    std::vector<int> ranks;                      // ranks[i-1] = rank of p(i)
    std::map<int, std::vector<int>> rank_classes;  // rank -> positions, ascending
    int max_rank = 0;
};

/// rank of p(i) = maximum length of an increasing subsequence ending at p(i).
RankProfile rank_sequence(const Permutation& p);

/// West's rank rearrangement: maps avoiders of 12...k to avoiders of
/// 12...(k-2) (+) 21 by redistributing the top-rank elements. west_f_inv
/// rearranges the elements of rank >= k-1 in decreasing order.
Permutation west_f(const Permutation& p, int k);
Permutation west_f_inv(const Permutation& p, int k);

/// RSK insertion tableau of an involution (equal to its recording tableau).
StandardYoungTableau rsk_involution(const Permutation& p);
Permutation rsk_involution_inv(const StandardYoungTableau& t);

/// {k : k+1 lies in a strictly lower row than k}.
std::set<int> syt_descents(const StandardYoungTableau& t);

/// Appends N+1, N+2, N+3 at the bottoms of columns 1, 2, 3 of a tableau with
/// N entries and at most three columns.
StandardYoungTableau eta(const StandardYoungTableau& t);
StandardYoungTableau eta_inv(const StandardYoungTableau& t);

/// rsk -> eta -> rsk^{-1}: sends an involution of length 2n-2 avoiding 1234
/// with descent set {1,2,4,6,...,2n-4} to one of length 2n+1 avoiding 1234
/// with descent set {1,2,4,6,...,2n-2}.
Permutation gamma_map(const Permutation& p);
Permutation gamma_inv(const Permutation& p);

}  // namespace wilf
