#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wilf/permutation.hpp"
#include "wilf/tableaux.hpp"

namespace wilf {

/// A perfect matching of {1,...,2n}, stored as arcs (i,j) with i<j sorted by
/// left endpoint.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<std::pair<int, int>> arcs);

    int points() const { return 2 * static_cast<int>(arcs_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int partner(int i) const { return partner_[static_cast<size_t>(i)]; }
    bool is_opener(int i) const { return partner(i) > i; }

    /// U per opener, D per closer, scanning 1..2n.
    std::string type() const;
    /// Arcwise reflection in the vertical axis through (2n+1)/2.
    Matching reflected() const;
    bool is_bilaterally_symmetric() const { return *this == reflected(); }

    bool operator==(const Matching& other) const { return arcs_ == other.arcs_; }
    auto operator<=>(const Matching& other) const { return arcs_ <=> other.arcs_; }

private:
    std::vector<std::pair<int, int>> arcs_;
    std::vector<int> partner_;  // derived; not part of the value
};

/// (cr, ne): the largest k such that the matching has k mutually crossing
/// (resp. mutually nesting) arcs. Empty matching gives (0, 0).
std::pair<int, int> crossing_nesting(const Matching& m);

struct ValleyReport {
    std::set<int> val;        // middle openers of three consecutive openers whose closers dip then rise
    std::set<int> val_tilde;  // the same positions as left-to-right opener ordinals
};

ValleyReport valleys(const Matching& m);

/// A sequence of partitions, empty at both ends, each obtained from the
/// previous by adding or deleting exactly one cell.
class OscillatingTableau {
public:
    OscillatingTableau() : shapes_(1) {}
    explicit OscillatingTableau(std::vector<Partition> shapes);

    int steps() const { return static_cast<int>(shapes_.size()) - 1; }
    const std::vector<Partition>& shapes() const { return shapes_; }
    const Partition& shape(int i) const { return shapes_[static_cast<size_t>(i)]; }

    std::string type() const;  // U per added cell, D per deleted cell
    OscillatingTableau reversed() const;
    bool is_symmetric() const { return shapes_ == reversed().shapes_; }
    int max_rows() const;
    int max_cols() const;

    auto operator<=>(const OscillatingTableau&) const = default;

private:
    std::vector<Partition> shapes_;
};

/// Reads 2n..1; at a closer inserts the arc's left endpoint by RSK row
/// insertion, at an opener deletes that value (always the maximum entry, at a
/// removable corner). The result is the sequence of intermediate shapes.
OscillatingTableau phi(const Matching& m);
Matching phi_inv(const OscillatingTableau& o);

struct OscFeatures {
    std::string type;
    std::optional<std::set<int>> val;   // present only when all shapes have <= 2 rows
    std::optional<std::set<int>> peak;  // present only when all shapes have <= 2 columns
    bool symmetric = false;
};

OscFeatures osc_features(const OscillatingTableau& o);

/// All matchings of {1,...,2n} in a fixed deterministic order: the smallest
/// unmatched point is paired with each larger unmatched point, ascending.
void for_each_matching(int n, const std::function<void(const Matching&)>& fn);

}  // namespace wilf
