#pragma once

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wilf/matching.hpp"

namespace wilf {

/// A lattice path of U/D steps (slopes +1/-1) starting at integer point
/// (x0, y0).
class LatticePath {
public:
    LatticePath() = default;
    LatticePath(int x0, int y0, std::string word);

    int x0() const { return x0_; }
    int y0() const { return y0_; }
    const std::string& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    /// Height after t steps, 0 <= t <= length().
    int height(int t) const;
    std::vector<int> heights() const;
    int end_y() const { return height(length()); }
    int min_height() const;

    /// Dyck: starts and ends at height 0 and never goes below it.
    bool is_dyck() const { return y0_ == 0 && end_y() == 0 && min_height() >= 0; }
    bool is_symmetric() const;  // fixed by reflection about the vertical midline
    /// Reflection about the vertical line x = axis.
    LatticePath reflected(int axis) const;
    LatticePath subpath(int from, int to) const;  // steps in (from, to], x-range [x0+from, x0+to]

    auto operator<=>(const LatticePath&) const = default;

private:
    int x0_ = 0;
    int y0_ = 0;
    std::string word_;
};

/// A noncrossing pair of Dyck paths of equal length: P stays weakly above Q.
struct DyckPair {
    LatticePath p, q;

    DyckPair() = default;
    DyckPair(LatticePath p_, LatticePath q_);
    int length() const { return p.length(); }
    bool is_symmetric() const { return p.is_symmetric() && q.is_symmetric(); }

    auto operator<=>(const DyckPair&) const = default;
};

/// Heights (x+y, x-y) of the two-row shapes (x,y); valleys of the tableau
/// become the A-set of the pair.
DyckPair psi(const OscillatingTableau& o);
OscillatingTableau psi_inv(const DyckPair& pair);

/// Same construction on conjugate shapes; peaks become the B-set.
DyckPair psibar(const OscillatingTableau& o);
OscillatingTableau psibar_inv(const DyckPair& pair);

/// A = {i : p_{i-1} p_i p_{i+1} = UUU and q_i q_{i+1} = UD, 1 < i < n},
/// B = {i : p_{i-1} p_i p_{i+1} = UUU and q_{i-1} q_i = UD, 1 < i < n}.
std::pair<std::set<int>, std::set<int>> ab_sets(const DyckPair& pair);

/// Cyclic-shift transformation of a nonnegative path R lying weakly below a
/// strictly rising path S over the same x-range; turns UD factors at positions
/// in A(S,R) into UD factors one step later, so A(S,R) = B(S,alpha(S,R)).
LatticePath alpha_transform(const LatticePath& s, const LatticePath& r);
/// Inverse of alpha_transform.
LatticePath beta_transform(const LatticePath& s, const LatticePath& r_prime);

/// Rewrites Q block-by-block along the maximal up/down chains of P, keeping P
/// fixed and the pair symmetric, with A(P,Q) = B(theta(P,Q)).
DyckPair theta(const DyckPair& pair);
DyckPair theta_inv(const DyckPair& pair);

/// Maximal chains of P: alternating runs of U's and D's, as (start, end) step
/// index pairs; a nonempty Dyck path starts with an up-chain and ends with a
/// down-chain.
std::vector<std::pair<int, int>> maximal_chains(const LatticePath& p);

/// All pairs of symmetric noncrossing Dyck paths of length 2n, deterministic
/// order.
void for_each_symmetric_noncrossing_pair(int n, const std::function<void(const DyckPair&)>& fn);

}  // namespace wilf
