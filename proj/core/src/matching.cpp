#include "wilf/matching.hpp"

#include <algorithm>

namespace wilf {

Matching::Matching(std::vector<std::pair<int, int>> arcs) : arcs_(std::move(arcs)) {
    std::sort(arcs_.begin(), arcs_.end());
    const int n2 = points();
    partner_.assign(static_cast<size_t>(n2) + 1, 0);
    for (auto [i, j] : arcs_) {
        if (i < 1 || j > n2 || i >= j) throw domain_error("matching arcs must satisfy 1 <= i < j <= 2n");
        if (partner_[static_cast<size_t>(i)] || partner_[static_cast<size_t>(j)])
            throw domain_error("matching arcs must be pairwise disjoint");
        partner_[static_cast<size_t>(i)] = j;
        partner_[static_cast<size_t>(j)] = i;
    }
    for (int v = 1; v <= n2; ++v)
        if (!partner_[static_cast<size_t>(v)]) throw domain_error("matching must cover every point of [2n]");
}

std::string Matching::type() const {
    std::string t;
    t.reserve(static_cast<size_t>(points()));
    for (int i = 1; i <= points(); ++i) t.push_back(is_opener(i) ? 'U' : 'D');
    return t;
}

Matching Matching::reflected() const {
    const int n2 = points();
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(arcs_.size());
    for (auto [i, j] : arcs_) arcs.emplace_back(n2 + 1 - j, n2 + 1 - i);
    return Matching(std::move(arcs));
}

std::pair<int, int> crossing_nesting(const Matching& m) {
    // k arcs active over a common gap form a k-crossing iff their right
    // endpoints increase with their left endpoints, and a k-nesting iff they
    // decrease. Scan every gap and take longest increasing/decreasing runs.
    int cr = 0, ne = 0;
    const int n2 = m.points();
    for (int t = 1; t < n2; ++t) {
        std::vector<int> closers;  // of arcs with i <= t < j, in order of i
        for (auto [i, j] : m.arcs())
            if (i <= t && t < j) closers.push_back(j);
        std::vector<int> inc, dec;  // patience piles for LIS / LDS
        for (int c : closers) {
            auto it = std::lower_bound(inc.begin(), inc.end(), c);
            if (it == inc.end()) inc.push_back(c); else *it = c;
            auto jt = std::lower_bound(dec.begin(), dec.end(), c, std::greater<int>());
            if (jt == dec.end()) dec.push_back(c); else *jt = c;
        }
        cr = std::max(cr, static_cast<int>(inc.size()));
        ne = std::max(ne, static_cast<int>(dec.size()));
    }
    return {cr, ne};
}

ValleyReport valleys(const Matching& m) {
    ValleyReport r;
    const int n2 = m.points();
    std::vector<int> opener_ordinal(static_cast<size_t>(n2) + 1, 0);
    int ord = 0;
    for (int i = 1; i <= n2; ++i)
        if (m.is_opener(i)) opener_ordinal[static_cast<size_t>(i)] = ++ord;
    for (int i = 2; i + 1 <= n2; ++i) {
        if (!m.is_opener(i - 1) || !m.is_opener(i) || !m.is_opener(i + 1)) continue;
        if (m.partner(i - 1) > m.partner(i) && m.partner(i) < m.partner(i + 1)) {
            r.val.insert(i);
            r.val_tilde.insert(opener_ordinal[static_cast<size_t>(i)]);
        }
    }
    return r;
}

OscillatingTableau::OscillatingTableau(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {
    if (shapes_.empty() || shapes_.front().rows() != 0 || shapes_.back().rows() != 0)
        throw domain_error("oscillating tableau must start and end with the empty shape");
    for (size_t i = 1; i < shapes_.size(); ++i) {
        if (!added_cell(shapes_[i - 1], shapes_[i]) && !added_cell(shapes_[i], shapes_[i - 1]))
            throw domain_error("consecutive shapes must differ by exactly one cell");
    }
}

std::string OscillatingTableau::type() const {
    std::string t;
    t.reserve(static_cast<size_t>(steps()));
    for (int i = 1; i <= steps(); ++i)
        t.push_back(shape(i).size() > shape(i - 1).size() ? 'U' : 'D');
    return t;
}

OscillatingTableau OscillatingTableau::reversed() const {
    std::vector<Partition> rev(shapes_.rbegin(), shapes_.rend());
    return OscillatingTableau(std::move(rev));
}

int OscillatingTableau::max_rows() const {
    int r = 0;
    for (const auto& s : shapes_) r = std::max(r, s.rows());
    return r;
}

int OscillatingTableau::max_cols() const {
    int c = 0;
    for (const auto& s : shapes_) c = std::max(c, s.cols());
    return c;
}

OscillatingTableau phi(const Matching& m) {
    const int n2 = m.points();
    std::vector<Partition> shapes(static_cast<size_t>(n2) + 1);
    StandardYoungTableau t;
    for (int j = n2; j >= 1; --j) {
        shapes[static_cast<size_t>(j)] = t.shape();
        if (m.is_opener(j))
            t.remove_max(j);  // throws unless j is maximal at a removable corner
        else
            t.insert(m.partner(j));
    }
    shapes[0] = t.shape();
    return OscillatingTableau(std::move(shapes));
}

Matching phi_inv(const OscillatingTableau& o) {
    if (o.steps() % 2 != 0) throw domain_error("phi_inv: oscillating tableau must have even length");
    StandardYoungTableau t;
    std::vector<std::pair<int, int>> arcs;
    for (int j = 1; j <= o.steps(); ++j) {
        if (auto cell = added_cell(o.shape(j - 1), o.shape(j))) {
            // j is an opener: undo the deletion by placing j at the new cell.
            t.place_at(cell->first, j);
        } else {
            // j is a closer: undo the insertion that created the removed cell.
            auto cell2 = added_cell(o.shape(j), o.shape(j - 1));
            arcs.emplace_back(t.reverse_insert(cell2->first, cell2->second), j);
        }
    }
    return Matching(std::move(arcs));
}

OscFeatures osc_features(const OscillatingTableau& o) {
    OscFeatures f;
    f.type = o.type();
    f.symmetric = o.is_symmetric();
    const int n2 = o.steps();
    auto add_at = [&](int i) { return added_cell(o.shape(i - 1), o.shape(i)); };
    if (o.max_rows() <= 2) {
        std::set<int> val;
        for (int i = 2; i < n2; ++i) {
            auto a = add_at(i - 1), b = add_at(i), c = add_at(i + 1);
            if (a && b && b->first == 1 && c && c->first == 2) val.insert(i);
        }
        f.val = std::move(val);
    }
    if (o.max_cols() <= 2) {
        std::set<int> peak;
        for (int i = 2; i < n2; ++i) {
            auto a = add_at(i - 1), b = add_at(i), c = add_at(i + 1);
            if (a && a->second == 1 && b && b->second == 2 && c) peak.insert(i);
        }
        f.peak = std::move(peak);
    }
    return f;
}

namespace {

void matchings_rec(int n2, std::vector<int>& partner, std::vector<std::pair<int, int>>& arcs,
                   const std::function<void(const Matching&)>& fn) {
    int i = 1;
    while (i <= n2 && partner[static_cast<size_t>(i)]) ++i;
    if (i > n2) {
        fn(Matching(arcs));
        return;
    }
    for (int j = i + 1; j <= n2; ++j) {
        if (partner[static_cast<size_t>(j)]) continue;
        partner[static_cast<size_t>(i)] = j;
        partner[static_cast<size_t>(j)] = i;
        arcs.emplace_back(i, j);
        matchings_rec(n2, partner, arcs, fn);
        arcs.pop_back();
        partner[static_cast<size_t>(i)] = 0;
        partner[static_cast<size_t>(j)] = 0;
    }
}

}  // namespace

void for_each_matching(int n, const std::function<void(const Matching&)>& fn) {
    if (n == 0) {
        fn(Matching());
        return;
    }
    std::vector<int> partner(static_cast<size_t>(2 * n) + 1, 0);
    std::vector<std::pair<int, int>> arcs;
    matchings_rec(2 * n, partner, arcs, fn);
}

}  // namespace wilf
