#include "wilf/tableaux.hpp"

#include <algorithm>
#include <sstream>

namespace wilf {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw domain_error("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw domain_error("partition parts must weakly decrease");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> conj(static_cast<size_t>(cols()));
    for (int c = 1; c <= cols(); ++c) {
        int h = 0;
        for (int p : parts) h += (p >= c);
        conj[static_cast<size_t>(c) - 1] = h;
    }
    return Partition(std::move(conj));
}

std::optional<std::pair<int, int>> added_cell(const Partition& smaller, const Partition& larger) {
    if (larger.size() != smaller.size() + 1) return std::nullopt;
    int rmax = std::max(smaller.rows(), larger.rows());
    std::optional<std::pair<int, int>> found;
    for (int r = 1; r <= rmax; ++r) {
        int a = smaller.part(r), b = larger.part(r);
        if (a == b) continue;
        if (b != a + 1 || found) return std::nullopt;
        found = std::make_pair(r, b);
    }
    return found;
}

StandardYoungTableau::StandardYoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].empty()) throw domain_error("tableau rows must be nonempty");
        if (r > 0 && rows_[r].size() > rows_[r - 1].size())
            throw domain_error("tableau row lengths must weakly decrease");
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            int v = rows_[r][c];
            if (v < 1 || v > n || seen[static_cast<size_t>(v)])
                throw domain_error("tableau entries must be exactly 1..n");
            seen[static_cast<size_t>(v)] = 1;
            if (c > 0 && rows_[r][c - 1] >= v) throw domain_error("tableau rows must strictly increase");
            if (r > 0 && rows_[r - 1][c] >= v) throw domain_error("tableau columns must strictly increase");
        }
    }
}

int StandardYoungTableau::size() const {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
}

int StandardYoungTableau::column_height(int c) const {
    int h = 0;
    for (const auto& r : rows_) h += (static_cast<int>(r.size()) >= c);
    return h;
}

Partition StandardYoungTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

std::pair<int, int> StandardYoungTableau::position_of(int value) const {
    for (size_t r = 0; r < rows_.size(); ++r)
        for (size_t c = 0; c < rows_[r].size(); ++c)
            if (rows_[r][c] == value) return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
    throw domain_error("value not present in tableau");
}

std::vector<std::pair<int, int>> StandardYoungTableau::insert(int value) {
    std::vector<std::pair<int, int>> path;
    int v = value;
    for (size_t r = 0;; ++r) {
        if (r == rows_.size()) {
            rows_.emplace_back();
            rows_.back().push_back(v);
            path.emplace_back(static_cast<int>(r) + 1, 1);
            return path;
        }
        auto& row = rows_[r];
        auto it = std::upper_bound(row.begin(), row.end(), v);
        if (it == row.end()) {
            row.push_back(v);
            path.emplace_back(static_cast<int>(r) + 1, static_cast<int>(row.size()));
            return path;
        }
        path.emplace_back(static_cast<int>(r) + 1, static_cast<int>(it - row.begin()) + 1);
        std::swap(v, *it);
    }
}

int StandardYoungTableau::reverse_insert(int row, int col) {
    auto& r = rows_[static_cast<size_t>(row) - 1];
    if (col != static_cast<int>(r.size()) ||
        (row < row_count() && static_cast<int>(rows_[static_cast<size_t>(row)].size()) >= col))
        throw domain_error("reverse_insert requires a removable corner cell");
    int v = r.back();
    r.pop_back();
    if (r.empty()) rows_.pop_back();
    for (int rr = row - 1; rr >= 1; --rr) {
        auto& above = rows_[static_cast<size_t>(rr) - 1];
        auto it = std::lower_bound(above.begin(), above.end(), v);
        std::swap(v, *(it - 1));  // largest entry smaller than v
    }
    return v;
}

void StandardYoungTableau::remove_max(int value) {
    auto [row, col] = position_of(value);
    if (col != static_cast<int>(rows_[static_cast<size_t>(row) - 1].size()) ||
        (row < row_count() && static_cast<int>(rows_[static_cast<size_t>(row)].size()) >= col))
        throw std::logic_error("remove_max: value does not occupy a removable corner");
    for (const auto& r : rows_)
        for (int v : r)
            if (v > value) throw std::logic_error("remove_max: value is not the maximum entry");
    rows_[static_cast<size_t>(row) - 1].pop_back();
    if (rows_[static_cast<size_t>(row) - 1].empty()) rows_.pop_back();
}

void StandardYoungTableau::place_at(int row, int value) {
    if (row < 1 || row > row_count() + 1) throw domain_error("place_at: row out of range");
    if (row == row_count() + 1) rows_.emplace_back();
    auto& r = rows_[static_cast<size_t>(row) - 1];
    const int col = static_cast<int>(r.size()) + 1;
    if (row > 1 && static_cast<int>(rows_[static_cast<size_t>(row) - 2].size()) < col)
        throw domain_error("place_at: cell does not extend the shape");
    if (!r.empty() && r.back() >= value) throw domain_error("place_at: row would not increase");
    if (row > 1 && rows_[static_cast<size_t>(row) - 2][static_cast<size_t>(col) - 1] >= value)
        throw domain_error("place_at: column would not increase");
    r.push_back(value);
}

RankProfile rank_sequence(const Permutation& p) {
    RankProfile out;
    const int n = p.size();
    out.ranks.assign(static_cast<size_t>(n), 1);
    for (int i = 1; i <= n; ++i) {
        int best = 0;
        for (int j = 1; j < i; ++j)
            if (p.at(j) < p.at(i)) best = std::max(best, out.ranks[static_cast<size_t>(j) - 1]);
        out.ranks[static_cast<size_t>(i) - 1] = best + 1;
        out.rank_classes[best + 1].push_back(i);
        out.max_rank = std::max(out.max_rank, best + 1);
    }
    return out;
}

namespace {

// An increasing subsequence of length `len` ending at `pos`, recovered by
// walking the rank chain backwards. Positions ascending.
std::vector<int> rank_chain_witness(const Permutation& p, const RankProfile& rp, int pos, int len) {
    std::vector<int> w;
    int cur = pos;
    w.push_back(cur);
    for (int r = len - 1; r >= 1; --r) {
        for (int j = cur - 1; j >= 1; --j) {
            if (rp.ranks[static_cast<size_t>(j) - 1] == r && p.at(j) < p.at(cur)) {
                cur = j;
                w.push_back(cur);
                break;
            }
        }
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::string positions_str(const std::vector<int>& v) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

}  // namespace

Permutation west_f(const Permutation& p, int k) {
    if (k < 2) throw domain_error("west_f requires k >= 2");
    const auto rp = rank_sequence(p);
    if (rp.max_rank > k - 1) {
        int pos = rp.rank_classes.at(k).front();
        throw domain_error("west_f: input contains " + Permutation::identity(k).str() +
                           " at positions " + positions_str(rank_chain_witness(p, rp, pos, k)));
    }
    auto it = rp.rank_classes.find(k - 1);
    if (it == rp.rank_classes.end()) return p;

    // Top-rank values, ascending, with a used marker.
    std::vector<int> top_values;
    for (int pos : it->second) top_values.push_back(p.at(pos));
    std::sort(top_values.begin(), top_values.end());
    std::vector<char> used(top_values.size(), 0);

    std::vector<int> w = p.word();
    for (int pos : it->second) {
        int threshold = 0;
        if (k >= 3) {
            int ref = 0;
            for (int j = pos - 1; j >= 1; --j)
                if (rp.ranks[static_cast<size_t>(j) - 1] == k - 2) {
                    ref = j;
                    break;
                }
            if (ref == 0)
                throw std::logic_error("west_f: no entry of rank k-2 to the left of a top-rank position");
            threshold = p.at(ref);
        }
        bool placed = false;
        for (size_t t = 0; t < top_values.size(); ++t) {
            if (!used[t] && top_values[t] > threshold) {
                used[t] = 1;
                w[static_cast<size_t>(pos) - 1] = top_values[t];
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("west_f: no unused top-rank value above threshold");
    }
    return Permutation(std::move(w));
}

Permutation west_f_inv(const Permutation& p, int k) {
    if (k < 2) throw domain_error("west_f_inv requires k >= 2");
    const Permutation bad = Permutation::identity(k - 2).direct_sum(Permutation({2, 1}));
    if (auto witness = find_pattern(p, bad))
        throw domain_error("west_f_inv: input contains " + bad.str() + " at positions " +
                           positions_str(*witness));
    const auto rp = rank_sequence(p);
    std::vector<int> positions, values;
    for (int i = 1; i <= p.size(); ++i) {
        if (rp.ranks[static_cast<size_t>(i) - 1] >= k - 1) {
            positions.push_back(i);
            values.push_back(p.at(i));
        }
    }
    std::sort(values.rbegin(), values.rend());
    std::vector<int> w = p.word();
    for (size_t t = 0; t < positions.size(); ++t) w[static_cast<size_t>(positions[t]) - 1] = values[t];
    return Permutation(std::move(w));
}

StandardYoungTableau rsk_involution(const Permutation& p) {
    if (!p.is_involution()) throw domain_error("rsk_involution: input is not an involution");
    StandardYoungTableau t;
    for (int i = 1; i <= p.size(); ++i) t.insert(p.at(i));
    return t;
}

Permutation rsk_involution_inv(const StandardYoungTableau& t) {
    StandardYoungTableau work = t;
    const int n = t.size();
    std::vector<int> w(static_cast<size_t>(n));
    for (int v = n; v >= 1; --v) {
        auto [row, col] = t.position_of(v);  // recording tableau equals t
        w[static_cast<size_t>(v) - 1] = work.reverse_insert(row, col);
    }
    return Permutation(std::move(w));
}

std::set<int> syt_descents(const StandardYoungTableau& t) {
    std::set<int> des;
    for (int k = 1; k < t.size(); ++k)
        if (t.position_of(k + 1).first > t.position_of(k).first) des.insert(k);
    return des;
}

StandardYoungTableau eta(const StandardYoungTableau& t) {
    if (t.empty()) throw domain_error("eta: tableau must be nonempty");
    if (t.column_count() > 3) throw domain_error("eta: tableau has more than three columns");
    const int n = t.size();
    auto rows = t.rows();
    for (int c = 1; c <= 3; ++c) {
        int h = t.column_height(c);
        if (h == static_cast<int>(rows.size())) rows.emplace_back();
        rows[static_cast<size_t>(h)].push_back(n + c);
    }
    return StandardYoungTableau(std::move(rows));
}

StandardYoungTableau eta_inv(const StandardYoungTableau& t) {
    if (t.column_count() != 3) throw domain_error("eta_inv: tableau must have exactly three columns");
    const int n = t.size();
    if (n < 3 + 1) throw domain_error("eta_inv: tableau too small");
    auto rows = t.rows();
    for (int c = 3; c >= 1; --c) {
        int h = 0;
        for (const auto& r : rows) h += (static_cast<int>(r.size()) >= c);
        auto& row = rows[static_cast<size_t>(h) - 1];
        if (static_cast<int>(row.size()) != c || row.back() != n - 3 + c)
            throw domain_error("eta_inv: tableau is not in the image of the column augmentation");
        row.pop_back();
        if (row.empty()) rows.pop_back();
    }
    return StandardYoungTableau(std::move(rows));
}

namespace {

const Permutation& i4() {
    static const Permutation p({1, 2, 3, 4});
    return p;
}

std::set<int> stepped_descents(int len, bool include_two) {
    // {1} together with the even numbers 2 or 4 up to len-2.
    std::set<int> d{1};
    for (int i = include_two ? 2 : 4; i <= len - 2; i += 2) d.insert(i);
    return d;
}

}  // namespace

Permutation gamma_map(const Permutation& p) {
    const int len = p.size();
    if (len < 2 || len % 2 != 0) throw domain_error("gamma_map: length must be even and >= 2");
    if (!p.is_involution()) throw domain_error("gamma_map: input is not an involution");
    if (auto w = find_pattern(p, i4()))
        throw domain_error("gamma_map: input contains 1234 at positions " + positions_str(*w));
    if (descent_set(p) != stepped_descents(len, true))
        throw domain_error("gamma_map: descent set is not {1,2,4,...}");
    return rsk_involution_inv(eta(rsk_involution(p)));
}

Permutation gamma_inv(const Permutation& p) {
    const int len = p.size();
    if (len < 5 || len % 2 != 1) throw domain_error("gamma_inv: length must be odd and >= 5");
    if (!p.is_involution()) throw domain_error("gamma_inv: input is not an involution");
    if (auto w = find_pattern(p, i4()))
        throw domain_error("gamma_inv: input contains 1234 at positions " + positions_str(*w));
    if (descent_set(p) != stepped_descents(len - 1, true))
        throw domain_error("gamma_inv: descent set is not {1,2,4,...}");
    return rsk_involution_inv(eta_inv(rsk_involution(p)));
}

}  // namespace wilf
