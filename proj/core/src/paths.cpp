#include "wilf/paths.hpp"

#include <algorithm>

namespace wilf {

LatticePath::LatticePath(int x0, int y0, std::string word) : x0_(x0), y0_(y0), word_(std::move(word)) {
    for (char c : word_)
        if (c != 'U' && c != 'D') throw domain_error("path word must be over {U,D}");
}

int LatticePath::height(int t) const {
    int h = y0_;
    for (int i = 0; i < t; ++i) h += (word_[static_cast<size_t>(i)] == 'U') ? 1 : -1;
    return h;
}

std::vector<int> LatticePath::heights() const {
    std::vector<int> h(static_cast<size_t>(length()) + 1);
    h[0] = y0_;
    for (int i = 1; i <= length(); ++i)
        h[static_cast<size_t>(i)] = h[static_cast<size_t>(i) - 1] + (word_[static_cast<size_t>(i) - 1] == 'U' ? 1 : -1);
    return h;
}

int LatticePath::min_height() const {
    int h = y0_, lo = y0_;
    for (char c : word_) {
        h += (c == 'U') ? 1 : -1;
        lo = std::min(lo, h);
    }
    return lo;
}

bool LatticePath::is_symmetric() const {
    const int n = length();
    for (int i = 0; i < n; ++i)
        if ((word_[static_cast<size_t>(i)] == 'U') != (word_[static_cast<size_t>(n - 1 - i)] == 'D'))
            return false;
    return y0_ == end_y();
}

LatticePath LatticePath::reflected(int axis) const {
    std::string w(word_.rbegin(), word_.rend());
    for (char& c : w) c = (c == 'U') ? 'D' : 'U';
    return LatticePath(2 * axis - (x0_ + length()), end_y(), std::move(w));
}

LatticePath LatticePath::subpath(int from, int to) const {
    return LatticePath(x0_ + from, height(from), word_.substr(static_cast<size_t>(from), static_cast<size_t>(to - from)));
}

DyckPair::DyckPair(LatticePath p_, LatticePath q_) : p(std::move(p_)), q(std::move(q_)) {
    if (p.length() != q.length()) throw domain_error("paths of a pair must have equal length");
    if (!p.is_dyck() || !q.is_dyck()) throw domain_error("both paths of a pair must be Dyck paths");
    if (p.x0() != 0 || q.x0() != 0) throw domain_error("pair paths must start at x=0");
    auto hp = p.heights(), hq = q.heights();
    for (size_t i = 0; i < hp.size(); ++i)
        if (hp[i] < hq[i]) throw domain_error("pair must be noncrossing (first path weakly above)");
}

namespace {

DyckPair paths_from_xy(const std::vector<std::pair<int, int>>& xy) {
    std::string pw, qw;
    for (size_t i = 1; i < xy.size(); ++i) {
        int dp = (xy[i].first + xy[i].second) - (xy[i - 1].first + xy[i - 1].second);
        int dq = (xy[i].first - xy[i].second) - (xy[i - 1].first - xy[i - 1].second);
        pw.push_back(dp > 0 ? 'U' : 'D');
        qw.push_back(dq > 0 ? 'U' : 'D');
    }
    return DyckPair(LatticePath(0, 0, std::move(pw)), LatticePath(0, 0, std::move(qw)));
}

std::vector<std::pair<int, int>> xy_from_pair(const DyckPair& pair) {
    auto hp = pair.p.heights(), hq = pair.q.heights();
    std::vector<std::pair<int, int>> xy(hp.size());
    for (size_t i = 0; i < hp.size(); ++i) {
        if ((hp[i] + hq[i]) % 2 != 0)
            throw domain_error("pair heights must have equal parity at every abscissa");
        xy[i] = {(hp[i] + hq[i]) / 2, (hp[i] - hq[i]) / 2};
    }
    return xy;
}

Partition two_row_shape(int x, int y) {
    std::vector<int> parts;
    if (x > 0) parts.push_back(x);
    if (y > 0) parts.push_back(y);
    return Partition(std::move(parts));
}

}  // namespace

DyckPair psi(const OscillatingTableau& o) {
    if (o.max_rows() > 2) throw domain_error("psi requires shapes with at most two rows");
    std::vector<std::pair<int, int>> xy;
    xy.reserve(static_cast<size_t>(o.steps()) + 1);
    for (const auto& s : o.shapes()) xy.emplace_back(s.part(1), s.part(2));
    return paths_from_xy(xy);
}

OscillatingTableau psi_inv(const DyckPair& pair) {
    std::vector<Partition> shapes;
    for (auto [x, y] : xy_from_pair(pair)) shapes.push_back(two_row_shape(x, y));
    return OscillatingTableau(std::move(shapes));
}

DyckPair psibar(const OscillatingTableau& o) {
    if (o.max_cols() > 2) throw domain_error("psibar requires shapes with at most two columns");
    std::vector<std::pair<int, int>> xy;
    xy.reserve(static_cast<size_t>(o.steps()) + 1);
    for (const auto& s : o.shapes()) {
        Partition c = s.conjugate();
        xy.emplace_back(c.part(1), c.part(2));
    }
    return paths_from_xy(xy);
}

OscillatingTableau psibar_inv(const DyckPair& pair) {
    std::vector<Partition> shapes;
    for (auto [x, y] : xy_from_pair(pair)) shapes.push_back(two_row_shape(x, y).conjugate());
    return OscillatingTableau(std::move(shapes));
}

std::pair<std::set<int>, std::set<int>> ab_sets(const DyckPair& pair) {
    const std::string& pw = pair.p.word();
    const std::string& qw = pair.q.word();
    const int n = pair.length();
    std::set<int> a, b;
    for (int i = 2; i < n; ++i) {
        if (pw[static_cast<size_t>(i) - 2] != 'U' || pw[static_cast<size_t>(i) - 1] != 'U' ||
            pw[static_cast<size_t>(i)] != 'U')
            continue;
        if (qw[static_cast<size_t>(i) - 1] == 'U' && qw[static_cast<size_t>(i)] == 'D') a.insert(i);
        if (qw[static_cast<size_t>(i) - 2] == 'U' && qw[static_cast<size_t>(i) - 1] == 'D') b.insert(i);
    }
    return {a, b};
}

namespace {

void check_alpha_domain(const LatticePath& s, const LatticePath& r) {
    if (s.x0() != r.x0() || s.length() != r.length())
        throw domain_error("paths must share the same x-range");
    for (char c : s.word())
        if (c != 'U') throw domain_error("first path must be strictly rising");
    auto hs = s.heights();
    auto hr = r.heights();
    for (size_t i = 0; i < hr.size(); ++i) {
        if (hr[i] < 0) throw domain_error("second path must stay weakly above the x-axis");
        if (hr[i] > hs[i]) throw domain_error("second path must stay weakly below the first");
    }
}

}  // namespace

LatticePath alpha_transform(const LatticePath& s, const LatticePath& r) {
    check_alpha_domain(s, r);
    const std::string& w = r.word();
    const int m = r.length();
    if (m == 0) return r;
    std::string out;
    if (w[0] == 'D') {
        out = w.substr(1) + w.substr(0, 1);
    } else {
        auto h = r.heights();
        int ell = 0;  // least t >= 1 with height 0, if any
        for (int t = 1; t <= m; ++t)
            if (h[static_cast<size_t>(t)] == 0) {
                ell = t;
                break;
            }
        if (ell == 0) {
            out = w.substr(1) + w.substr(0, 1);
        } else {
            std::string v = w;
            v[0] = 'D';
            v[static_cast<size_t>(ell) - 1] = 'U';  // the step into the first zero is a D
            out = v.substr(1) + v.substr(0, 1);
        }
    }
    return LatticePath(r.x0(), r.y0(), std::move(out));
}

LatticePath beta_transform(const LatticePath& s, const LatticePath& r_prime) {
    check_alpha_domain(s, r_prime);
    const std::string& v = r_prime.word();
    const int m = r_prime.length();
    if (m == 0) return r_prime;
    std::string out;
    if (v[static_cast<size_t>(m) - 1] == 'U') {
        out = v.substr(static_cast<size_t>(m) - 1) + v.substr(0, static_cast<size_t>(m) - 1);
    } else {
        auto h = r_prime.heights();
        int ell = -1;  // greatest t < m with height 0, if any
        for (int t = m - 1; t >= 0; --t)
            if (h[static_cast<size_t>(t)] == 0) {
                ell = t;
                break;
            }
        if (ell < 0) {
            out = v.substr(static_cast<size_t>(m) - 1) + v.substr(0, static_cast<size_t>(m) - 1);
        } else {
            std::string w = v;
            w[static_cast<size_t>(m) - 1] = 'U';
            w[static_cast<size_t>(ell)] = 'D';  // the step out of the last zero is a U
            out = w.substr(static_cast<size_t>(m) - 1) + w.substr(0, static_cast<size_t>(m) - 1);
        }
    }
    return LatticePath(r_prime.x0(), r_prime.y0(), std::move(out));
}

std::vector<std::pair<int, int>> maximal_chains(const LatticePath& p) {
    std::vector<std::pair<int, int>> chains;
    const std::string& w = p.word();
    int start = 0;
    for (int i = 1; i <= p.length(); ++i) {
        if (i == p.length() || w[static_cast<size_t>(i)] != w[static_cast<size_t>(i) - 1]) {
            chains.emplace_back(start, i);
            start = i;
        }
    }
    return chains;
}

namespace {

DyckPair theta_impl(const DyckPair& pair, bool inverse) {
    if (!pair.is_symmetric()) throw domain_error("theta requires a symmetric pair");
    const int n2 = pair.length();
    if (n2 == 0) return pair;
    auto chains = maximal_chains(pair.p);
    if (chains.size() % 2 != 0 || pair.p.word().front() != 'U' || pair.p.word().back() != 'D')
        throw std::logic_error("theta: Dyck path chain decomposition must alternate U-runs and D-runs");
    const size_t k = chains.size() / 2;

    // Transformed up-blocks of Q over the abscissas of each up-chain of P.
    std::vector<LatticePath> up_blocks(k);
    for (size_t i = 0; i < k; ++i) {
        auto [from, to] = chains[2 * i];
        LatticePath u = pair.q.subpath(from, to);
        LatticePath s = pair.p.subpath(from, to);
        up_blocks[i] = inverse ? beta_transform(s, u) : alpha_transform(s, u);
    }
    std::string qw;
    qw.reserve(static_cast<size_t>(n2));
    for (size_t i = 0; i < k; ++i) {
        qw += up_blocks[i].word();
        qw += up_blocks[k - 1 - i].reflected(n2 / 2).word();
    }
    return DyckPair(pair.p, LatticePath(0, 0, std::move(qw)));
}

}  // namespace

DyckPair theta(const DyckPair& pair) { return theta_impl(pair, false); }
DyckPair theta_inv(const DyckPair& pair) { return theta_impl(pair, true); }

namespace {

void half_paths_rec(int steps, int h, std::string& w, const std::function<void(const std::string&)>& fn) {
    if (steps == 0) {
        fn(w);
        return;
    }
    for (char c : {'D', 'U'}) {
        int nh = h + (c == 'U' ? 1 : -1);
        if (nh < 0) continue;
        w.push_back(c);
        half_paths_rec(steps - 1, nh, w, fn);
        w.pop_back();
    }
}

std::string mirror_completion(const std::string& half) {
    std::string w(half.rbegin(), half.rend());
    for (char& c : w) c = (c == 'U') ? 'D' : 'U';
    return half + w;
}

}  // namespace

void for_each_symmetric_noncrossing_pair(int n, const std::function<void(const DyckPair&)>& fn) {
    // A symmetric Dyck path of length 2n is determined by its nonnegative
    // first half; noncrossing need only be checked on the first half.
    std::vector<std::string> halves;
    std::string w;
    half_paths_rec(n, 0, w, [&](const std::string& h) { halves.push_back(h); });
    for (const auto& ph : halves) {
        LatticePath p(0, 0, mirror_completion(ph));
        auto hp = LatticePath(0, 0, ph).heights();
        for (const auto& qh : halves) {
            auto hq = LatticePath(0, 0, qh).heights();
            bool below = true;
            for (size_t i = 0; i < hq.size() && below; ++i) below = hq[i] <= hp[i];
            if (!below) continue;
            fn(DyckPair(p, LatticePath(0, 0, mirror_completion(qh))));
        }
    }
}

}  // namespace wilf
