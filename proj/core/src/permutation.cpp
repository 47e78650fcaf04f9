#include "wilf/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wilf {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw domain_error("not a permutation of {1..n}: " + str());
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> w;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '(') {
            size_t j = text.find(')', i);
            if (j == std::string_view::npos) throw domain_error("unbalanced '(' in pattern string");
            int v = 0;
            for (size_t k = i + 1; k < j; ++k) {
                if (!isdigit(static_cast<unsigned char>(text[k])))
                    throw domain_error("non-digit inside parentheses in pattern string");
                v = v * 10 + (text[k] - '0');
            }
            w.push_back(v);
            i = j + 1;
        } else if (isdigit(static_cast<unsigned char>(c))) {
            w.push_back(c - '0');
            ++i;
        } else if (isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
        } else {
            throw domain_error(std::string("unexpected character '") + c + "' in pattern string");
        }
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>(at(i)) - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::reversed() const {
    std::vector<int> w(word_.rbegin(), word_.rend());
    return Permutation(std::move(w));
}

Permutation Permutation::complemented() const {
    std::vector<int> w(word_.size());
    for (size_t i = 0; i < word_.size(); ++i) w[i] = size() + 1 - word_[i];
    return Permutation(std::move(w));
}

Permutation Permutation::reverse_complemented() const {
    std::vector<int> w(word_.size());
    for (size_t i = 0; i < word_.size(); ++i) w[i] = size() + 1 - word_[word_.size() - 1 - i];
    return Permutation(std::move(w));
}

Permutation Permutation::direct_sum(const Permutation& q) const {
    std::vector<int> w = word_;
    w.reserve(word_.size() + q.word_.size());
    for (int v : q.word_) w.push_back(v + size());
    return Permutation(std::move(w));
}

bool Permutation::is_involution() const {
    for (int i = 1; i <= size(); ++i)
        if (at(at(i)) != i) return false;
    return true;
}

bool Permutation::is_alternating() const {
    for (int i = 1; i < size(); ++i) {
        bool ascent = at(i) < at(i + 1);
        if (i % 2 == 1 ? !ascent : ascent) return false;
    }
    return true;
}

bool Permutation::is_reverse_alternating() const {
    for (int i = 1; i < size(); ++i) {
        bool descent = at(i) > at(i + 1);
        if (i % 2 == 1 ? !descent : descent) return false;
    }
    return true;
}

namespace {

// Backtracking subsequence search with prefix pruning. `chosen` holds the
// 1-indexed positions matched to pattern entries 1..k so far;
// order-isomorphism is maintained incrementally.
bool search_pattern(const std::vector<int>& word, int n, const Permutation& pat, size_t k, int from,
                    std::vector<int>& chosen, int min_beyond) {
    const int m = pat.size();
    if (k == static_cast<size_t>(m)) {
        return min_beyond <= 0 || chosen.empty() || chosen.back() > min_beyond;
    }
    for (int i = from; i <= n - (m - static_cast<int>(k)) + 1; ++i) {
        int v = word[static_cast<size_t>(i) - 1];
        bool ok = true;
        for (size_t t = 0; t < k && ok; ++t) {
            bool pat_less = pat.at(static_cast<int>(t) + 1) < pat.at(static_cast<int>(k) + 1);
            bool val_less = word[static_cast<size_t>(chosen[t]) - 1] < v;
            ok = (pat_less == val_less);
        }
        if (!ok) continue;
        chosen.push_back(i);
        if (search_pattern(word, n, pat, k + 1, i + 1, chosen, min_beyond)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_pattern_beyond(const Permutation& p, const Permutation& pattern,
                                                    int min_beyond) {
    if (pattern.empty()) return std::vector<int>{};
    if (pattern.size() > p.size()) return std::nullopt;
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(pattern.size()));
    if (search_pattern(p.word(), p.size(), pattern, 0, 1, chosen, min_beyond)) return chosen;
    return std::nullopt;
}

bool word_contains_pattern(const std::vector<int>& word, int len, const Permutation& pattern,
                           int min_beyond) {
    if (pattern.empty()) return true;
    if (pattern.size() > len) return false;
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(pattern.size()));
    return search_pattern(word, len, pattern, 0, 1, chosen, min_beyond);
}

std::optional<std::vector<int>> find_pattern(const Permutation& p, const Permutation& pattern) {
    return find_pattern_beyond(p, pattern, 0);
}

bool Permutation::contains(const Permutation& pattern) const {
    return find_pattern(*this, pattern).has_value();
}

std::string Permutation::str() const {
    std::ostringstream out;
    for (int v : word_) {
        if (v > 9)
            out << '(' << v << ')';
        else
            out << v;
    }
    return out.str();
}

Permutation apply_symmetry(const Permutation& p, Symmetry which) {
    switch (which) {
        case Symmetry::Reverse: return p.reversed();
        case Symmetry::Complement: return p.complemented();
        case Symmetry::ReverseComplement: return p.reverse_complemented();
        case Symmetry::Inverse: return p.inverse();
    }
    throw domain_error("unknown symmetry");
}

StatReport stats(const Permutation& p) {
    StatReport r;
    const int n = p.size();
    for (int i = 1; i < n; ++i) {
        if (p.at(i) > p.at(i + 1))
            r.descents.insert(i);
        else
            r.ascents.insert(i);
    }
    for (int i = 2; i < n; ++i)
        if (p.at(i - 1) < p.at(i) && p.at(i) > p.at(i + 1)) r.peaks.insert(i);
    return r;
}

std::set<int> peak_set(const Permutation& p) { return stats(p).peaks; }
std::set<int> descent_set(const Permutation& p) { return stats(p).descents; }

Permutation standardize(const std::vector<int>& word) {
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw domain_error("standardize: entries are not pairwise distinct");
    std::vector<int> w(word.size());
    for (size_t i = 0; i < word.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), word[i]);
        w[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation(std::move(w));
}

ClassFlags classify(const Permutation& p) {
    return ClassFlags{p.is_involution(), p.is_alternating(), p.is_reverse_alternating()};
}

}  // namespace wilf
