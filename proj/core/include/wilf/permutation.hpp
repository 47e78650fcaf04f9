#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wilf {

/// Thrown when an operation's domain precondition is violated.
/// Messages name the offending input (and a pattern witness where one exists).
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A permutation of {1,...,n} in one-line notation. Positions and values are
/// 1-indexed everywhere in this library. Immutable after construction.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    /// Parses one-line notation, with parentheses for multi-digit values,
    /// e.g. "1243" or "(10)19283(11)...". Empty string is the empty permutation.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }
    /// Value at 1-indexed position i.
    int at(int i) const { return word_[static_cast<size_t>(i) - 1]; }
    int operator()(int i) const { return at(i); }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    Permutation reversed() const;
    Permutation complemented() const;
    Permutation reverse_complemented() const;
    /// this followed by q with all of q's values shifted up by size().
    Permutation direct_sum(const Permutation& q) const;

    bool is_involution() const;
    bool is_alternating() const;          // p1 < p2 > p3 < ...
    bool is_reverse_alternating() const;  // p1 > p2 < p3 > ...

    bool contains(const Permutation& pattern) const;
    bool avoids(const Permutation& pattern) const { return !contains(pattern); }

    std::string str() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

enum class Symmetry { Reverse, Complement, ReverseComplement, Inverse };

Permutation apply_symmetry(const Permutation& p, Symmetry which);

/// Positions witnessing an occurrence of `pattern` in `p`, ascending,
/// or nullopt when p avoids the pattern. The empty pattern matches everywhere.
std::optional<std::vector<int>> find_pattern(const Permutation& p, const Permutation& pattern);

/// As find_pattern, but the occurrence must use at least one position > min_beyond.
std::optional<std::vector<int>> find_pattern_beyond(const Permutation& p, const Permutation& pattern,
                                                    int min_beyond);

/// Pattern search in the first `len` entries of a word of pairwise distinct
/// integers (not necessarily 1..n); the occurrence must use a position >
/// min_beyond. Returns true iff one exists.
bool word_contains_pattern(const std::vector<int>& word, int len, const Permutation& pattern,
                           int min_beyond);

struct StatReport {
    std::set<int> peaks;     // i with 1<i<n and p(i-1) < p(i) > p(i+1)
    std::set<int> descents;  // i < n with p(i) > p(i+1)
    std::set<int> ascents;   // complement of descents within {1,...,n-1}
};

StatReport stats(const Permutation& p);
std::set<int> peak_set(const Permutation& p);
std::set<int> descent_set(const Permutation& p);

/// The unique permutation order-isomorphic to `word` (entries pairwise distinct).
Permutation standardize(const std::vector<int>& word);

struct ClassFlags {
    bool involution = false;
    bool alternating = false;
    bool reverse_alternating = false;
};

ClassFlags classify(const Permutation& p);

}  // namespace wilf
