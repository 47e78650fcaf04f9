#include "wilf/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace wilf {

BigInt motzkin(int n) {
    if (n < 0) throw domain_error("motzkin: n must be nonnegative");
    BigInt total = 0;
    for (int k = 0; 2 * k <= n; ++k) {
        // n! / (k! (k+1)! (n-2k)!)
        BigInt term = 1;
        for (int i = 1; i <= n; ++i) term *= i;
        BigInt den = 1;
        for (int i = 1; i <= k; ++i) den *= i;
        for (int i = 1; i <= k + 1; ++i) den *= i;
        for (int i = 1; i <= n - 2 * k; ++i) den *= i;
        total += term / den;
    }
    return total;
}

BigInt motzkin_recurrence(int n) {
    if (n < 0) throw domain_error("motzkin_recurrence: n must be nonnegative");
    std::vector<BigInt> m(static_cast<size_t>(n) + 1);
    m[0] = 1;
    for (int i = 0; i < n; ++i) {
        BigInt next = m[static_cast<size_t>(i)];
        for (int k = 0; k <= i - 1; ++k) next += m[static_cast<size_t>(k)] * m[static_cast<size_t>(i - 1 - k)];
        m[static_cast<size_t>(i) + 1] = next;
    }
    return m[static_cast<size_t>(n)];
}

BigInt involution_count(int n) {
    if (n < 0) throw domain_error("involution_count: n must be nonnegative");
    BigInt a = 1, b = 1;  // i(0), i(1)
    if (n == 0) return a;
    for (int i = 2; i <= n; ++i) {
        BigInt c = b + (i - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

ClassSpec ClassSpec::of(BaseClass base, int length, std::vector<Permutation> avoid) {
    ClassSpec s;
    s.base = base;
    s.length = length;
    s.avoid = std::move(avoid);
    return s;
}

ClassSpec ClassSpec::with_fixed(int pos, int value) const {
    ClassSpec s = *this;
    s.fixed_values[pos] = value;
    return s;
}

ClassSpec ClassSpec::with_descents(std::set<int> des) const {
    ClassSpec s = *this;
    s.descent_set = std::move(des);
    return s;
}

int worker_count() {
    if (const char* env = std::getenv("WILF_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

namespace {

class Generator {
public:
    Generator(const ClassSpec& spec, const std::function<void(const Permutation&)>& fn,
              std::function<bool(int)> first_filter)
        : spec_(spec), fn_(fn), first_filter_(std::move(first_filter)) {
        const int n = spec_.length;
        word_.assign(static_cast<size_t>(n) + 1, 0);
        used_.assign(static_cast<size_t>(n) + 1, 0);
        involution_base_ = spec_.base != BaseClass::Permutations;
        alternating_ = spec_.base == BaseClass::AlternatingInvolutions;
        reverse_alternating_ = spec_.base == BaseClass::ReverseAlternatingInvolutions;
    }

    void run() {
        if (spec_.length < 0) throw domain_error("class length must be nonnegative");
        for (auto [pos, val] : spec_.fixed_values)
            if (pos < 1 || pos > spec_.length || val < 1 || val > spec_.length) return;
        if (spec_.descent_set) {
            for (int d : *spec_.descent_set)
                if (d < 1 || d >= spec_.length) return;
        }
        if (spec_.length == 0) {
            fn_(Permutation());
            return;
        }
        rec(1);
    }

private:
    bool pair_ok(int t) const {
        // Adjacent constraint at (t, t+1), consulted once both are assigned.
        int a = word_[static_cast<size_t>(t)], b = word_[static_cast<size_t>(t) + 1];
        if (!a || !b) return true;
        bool descent = a > b;
        if (alternating_ && descent != (t % 2 == 0)) return false;
        if (reverse_alternating_ && descent != (t % 2 == 1)) return false;
        if (spec_.descent_set && descent != (spec_.descent_set->count(t) > 0)) return false;
        return true;
    }

    bool assign_ok(int pos, int val) const {
        auto it = spec_.fixed_values.find(pos);
        return it == spec_.fixed_values.end() || it->second == val;
    }

    bool checks_after(int pos_a, int pos_b) {
        for (int t : {pos_a - 1, pos_a, pos_b - 1, pos_b})
            if (t >= 1 && t < spec_.length && !pair_ok(t)) return false;
        int new_prefix = prefix_;
        while (new_prefix < spec_.length && word_[static_cast<size_t>(new_prefix) + 1]) ++new_prefix;
        if (new_prefix > prefix_ && !spec_.avoid.empty()) {
            std::vector<int> prefix_word(word_.begin() + 1, word_.begin() + 1 + new_prefix);
            for (const auto& pat : spec_.avoid)
                if (word_contains_pattern(prefix_word, new_prefix, pat, prefix_)) return false;
        }
        return true;
    }

    void rec(int from) {
        int i = from;
        while (i <= spec_.length && word_[static_cast<size_t>(i)]) ++i;
        if (i > spec_.length) {
            fn_(Permutation(std::vector<int>(word_.begin() + 1, word_.end())));
            return;
        }
        const bool top = (i == 1);
        if (involution_base_) {
            // candidates: fixed point i, then partners j > i, ascending
            for (int v = i; v <= spec_.length; ++v) {
                if (used_[static_cast<size_t>(v)]) continue;
                if (top && first_filter_ && !first_filter_(v)) continue;
                if (!assign_ok(i, v) || (v != i && !assign_ok(v, i))) continue;
                place(i, v);
                if (v != i) place(v, i);
                int saved_prefix = prefix_;
                if (checks_after(i, v)) {
                    advance_prefix();
                    rec(i + 1);
                }
                prefix_ = saved_prefix;
                if (v != i) unplace(v);
                unplace(i);
            }
        } else {
            for (int v = 1; v <= spec_.length; ++v) {
                if (used_[static_cast<size_t>(v)]) continue;
                if (top && first_filter_ && !first_filter_(v)) continue;
                if (!assign_ok(i, v)) continue;
                place(i, v);
                int saved_prefix = prefix_;
                if (checks_after(i, i)) {
                    advance_prefix();
                    rec(i + 1);
                }
                prefix_ = saved_prefix;
                unplace(i);
            }
        }
    }

    void place(int pos, int val) {
        word_[static_cast<size_t>(pos)] = val;
        used_[static_cast<size_t>(val)] = 1;
    }
    void unplace(int pos) {
        used_[static_cast<size_t>(word_[static_cast<size_t>(pos)])] = 0;
        word_[static_cast<size_t>(pos)] = 0;
    }
    void advance_prefix() {
        while (prefix_ < spec_.length && word_[static_cast<size_t>(prefix_) + 1]) ++prefix_;
    }

    const ClassSpec& spec_;
    const std::function<void(const Permutation&)>& fn_;
    std::function<bool(int)> first_filter_;
    std::vector<int> word_, used_;
    int prefix_ = 0;
    bool involution_base_ = false, alternating_ = false, reverse_alternating_ = false;
};

}  // namespace

void generate(const ClassSpec& spec, const std::function<void(const Permutation&)>& fn) {
    Generator(spec, fn, {}).run();
}

std::vector<Permutation> enumerate_class(const ClassSpec& spec) {
    std::vector<Permutation> out;
    generate(spec, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

BigInt count_avoiders(const ClassSpec& spec) {
    const int workers = worker_count();
    if (workers <= 1 || spec.length < 10) {
        BigInt c = 0;
        generate(spec, [&](const Permutation&) { ++c; });
        return c;
    }
    std::vector<BigInt> partial(static_cast<size_t>(workers), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            BigInt c = 0;
            auto count_fn = [&c](const Permutation&) { ++c; };
            Generator g(spec, count_fn, [w, workers](int v) { return (v - 1) % workers == w; });
            g.run();
            partial[static_cast<size_t>(w)] = c;
        });
    }
    for (auto& t : pool) t.join();
    BigInt total = 0;
    for (const auto& c : partial) total += c;
    return total;
}

void VerificationReport::add(int n, std::string label, BigInt expected, BigInt computed) {
    pass = pass && expected == computed;
    rows.push_back(VerificationRow{n, std::move(label), std::move(expected), std::move(computed)});
}

}  // namespace wilf
