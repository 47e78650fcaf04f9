#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wilf/permutation.hpp"

namespace wilf {

using BigInt = boost::multiprecision::cpp_int;

/// n-th Motzkin number by the closed form sum n!/(k!(k+1)!(n-2k)!).
BigInt motzkin(int n);
/// Same value by the convolution recurrence M_{n+1} = M_n + sum M_k M_{n-1-k}.
BigInt motzkin_recurrence(int n);
/// Number of involutions of [n] by i(n) = i(n-1) + (n-1) i(n-2).
BigInt involution_count(int n);

enum class BaseClass { Permutations, Involutions, AlternatingInvolutions, ReverseAlternatingInvolutions };

/// A finite permutation class: a base family of a given length, the patterns
/// it must avoid, and optional exact filters.
struct ClassSpec {
    BaseClass base = BaseClass::Involutions;
    int length = 0;
    std::vector<Permutation> avoid;
    std::map<int, int> fixed_values;           // position -> required value
    std::optional<std::set<int>> descent_set;  // exact descent-set equality

    static ClassSpec of(BaseClass base, int length, std::vector<Permutation> avoid = {});
    ClassSpec with_fixed(int pos, int value) const;
    ClassSpec with_descents(std::set<int> des) const;
};

/// Streams exactly the members of the class, each once, in lexicographic
/// order. Involution families are generated natively from fixed points and
/// 2-cycles, not by filtering all permutations.
void generate(const ClassSpec& spec, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> enumerate_class(const ClassSpec& spec);
/// Streaming cardinality; shards the top-level branch across worker threads
/// (bounded by WILF_THREADS) for long inputs.
BigInt count_avoiders(const ClassSpec& spec);

/// Worker-count bound: WILF_THREADS when set (minimum 1), else the hardware
/// concurrency capped at 8.
int worker_count();

/// Default feasibility cap on class length (overridable per call site).
inline constexpr int kDefaultMaxInvolutionLength = 16;
inline constexpr int kDefaultMaxPermutationLength = 11;

struct VerificationRow {
    int n = 0;
    std::string label;
    BigInt expected = 0;
    BigInt computed = 0;
    bool pass() const { return expected == computed; }
};

struct VerificationReport {
    std::string name;
    std::string parameters;
    std::vector<VerificationRow> rows;
    double wall_seconds = 0.0;
    bool pass = true;

    void add(int n, std::string label, BigInt expected, BigInt computed);
};

/// Named verification targets. `name` is one of: motzkin, table1, conj1,
/// conj2, conj3, lemma_f, lemma_R, lemma_P, lemma_Q, eq_O, psi_bijection,
/// phi_bijection, matching_suite, path_suite. max_n <= 0 selects the
/// documented default for the target; `slow` widens the exhaustive suites.
VerificationReport verify(const std::string& name, int max_n = 0, bool slow = false);
std::vector<std::string> verification_names();

}  // namespace wilf
