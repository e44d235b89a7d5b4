#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Sequence primitives for restricted growth functions (RGFs).
//
// An RGF is an integer sequence s_1 s_2 ... s_n with s_1 = 0 in which each
// entry exceeds the maximum of the preceding entries by at most one.
// Length-n RGFs encode the partitions of {1,...,n}: positions holding the
// same value form a block. All public positions are 1-based; buffers are
// plain 0-based vectors internally.

namespace rgf {

using Sequence = std::vector<int>;

// Thrown when an (order, bound parity, family) pairing has no supported
// closed form or generating algorithm.
class unsupported_combination : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a brute-force enumeration would cover more candidate words
// than the configured budget.
class budget_exceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class FamilyClass {
    All,      // every length-n RGF
    Bounded,  // maximum entry <= b
    ExactMax  // maximum entry exactly b
};

// Input contract of every generator and counter: which family of length-n
// RGFs is meant. For All the bound is irrelevant; entries of a length-n RGF
// never exceed n-1, so All behaves as Bounded with b = n-1.
struct FamilySpec {
    int n = 1;
    int b = 1;
    FamilyClass family_class = FamilyClass::Bounded;

    static FamilySpec all(int n) { return {n, std::max(1, n - 1), FamilyClass::All}; }
    static FamilySpec bounded(int n, int b) { return {n, b, FamilyClass::Bounded}; }
    static FamilySpec exact_max(int n, int b) { return {n, b, FamilyClass::ExactMax}; }

    int effective_bound() const {
        return family_class == FamilyClass::All ? std::max(1, n - 1) : b;
    }
};

// Strict validation used by the generators and the prefix queries.
// Counting deliberately stays total instead (ExactMax with b >= n counts 0).
inline void validate(const FamilySpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("FamilySpec: n must be >= 1");
    if (spec.family_class == FamilyClass::All) return;
    if (spec.b < 1) throw std::invalid_argument("FamilySpec: b must be >= 1");
    if (spec.family_class == FamilyClass::ExactMax && spec.n <= spec.b)
        throw std::invalid_argument("FamilySpec: ExactMax requires n > b");
}

inline int max_value(std::span<const int> s) {
    int m = 0;
    for (int v : s) m = std::max(m, v);
    return m;
}

inline bool is_rgf(std::span<const int> s) {
    if (s.empty() || s.front() != 0) return false;
    int run_max = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] > run_max + 1) return false;
        run_max = std::max(run_max, s[i]);
    }
    return true;
}

inline bool member(std::span<const int> s, const FamilySpec& spec) {
    if (static_cast<int>(s.size()) != spec.n)
        throw std::invalid_argument("member: sequence length does not match spec.n");
    if (!is_rgf(s)) return false;
    switch (spec.family_class) {
        case FamilyClass::All: return true;
        case FamilyClass::Bounded: return max_value(s) <= spec.b;
        case FamilyClass::ExactMax: return max_value(s) == spec.b;
    }
    return false;
}

// U_k: how many of s_1 .. s_{k-1} are nonzero and even. Valid for
// 1 <= k <= n+1; k = 1 looks at the empty prefix.
inline int u_statistic(std::span<const int> s, int k) {
    if (k < 1 || k > static_cast<int>(s.size()) + 1)
        throw std::out_of_range("u_statistic: k out of range");
    int count = 0;
    for (int i = 0; i < k - 1; ++i)
        if (s[i] != 0 && s[i] % 2 == 0) ++count;
    return count;
}

inline int hamming(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

// Smallest and largest 1-based position where the sequences differ;
// absent when they are equal.
inline std::optional<std::pair<int, int>> diff_span(std::span<const int> a,
                                                    std::span<const int> b) {
    if (a.size() != b.size()) throw std::invalid_argument("diff_span: length mismatch");
    int first = 0, last = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            if (first == 0) first = static_cast<int>(i) + 1;
            last = static_cast<int>(i) + 1;
        }
    }
    if (first == 0) return std::nullopt;
    return std::make_pair(first, last);
}

// Decode an RGF into the set partition it encodes. Block j holds the
// 1-based positions i with s_i = j; blocks come out nonempty, disjoint and
// covering 1..n.
inline std::vector<std::vector<int>> rgf_to_partition(std::span<const int> s) {
    if (!is_rgf(s)) throw std::invalid_argument("rgf_to_partition: input is not an RGF");
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(max_value(s)) + 1);
    for (std::size_t i = 0; i < s.size(); ++i)
        blocks[static_cast<std::size_t>(s[i])].push_back(static_cast<int>(i) + 1);
    return blocks;
}

// Verdict of a Gray-code scan over an ordered list: the largest Hamming
// distance between consecutive sequences, the largest window spanned by the
// differing positions, and the 1-based index of the left element of the
// first violating pair, if any.
struct GrayReport {
    int max_hamming = 0;
    int max_span = 0;
    std::optional<std::size_t> first_violation;
};

inline std::string to_string(std::span<const int> s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(s[i]);
    }
    return out;
}

}  // namespace rgf
