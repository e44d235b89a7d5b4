#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rgf/core.hpp"
#include "rgf/orders.hpp"

// Brute-force reference enumeration and Gray-code verification. Everything
// here works from the definitions alone so it can stand as an independent
// check on the generators and the closed forms.

namespace rgf {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// A consecutive pair in an ordered listing whose Hamming distance refutes a
// Gray-code bound. pair_index is the 1-based position of the left element.
struct Witness {
    int n = 0;
    std::size_t pair_index = 0;
    Sequence left;
    Sequence right;
    int distance = 0;
};

namespace detail {

// (base)^exp, saturating at 2^64-1.
inline std::uint64_t saturating_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

}  // namespace detail

// All members of the family, found by walking the candidate words of
// {0..min(b, n-1)}^n and keeping those that satisfy the membership
// predicate. Subtrees whose prefix already violates the growth condition
// cannot contain members and are skipped wholesale. The budget caps the
// size of the candidate space, not the number of members.
inline std::vector<Sequence> enumerate_brute(const FamilySpec& spec,
                                             std::uint64_t budget = kDefaultEnumerationBudget) {
    if (spec.n < 1) throw std::invalid_argument("enumerate_brute: n must be >= 1");
    if (spec.family_class != FamilyClass::All && spec.b < 1)
        throw std::invalid_argument("enumerate_brute: b must be >= 1");
    const int digit_cap = std::min(spec.effective_bound(), spec.n - 1);
    if (detail::saturating_pow(static_cast<std::uint64_t>(digit_cap) + 1, spec.n) > budget)
        throw budget_exceeded("enumerate_brute: candidate space exceeds the budget of " +
                              std::to_string(budget) + " words");

    std::vector<Sequence> out;
    Sequence word(static_cast<std::size_t>(spec.n), 0);
    auto walk = [&](auto&& self, int pos, int run_max) -> void {
        if (pos == spec.n) {
            if (spec.family_class != FamilyClass::ExactMax || run_max == spec.b)
                out.push_back(word);
            return;
        }
        for (int v = 0; v <= digit_cap; ++v) {
            if (v > run_max + 1) break;  // no RGF extends this prefix
            word[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, std::max(run_max, v));
        }
    };
    // every RGF starts with 0
    walk(walk, 1, 0);
    return out;
}

// Every word of {0..max_digit}^n, in odometer order. Used to check the
// orders on unrestricted m-ary words.
inline std::vector<Sequence> enumerate_cube(int n, int max_digit) {
    if (n < 1 || max_digit < 0) throw std::invalid_argument("enumerate_cube: bad dimensions");
    std::vector<Sequence> out;
    Sequence word(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(word);
        int i = n - 1;
        while (i >= 0 && word[static_cast<std::size_t>(i)] == max_digit) {
            word[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++word[static_cast<std::size_t>(i)];
    }
    return out;
}

inline std::vector<Sequence> oracle_sorted(const FamilySpec& spec, OrderRelation order,
                                           std::uint64_t budget = kDefaultEnumerationBudget) {
    return sort_in_order(enumerate_brute(spec, budget), order);
}

// Scan consecutive pairs of an ordered listing against a distance bound,
// and optionally against the requirement that the differing positions fit
// in a window of d_max adjacent indices.
inline GrayReport check_gray(const std::vector<Sequence>& items, int d_max,
                             bool require_adjacent) {
    GrayReport report;
    for (std::size_t i = 1; i < items.size(); ++i) {
        const int d = hamming(items[i - 1], items[i]);
        const auto span = diff_span(items[i - 1], items[i]);
        const int width = span ? span->second - span->first + 1 : 0;
        report.max_hamming = std::max(report.max_hamming, d);
        report.max_span = std::max(report.max_span, width);
        const bool violates = d > d_max || (require_adjacent && width > d_max);
        if (violates && !report.first_violation) report.first_violation = i;
    }
    return report;
}

inline std::vector<int> distances(const std::vector<Sequence>& items) {
    if (items.empty()) throw std::invalid_argument("distances: empty list");
    std::vector<int> out;
    out.reserve(items.size() - 1);
    for (std::size_t i = 1; i < items.size(); ++i)
        out.push_back(hamming(items[i - 1], items[i]));
    return out;
}

// 1-based position of the first disagreement between two ordered lists;
// absent when they are identical.
inline std::optional<std::size_t> equal_lists(const std::vector<Sequence>& a,
                                              const std::vector<Sequence>& b) {
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i)
        if (a[i] != b[i]) return i + 1;
    if (a.size() != b.size()) return common + 1;
    return std::nullopt;
}

// Smallest n <= n_limit for which the ordered bounded family has a
// consecutive pair at Hamming distance >= threshold, with that pair.
// Returns nothing when every n passes, as the Gray-code theorems promise
// for the covered parities.
inline std::optional<Witness> find_non_gray_witness(OrderRelation order, int b, int n_limit,
                                                    int threshold,
                                                    std::uint64_t budget = kDefaultEnumerationBudget) {
    if (threshold < 4)
        throw std::invalid_argument("find_non_gray_witness: threshold below 4 cannot refute "
                                    "a 3-Gray code");
    if (b < 1 || n_limit < 1) throw std::invalid_argument("find_non_gray_witness: bad limits");
    for (int n = 1; n <= n_limit; ++n) {
        const auto sorted = oracle_sorted(FamilySpec::bounded(n, b), order, budget);
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            const int d = hamming(sorted[i - 1], sorted[i]);
            if (d >= threshold) return Witness{n, i, sorted[i - 1], sorted[i], d};
        }
    }
    return std::nullopt;
}

// Golden-file format: one sequence per line, single-space-separated decimal
// values; lines beginning with '#' are ignored.
inline std::vector<Sequence> load_golden(std::istream& in) {
    std::vector<Sequence> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        std::istringstream fields(line);
        Sequence s;
        int v;
        while (fields >> v) s.push_back(v);
        if (!s.empty()) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace rgf
