#pragma once

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rgf/core.hpp"

// Exact cardinalities of the three families via a small dynamic program.
// Arbitrary precision throughout: Bell numbers outgrow 64 bits near n = 25
// and the counter should keep working well past generation scale.

namespace rgf {

using BigInt = boost::multiprecision::cpp_int;

// T(i, m): number of RGF prefixes of length i whose maximum is exactly m.
// T(1, 0) = 1 and T(i+1, m) = (m+1) T(i, m) + T(i, m-1): append one of the
// m+1 values that keep the maximum, or raise it by appending m.
class CountTable {
  public:
    CountTable(int n, int max_m) : max_m_(max_m), rows_(static_cast<std::size_t>(n) + 1) {
        if (n < 1 || max_m < 0) throw std::invalid_argument("CountTable: bad dimensions");
        for (auto& row : rows_) row.assign(static_cast<std::size_t>(max_m) + 1, 0);
        rows_[1][0] = 1;
        for (int i = 1; i < n; ++i)
            for (int m = 0; m <= max_m; ++m) {
                BigInt v = BigInt(m + 1) * rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
                if (m > 0) v += rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m) - 1];
                rows_[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(m)] = std::move(v);
            }
    }

    const BigInt& at(int i, int m) const {
        if (i < 1 || i >= static_cast<int>(rows_.size()) || m < 0 || m > max_m_)
            throw std::out_of_range("CountTable: index out of range");
        return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
    }

  private:
    int max_m_;
    std::vector<std::vector<BigInt>> rows_;
};

// |family|. Total in the spec: ExactMax with b >= n is an empty family and
// counts 0 rather than tripping the n > b precondition.
inline BigInt count(const FamilySpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("count: n must be >= 1");
    if (spec.family_class != FamilyClass::All && spec.b < 1)
        throw std::invalid_argument("count: b must be >= 1");
    const int n = spec.n;
    switch (spec.family_class) {
        case FamilyClass::ExactMax: {
            if (spec.b >= n) return 0;
            CountTable table(n, spec.b);
            return table.at(n, spec.b);
        }
        case FamilyClass::All:
        case FamilyClass::Bounded: {
            const int top = spec.family_class == FamilyClass::All ? n - 1
                                                                  : std::min(spec.b, n - 1);
            CountTable table(n, std::max(top, 0));
            BigInt total = 0;
            for (int m = 0; m <= top; ++m) total += table.at(n, m);
            return total;
        }
    }
    return 0;
}

inline BigInt bell(int n) {
    if (n < 1) throw std::invalid_argument("bell: n must be >= 1");
    return count(FamilySpec::all(n));
}

// Stirling numbers of the second kind by the classical triangle
// S(n, k) = k S(n-1, k) + S(n-1, k-1). Kept separate from CountTable so the
// two recurrences can cross-check each other.
inline BigInt stirling2(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("stirling2: requires n >= 1, k >= 0");
    if (k == 0 || k > n) return 0;
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;  // S(0, 0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                BigInt(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
        row[0] = 0;  // S(i, 0) = 0 once i >= 1
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace rgf
