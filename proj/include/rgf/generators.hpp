#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rgf/core.hpp"
#include "rgf/orders.hpp"

// Recursive constant-amortized-time generators. Each run owns one length-n
// buffer; the visitor receives a read-only view of it on every emission and
// must copy if it keeps the data. Every recursive call either emits or
// branches at least twice, so calls never exceed twice the output count.
//
// gen1 lists R_n(b) in reflected Gray code order (a 3-adjacent Gray code
// when b is odd). gen2 lists R_n(b) in co-reflected order (3-adjacent Gray
// code when b is even). gen3 lists R_n*(b) in reflected order (a 5-Gray code
// when b is odd).

namespace rgf {

struct GenStats {
    std::uint64_t calls = 0;    // main call plus every recursive invocation
    std::uint64_t outputs = 0;  // sequences handed to the visitor
};

// How gen3 materializes the forced increasing tail on emission. Window3
// writes only the first three tail positions and relies on the buffer still
// holding the rest from the previous emission, which is sound for odd b.
// Full rewrites the whole tail and is valid for every b.
enum class TailStrategy { Window3, Full };

namespace detail {

template <typename Visitor>
struct Gen1Run {
    int n;
    int b;
    Visitor& visit;
    std::vector<int> buf;
    GenStats stats;

    void emit() {
        ++stats.outputs;
        visit(std::span<const int>(buf.data(), buf.size()));
    }

    // k is the 1-based position to fill; dir parity picks the sweep
    // direction at k; m+1 is the largest value assignable there.
    void rec(int k, int dir, int m) {
        ++stats.calls;
        if (k == n + 1) {
            emit();
            return;
        }
        if (m == b) m = b - 1;
        if (dir % 2 == 0) {
            for (int i = 0; i <= m + 1; ++i) {
                buf[k - 1] = i;
                rec(k + 1, i, i > m ? i : m);
            }
        } else {
            for (int i = m + 1; i >= 0; --i) {
                buf[k - 1] = i;
                rec(k + 1, i + 1, i > m ? i : m);
            }
        }
    }
};

template <typename Visitor>
struct Gen2Run {
    int n;
    int b;
    Visitor& visit;
    std::vector<int> buf;
    GenStats stats;

    void emit() {
        ++stats.outputs;
        visit(std::span<const int>(buf.data(), buf.size()));
    }

    // Same skeleton as Gen1Run; the successor direction depends on whether
    // the digit just written is zero, which is what tracks the parity of
    // the nonzero-even count instead of the prefix sum.
    void rec(int k, int dir, int m) {
        ++stats.calls;
        if (k == n + 1) {
            emit();
            return;
        }
        if (m == b) m = b - 1;
        if (dir % 2 == 0) {
            for (int i = 0; i <= m + 1; ++i) {
                buf[k - 1] = i;
                rec(k + 1, i == 0 ? 0 : i + 1, i > m ? i : m);
            }
        } else {
            for (int i = m + 1; i >= 0; --i) {
                buf[k - 1] = i;
                rec(k + 1, i == 0 ? 1 : i, i > m ? i : m);
            }
        }
    }
};

template <typename Visitor>
struct Gen3Run {
    int n;
    int b;
    TailStrategy strategy;
    Visitor& visit;
    std::vector<int> buf;
    GenStats stats;

    void emit() {
        ++stats.outputs;
        visit(std::span<const int>(buf.data(), buf.size()));
    }

    // As Gen1Run with one extra parameter: a is the maximum of the prefix
    // written so far. Once the positions left equal b - a the tail is the
    // forced run a+1, a+2, ..., b, so it is written out and emitted without
    // further branching.
    void rec(int k, int dir, int m, int a) {
        ++stats.calls;
        if (k == n + 1) {
            emit();
            return;
        }
        if (k == n + 1 + a - b) {
            if (strategy == TailStrategy::Window3) {
                for (int i = 0; i <= 2; ++i)
                    if (k + i <= n) buf[k + i - 1] = a + 1 + i;
            } else {
                for (int j = k; j <= n; ++j) buf[j - 1] = a + 1 + (j - k);
            }
            emit();
            return;
        }
        if (m == b) m = b - 1;
        if (dir % 2 == 0) {
            for (int i = 0; i <= m + 1; ++i) {
                buf[k - 1] = i;
                rec(k + 1, i, i > m ? i : m, i > a ? i : a);
            }
        } else {
            for (int i = m + 1; i >= 0; --i) {
                buf[k - 1] = i;
                rec(k + 1, i + 1, i > m ? i : m, i > a ? i : a);
            }
        }
    }
};

inline void require_class(const FamilySpec& spec, FamilyClass wanted, const char* who) {
    validate(spec);
    if (spec.family_class != wanted)
        throw std::invalid_argument(std::string(who) + ": wrong family class for this generator");
}

}  // namespace detail

template <typename Visitor>
GenStats gen1(const FamilySpec& spec, Visitor&& visit) {
    detail::require_class(spec, FamilyClass::Bounded, "gen1");
    detail::Gen1Run<std::remove_reference_t<Visitor>> run{spec.n, spec.b, visit,
                                                          std::vector<int>(spec.n, 0), {}};
    run.rec(2, 0, 0);
    return run.stats;
}

template <typename Visitor>
GenStats gen2(const FamilySpec& spec, Visitor&& visit) {
    detail::require_class(spec, FamilyClass::Bounded, "gen2");
    detail::Gen2Run<std::remove_reference_t<Visitor>> run{spec.n, spec.b, visit,
                                                          std::vector<int>(spec.n, 0), {}};
    run.rec(2, 0, 0);
    return run.stats;
}

template <typename Visitor>
GenStats gen3(const FamilySpec& spec, Visitor&& visit, TailStrategy strategy) {
    detail::require_class(spec, FamilyClass::ExactMax, "gen3");
    if (strategy == TailStrategy::Window3 && spec.b % 2 == 0)
        throw unsupported_combination(
            "gen3 window tail writes need an odd bound; use the full-tail strategy");
    detail::Gen3Run<std::remove_reference_t<Visitor>> run{spec.n, spec.b, strategy, visit,
                                                          std::vector<int>(spec.n, 0), {}};
    // Pre-load the first sequence, 0...0 followed by 1 2 ... b. The window
    // strategy only ever touches three tail positions per emission, so the
    // deeper tail entries must be present before the first output.
    for (int j = 1; j <= spec.n; ++j) run.buf[j - 1] = std::max(0, j - (spec.n - spec.b));
    run.rec(2, 0, 0, 0);
    return run.stats;
}

// Runs the generator matching (family, order) with the given visitor. All
// maps onto Bounded with b = n-1, which lists the same set in the same
// order.
template <typename Visitor>
GenStats generate_visit(const FamilySpec& spec, OrderRelation order, Visitor&& visit,
                        TailStrategy strategy = TailStrategy::Full) {
    FamilySpec run_spec = spec;
    if (spec.family_class == FamilyClass::All)
        run_spec = FamilySpec::bounded(spec.n, spec.effective_bound());
    if (run_spec.family_class == FamilyClass::ExactMax) {
        if (order != OrderRelation::RGC)
            throw unsupported_combination(
                "no generator lists ExactMax families in co-reflected order");
        return gen3(run_spec, std::forward<Visitor>(visit), strategy);
    }
    return order == OrderRelation::RGC ? gen1(run_spec, std::forward<Visitor>(visit))
                                       : gen2(run_spec, std::forward<Visitor>(visit));
}

inline std::pair<std::vector<Sequence>, GenStats> generate_collect(
    const FamilySpec& spec, OrderRelation order, TailStrategy strategy = TailStrategy::Full) {
    std::vector<Sequence> out;
    GenStats stats = generate_visit(
        spec, order, [&out](std::span<const int> s) { out.emplace_back(s.begin(), s.end()); },
        strategy);
    return {std::move(out), stats};
}

inline std::vector<Sequence> generate_list(const FamilySpec& spec, OrderRelation order) {
    return generate_collect(spec, order).first;
}

}  // namespace rgf
