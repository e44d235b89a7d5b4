#pragma once

#include <charconv>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "rgf/rgf.hpp"

// Command-line front end: gen, verify, count and bench subcommands over the
// library. Exit codes are the machine contract: 0 ok, 1 a verification
// failed, 2 bad flags or input, 3 unsupported (class, order) combination,
// 4 enumeration budget exceeded.

namespace rgf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadFlags = 2;
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitBudget = 4;

inline constexpr const char* kFormatVersion = "rgf-cli output format 1";

struct RunConfig {
    enum class Command { Gen, Verify, Count, Bench };
    enum class OrderChoice { RGC, CoRGC, Auto };
    enum class Format { Plain, Csv };

    Command command = Command::Gen;
    int n_lo = 1;
    int n_hi = 1;  // > n_lo only for bench sweeps
    int b = 0;     // 0 = not given; mandatory unless family_class is All
    OrderChoice order = OrderChoice::Auto;
    FamilyClass family_class = FamilyClass::Bounded;
    Format format = Format::Plain;
    bool show_distance = false;
    TailStrategy tail = TailStrategy::Full;
    std::uint64_t budget = kDefaultEnumerationBudget;
    bool verbose = false;
};

// auto picks the order with a known Gray code: reflected for odd bounds and
// for the exact-maximum and unbounded families, co-reflected for even bounds.
inline OrderRelation resolve_order(const RunConfig& cfg) {
    switch (cfg.order) {
        case RunConfig::OrderChoice::RGC: return OrderRelation::RGC;
        case RunConfig::OrderChoice::CoRGC: return OrderRelation::CoRGC;
        case RunConfig::OrderChoice::Auto: break;
    }
    if (cfg.family_class == FamilyClass::Bounded && cfg.b % 2 == 0) return OrderRelation::CoRGC;
    return OrderRelation::RGC;
}

inline FamilySpec spec_for(const RunConfig& cfg, int n) {
    switch (cfg.family_class) {
        case FamilyClass::All: return FamilySpec::all(n);
        case FamilyClass::Bounded: return FamilySpec::bounded(n, cfg.b);
        case FamilyClass::ExactMax: return FamilySpec::exact_max(n, cfg.b);
    }
    return FamilySpec::bounded(n, cfg.b);
}

namespace detail {

inline bool parse_int_full(std::string_view text, int& value) {
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    return ec == std::errc() && ptr == end;
}

// "7" or "10..16"
inline bool parse_n_range(const std::string& text, int& lo, int& hi) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        if (!parse_int_full(text, lo)) return false;
        hi = lo;
        return true;
    }
    return parse_int_full(std::string_view(text).substr(0, dots), lo) &&
           parse_int_full(std::string_view(text).substr(dots + 2), hi) && lo <= hi;
}

}  // namespace detail

inline int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const FamilySpec spec = spec_for(cfg, cfg.n_lo);
        const OrderRelation order = resolve_order(cfg);
        if (spec.family_class == FamilyClass::ExactMax && spec.b % 2 == 0)
            err << "warning: no Gray-code bound is known for the exact-maximum family "
                   "with an even bound\n";
        const bool csv = cfg.format == RunConfig::Format::Csv;
        const bool with_dist = csv && cfg.show_distance;
        if (csv) out << (with_dist ? "seq,dist" : "seq") << '\n';
        Sequence prev;
        generate_visit(
            spec, order,
            [&](std::span<const int> s) {
                out << to_string(s);
                if (with_dist) {
                    out << ',';
                    if (!prev.empty()) out << hamming(prev, s);
                    prev.assign(s.begin(), s.end());
                }
                out << '\n';
            },
            cfg.tail);
        return kExitOk;
    } catch (const unsupported_combination& e) {
        err << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadFlags;
    }
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const FamilySpec spec = spec_for(cfg, cfg.n_lo);
        const OrderRelation order = resolve_order(cfg);
        out << "family: " << (cfg.family_class == FamilyClass::All ? "all"
                              : cfg.family_class == FamilyClass::Bounded ? "bounded"
                                                                         : "exact")
            << " n=" << spec.n;
        if (cfg.family_class != FamilyClass::All) out << " b=" << spec.b;
        out << ", order: " << (order == OrderRelation::RGC ? "rgc" : "corgc") << '\n';

        auto [generated, stats] = generate_collect(spec, order, cfg.tail);
        const auto reference = oracle_sorted(spec, order, cfg.budget);
        out << "objects: " << generated.size() << '\n';
        if (auto mismatch = equal_lists(generated, reference)) {
            out << "order check: FAIL at position " << *mismatch
                << " (generator disagrees with sorted brute force)\n";
            return kExitCheckFailed;
        }
        out << "order check: ok (matches sorted brute force)\n";

        const bool exact = spec.family_class == FamilyClass::ExactMax;
        const int bound = exact ? 5 : 3;
        const bool adjacent = !exact;
        const GrayReport report = check_gray(generated, bound, adjacent);
        out << "gray check: max hamming " << report.max_hamming << ", max span "
            << report.max_span << " (bound " << bound << (adjacent ? ", adjacent" : "") << ")\n";
        if (report.first_violation) {
            const std::size_t i = *report.first_violation;
            out << "gray check: FAIL at pair " << i << ": " << to_string(generated[i - 1])
                << " -> " << to_string(generated[i]) << " (hamming "
                << hamming(generated[i - 1], generated[i]) << ")\n";
            const auto dist = distances(generated);
            const auto worst =
                static_cast<std::size_t>(std::max_element(dist.begin(), dist.end()) -
                                         dist.begin());
            out << "largest distance at pair " << worst + 1 << ": "
                << to_string(generated[worst]) << " -> " << to_string(generated[worst + 1])
                << " (hamming " << dist[worst] << ")\n";
            return kExitCheckFailed;
        }
        out << "cat check: calls " << stats.calls << ", outputs " << stats.outputs << '\n';
        if (stats.calls > 2 * stats.outputs) {
            out << "cat check: FAIL (calls exceed twice the outputs)\n";
            return kExitCheckFailed;
        }
        out << "verdict: PASS\n";
        return kExitOk;
    } catch (const unsupported_combination& e) {
        err << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const budget_exceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadFlags;
    }
}

inline int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        out << count(spec_for(cfg, cfg.n_lo)) << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadFlags;
    }
}

inline int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const OrderRelation order = resolve_order(cfg);
        out << "n,outputs,calls,calls_per_output,ns_per_output\n";
        std::uint64_t sink = 0;
        for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
            const FamilySpec spec = spec_for(cfg, n);
            const auto start = std::chrono::steady_clock::now();
            const GenStats stats = generate_visit(
                spec, order, [&sink](std::span<const int> s) { sink += s.back(); }, cfg.tail);
            const auto elapsed = std::chrono::steady_clock::now() - start;
            const double ns =
                static_cast<double>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count()) /
                static_cast<double>(stats.outputs);
            const double ratio =
                static_cast<double>(stats.calls) / static_cast<double>(stats.outputs);
            out << n << ',' << stats.outputs << ',' << stats.calls << ',' << std::fixed
                << std::setprecision(3) << ratio << ',' << std::setprecision(1) << ns << '\n';
            out.unsetf(std::ios::fixed);
            if (stats.calls > 2 * stats.outputs) {
                err << "cat check: FAIL at n=" << n << " (calls exceed twice the outputs)\n";
                return kExitCheckFailed;
            }
        }
        if (cfg.verbose) err << "checksum " << sink << '\n';
        return kExitOk;
    } catch (const unsupported_combination& e) {
        err << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadFlags;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string n_text = "1";
    std::string order_text = "auto";
    std::string class_text = "bounded";
    std::string format_text = "plain";
    std::string tail_text = "full";

    CLI::App app{"Gray-code listings of bounded restricted growth functions"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_order) {
        sub->add_option("--n", n_text, "sequence length (bench accepts a lo..hi sweep)")
            ->required();
        sub->add_option("--b", cfg.b, "bound on the maximum entry");
        sub->add_option("--class", class_text, "family: bounded, exact or all")
            ->check(CLI::IsMember({"bounded", "exact", "all"}));
        if (with_order)
            sub->add_option("--order", order_text, "order relation: rgc, corgc or auto")
                ->check(CLI::IsMember({"rgc", "corgc", "auto"}));
        sub->add_flag("--verbose", cfg.verbose, "print the output format version to stderr");
        return sub;
    };

    CLI::App* gen = add_common(app.add_subcommand("gen", "list a family in Gray-code order"),
                               true);
    gen->add_option("--format", format_text, "plain or csv")
        ->check(CLI::IsMember({"plain", "csv"}));
    gen->add_flag("--show-distance", cfg.show_distance,
                  "append the Hamming distance to the previous row (csv only)");
    gen->add_option("--tail", tail_text, "exact-family tail writes: paper or full")
        ->check(CLI::IsMember({"paper", "full"}));

    CLI::App* verify = add_common(
        app.add_subcommand("verify", "check a listing against brute force and the Gray bounds"),
        true);
    verify->add_option("--budget", cfg.budget, "candidate-word cap for brute force");
    verify->add_option("--tail", tail_text, "exact-family tail writes: paper or full")
        ->check(CLI::IsMember({"paper", "full"}));

    add_common(app.add_subcommand("count", "print the family cardinality"), false);

    CLI::App* bench = add_common(
        app.add_subcommand("bench", "time the generators over a sweep of n"), true);
    bench->add_option("--tail", tail_text, "exact-family tail writes: paper or full")
        ->check(CLI::IsMember({"paper", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadFlags;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    cfg.command = sub == "gen"      ? RunConfig::Command::Gen
                  : sub == "verify" ? RunConfig::Command::Verify
                  : sub == "count"  ? RunConfig::Command::Count
                                    : RunConfig::Command::Bench;

    if (!detail::parse_n_range(n_text, cfg.n_lo, cfg.n_hi)) {
        err << "error: --n expects an integer" << (sub == "bench" ? " or lo..hi range" : "")
            << '\n';
        return kExitBadFlags;
    }
    if (cfg.command != RunConfig::Command::Bench && cfg.n_hi != cfg.n_lo) {
        err << "error: only bench accepts an n range\n";
        return kExitBadFlags;
    }
    cfg.order = order_text == "rgc"      ? RunConfig::OrderChoice::RGC
                : order_text == "corgc"  ? RunConfig::OrderChoice::CoRGC
                                         : RunConfig::OrderChoice::Auto;
    cfg.family_class = class_text == "bounded"  ? FamilyClass::Bounded
                       : class_text == "exact"  ? FamilyClass::ExactMax
                                                : FamilyClass::All;
    cfg.format = format_text == "csv" ? RunConfig::Format::Csv : RunConfig::Format::Plain;
    cfg.tail = tail_text == "paper" ? TailStrategy::Window3 : TailStrategy::Full;

    if (cfg.family_class != FamilyClass::All && cfg.b < 1) {
        err << "error: --b >= 1 is required unless --class all\n";
        return kExitBadFlags;
    }
    if (cfg.n_lo < 1) {
        err << "error: --n must be >= 1\n";
        return kExitBadFlags;
    }
    if (cfg.verbose) err << kFormatVersion << '\n';

    switch (cfg.command) {
        case RunConfig::Command::Gen: return cmd_gen(cfg, out, err);
        case RunConfig::Command::Verify: return cmd_verify(cfg, out, err);
        case RunConfig::Command::Count: return cmd_count(cfg, out, err);
        case RunConfig::Command::Bench: return cmd_bench(cfg, out, err);
    }
    return kExitBadFlags;
}

}  // namespace rgf::cli
