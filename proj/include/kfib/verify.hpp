#pragma once

// Verification suite and strategy benchmark driven by the command line.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kfib/fibspace.hpp"
#include "kfib/integer.hpp"

namespace kfib {

struct VerifyConfig {
    IndexRange k_range{2, 6};
    IndexRange n_range{-40, 60};
    IndexRange identity_window{-20, 20};
    IndexRange pascal_box{-30, 30};
    IndexRange multinomial_box{-6, 6};
    IndexRange tiling_lengths{0, 14};
    /// Flips one coefficient of the first operator relation.
    bool inject_fault = false;
    /// Worker threads for the per-k grid; 0 picks hardware concurrency.
    unsigned threads = 0;
};

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::optional<std::string> counterexample;  ///< first failure, if any

    bool passed() const { return !counterexample.has_value(); }
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Throws std::invalid_argument if a range is empty or k_range.lo < 2.
VerifyReport run_verify(const VerifyConfig& cfg);

/// Individual checks, exposed for tests.
CheckResult check_identity_catalog(const VerifyConfig& cfg);
CheckResult check_formula_grid(const VerifyConfig& cfg);
CheckResult check_binomial_pascal(const VerifyConfig& cfg);
CheckResult check_multinomial_pascal(const VerifyConfig& cfg);
CheckResult check_aux_sequence(const VerifyConfig& cfg);
CheckResult check_tiling_bridge(const VerifyConfig& cfg);

struct StrategyTiming {
    Strategy strategy;
    Integer value;
    double median_seconds = 0.0;
};

struct BenchReport {
    Index n = 0;
    bool values_agree = false;
    std::vector<StrategyTiming> timings;
};

/// Evaluates F_n once per strategy and checks agreement, then times
/// `repetitions` runs of each strategy. Timings are only collected when the
/// values agree.
BenchReport run_bench(const FibSequence& seq, Index n, std::span<const Strategy> strategies, int repetitions);

}  // namespace kfib
