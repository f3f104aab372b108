#include "kfib/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kfib/formulas.hpp"
#include "kfib/genbinom.hpp"
#include "kfib/genmultinom.hpp"
#include "kfib/operators.hpp"
#include "kfib/tiling.hpp"

namespace kfib {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

namespace {

void require_nonempty(IndexRange r, const char* what) {
    if (r.empty()) throw std::invalid_argument(std::string("verify: empty ") + what);
}

void validate(const VerifyConfig& cfg) {
    require_nonempty(cfg.k_range, "k range");
    require_nonempty(cfg.n_range, "n range");
    require_nonempty(cfg.identity_window, "identity window");
    require_nonempty(cfg.pascal_box, "Pascal box");
    require_nonempty(cfg.multinomial_box, "multinomial box");
    require_nonempty(cfg.tiling_lengths, "tiling lengths");
    if (cfg.k_range.lo < 2) throw std::invalid_argument("verify: k must be at least 2");
    if (cfg.tiling_lengths.lo < 0) throw std::invalid_argument("verify: tiling lengths must be nonnegative");
}

template <typename... Parts>
std::string describe(const Parts&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    return out.str();
}

// Records the first failure only; later failures still count as cases.
void note(CheckResult& result, bool ok, const std::string& what) {
    ++result.cases;
    if (!ok && !result.counterexample) result.counterexample = what;
}

unsigned worker_count(const VerifyConfig& cfg, std::size_t tasks) {
    unsigned n = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, tasks));
}

// Runs body(k) for every k in the range, possibly concurrently, and merges
// the partial results in increasing k so the first counterexample is stable.
template <typename Body>
CheckResult per_order(const std::string& name, const VerifyConfig& cfg, Body body) {
    std::vector<Index> orders;
    for (Index k = cfg.k_range.lo; k <= cfg.k_range.hi; ++k) orders.push_back(k);
    std::vector<CheckResult> partial(orders.size());

    const unsigned workers = worker_count(cfg, orders.size());
    if (workers <= 1) {
        for (std::size_t pos = 0; pos < orders.size(); ++pos) partial[pos] = body(static_cast<int>(orders[pos]));
    } else {
        std::vector<std::future<void>> running;
        std::atomic<std::size_t> next{0};
        for (unsigned w = 0; w < workers; ++w) {
            running.push_back(std::async(std::launch::async, [&] {
                for (std::size_t pos = next++; pos < orders.size(); pos = next++) {
                    partial[pos] = body(static_cast<int>(orders[pos]));
                }
            }));
        }
        for (auto& f : running) f.get();
    }

    CheckResult merged{name, 0, std::nullopt};
    for (const auto& p : partial) {
        merged.cases += p.cases;
        if (!merged.counterexample && p.counterexample) merged.counterexample = p.counterexample;
    }
    return merged;
}

}  // namespace

CheckResult check_identity_catalog(const VerifyConfig& cfg) {
    const auto catalog = identity_catalog(cfg.inject_fault);
    return per_order("identity-catalog", cfg, [&](int k) {
        CheckResult r;
        for (const auto& entry : catalog) {
            const auto report = entry.check(k, cfg.identity_window);
            r.cases += report.comparisons;
            if (!report.passed() && !r.counterexample) {
                const auto& m = report.mismatches.front();
                r.counterexample = describe(entry.id, " (", entry.statement, ") k=", k, " case=", m.j, " n=", m.n,
                                            ": lhs=", m.lhs.get_str(), " rhs=", m.rhs.get_str());
            }
        }
        return r;
    });
}

CheckResult check_formula_grid(const VerifyConfig& cfg) {
    SliceCache cache;
    const IndexRange ns = cfg.n_range;
    return per_order("formula-grid", cfg, [&](int k) {
        CheckResult r;
        for (int j = 0; j < k; ++j) {
            const auto oracle = basis(k, j).terms(ns.lo, ns.hi);
            for (Index n = ns.lo; n <= ns.hi; ++n) {
                const Integer& expect = oracle[static_cast<std::size_t>(n - ns.lo)];
                const Integer viaBinomial = basis_binomial(k, j, n);
                const Integer viaMultinomial = basis_multinomial(k, j, n, cache);
                note(r, viaBinomial == expect && viaMultinomial == expect,
                     describe("B^(", j, ") k=", k, " n=", n, ": recurrence=", expect.get_str(),
                              " binomial=", viaBinomial.get_str(), " multinomial=", viaMultinomial.get_str()));
            }
        }
        const auto s_oracle = sum_basis(k).terms(ns.lo, ns.hi);
        for (Index n = ns.lo; n <= ns.hi; ++n) {
            const Integer& expect = s_oracle[static_cast<std::size_t>(n - ns.lo)];
            const Integer closed = s_closed(k, n);
            const Integer split = s_split_range(k, n);
            note(r, closed == expect && split == expect,
                 describe("S k=", k, " n=", n, ": recurrence=", expect.get_str(), " closed=", closed.get_str(),
                          " split=", split.get_str()));
        }
        return r;
    });
}

CheckResult check_binomial_pascal(const VerifyConfig& cfg) {
    CheckResult r{"binomial-pascal", 0, std::nullopt};
    const IndexRange box = cfg.pascal_box;
    for (Index n = box.lo; n <= box.hi; ++n) {
        note(r, gen_binomial(n, n) == 1, describe("<", n, " choose ", n, "> != 1"));
        for (Index i = box.lo; i <= box.hi; ++i) {
            const Integer v = gen_binomial(n, i);
            const Integer sum = gen_binomial(n - 1, i) + gen_binomial(n - 1, i - 1);
            note(r, v == sum,
                 describe("Pascal fails at n=", n, " i=", i, ": ", v.get_str(), " vs ", sum.get_str()));
            note(r, v == gen_binomial_signed_form(n, i), describe("closed forms differ at n=", n, " i=", i));
        }
    }
    return r;
}

CheckResult check_multinomial_pascal(const VerifyConfig& cfg) {
    CheckResult r{"multinomial-pascal", 0, std::nullopt};
    const IndexRange box = cfg.multinomial_box;
    for (std::size_t t = 2; t <= 3; ++t) {
        std::vector<Index> e(t, box.lo);
        while (true) {
            const MultiIndex idx(e);
            const Integer v = gen_multinomial(idx);
            Integer sum = 0;
            for (std::size_t pos = 0; pos < t; ++pos) {
                auto lowered = e;
                --lowered[pos];
                sum += gen_multinomial(MultiIndex(lowered));
            }
            std::ostringstream tuple;
            for (std::size_t pos = 0; pos < t; ++pos) tuple << (pos ? "," : "") << e[pos];
            note(r, v == sum, describe("Pascal fails at (", tuple.str(), "): ", v.get_str(), " vs ", sum.get_str()));
            note(r, v == gen_multinomial_closed(idx), describe("closed form differs at (", tuple.str(), ")"));

            std::size_t pos = 0;
            while (pos < t && e[pos] == box.hi) e[pos++] = box.lo;
            if (pos == t) break;
            ++e[pos];
        }
    }
    return r;
}

CheckResult check_aux_sequence(const VerifyConfig& cfg) {
    return per_order("aux-sequence", cfg, [&](int k) {
        CheckResult r;
        for (Index n = 0; n < k; ++n) note(r, aux_A(k, n) == 0, describe("A_", n, " != 0 for k=", k));
        note(r, aux_A(k, k) == -1, describe("A_k != -1 for k=", k));
        for (Index n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n) {
            const Integer a = aux_A(k, n);
            note(r, a == 2 * aux_A(k, n - 1) - aux_A(k, n - k - 1),
                 describe("A_n != 2A_{n-1} - A_{n-k-1} at k=", k, " n=", n));
            Integer window_sum = -1;
            for (Index i = 1; i <= k; ++i) window_sum += aux_A(k, n - i);
            note(r, a == window_sum, describe("A_n != A_{n-1} + ... + A_{n-k} - 1 at k=", k, " n=", n));
        }
        return r;
    });
}

CheckResult check_tiling_bridge(const VerifyConfig& cfg) {
    return per_order("tiling-bridge", cfg, [&](int k) {
        CheckResult r;
        const auto c = c_sequence(k).terms(cfg.tiling_lengths.lo + 1, cfg.tiling_lengths.hi + 1);
        for (Index n = cfg.tiling_lengths.lo; n <= cfg.tiling_lengths.hi; ++n) {
            const Integer brute = count_tilings_bruteforce({n, k});
            const Integer& expect = c[static_cast<std::size_t>(n - cfg.tiling_lengths.lo)];
            note(r, brute == expect,
                 describe("tilings(", n, ",", k, ")=", brute.get_str(), " but C_", n + 1, "=", expect.get_str()));
        }
        return r;
    });
}

VerifyReport run_verify(const VerifyConfig& cfg) {
    validate(cfg);
    VerifyReport report;
    report.checks.push_back(check_identity_catalog(cfg));
    report.checks.push_back(check_formula_grid(cfg));
    report.checks.push_back(check_binomial_pascal(cfg));
    report.checks.push_back(check_multinomial_pascal(cfg));
    report.checks.push_back(check_aux_sequence(cfg));
    report.checks.push_back(check_tiling_bridge(cfg));
    return report;
}

BenchReport run_bench(const FibSequence& seq, Index n, std::span<const Strategy> strategies, int repetitions) {
    if (strategies.empty()) throw std::invalid_argument("bench: no strategies selected");
    if (repetitions < 1) throw std::invalid_argument("bench: repetitions must be at least 1");

    BenchReport report;
    report.n = n;
    for (Strategy s : strategies) report.timings.push_back({s, evaluate(seq, n, s), 0.0});
    report.values_agree = std::all_of(report.timings.begin(), report.timings.end(),
                                      [&](const StrategyTiming& t) { return t.value == report.timings.front().value; });
    if (!report.values_agree) return report;

    using clock = std::chrono::steady_clock;
    for (auto& t : report.timings) {
        std::vector<double> samples;
        for (int rep = 0; rep < repetitions; ++rep) {
            const auto start = clock::now();
            const Integer v = evaluate(seq, n, t.strategy);
            samples.push_back(std::chrono::duration<double>(clock::now() - start).count());
            if (v != t.value) throw std::logic_error("bench: strategy result changed between runs");
        }
        std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2),
                         samples.end());
        t.median_seconds = samples[samples.size() / 2];
    }
    return report;
}

}  // namespace kfib
