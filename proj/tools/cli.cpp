#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "kfib/fibspace.hpp"
#include "kfib/formulas.hpp"
#include "kfib/genbinom.hpp"
#include "kfib/genmultinom.hpp"
#include "kfib/operators.hpp"
#include "kfib/tiling.hpp"
#include "kfib/verify.hpp"

namespace kfib::cli {

using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kFormatEnv = "KFIB_FORMAT";

Index parse_index(const std::string& text) {
    const Integer v = parse_integer(text);
    if (!v.fits_slong_p()) throw std::invalid_argument("index out of range: " + text);
    return v.get_si();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

std::string join(const std::vector<Integer>& values, const char* sep) {
    std::string line;
    for (std::size_t pos = 0; pos < values.size(); ++pos) {
        if (pos) line += sep;
        line += values[pos].get_str();
    }
    return line;
}

ojson strings(std::span<const Integer> values) {
    ojson arr = ojson::array();
    for (const auto& v : values) arr.push_back(v.get_str());
    return arr;
}

// Shared renderer for eval and basis.
void render_terms(std::ostream& out, Format fmt, const FibSequence& seq, IndexRange range,
                  const std::vector<Integer>& values, const ojson& extra = ojson::object()) {
    switch (fmt) {
        case Format::plain: out << join(values, ",") << "\n"; break;
        case Format::csv:
            out << "n,value\n";
            for (Index n = range.lo; n <= range.hi; ++n) {
                out << n << "," << values[static_cast<std::size_t>(n - range.lo)].get_str() << "\n";
            }
            break;
        case Format::json: {
            ojson doc;
            doc["k"] = seq.order();
            for (const auto& [key, value] : extra.items()) doc[key] = value;
            doc["window"] = strings(seq.window());
            ojson terms = ojson::array();
            for (Index n = range.lo; n <= range.hi; ++n) {
                terms.push_back({{"n", n}, {"value", values[static_cast<std::size_t>(n - range.lo)].get_str()}});
            }
            doc["terms"] = std::move(terms);
            out << doc.dump() << "\n";
            break;
        }
    }
}

// Option values that may start with '-' (negative ranges and tuples).
struct Options {
    int k = 2;
    int j = 0;
    std::string init;
    std::string range;
    std::string method;
    std::string format;
    std::string rows = "-6..6";
    std::string cols = "-6..6";
    std::string idx;
    std::string form = "chain";
    std::string target;
    std::string n_text;
    std::string i_text;
    std::string k_range = "2..6";
    std::string n_range = "-40..60";
    std::string window = "-20..20";
    std::string methods = "window,shortcut,matpow";
    int reps = 5;
    unsigned threads = 0;
    bool check = false;
    bool inject_fault = false;
};

Format resolve_format(const std::string& flag) {
    if (!flag.empty()) return parse_format(flag);
    if (const char* env = std::getenv(kFormatEnv); env != nullptr && *env != '\0') return parse_format(env);
    return Format::plain;
}

int cmd_eval(const Options& o, std::ostream& out) {
    const FibSequence seq = make_sequence(o.k, parse_integer_list(o.init));
    const IndexRange range = parse_range(o.range);
    const Strategy strategy = parse_strategy(o.method.empty() ? "window" : o.method);
    std::vector<Integer> values;
    if (strategy == Strategy::window) {
        values = seq.terms(range.lo, range.hi);
    } else {
        for (Index n = range.lo; n <= range.hi; ++n) values.push_back(evaluate(seq, n, strategy));
    }
    render_terms(out, resolve_format(o.format), seq, range, values);
    return 0;
}

int cmd_basis(const Options& o, std::ostream& out) {
    const FibSequence seq = basis(o.k, o.j);
    const IndexRange range = parse_range(o.range);
    const std::string method = o.method.empty() ? "recurrence" : o.method;
    std::vector<Integer> values;
    if (method == "recurrence") {
        values = seq.terms(range.lo, range.hi);
    } else if (method == "binomial") {
        for (Index n = range.lo; n <= range.hi; ++n) values.push_back(basis_binomial(o.k, o.j, n));
    } else if (method == "multinomial") {
        SliceCache cache;
        for (Index n = range.lo; n <= range.hi; ++n) values.push_back(basis_multinomial(o.k, o.j, n, cache));
    } else {
        throw std::invalid_argument("unknown method '" + method + "' (expected recurrence|binomial|multinomial)");
    }
    render_terms(out, resolve_format(o.format), seq, range, values, {{"j", o.j}, {"method", method}});
    return 0;
}

int cmd_binom(const Options& o, std::ostream& out) {
    const Index n = parse_index(o.n_text);
    const Index i = parse_index(o.i_text);
    const Integer v = gen_binomial(n, i);
    if (resolve_format(o.format) == Format::json) {
        out << ojson{{"n", n}, {"i", i}, {"value", v.get_str()}}.dump() << "\n";
    } else {
        out << v.get_str() << "\n";
    }
    return 0;
}

int cmd_binom_table(const Options& o, std::ostream& out) {
    const IndexRange rows = parse_range(o.rows);
    const IndexRange cols = parse_range(o.cols);
    const auto table = binom_table(rows, cols);
    switch (resolve_format(o.format)) {
        case Format::csv:
            out << "n";
            for (Index i = cols.lo; i <= cols.hi; ++i) out << "," << i;
            out << "\n";
            for (Index r = 0; r < rows.size(); ++r) {
                out << rows.lo + r;
                for (const auto& v : table[static_cast<std::size_t>(r)]) out << "," << v.get_str();
                out << "\n";
            }
            break;
        case Format::json: {
            ojson doc = ojson::array();
            for (const auto& row : table) doc.push_back(strings(row));
            out << doc.dump() << "\n";
            break;
        }
        case Format::plain: {
            std::size_t width = 3;
            for (const auto& row : table) {
                for (const auto& v : row) width = std::max(width, v.get_str().size());
            }
            for (Index i = cols.lo; i <= cols.hi; ++i) width = std::max(width, std::to_string(i).size());
            const auto w = static_cast<int>(width + 1);
            out << std::setw(w) << "n\\i";
            for (Index i = cols.lo; i <= cols.hi; ++i) out << std::setw(w) << i;
            out << "\n";
            for (Index r = 0; r < rows.size(); ++r) {
                out << std::setw(w) << rows.lo + r;
                for (const auto& v : table[static_cast<std::size_t>(r)]) out << std::setw(w) << v.get_str();
                out << "\n";
            }
            break;
        }
    }
    return 0;
}

int cmd_multinom(const Options& o, std::ostream& out) {
    std::vector<Index> entries;
    for (const auto& part : split(o.idx, ',')) entries.push_back(parse_index(trim(part)));
    const MultiIndex idx(std::move(entries));
    Integer v;
    if (o.form == "chain") {
        v = gen_multinomial(idx);
    } else if (o.form == "closed") {
        v = gen_multinomial_closed(idx);
    } else {
        throw std::invalid_argument("unknown form '" + o.form + "' (expected chain|closed)");
    }
    if (resolve_format(o.format) == Format::json) {
        ojson doc;
        doc["entries"] = ojson(std::vector<Index>(idx.entries().begin(), idx.entries().end()));
        doc["value"] = v.get_str();
        out << doc.dump() << "\n";
    } else {
        out << v.get_str() << "\n";
    }
    return 0;
}

int cmd_support(const Options& o, std::ostream& out) {
    const Index target = parse_index(o.target);
    ojson chains = ojson::array();
    Integer total = 0;
    for (const auto& chain : enumerate_support(o.k, target)) {
        const MultiIndex a = chain.to_multi_index();
        const Integer v = gen_multinomial(a);
        total += v;
        chains.push_back({{"s", chain.sums},
                          {"a", std::vector<Index>(a.entries().begin(), a.entries().end())},
                          {"value", v.get_str()}});
    }
    ojson doc;
    doc["k"] = o.k;
    doc["target"] = target;
    doc["count"] = chains.size();
    doc["sum"] = total.get_str();
    doc["chains"] = std::move(chains);
    out << doc.dump() << "\n";
    return 0;
}

int cmd_identities(const Options& o, std::ostream& out) {
    const IndexRange ks = parse_range(o.k_range);
    const IndexRange window = parse_range(o.window);
    if (ks.lo < 2) throw std::invalid_argument("k must be at least 2");
    const Format fmt = resolve_format(o.format);
    bool all_pass = true;
    ojson rows = ojson::array();
    for (const auto& entry : identity_catalog(o.inject_fault)) {
        for (Index k = ks.lo; k <= ks.hi; ++k) {
            const auto report = entry.check(static_cast<int>(k), window);
            all_pass = all_pass && report.passed();
            std::string first;
            if (!report.passed()) {
                const auto& m = report.mismatches.front();
                first = "case=" + std::to_string(m.j) + " n=" + std::to_string(m.n) + " lhs=" + m.lhs.get_str() +
                        " rhs=" + m.rhs.get_str();
            }
            if (fmt == Format::json) {
                ojson row{{"id", entry.id}, {"k", k}, {"pass", report.passed()}, {"comparisons", report.comparisons}};
                if (!first.empty()) row["first_mismatch"] = first;
                rows.push_back(std::move(row));
            } else {
                out << (report.passed() ? "PASS " : "FAIL ") << std::left << std::setw(10) << entry.id << " k=" << k
                    << "  " << entry.statement;
                if (!first.empty()) out << "  [" << first << "]";
                out << "\n";
            }
        }
    }
    if (fmt == Format::json) out << ojson{{"pass", all_pass}, {"checks", rows}}.dump() << "\n";
    return all_pass ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
    VerifyConfig cfg;
    cfg.k_range = parse_range(o.k_range);
    cfg.n_range = parse_range(o.n_range);
    cfg.inject_fault = o.inject_fault;
    cfg.threads = o.threads;
    const VerifyReport report = run_verify(cfg);
    if (resolve_format(o.format) == Format::json) {
        ojson checks = ojson::array();
        for (const auto& c : report.checks) {
            ojson row{{"name", c.name}, {"pass", c.passed()}, {"cases", c.cases}};
            if (c.counterexample) row["counterexample"] = *c.counterexample;
            checks.push_back(std::move(row));
        }
        out << ojson{{"pass", report.passed()}, {"checks", checks}}.dump() << "\n";
    } else {
        for (const auto& c : report.checks) {
            out << (c.passed() ? "PASS " : "FAIL ") << std::left << std::setw(20) << c.name << " cases=" << c.cases;
            if (c.counterexample) out << "  first counterexample: " << *c.counterexample;
            out << "\n";
        }
        out << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
    }
    return report.passed() ? 0 : 1;
}

int cmd_tiling(const Options& o, std::ostream& out) {
    const Index n = parse_index(o.n_text);
    const Integer count = count_tilings_bruteforce({n, o.k});
    out << count.get_str() << "\n";
    if (!o.check) return 0;
    const Integer c = c_sequence(o.k).term(n + 1);
    const bool ok = c == count;
    out << "C_" << n + 1 << " = " << c.get_str() << (ok ? "  match" : "  MISMATCH") << "\n";
    return ok ? 0 : 1;
}

int cmd_bench(const Options& o, std::ostream& out) {
    const FibSequence seq = o.init.empty() ? basis(o.k, o.k - 1) : make_sequence(o.k, parse_integer_list(o.init));
    const Index n = parse_index(o.n_text);
    std::vector<Strategy> strategies;
    for (const auto& name : split(o.methods, ',')) strategies.push_back(parse_strategy(trim(name)));
    const BenchReport report = run_bench(seq, n, strategies, o.reps);
    for (const auto& t : report.timings) {
        out << std::left << std::setw(9) << to_string(t.strategy);
        if (report.values_agree) {
            out << " median " << std::fixed << std::setprecision(6) << t.median_seconds << " s";
        }
        out << "  (" << mpz_sizeinbase(t.value.get_mpz_t(), 10) << " digits)\n";
    }
    if (!report.values_agree) {
        out << "values DISAGREE at n=" << n << "\n";
        for (const auto& t : report.timings) out << "  " << to_string(t.strategy) << ": " << t.value.get_str() << "\n";
        return 1;
    }
    const std::string value = report.timings.front().value.get_str();
    out << "values agree: F_" << n << " = " << (value.size() <= 60 ? value : value.substr(0, 25) + "..." +
                                                                                  value.substr(value.size() - 25))
        << "\n";
    return 0;
}

}  // namespace

IndexRange parse_range(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos) throw std::invalid_argument("range must look like A..B, got '" + text + "'");
    const IndexRange r{parse_index(trim(text.substr(0, sep))), parse_index(trim(text.substr(sep + 2)))};
    if (r.empty()) throw std::invalid_argument("reversed range '" + text + "'");
    return r;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
    std::vector<Integer> values;
    for (const auto& part : split(text, ',')) values.push_back(parse_integer(trim(part)));
    return values;
}

Format parse_format(const std::string& text) {
    if (text == "plain") return Format::plain;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + text + "' (expected plain|json|csv)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"kfib: two-sided order-k Fibonacci sequences, generalized binomials and multinomials"};
    app.require_subcommand(1);
    Options o;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "plain | json | csv (default from $KFIB_FORMAT, else plain)");
    };

    auto* eval = app.add_subcommand("eval", "sequence terms over an index range");
    eval->add_option("--k", o.k, "order")->required();
    eval->add_option("--init", o.init, "initial window F_0,...,F_{k-1}")->required();
    eval->add_option("--range", o.range, "index range A..B")->required();
    eval->add_option("--method", o.method, "window | shortcut | matpow");
    add_format(eval);

    auto* basis_cmd = app.add_subcommand("basis", "terms of the basis sequence B^(j)");
    basis_cmd->add_option("--k", o.k, "order")->required();
    basis_cmd->add_option("--j", o.j, "basis index 0..k-1")->required();
    basis_cmd->add_option("--range", o.range, "index range A..B")->required();
    basis_cmd->add_option("--method", o.method, "recurrence | binomial | multinomial");
    add_format(basis_cmd);

    auto* binom = app.add_subcommand("binom", "generalized binomial <n choose i>");
    binom->add_option("--n", o.n_text)->required();
    binom->add_option("--i", o.i_text)->required();
    add_format(binom);

    auto* table = app.add_subcommand("binom-table", "table of generalized binomials");
    table->add_option("--rows", o.rows, "n range (default -6..6)");
    table->add_option("--cols", o.cols, "i range (default -6..6)");
    add_format(table);

    auto* multinom = app.add_subcommand("multinom", "generalized multinomial <(i_1,...,i_t)>");
    multinom->add_option("--idx", o.idx, "comma-separated entries")->required();
    multinom->add_option("--form", o.form, "chain | closed");
    add_format(multinom);

    auto* support = app.add_subcommand("support", "non-zero chains of a multinomial slice (JSON)");
    support->add_option("--k", o.k, "chain length")->required();
    support->add_option("--target", o.target, "s_1 + ... + s_k")->required();

    auto* identities = app.add_subcommand("identities", "verify the operator identity catalog");
    identities->add_option("--k-range", o.k_range, "orders A..B (default 2..6)");
    identities->add_option("--window", o.window, "index window (default -20..20)");
    identities->add_flag("--inject-fault", o.inject_fault)->group("");
    add_format(identities);

    auto* verify = app.add_subcommand("verify", "run every cross-check");
    verify->add_option("--k-range", o.k_range, "orders A..B (default 2..6)");
    verify->add_option("--n-range", o.n_range, "indices A..B (default -40..60)");
    verify->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    verify->add_flag("--inject-fault", o.inject_fault)->group("");
    add_format(verify);

    auto* tiling = app.add_subcommand("tiling", "count tilings of a 1 x n board by brute force");
    tiling->add_option("--k", o.k, "max tile length")->required();
    tiling->add_option("--n", o.n_text, "board length")->required();
    tiling->add_flag("--check", o.check, "compare with C_{n+1}");

    auto* bench = app.add_subcommand("bench", "time the term evaluation strategies");
    bench->add_option("--k", o.k, "order (default 2)");
    bench->add_option("--n", o.n_text, "index")->required();
    bench->add_option("--init", o.init, "initial window (default B^(k-1))");
    bench->add_option("--methods", o.methods, "comma list of window,shortcut,matpow");
    bench->add_option("--reps", o.reps, "repetitions (median reported)");

    // CLI11 consumes arguments from the back
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*eval) return cmd_eval(o, out);
        if (*basis_cmd) return cmd_basis(o, out);
        if (*binom) return cmd_binom(o, out);
        if (*table) return cmd_binom_table(o, out);
        if (*multinom) return cmd_multinom(o, out);
        if (*support) return cmd_support(o, out);
        if (*identities) return cmd_identities(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*tiling) return cmd_tiling(o, out);
        if (*bench) return cmd_bench(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace kfib::cli
