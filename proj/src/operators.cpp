#include "kfib/operators.hpp"

#include <sstream>
#include <stdexcept>

#include "kfib/genbinom.hpp"

namespace kfib {

OperatorExpr::OperatorExpr(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

OperatorExpr OperatorExpr::identity() { return shift(0); }

OperatorExpr OperatorExpr::shift(Index m) { return OperatorExpr(Terms{{m, Integer(1)}}); }

OperatorExpr OperatorExpr::forward_difference() { return OperatorExpr(Terms{{1, Integer(1)}, {0, Integer(-1)}}); }

OperatorExpr OperatorExpr::backward_difference() { return OperatorExpr(Terms{{0, Integer(1)}, {-1, Integer(-1)}}); }

Integer OperatorExpr::coefficient(Index m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& other) {
    for (const auto& [m, c] : other.terms_) {
        auto& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }
    return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& other) {
    for (const auto& [m, c] : other.terms_) {
        auto& slot = terms_[m];
        slot -= c;
        if (slot == 0) terms_.erase(m);
    }
    return *this;
}

OperatorExpr OperatorExpr::pow(unsigned exponent) const {
    OperatorExpr acc = identity();
    for (unsigned e = 0; e < exponent; ++e) acc = operator_compose(acc, *this);
    return acc;
}

OperatorExpr operator_add(const OperatorExpr& a, const OperatorExpr& b) {
    OperatorExpr out = a;
    out += b;
    return out;
}

OperatorExpr operator_scale(const OperatorExpr& a, const Integer& factor) {
    OperatorExpr::Terms terms;
    for (const auto& [m, c] : a.terms()) terms.emplace(m, c * factor);
    return OperatorExpr(std::move(terms));
}

OperatorExpr operator_compose(const OperatorExpr& a, const OperatorExpr& b) {
    OperatorExpr::Terms terms;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) terms[ma + mb] += ca * cb;
    }
    return OperatorExpr(std::move(terms));
}

std::string to_string(const OperatorExpr& expr) {
    if (expr.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest power of L first
    for (auto it = expr.terms().rbegin(); it != expr.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1) out << mag.get_str() << "*";
        if (m == 0) {
            out << "I";
        } else {
            out << (m > 0 ? "L" : "R");
            const Index e = m > 0 ? m : -m;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

FibSequence apply_operator(const OperatorExpr& expr, const FibSequence& seq) {
    const int k = seq.order();
    std::vector<Integer> window(static_cast<std::size_t>(k), Integer(0));
    if (expr.is_zero()) return FibSequence(k, std::move(window));

    const Index min_shift = expr.terms().begin()->first;
    const Index max_shift = expr.terms().rbegin()->first;
    const Index lo = min_shift;
    const auto values = seq.terms(lo, k - 1 + max_shift);
    for (Index n = 0; n < k; ++n) {
        Integer& y = window[static_cast<std::size_t>(n)];
        for (const auto& [m, c] : expr.terms()) {
            mpz_addmul(y.get_mpz_t(), c.get_mpz_t(), values[static_cast<std::size_t>(n + m - lo)].get_mpz_t());
        }
    }
    return FibSequence(k, std::move(window));
}

void compare_sequences(const FibSequence& lhs, const FibSequence& rhs, IndexRange window, int case_index,
                       VerificationReport& report) {
    const auto a = lhs.terms(window.lo, window.hi);
    const auto b = rhs.terms(window.lo, window.hi);
    for (std::size_t pos = 0; pos < a.size(); ++pos) {
        ++report.comparisons;
        if (a[pos] != b[pos]) {
            report.mismatches.push_back({case_index, window.lo + static_cast<Index>(pos), a[pos], b[pos]});
        }
    }
}

VerificationReport verify_identity(const OperatorExpr& lhs, const OperatorExpr& rhs, int k, IndexRange window) {
    VerificationReport report;
    report.name = to_string(lhs) + " == " + to_string(rhs);
    report.k = k;
    if (window.empty()) throw std::invalid_argument("verify_identity: empty window");
    for (int j = 0; j < k; ++j) {
        const FibSequence b = basis(k, j);
        compare_sequences(apply_operator(lhs, b), apply_operator(rhs, b), window, j, report);
    }
    return report;
}

namespace {

using Op = OperatorExpr;

Op L(Index m = 1) { return Op::shift(m); }
Op R(Index m = 1) { return Op::shift(-m); }
Op I() { return Op::identity(); }
Op scalar(Index c) { return operator_scale(I(), Integer(static_cast<long>(c))); }

// sum_{i=from}^{to} L^{sign*i}
Op power_sum(Index from, Index to, Index sign) {
    Op acc;
    for (Index i = from; i <= to; ++i) acc += Op::shift(sign * i);
    return acc;
}

// k I + (k-1) R + ... + R^{k-1} when lead == k; I + (k-1) R + ... when lead == 1
Op weighted_right_sum(int k, Index lead) {
    Op acc = scalar(lead);
    for (Index i = 1; i <= k - 1; ++i) acc += operator_scale(R(i), Integer(static_cast<long>(k - i)));
    return acc;
}

CatalogEntry operator_entry(std::string id, std::string statement, std::function<Op(int)> lhs,
                            std::function<Op(int)> rhs) {
    CatalogEntry entry{id, statement, {}};
    entry.check = [id, lhs = std::move(lhs), rhs = std::move(rhs)](int k, IndexRange window) {
        auto report = verify_identity(lhs(k), rhs(k), k, window);
        report.name = id;
        return report;
    };
    return entry;
}

CatalogEntry sequence_entry(std::string id, std::string statement,
                            std::function<void(int, IndexRange, VerificationReport&)> body) {
    CatalogEntry entry{id, statement, {}};
    entry.check = [id, body = std::move(body)](int k, IndexRange window) {
        VerificationReport report;
        report.name = id;
        report.k = k;
        body(k, window, report);
        return report;
    };
    return entry;
}

}  // namespace

std::vector<CatalogEntry> identity_catalog(bool inject_fault) {
    const Op delta = Op::forward_difference();
    const Op nabla = Op::backward_difference();
    std::vector<CatalogEntry> cat;

    cat.push_back(operator_entry(
        "op-i", "L^k = I + L + ... + L^{k-1}", [](int k) { return L(k); },
        [inject_fault](int k) {
            Op rhs = power_sum(0, k - 1, 1);
            if (inject_fault) rhs -= scalar(2);  // I -> -I
            return rhs;
        }));
    cat.push_back(operator_entry(
        "op-ii", "R = -I - L - ... - L^{k-2} + L^{k-1}", [](int) { return R(); },
        [](int k) { return L(k - 1) - power_sum(0, k - 2, 1); }));
    cat.push_back(operator_entry(
        "op-iii", "R^k = I - R - ... - R^{k-1}", [](int k) { return R(k); },
        [](int k) { return I() - power_sum(1, k - 1, -1); }));
    cat.push_back(operator_entry(
        "op-iv", "L = I + R + ... + R^{k-1}", [](int) { return L(); }, [](int k) { return power_sum(0, k - 1, -1); }));
    cat.push_back(operator_entry(
        "op-v", "L^{k+1} = 2 L^k - I", [](int k) { return L(k + 1); },
        [](int k) { return operator_scale(L(k), Integer(2)) - I(); }));
    cat.push_back(operator_entry(
        "op-vi", "R^{k+1} = 2 R - I", [](int k) { return R(k + 1); },
        [](int) { return operator_scale(R(), Integer(2)) - I(); }));
    cat.push_back(operator_entry(
        "op-vii", "Delta (I + (k-1) R + ... + R^{k-1}) = (k-1) I",
        [delta](int k) { return delta * weighted_right_sum(k, 1); }, [](int k) { return scalar(k - 1); }));
    cat.push_back(operator_entry(
        "op-viii", "Nabla (k I + (k-1) R + ... + R^{k-1}) = (k-1) I",
        [nabla](int k) { return nabla * weighted_right_sum(k, k); }, [](int k) { return scalar(k - 1); }));
    // coefficients (k-1-2i)/(k+1) cleared by multiplying through by (k+1)
    cat.push_back(operator_entry(
        "op-ix", "sum_{i=0}^{k} C(k+1,i+1) (k-1-2i)/(k+1) Delta^i = 0",
        [delta](int k) {
            Op acc;
            for (int i = 0; i <= k; ++i) {
                const Integer c = gen_binomial(k + 1, i + 1) * (k - 1 - 2 * i);
                acc += operator_scale(delta.pow(static_cast<unsigned>(i)), c);
            }
            return acc;
        },
        [](int) { return Op(); }));
    cat.push_back(operator_entry(
        "op-x", "(k-1) I + sum_{i=1}^{k} C(k+1,i+1) (-1)^i Nabla^i = 0",
        [nabla](int k) {
            Op acc = scalar(k - 1);
            for (int i = 1; i <= k; ++i) {
                Integer c = gen_binomial(k + 1, i + 1);
                if (i % 2 != 0) c = -c;
                acc += operator_scale(nabla.pow(static_cast<unsigned>(i)), c);
            }
            return acc;
        },
        [](int) { return Op(); }));

    cat.push_back(sequence_entry("basis-i", "B^(j) - B^(j-1) = R^j(B^(0)), 1 <= j <= k-1",
                                 [](int k, IndexRange w, VerificationReport& rep) {
                                     const FibSequence b0 = basis(k, 0);
                                     for (int j = 1; j < k; ++j) {
                                         compare_sequences(basis(k, j) - basis(k, j - 1), apply_operator(R(j), b0), w,
                                                           j, rep);
                                     }
                                 }));
    cat.push_back(sequence_entry("basis-ii", "B^(j) = sum_{i=0}^{j} R^i(B^(0))",
                                 [](int k, IndexRange w, VerificationReport& rep) {
                                     const FibSequence b0 = basis(k, 0);
                                     for (int j = 0; j < k; ++j) {
                                         compare_sequences(basis(k, j), apply_operator(power_sum(0, j, -1), b0), w, j,
                                                           rep);
                                     }
                                 }));
    cat.push_back(sequence_entry("basis-iii", "B^(0) = R(B^(k-1)) and B^(k-1) = L(B^(0))",
                                 [](int k, IndexRange w, VerificationReport& rep) {
                                     const FibSequence b0 = basis(k, 0);
                                     const FibSequence last = basis(k, k - 1);
                                     compare_sequences(b0, apply_operator(R(), last), w, 0, rep);
                                     compare_sequences(last, apply_operator(L(), b0), w, 1, rep);
                                 }));
    cat.push_back(sequence_entry("basis-iv", "B^(j) = sum_{i=0}^{j} R^{i+1}(B^(k-1))",
                                 [](int k, IndexRange w, VerificationReport& rep) {
                                     const FibSequence last = basis(k, k - 1);
                                     for (int j = 0; j < k; ++j) {
                                         compare_sequences(basis(k, j), apply_operator(power_sum(1, j + 1, -1), last),
                                                           w, j, rep);
                                     }
                                 }));
    cat.push_back(sequence_entry("basis-v", "S = (k I + (k-1) R + ... + R^{k-1})(B^(0))",
                                 [](int k, IndexRange w, VerificationReport& rep) {
                                     compare_sequences(sum_basis(k),
                                                       apply_operator(weighted_right_sum(k, k), basis(k, 0)), w, 0,
                                                       rep);
                                 }));
    cat.push_back(sequence_entry("basis-vi", "Nabla(S) = (k-1) B^(0)",
                                 [nabla](int k, IndexRange w, VerificationReport& rep) {
                                     compare_sequences(apply_operator(nabla, sum_basis(k)),
                                                       Integer(k - 1) * basis(k, 0), w, 0, rep);
                                 }));
    cat.push_back(sequence_entry("basis-vii", "(I - R^{j+1})(S) = (k-1) B^(j)",
                                 [](int k, IndexRange w, VerificationReport& rep) {
                                     const FibSequence s = sum_basis(k);
                                     for (int j = 0; j < k; ++j) {
                                         compare_sequences(apply_operator(I() - R(j + 1), s),
                                                           Integer(k - 1) * basis(k, j), w, j, rep);
                                     }
                                 }));
    return cat;
}

}  // namespace kfib
