#pragma once

// Shift and difference operators on two-sided sequences, and the identity
// catalog they satisfy on the order-k Fibonacci space.
//
// An OperatorExpr is a Laurent polynomial sum_m c_m L^m in the left shift
// L (L(X)_n = X_{n+1}); R = L^{-1}. The ring is not quotiented by the
// recurrence, so two expressions that agree on every order-k sequence may
// still differ as maps. Identities are therefore checked by applying both
// sides to sequences, never by comparing coefficients.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kfib/fibspace.hpp"
#include "kfib/integer.hpp"

namespace kfib {

class OperatorExpr {
  public:
    using Terms = std::map<Index, Integer>;

    OperatorExpr() = default;
    /// Zero coefficients are dropped.
    explicit OperatorExpr(Terms terms);

    static OperatorExpr identity();
    /// L^m; negative m gives R^{-m}.
    static OperatorExpr shift(Index m);
    static OperatorExpr left() { return shift(1); }
    static OperatorExpr right() { return shift(-1); }
    /// Delta = L - I.
    static OperatorExpr forward_difference();
    /// Nabla = I - R.
    static OperatorExpr backward_difference();

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(Index m) const;

    OperatorExpr& operator+=(const OperatorExpr& other);
    OperatorExpr& operator-=(const OperatorExpr& other);

    /// Repeated composition; pow(0) is the identity.
    OperatorExpr pow(unsigned exponent) const;

    bool operator==(const OperatorExpr&) const = default;

  private:
    Terms terms_;
};

OperatorExpr operator_add(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr operator_scale(const OperatorExpr& a, const Integer& factor);
/// Composition a after b; polynomial multiplication in L.
OperatorExpr operator_compose(const OperatorExpr& a, const OperatorExpr& b);

inline OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) { return operator_add(a, b); }
inline OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
inline OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) { return operator_compose(a, b); }
inline OperatorExpr operator*(const Integer& factor, const OperatorExpr& a) { return operator_scale(a, factor); }

/// Human-readable form, e.g. "L^2 - 2*I + R".
std::string to_string(const OperatorExpr& expr);

/// Y_n = sum_m c_m X_{n+m}, built from its evaluated initial window.
FibSequence apply_operator(const OperatorExpr& expr, const FibSequence& seq);

struct Mismatch {
    int j = 0;  ///< basis index, or the sub-case index of a sequence check
    Index n = 0;
    Integer lhs;
    Integer rhs;
};

struct VerificationReport {
    std::string name;
    int k = 0;
    std::size_t comparisons = 0;
    std::vector<Mismatch> mismatches;

    bool passed() const { return mismatches.empty(); }
};

/// Applies both sides to every basis sequence B^(0..k-1) and compares terms
/// over `window`. Agreement on the basis implies agreement on the whole
/// space by linearity.
VerificationReport verify_identity(const OperatorExpr& lhs, const OperatorExpr& rhs, int k, IndexRange window);

/// Pointwise comparison of two sequences over `window`; mismatches are
/// tagged with `case_index`.
void compare_sequences(const FibSequence& lhs, const FibSequence& rhs, IndexRange window, int case_index,
                       VerificationReport& report);

struct CatalogEntry {
    std::string id;
    std::string statement;
    std::function<VerificationReport(int k, IndexRange window)> check;
};

/// The ten operator relations followed by the seven basis/S relations.
/// `inject_fault` flips one coefficient in the first relation, for testing
/// the failure path of callers.
std::vector<CatalogEntry> identity_catalog(bool inject_fault = false);

}  // namespace kfib
