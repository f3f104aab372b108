#pragma once

// The k-dimensional space of two-sided order-k Fibonacci sequences,
// F_n = F_{n-1} + ... + F_{n-k} for every n in Z.
//
// A sequence is stored as its initial window (F_0, ..., F_{k-1}); every other
// term is derived on demand by walking the recurrence forward, or backward
// through F_{n-k} = F_n - F_{n-1} - ... - F_{n-k+1}.

#include <span>
#include <string_view>
#include <vector>

#include "kfib/integer.hpp"

namespace kfib {

class FibSequence {
  public:
    /// Throws std::invalid_argument if order < 2 or window.size() != order.
    FibSequence(int order, std::vector<Integer> window);

    int order() const { return order_; }
    std::span<const Integer> window() const { return window_; }

    /// F_n via the sliding-window recurrence.
    Integer term(Index n) const;

    /// F_lo, ..., F_hi in one walk. Empty if hi < lo.
    std::vector<Integer> terms(Index lo, Index hi) const;

    FibSequence& operator+=(const FibSequence& other);
    FibSequence& operator-=(const FibSequence& other);
    FibSequence& operator*=(const Integer& factor);

    bool operator==(const FibSequence&) const = default;

  private:
    int order_;
    std::vector<Integer> window_;
};

FibSequence operator+(FibSequence a, const FibSequence& b);
FibSequence operator-(FibSequence a, const FibSequence& b);
FibSequence operator*(const Integer& factor, FibSequence seq);

FibSequence make_sequence(int k, std::vector<Integer> window);

/// Standard basis B^(j): window all zero except position j. Throws
/// std::invalid_argument unless 0 <= j <= k-1.
FibSequence basis(int k, int j);

/// S = B^(0) + ... + B^(k-1), the all-ones window.
FibSequence sum_basis(int k);

// Term evaluation strategies. All return the same exact value.

enum class Strategy { window, shortcut, matpow };

std::string_view to_string(Strategy s);
/// Accepts "window", "shortcut", "matpow"; throws std::invalid_argument.
Strategy parse_strategy(std::string_view name);

Integer term(const FibSequence& seq, Index n);

/// Two operations per step: F_n = 2F_{n-1} - F_{n-k-1} forward and
/// F_n = 2F_{n+k} - F_{n+k+1} backward.
Integer term_shortcut(const FibSequence& seq, Index n);

/// Companion-matrix exponentiation, O(k^3 log|n|) multiplications. Negative
/// n uses the inverse companion matrix, which is integral.
Integer term_matrix_power(const FibSequence& seq, Index n);

Integer evaluate(const FibSequence& seq, Index n, Strategy strategy);

/// sum_j B^(j)_n * F_j.
Integer decompose(const FibSequence& seq, Index n);

}  // namespace kfib
