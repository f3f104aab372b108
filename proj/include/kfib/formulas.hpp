#pragma once

// Closed-form evaluators for the basis sequences B^(j) and the all-ones
// sequence S of the order-k Fibonacci space.
//
// Binomial family: built on the auxiliary sequence
//   A_n = sum_i (-1)^i <n-ik choose i-1> 2^{n+1-i(k+1)}
// which is not itself an order-k sequence but satisfies
// A_n = 2A_{n-1} - A_{n-k-1}. Then S_n = 1 - (k-1) A_n and
// B^(j)_n = A_{n-j-1} - A_n.
//
// Multinomial family: X_n = sum over a_1 + 2a_2 + ... + k a_k = n + c of
// <(a_1, ..., a_k)> is an order-k sequence for every constant c; c = -k
// gives B^(0), c = -k+1 gives B^(k-1), and summing the slices
// c = -k-j .. -k gives B^(j).

#include <map>
#include <mutex>
#include <utility>

#include "kfib/integer.hpp"

namespace kfib {

/// Inclusive bounds of the summation index i.
struct SummationBounds {
    Index lower = 1;
    Index upper = 0;

    bool empty() const { return upper < lower; }
};

/// Range of i where <n-ik choose i-1> can be non-zero:
/// 1 <= i <= floor((n+1)/(k+1)) for n >= 0, and
/// ceil((n+1)/k) <= i <= floor((n+1)/(k+1)) for n <= -1.
SummationBounds aux_support(int k, Index n);

Integer aux_A(int k, Index n);

/// S_n = 1 - (k-1) A_n.
Integer s_closed(int k, Index n);

/// S_n from the two explicitly bounded sums, one per sign of n. The n >= 0
/// branch uses the classical binomial.
Integer s_split_range(int k, Index n);

/// B^(j)_n as the literal difference of two bounded power-of-two sums.
Integer basis_binomial(int k, int j, Index n);

/// Sum of <(a_1, ..., a_k)> over the support chains with s_1 + ... + s_k ==
/// target (the slice with n + c == target).
Integer multinomial_slice(int k, Index target);

Integer x_family(int k, Index c, Index n);
Integer basis_multinomial_b0(int k, Index n);
Integer basis_multinomial_bk1(int k, Index n);
Integer basis_multinomial(int k, int j, Index n);

/// Memo of multinomial_slice values keyed by (k, target). Thread-safe.
/// Neighbouring (j, n) cells share slices, so a grid evaluation through the
/// cache touches each slice once.
class SliceCache {
  public:
    Integer slice(int k, Index target);
    std::size_t size() const;

  private:
    mutable std::mutex mutex_;
    std::map<std::pair<int, Index>, Integer> values_;
};

Integer basis_multinomial(int k, int j, Index n, SliceCache& cache);

}  // namespace kfib
