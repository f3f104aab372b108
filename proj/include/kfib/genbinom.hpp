#pragma once

// Generalized binomial coefficient <n choose i> over all integer pairs.
//
// The unique extension of the classical binomial that keeps <n choose n> = 1
// and the Pascal recursion <n-1 choose i> + <n-1 choose i-1> = <n choose i>
// for every (n, i) in Z^2. Non-zero exactly when n >= i >= 0 or
// -1 >= n >= i.

#include <vector>

#include "kfib/integer.hpp"

namespace kfib {

/// n (n-1) ... (n-m+1); the empty product 1 when m == 0. Throws
/// std::invalid_argument for m < 0.
Integer falling_factorial(const Integer& n, Index m);

/// Falling-factorial form: n^(n-i) / (n-i)! when n >= i, 0 otherwise.
Integer gen_binomial(Index n, Index i);

/// Sign-split form built on the classical binomial:
///   C(n, i)                        if n >= i >= 0
///   (-1)^(i+n) C(-i-1, -n-1)       if -1 >= n >= i
///   0                              otherwise
/// Kept as an independent route for cross-checking gen_binomial.
Integer gen_binomial_signed_form(Index n, Index i);

/// Row-major table: result[r][c] = gen_binomial(rows.lo + r, cols.lo + c).
/// Throws std::invalid_argument on an empty range.
std::vector<std::vector<Integer>> binom_table(IndexRange rows, IndexRange cols);

}  // namespace kfib
