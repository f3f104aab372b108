#pragma once

// Generalized multinomial <(i_1, ..., i_t)> and the support of constrained
// multinomial sums.
//
// The multinomial is the product of generalized binomials along the
// partial-sum chain s_j = i_j + ... + i_t:
//
//   <(i_1, ..., i_t)> = <s_1 choose s_2> <s_2 choose s_3> ... <s_{t-1} choose s_t>
//
// A product is non-zero only when the chain is nonincreasing inside one sign
// class: s_1 >= ... >= s_t >= 0, or -1 >= s_1 >= ... >= s_t.

#include <span>
#include <vector>

#include "kfib/integer.hpp"

namespace kfib {

/// Ordered tuple (i_1, ..., i_t) with t >= 2.
class MultiIndex {
  public:
    /// Throws std::invalid_argument if fewer than two entries.
    explicit MultiIndex(std::vector<Index> entries);

    std::span<const Index> entries() const { return entries_; }
    std::size_t arity() const { return entries_.size(); }
    Index operator[](std::size_t pos) const { return entries_[pos]; }

    /// Partial sums s_j = i_j + ... + i_t, in order j = 1..t.
    std::vector<Index> partial_sums() const;

    bool operator==(const MultiIndex&) const = default;

  private:
    std::vector<Index> entries_;
};

/// Partial-sum chain (s_1, ..., s_k) of one non-zero term of a multinomial sum.
struct SupportChain {
    std::vector<Index> sums;

    /// Entries a_j = s_j - s_{j+1}, a_k = s_k.
    MultiIndex to_multi_index() const;
    Index total() const;
    bool operator==(const SupportChain&) const = default;
    auto operator<=>(const SupportChain&) const = default;
};

/// Chain product of generalized binomials.
Integer gen_multinomial(const MultiIndex& idx);

/// Three-case closed form in terms of classical multinomials (factorials),
/// independent of gen_binomial.
Integer gen_multinomial_closed(const MultiIndex& idx);

/// Every chain (s_1, ..., s_k) with s_1 + ... + s_k == target lying in one of
/// the two monotone sign classes, in descending lexicographic order. Throws
/// std::invalid_argument for k < 2.
///
/// The number of chains grows like target^(k-1); intended for k <= 10 and
/// |target| up to a few hundred.
std::vector<SupportChain> enumerate_support(int k, Index target);

}  // namespace kfib
