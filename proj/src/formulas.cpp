#include "kfib/formulas.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "kfib/genbinom.hpp"
#include "kfib/genmultinom.hpp"

namespace kfib {

namespace {

void require_order(int k) {
    if (k < 2) throw std::invalid_argument("order k must be at least 2, got " + std::to_string(k));
}

void require_basis_index(int k, int j) {
    require_order(k);
    if (j < 0 || j >= k) {
        throw std::invalid_argument("basis index j=" + std::to_string(j) + " outside [0, " + std::to_string(k - 1) +
                                    "]");
    }
}

// Every term in the power-of-two sums must have a nonnegative exponent.
Integer power_of_two_term(Index exponent) {
    if (exponent < 0) {
        throw std::logic_error("non-integral term: exponent of 2 is " + std::to_string(exponent) +
                               " inside the summation support");
    }
    return pow2(exponent);
}

// sum_i (-1)^i <m-ik choose i-1> 2^{m+1-i(k+1)} over the support of m.
Integer signed_power_sum(int k, Index m) {
    const SummationBounds b = aux_support(k, m);
    Integer total = 0;
    for (Index i = b.lower; i <= b.upper; ++i) {
        Integer t = gen_binomial(m - i * k, i - 1) * power_of_two_term(m + 1 - i * (k + 1));
        if (i % 2 != 0) t = -t;
        total += t;
    }
    return total;
}

}  // namespace

SummationBounds aux_support(int k, Index n) {
    require_order(k);
    if (n >= 0) return {1, floor_div(n + 1, k + 1)};
    return {ceil_div(n + 1, k), floor_div(n + 1, k + 1)};
}

Integer aux_A(int k, Index n) { return signed_power_sum(k, n); }

Integer s_closed(int k, Index n) { return 1 - Integer(k - 1) * aux_A(k, n); }

Integer s_split_range(int k, Index n) {
    require_order(k);
    Integer total = 0;
    if (n >= 0) {
        const Index upper = floor_div(n + 1, k + 1);
        for (Index i = 1; i <= upper; ++i) {
            Integer t;
            mpz_bin_uiui(t.get_mpz_t(), static_cast<unsigned long>(n - i * k), static_cast<unsigned long>(i - 1));
            t *= power_of_two_term(n + 1 - i * (k + 1));
            if (i % 2 != 0) t = -t;
            total += t;
        }
    } else {
        const Index lower = ceil_div(n + 1, k);
        const Index upper = floor_div(n + 1, k + 1);
        for (Index i = lower; i <= upper; ++i) {
            Integer t = gen_binomial(n - i * k, i - 1) * power_of_two_term(n + 1 - i * (k + 1));
            if (i % 2 != 0) t = -t;
            total += t;
        }
    }
    return 1 - Integer(k - 1) * total;
}

Integer basis_binomial(int k, int j, Index n) {
    require_basis_index(k, j);
    Integer first = 0;
    const SummationBounds b1 = aux_support(k, n);
    for (Index i = b1.lower; i <= b1.upper; ++i) {
        Integer t = gen_binomial(n - i * k, i - 1) * power_of_two_term(n + 1 - i * (k + 1));
        if (i % 2 != 0) t = -t;
        first += t;
    }
    Integer second = 0;
    const SummationBounds b2 = aux_support(k, n - j - 1);
    for (Index i = b2.lower; i <= b2.upper; ++i) {
        Integer t = gen_binomial(n - j - 1 - i * k, i - 1) * power_of_two_term(n - j - i * (k + 1));
        if (i % 2 != 0) t = -t;
        second += t;
    }
    Integer value = second - first;
    assert(value == aux_A(k, n - j - 1) - aux_A(k, n));
    return value;
}

Integer multinomial_slice(int k, Index target) {
    require_order(k);
    Integer total = 0;
    for (const auto& chain : enumerate_support(k, target)) total += gen_multinomial(chain.to_multi_index());
    return total;
}

Integer x_family(int k, Index c, Index n) { return multinomial_slice(k, n + c); }

Integer basis_multinomial_b0(int k, Index n) { return x_family(k, -k, n); }

Integer basis_multinomial_bk1(int k, Index n) { return x_family(k, -k + 1, n); }

Integer basis_multinomial(int k, int j, Index n) {
    require_basis_index(k, j);
    Integer total = 0;
    for (Index target = n - k - j; target <= n - k; ++target) total += multinomial_slice(k, target);
    return total;
}

Integer SliceCache::slice(int k, Index target) {
    const auto key = std::make_pair(k, target);
    {
        std::lock_guard lock(mutex_);
        if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    Integer value = multinomial_slice(k, target);
    std::lock_guard lock(mutex_);
    values_.emplace(key, value);
    return value;
}

std::size_t SliceCache::size() const {
    std::lock_guard lock(mutex_);
    return values_.size();
}

Integer basis_multinomial(int k, int j, Index n, SliceCache& cache) {
    require_basis_index(k, j);
    Integer total = 0;
    for (Index target = n - k - j; target <= n - k; ++target) total += cache.slice(k, target);
    return total;
}

}  // namespace kfib
