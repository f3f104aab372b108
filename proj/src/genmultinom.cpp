#include "kfib/genmultinom.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kfib/genbinom.hpp"

namespace kfib {

MultiIndex::MultiIndex(std::vector<Index> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2) {
        throw std::invalid_argument("MultiIndex: arity must be at least 2, got " +
                                    std::to_string(entries_.size()));
    }
}

std::vector<Index> MultiIndex::partial_sums() const {
    std::vector<Index> sums(entries_.size());
    Index acc = 0;
    for (std::size_t pos = entries_.size(); pos-- > 0;) {
        acc += entries_[pos];
        sums[pos] = acc;
    }
    return sums;
}

MultiIndex SupportChain::to_multi_index() const {
    std::vector<Index> a(sums.size());
    for (std::size_t j = 0; j + 1 < sums.size(); ++j) a[j] = sums[j] - sums[j + 1];
    if (!sums.empty()) a.back() = sums.back();
    return MultiIndex(std::move(a));
}

Index SupportChain::total() const { return std::accumulate(sums.begin(), sums.end(), Index{0}); }

Integer gen_multinomial(const MultiIndex& idx) {
    const auto s = idx.partial_sums();
    Integer product = 1;
    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        Integer factor = gen_binomial(s[j], s[j + 1]);
        if (factor == 0) return 0;
        product *= factor;
    }
    return product;
}

namespace {

Integer factorial(Index n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// (p_1 + ... + p_m)! / (p_1! ... p_m!) for nonnegative parts.
Integer classical_multinomial(std::span<const Index> parts) {
    Index total = 0;
    Integer denom = 1;
    for (Index p : parts) {
        total += p;
        denom *= factorial(p);
    }
    Integer q;
    Integer numer = factorial(total);
    mpz_divexact(q.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    return q;
}

// Nonincreasing tuples of `parts` nonnegative integers summing to `total`,
// emitted in descending lexicographic order.
void nonincreasing_parts(Index total, int parts, const std::function<void(const std::vector<Index>&)>& emit) {
    std::vector<Index> current;
    current.reserve(static_cast<std::size_t>(parts));
    std::function<void(Index, Index, int)> dfs = [&](Index remaining, Index cap, int left) {
        if (left == 1) {
            if (remaining <= cap) {
                current.push_back(remaining);
                emit(current);
                current.pop_back();
            }
            return;
        }
        // the largest remaining part is at least the average
        const Index lo = ceil_div(remaining, left);
        for (Index x = std::min(cap, remaining); x >= lo; --x) {
            current.push_back(x);
            dfs(remaining - x, x, left - 1);
            current.pop_back();
        }
    };
    if (total < 0) return;
    dfs(total, total, parts);
}

}  // namespace

Integer gen_multinomial_closed(const MultiIndex& idx) {
    const auto e = idx.entries();
    const std::size_t t = e.size();
    const bool leading_nonneg = std::all_of(e.begin(), e.end() - 1, [](Index v) { return v >= 0; });
    if (!leading_nonneg) return 0;
    if (e[t - 1] >= 0) return classical_multinomial(e);

    const Index total = std::accumulate(e.begin(), e.end(), Index{0});
    if (total > -1) return 0;
    std::vector<Index> parts(e.begin(), e.end() - 1);
    const Index leading = std::accumulate(parts.begin(), parts.end(), Index{0});
    parts.push_back(-total - 1);
    Integer v = classical_multinomial(parts);
    if ((leading & 1) != 0) v = -v;
    return v;
}

std::vector<SupportChain> enumerate_support(int k, Index target) {
    if (k < 2) throw std::invalid_argument("enumerate_support: k must be at least 2, got " + std::to_string(k));
    std::vector<SupportChain> chains;
    if (target >= 0) {
        nonincreasing_parts(target, k, [&](const std::vector<Index>& p) { chains.push_back({p}); });
    } else {
        // u_j = -s_j - 1 >= 0 is nondecreasing with sum -target - k
        nonincreasing_parts(-target - k, k, [&](const std::vector<Index>& p) {
            SupportChain c{std::vector<Index>(p.size())};
            for (std::size_t j = 0; j < p.size(); ++j) c.sums[j] = -p[p.size() - 1 - j] - 1;
            chains.push_back(std::move(c));
        });
        std::sort(chains.begin(), chains.end(), std::greater<>());
    }
    return chains;
}

}  // namespace kfib
