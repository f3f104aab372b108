#include "kfib/genbinom.hpp"

#include <stdexcept>
#include <string>

namespace kfib {

Integer falling_factorial(const Integer& n, Index m) {
    if (m < 0) throw std::invalid_argument("falling_factorial: negative length " + std::to_string(m));
    Integer acc = 1;
    Integer factor = n;
    for (Index step = 0; step < m; ++step) {
        acc *= factor;
        --factor;
    }
    return acc;
}

Integer gen_binomial(Index n, Index i) {
    if (i > n) return 0;
    const Index m = n - i;
    Integer numer = falling_factorial(Integer(static_cast<long>(n)), m);
    Integer denom;
    mpz_fac_ui(denom.get_mpz_t(), static_cast<unsigned long>(m));
    Integer q;
    mpz_divexact(q.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    return q;
}

namespace {

Integer classical_binomial(Index n, Index i) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    return r;
}

}  // namespace

Integer gen_binomial_signed_form(Index n, Index i) {
    if (n >= i && i >= 0) return classical_binomial(n, i);
    if (-1 >= n && n >= i) {
        Integer v = classical_binomial(-i - 1, -n - 1);
        // i + n has the same parity as i - n
        if (((i - n) & 1) != 0) v = -v;
        return v;
    }
    return 0;
}

std::vector<std::vector<Integer>> binom_table(IndexRange rows, IndexRange cols) {
    if (rows.empty() || cols.empty()) throw std::invalid_argument("binom_table: empty range");
    std::vector<std::vector<Integer>> table;
    table.reserve(static_cast<std::size_t>(rows.size()));
    for (Index n = rows.lo; n <= rows.hi; ++n) {
        auto& row = table.emplace_back();
        row.reserve(static_cast<std::size_t>(cols.size()));
        for (Index i = cols.lo; i <= cols.hi; ++i) row.push_back(gen_binomial(n, i));
    }
    return table;
}

}  // namespace kfib
