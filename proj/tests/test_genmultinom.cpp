#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "kfib/genbinom.hpp"
#include "kfib/genmultinom.hpp"

using namespace kfib;

namespace {

// Calls visit(tuple) for every tuple of length t with entries in [lo, hi].
void for_each_tuple(std::size_t t, Index lo, Index hi, const std::function<void(const std::vector<Index>&)>& visit) {
    std::vector<Index> e(t, lo);
    while (true) {
        visit(e);
        std::size_t pos = 0;
        while (pos < t && e[pos] == hi) e[pos++] = lo;
        if (pos == t) return;
        ++e[pos];
    }
}

Integer chain_product(const std::vector<Index>& s) {
    Integer p = 1;
    for (std::size_t j = 0; j + 1 < s.size(); ++j) p *= gen_binomial(s[j], s[j + 1]);
    return p;
}

}  // namespace

TEST_CASE("MultiIndex rejects arity below two") {
    CHECK_THROWS_AS(MultiIndex({}), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex({4}), std::invalid_argument);
    CHECK(MultiIndex({1, 2}).arity() == 2);
    CHECK(MultiIndex({2, 0, -4}).partial_sums() == std::vector<Index>{-2, -4, -4});
}

TEST_CASE("gen_multinomial examples") {
    CHECK(gen_multinomial(MultiIndex({0, 0, -1})) == 1);
    CHECK(gen_multinomial(MultiIndex({1, 2})) == 3);
    // chain (-2, -4, -4): <-2 choose -4> <-4 choose -4> = 3 * 1
    CHECK(gen_multinomial(MultiIndex({2, 0, -4})) == 3);
    CHECK(gen_multinomial_closed(MultiIndex({2, 0, -4})) == 3);
}

TEST_CASE("gen_multinomial_closed examples") {
    // chain (-1, -2, -3): <-1 choose -2> <-2 choose -3> = (-1)(-2)
    CHECK(chain_product({-1, -2, -3}) == 2);
    CHECK(gen_multinomial_closed(MultiIndex({1, 1, -3})) == 2);
    CHECK(gen_multinomial_closed(MultiIndex({-1, 2})) == 0);
    CHECK(gen_multinomial_closed(MultiIndex({2, 3, 1})) == 60);
    CHECK(gen_multinomial_closed(MultiIndex({0, 0, -1})) == 1);
}

TEST_CASE("chain product equals closed form for t in {2,3,4}, entries in [-6,6]") {
    for (std::size_t t = 2; t <= 4; ++t) {
        for_each_tuple(t, -6, 6, [](const std::vector<Index>& e) {
            const MultiIndex idx(e);
            REQUIRE(gen_multinomial(idx) == gen_multinomial_closed(idx));
        });
    }
}

TEST_CASE("generalized Pascal recursion") {
    for (std::size_t t = 2; t <= 4; ++t) {
        const Index bound = t == 4 ? 4 : 6;
        for_each_tuple(t, -bound, bound, [](const std::vector<Index>& e) {
            Integer sum = 0;
            for (std::size_t pos = 0; pos < e.size(); ++pos) {
                auto lowered = e;
                --lowered[pos];
                sum += gen_multinomial(MultiIndex(lowered));
            }
            REQUIRE(gen_multinomial(MultiIndex(e)) == sum);
        });
    }
}

TEST_CASE("arity two reduces to the binomial") {
    for (Index a = -15; a <= 15; ++a) {
        for (Index b = -15; b <= 15; ++b) REQUIRE(gen_multinomial(MultiIndex({a, b})) == gen_binomial(a + b, b));
    }
}

TEST_CASE("symmetry where the closed form guarantees it") {
    for_each_tuple(4, -5, 5, [](const std::vector<Index>& e) {
        const bool leading_nonneg = e[0] >= 0 && e[1] >= 0 && e[2] >= 0;
        if (!leading_nonneg) return;
        const Integer v = gen_multinomial(MultiIndex(e));
        std::vector<Index> lead(e.begin(), e.end() - 1);
        std::sort(lead.begin(), lead.end());
        do {
            std::vector<Index> p = lead;
            p.push_back(e.back());
            REQUIRE(gen_multinomial(MultiIndex(p)) == v);
        } while (std::next_permutation(lead.begin(), lead.end()));

        if (e.back() >= 0) {
            std::vector<Index> all = e;
            std::sort(all.begin(), all.end());
            do {
                REQUIRE(gen_multinomial(MultiIndex(all)) == v);
            } while (std::next_permutation(all.begin(), all.end()));
        }
    });
}

TEST_CASE("the last entry is distinguished in the negative class") {
    // (0, -1) vs (-1, 0): only the first is non-zero
    CHECK(gen_multinomial(MultiIndex({0, -1})) == 1);
    CHECK(gen_multinomial(MultiIndex({-1, 0})) == 0);
}

TEST_CASE("enumerate_support examples") {
    const auto neg = enumerate_support(3, -3);
    REQUIRE(neg.size() == 1);
    CHECK(neg[0].sums == std::vector<Index>{-1, -1, -1});
    CHECK(neg[0].to_multi_index() == MultiIndex({0, 0, -1}));

    CHECK(enumerate_support(2, -1).empty());

    const auto pos = enumerate_support(2, 2);
    REQUIRE(pos.size() == 2);
    CHECK(pos[0].sums == std::vector<Index>{2, 0});
    CHECK(pos[1].sums == std::vector<Index>{1, 1});

    CHECK_THROWS_AS(enumerate_support(1, 3), std::invalid_argument);
}

TEST_CASE("enumerate_support is sound and complete against an exhaustive scan") {
    for (int k = 2; k <= 4; ++k) {
        for (Index target = -14; target <= 10; ++target) {
            CAPTURE(k);
            CAPTURE(target);
            const Index bound = (target < 0 ? -target : target) + k + 1;
            std::set<std::vector<Index>> expected;
            // every chain with a non-zero product has |s_j| < bound; the last
            // entry is fixed by the sum
            for_each_tuple(static_cast<std::size_t>(k - 1), -bound, bound, [&](const std::vector<Index>& head) {
                std::vector<Index> s = head;
                Index sum = 0;
                for (Index v : head) sum += v;
                s.push_back(target - sum);
                if (chain_product(s) != 0) expected.insert(s);
            });

            const auto chains = enumerate_support(k, target);
            std::set<std::vector<Index>> got;
            for (const auto& c : chains) {
                REQUIRE(c.total() == target);
                REQUIRE(gen_multinomial(c.to_multi_index()) != 0);
                got.insert(c.sums);
            }
            CHECK(got.size() == chains.size());
            CHECK(got == expected);
            CHECK(std::is_sorted(chains.begin(), chains.end(), std::greater<>()));
        }
    }
}

TEST_CASE("enumerate_support is deterministic") {
    CHECK(enumerate_support(5, 17) == enumerate_support(5, 17));
    CHECK(enumerate_support(5, -23) == enumerate_support(5, -23));
}
