#include <doctest.h>

#include <random>
#include <stdexcept>

#include "golden.hpp"
#include "kfib/fibspace.hpp"
#include "oracle.hpp"

using namespace kfib;

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) {
    std::vector<Integer> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

FibSequence order5_example() {
    std::vector<Integer> w;
    for (int v : golden::kOrder5Window) w.emplace_back(v);
    return make_sequence(5, w);
}

// Random order-k sequences with small signed windows.
struct SequenceGen {
    std::mt19937_64 rng{20240611};

    FibSequence operator()(int k) {
        std::uniform_int_distribution<long> value(-1000, 1000);
        std::vector<Integer> w;
        for (int i = 0; i < k; ++i) w.emplace_back(value(rng));
        return make_sequence(k, w);
    }
};

}  // namespace

TEST_CASE("make_sequence validates its arguments") {
    CHECK_THROWS_AS(make_sequence(1, ints({1})), std::invalid_argument);
    CHECK_THROWS_AS(make_sequence(3, ints({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(make_sequence(2, ints({1, 2, 3})), std::invalid_argument);
    CHECK(make_sequence(3, ints({1, 0, 0})) == basis(3, 0));
}

TEST_CASE("order-5 worked example") {
    const FibSequence seq = order5_example();
    const auto terms = seq.terms(-4, 6);
    REQUIRE(terms.size() == golden::kOrder5Terms.size());
    for (std::size_t p = 0; p < terms.size(); ++p) CHECK(terms[p] == golden::kOrder5Terms[p]);
    CHECK(term(seq, 5) == 14);
    CHECK(term(seq, 6) == 25);
    CHECK(term(seq, -4) == -2);
    CHECK(term(seq, -1) == -4);
    CHECK(term_shortcut(seq, 6) == 25);
    CHECK(decompose(seq, 5) == 14);
}

TEST_CASE("classic Fibonacci values") {
    const FibSequence fib = make_sequence(2, ints({0, 1}));
    CHECK(term(fib, 10) == 55);
    CHECK(term_matrix_power(fib, 30) == 832040);
    // F_{-7} = (-1)^8 F_7
    CHECK(term_matrix_power(fib, -7) == 13);
    CHECK(term(fib, -7) == 13);
    CHECK(oracle::recurrence_term(ints({0, 1}), 30) == 832040);
}

TEST_CASE("window values are returned unchanged by every strategy") {
    const FibSequence seq = make_sequence(4, ints({7, -3, 11, 2}));
    for (Index n = 0; n < 4; ++n) {
        CHECK(term(seq, n) == seq.window()[static_cast<std::size_t>(n)]);
        CHECK(term_shortcut(seq, n) == seq.window()[static_cast<std::size_t>(n)]);
        CHECK(term_matrix_power(seq, n) == seq.window()[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("tribonacci basis sequence B^(0)") {
    // 1,0,0,1,1,2,4,7
    CHECK(term_shortcut(basis(3, 0), 7) == 7);
    CHECK(term(basis(3, 0), 7) == 7);
    CHECK(term(basis(3, 0), -1) == -1);
}

TEST_CASE("basis and sum_basis") {
    CHECK(basis(3, 0).window()[0] == 1);
    CHECK(basis(5, 4) == make_sequence(5, ints({0, 0, 0, 0, 1})));
    CHECK(basis(2, 1) == make_sequence(2, ints({0, 1})));
    CHECK_THROWS_AS(basis(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(basis(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(basis(1, 0), std::invalid_argument);

    CHECK(term(sum_basis(3), 3) == 3);
    CHECK(term(sum_basis(2), 4) == 5);
    for (int k = 2; k <= 7; ++k) {
        for (Index n = 0; n < k; ++n) CHECK(term(sum_basis(k), n) == 1);
    }
    CHECK_THROWS_AS(sum_basis(1), std::invalid_argument);
}

TEST_CASE("basis delta") {
    for (int k = 2; k <= 8; ++k) {
        for (int j = 0; j < k; ++j) {
            for (Index m = 0; m < k; ++m) CHECK(term(basis(k, j), m) == (m == j ? 1 : 0));
        }
    }
}

TEST_CASE("decompose examples") {
    const FibSequence seq = make_sequence(3, ints({2, -1, 5}));
    CHECK(decompose(seq, -3) == oracle::recurrence_term(ints({2, -1, 5}), -3));
    for (Index j = 0; j < 3; ++j) CHECK(decompose(seq, j) == seq.window()[static_cast<std::size_t>(j)]);
}

TEST_CASE("strategies agree with the naive oracle on random sequences") {
    SequenceGen gen;
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 2 + trial % 7;
        const FibSequence seq = gen(k);
        const std::vector<Integer> w(seq.window().begin(), seq.window().end());
        const auto table = oracle::recurrence_table(w, -60, 80);
        const auto walked = seq.terms(-60, 80);
        for (Index n = -60; n <= 80; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            const Integer& expect = table.at(n);
            REQUIRE(walked[static_cast<std::size_t>(n + 60)] == expect);
            REQUIRE(term(seq, n) == expect);
            REQUIRE(term_shortcut(seq, n) == expect);
            REQUIRE(term_matrix_power(seq, n) == expect);
            REQUIRE(decompose(seq, n) == expect);
        }
    }
}

TEST_CASE("recurrence holds on every evaluated window") {
    SequenceGen gen;
    for (int k = 2; k <= 9; ++k) {
        const FibSequence seq = gen(k);
        const auto t = seq.terms(-50, 50);
        for (std::size_t p = static_cast<std::size_t>(k); p < t.size(); ++p) {
            Integer s = 0;
            for (int d = 1; d <= k; ++d) s += t[p - static_cast<std::size_t>(d)];
            REQUIRE(t[p] == s);
        }
    }
}

TEST_CASE("order-2 reflection F_{-n} = (-1)^{n+1} F_n") {
    const FibSequence fib = basis(2, 1);
    for (Index n = 0; n <= 30; ++n) {
        Integer expect = term(fib, n);
        if (n % 2 == 0) expect = -expect;
        CHECK(term(fib, -n) == expect);
    }
}

TEST_CASE("linear space operations") {
    const FibSequence a = make_sequence(3, ints({1, 2, 3}));
    const FibSequence b = make_sequence(3, ints({-4, 0, 9}));
    const FibSequence c = a + Integer(3) * b - basis(3, 1);
    for (Index n = -10; n <= 10; ++n) CHECK(term(c, n) == term(a, n) + 3 * term(b, n) - term(basis(3, 1), n));
    CHECK_THROWS_AS(a + basis(4, 0), std::invalid_argument);
}

TEST_CASE("strategy names") {
    for (Strategy s : {Strategy::window, Strategy::shortcut, Strategy::matpow}) CHECK(parse_strategy(to_string(s)) == s);
    CHECK_THROWS_AS(parse_strategy("binet"), std::invalid_argument);
}

TEST_CASE("strategies agree far from the window") {
    for (int k : {2, 5, 8}) {
        const FibSequence seq = basis(k, k - 1);
        for (Index n : {Index{1000}, Index{-1000}, Index{4321}, Index{-2345}}) {
            const Integer w = term(seq, n);
            CHECK(term_shortcut(seq, n) == w);
            CHECK(term_matrix_power(seq, n) == w);
        }
    }
}
