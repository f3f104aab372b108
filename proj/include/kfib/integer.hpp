#pragma once

// Arbitrary-precision integer scalar and small index helpers shared by every
// module.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kfib {

using Integer = mpz_class;

/// Index type for sequence positions and binomial/multinomial arguments.
using Index = std::int64_t;

/// Inclusive integer interval [lo, hi].
struct IndexRange {
    Index lo = 0;
    Index hi = 0;

    bool empty() const { return hi < lo; }
    Index size() const { return empty() ? 0 : hi - lo + 1; }
    bool contains(Index v) const { return lo <= v && v <= hi; }
    bool operator==(const IndexRange&) const = default;
};

/// Floor division, rounding toward negative infinity.
constexpr Index floor_div(Index a, Index b) {
    Index q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr Index ceil_div(Index a, Index b) {
    Index q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

/// Non-negative remainder of a modulo m (m > 0).
constexpr Index pos_mod(Index a, Index m) {
    Index r = a % m;
    return r < 0 ? r + m : r;
}

/// 2^e for e >= 0; throws std::domain_error otherwise.
Integer pow2(Index e);

inline std::string to_string(const Integer& v) { return v.get_str(10); }

/// Parses a base-10 integer with optional sign; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

}  // namespace kfib
