#pragma once

// Tilings of a 1 x n board with tiles of length 1..k, and the order-k
// sequence C that counts them.

#include "kfib/fibspace.hpp"
#include "kfib/integer.hpp"

namespace kfib {

struct TilingInstance {
    Index board_length = 0;
    int max_tile = 2;
};

/// Counts ordered compositions of n into parts 1..k by exhaustive
/// depth-first enumeration. Cost is proportional to the count itself, so
/// keep n <= ~25. Throws std::invalid_argument for n < 0 or k < 2.
Integer count_tilings_bruteforce(const TilingInstance& inst);

/// C with C_0 = 0, C_1 = 1 and C_{-1} = ... = C_{-(k-2)} = 0, i.e. B^(k-1)
/// shifted so that C_n = B^(k-1)_{n+k-2}. Tilings of length n equal C_{n+1}.
FibSequence c_sequence(int k);

}  // namespace kfib
