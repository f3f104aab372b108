#include "kfib/tiling.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "kfib/operators.hpp"

namespace kfib {

namespace {

// No memo: this is the enumeration the recurrence is checked against.
void place_tiles(Index remaining, int max_tile, std::uint64_t& count) {
    if (remaining == 0) {
        ++count;
        return;
    }
    for (int tile = 1; tile <= max_tile && tile <= remaining; ++tile) place_tiles(remaining - tile, max_tile, count);
}

}  // namespace

Integer count_tilings_bruteforce(const TilingInstance& inst) {
    if (inst.board_length < 0) {
        throw std::invalid_argument("board length must be nonnegative, got " + std::to_string(inst.board_length));
    }
    if (inst.max_tile < 2) {
        throw std::invalid_argument("max tile length must be at least 2, got " + std::to_string(inst.max_tile));
    }
    std::uint64_t count = 0;
    place_tiles(inst.board_length, inst.max_tile, count);
    return Integer(static_cast<unsigned long>(count));
}

FibSequence c_sequence(int k) { return apply_operator(OperatorExpr::shift(k - 2), basis(k, k - 1)); }

}  // namespace kfib
