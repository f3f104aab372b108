#include "kfib/fibspace.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace kfib {

FibSequence::FibSequence(int order, std::vector<Integer> window) : order_(order), window_(std::move(window)) {
    if (order_ < 2) throw std::invalid_argument("order must be at least 2, got " + std::to_string(order_));
    if (window_.size() != static_cast<std::size_t>(order_)) {
        throw std::invalid_argument("initial window must have " + std::to_string(order_) + " values, got " +
                                    std::to_string(window_.size()));
    }
}

namespace {

// k consecutive terms F_start .. F_start+k-1, with F_i kept in slot i mod k.
class Ring {
  public:
    explicit Ring(const FibSequence& seq)
        : slots_(seq.window().begin(), seq.window().end()), k_(seq.order()) {}

    Index start() const { return start_; }
    Index last() const { return start_ + k_ - 1; }
    const Integer& at(Index i) const { return slots_[slot(i)]; }

    void step_forward() {
        scratch_ = 0;
        for (const auto& v : slots_) scratch_ += v;
        std::swap(slots_[slot(start_)], scratch_);
        ++start_;
    }

    void step_backward() {
        const Index top = last();
        scratch_ = slots_[slot(top)];
        for (Index i = start_; i < top; ++i) scratch_ -= slots_[slot(i)];
        std::swap(slots_[slot(top)], scratch_);
        --start_;
    }

    // Walks until the ring covers index n.
    void seek(Index n) {
        while (n > last()) step_forward();
        while (n < start_) step_backward();
    }

  private:
    std::size_t slot(Index i) const { return static_cast<std::size_t>(pos_mod(i, k_)); }

    std::vector<Integer> slots_;
    Index k_;
    Index start_ = 0;
    Integer scratch_;
};

void check_same_order(const FibSequence& a, const FibSequence& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("sequence orders differ: " + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
    }
}

}  // namespace

Integer FibSequence::term(Index n) const {
    if (0 <= n && n < order_) return window_[static_cast<std::size_t>(n)];
    Ring ring(*this);
    ring.seek(n);
    return ring.at(n);
}

std::vector<Integer> FibSequence::terms(Index lo, Index hi) const {
    std::vector<Integer> out;
    if (hi < lo) return out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    Ring ring(*this);
    ring.seek(lo);
    for (Index n = lo; n <= hi; ++n) {
        ring.seek(n);
        out.push_back(ring.at(n));
    }
    return out;
}

FibSequence& FibSequence::operator+=(const FibSequence& other) {
    check_same_order(*this, other);
    for (std::size_t i = 0; i < window_.size(); ++i) window_[i] += other.window_[i];
    return *this;
}

FibSequence& FibSequence::operator-=(const FibSequence& other) {
    check_same_order(*this, other);
    for (std::size_t i = 0; i < window_.size(); ++i) window_[i] -= other.window_[i];
    return *this;
}

FibSequence& FibSequence::operator*=(const Integer& factor) {
    for (auto& v : window_) v *= factor;
    return *this;
}

FibSequence operator+(FibSequence a, const FibSequence& b) { return a += b; }
FibSequence operator-(FibSequence a, const FibSequence& b) { return a -= b; }
FibSequence operator*(const Integer& factor, FibSequence seq) { return seq *= factor; }

FibSequence make_sequence(int k, std::vector<Integer> window) { return FibSequence(k, std::move(window)); }

FibSequence basis(int k, int j) {
    if (k < 2) throw std::invalid_argument("basis: order must be at least 2, got " + std::to_string(k));
    if (j < 0 || j >= k) {
        throw std::invalid_argument("basis: index j=" + std::to_string(j) + " outside [0, " + std::to_string(k - 1) +
                                    "]");
    }
    std::vector<Integer> window(static_cast<std::size_t>(k), Integer(0));
    window[static_cast<std::size_t>(j)] = 1;
    return FibSequence(k, std::move(window));
}

FibSequence sum_basis(int k) {
    if (k < 2) throw std::invalid_argument("sum_basis: order must be at least 2, got " + std::to_string(k));
    return FibSequence(k, std::vector<Integer>(static_cast<std::size_t>(k), Integer(1)));
}

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::window: return "window";
        case Strategy::shortcut: return "shortcut";
        case Strategy::matpow: return "matpow";
    }
    return "?";
}

Strategy parse_strategy(std::string_view name) {
    if (name == "window") return Strategy::window;
    if (name == "shortcut") return Strategy::shortcut;
    if (name == "matpow") return Strategy::matpow;
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "' (expected window|shortcut|matpow)");
}

Integer term(const FibSequence& seq, Index n) { return seq.term(n); }

Integer term_shortcut(const FibSequence& seq, Index n) {
    const int k = seq.order();
    const auto w = seq.window();
    if (0 <= n && n < k) return w[static_cast<std::size_t>(n)];

    // F_i lives in slot i mod (k+1); seed with F_{-1} .. F_{k-1}
    const Index period = k + 1;
    std::vector<Integer> slots(static_cast<std::size_t>(period));
    for (Index i = 0; i < k; ++i) slots[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)];
    Integer& before = slots[static_cast<std::size_t>(pos_mod(-1, period))];
    before = w[static_cast<std::size_t>(k - 1)];
    for (Index i = 0; i < k - 1; ++i) before -= w[static_cast<std::size_t>(i)];
    if (n == -1) return before;

    auto at = [&](Index i) -> Integer& { return slots[static_cast<std::size_t>(pos_mod(i, period))]; };
    Integer next;
    if (n >= k) {
        for (Index m = k; m <= n; ++m) {
            mpz_mul_2exp(next.get_mpz_t(), at(m - 1).get_mpz_t(), 1);
            next -= at(m);  // slot of m still holds F_{m-k-1}
            std::swap(at(m), next);
        }
    } else {
        for (Index m = -2; m >= n; --m) {
            mpz_mul_2exp(next.get_mpz_t(), at(m + k).get_mpz_t(), 1);
            next -= at(m);  // slot of m still holds F_{m+k+1}
            std::swap(at(m), next);
        }
    }
    return at(n);
}

namespace {

class SquareMatrix {
  public:
    explicit SquareMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim, Integer(0)) {}

    static SquareMatrix identity(std::size_t dim) {
        SquareMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t dim() const { return dim_; }
    Integer& operator()(std::size_t r, std::size_t c) { return cells_[r * dim_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return cells_[r * dim_ + c]; }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix out(a.dim_);
        for (std::size_t r = 0; r < a.dim_; ++r) {
            for (std::size_t m = 0; m < a.dim_; ++m) {
                const Integer& lhs = a(r, m);
                if (lhs == 0) continue;
                for (std::size_t c = 0; c < a.dim_; ++c) {
                    mpz_addmul(out(r, c).get_mpz_t(), lhs.get_mpz_t(), b(m, c).get_mpz_t());
                }
            }
        }
        return out;
    }

  private:
    std::size_t dim_;
    std::vector<Integer> cells_;
};

// Advances the state (F_t, ..., F_{t+k-1}) to t+1.
SquareMatrix companion(std::size_t k) {
    SquareMatrix m(k);
    for (std::size_t r = 0; r + 1 < k; ++r) m(r, r + 1) = 1;
    for (std::size_t c = 0; c < k; ++c) m(k - 1, c) = 1;
    return m;
}

// Moves the state back to t-1: F_{t-1} = F_{t+k-1} - F_{t+k-2} - ... - F_t.
SquareMatrix inverse_companion(std::size_t k) {
    SquareMatrix m(k);
    for (std::size_t c = 0; c + 1 < k; ++c) m(0, c) = -1;
    m(0, k - 1) = 1;
    for (std::size_t r = 1; r < k; ++r) m(r, r - 1) = 1;
    return m;
}

SquareMatrix power(SquareMatrix base, std::uint64_t exponent) {
    SquareMatrix acc = SquareMatrix::identity(base.dim());
    while (exponent > 0) {
        if (exponent & 1U) acc = acc * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return acc;
}

}  // namespace

Integer term_matrix_power(const FibSequence& seq, Index n) {
    const auto k = static_cast<std::size_t>(seq.order());
    const auto w = seq.window();
    const std::uint64_t steps = n >= 0 ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(-(n + 1)) + 1;
    const SquareMatrix p = power(n >= 0 ? companion(k) : inverse_companion(k), steps);
    Integer value = 0;
    for (std::size_t c = 0; c < k; ++c) mpz_addmul(value.get_mpz_t(), p(0, c).get_mpz_t(), w[c].get_mpz_t());
    return value;
}

Integer evaluate(const FibSequence& seq, Index n, Strategy strategy) {
    switch (strategy) {
        case Strategy::window: return term(seq, n);
        case Strategy::shortcut: return term_shortcut(seq, n);
        case Strategy::matpow: return term_matrix_power(seq, n);
    }
    throw std::logic_error("unhandled strategy");
}

Integer decompose(const FibSequence& seq, Index n) {
    const int k = seq.order();
    const auto w = seq.window();
    Integer total = 0;
    for (int j = 0; j < k; ++j) {
        const Integer& coeff = w[static_cast<std::size_t>(j)];
        if (coeff == 0) continue;
        total += basis(k, j).term(n) * coeff;
    }
    return total;
}

}  // namespace kfib
