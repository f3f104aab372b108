#include "kfib/integer.hpp"

#include <stdexcept>

namespace kfib {

Integer pow2(Index e) {
    if (e < 0) throw std::domain_error("pow2: negative exponent " + std::to_string(e));
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

Integer parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

}  // namespace kfib
