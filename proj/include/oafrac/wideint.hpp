#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace oafrac {

// All bound arithmetic runs on 128-bit unsigned integers with explicit
// overflow checks. Wrapping silently would corrupt every divisibility
// statement downstream, so checked_mul throws instead.
using Wide = unsigned __int128;

inline Wide checked_mul(Wide a, Wide b) {
    Wide out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer product exceeds 128 bits");
    return out;
}

inline Wide gcd_wide(Wide a, Wide b) {
    while (b != 0) {
        Wide r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// lcm(a, b) for positive a, b; throws std::overflow_error past 128 bits.
inline Wide lcm_wide(Wide a, Wide b) {
    return checked_mul(a / gcd_wide(a, b), b);
}

inline std::string to_string(Wide v) {
    if (v == 0) return "0";
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return std::string(digits.rbegin(), digits.rend());
}

inline std::uint64_t to_u64(Wide v) {
    if (v > static_cast<Wide>(UINT64_MAX))
        throw std::overflow_error("value " + to_string(v) + " exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

inline std::ostream& operator<<(std::ostream& os, Wide v) { return os << to_string(v); }

}  // namespace oafrac
