#pragma once

// Overflow-checked 64-bit integer helpers shared by every module.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace billiards {

using Int = std::int64_t;

/// Raised when an enumeration or simulation would exceed its configured size cap.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Int checked_add(Int a, Int b, const char* what = "addition")
{
    Int r{};
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error(std::string("integer overflow in ") + what);
    }
    return r;
}

inline Int checked_mul(Int a, Int b, const char* what = "multiplication")
{
    Int r{};
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error(std::string("integer overflow in ") + what);
    }
    return r;
}

/// Least common multiple of two positive integers; throws on overflow.
inline Int checked_lcm(Int a, Int b)
{
    return checked_mul(a / std::gcd(a, b), b, "lcm");
}

/// Euclidean remainder: always in [0, m) for m > 0.
constexpr Int mod_floor(Int a, Int m) noexcept
{
    Int r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace billiards
