#pragma once

// Generalized Chinese remainder theorem over non-coprime moduli.

#include <billiards/checked.hpp>

#include <optional>
#include <span>
#include <stdexcept>

namespace billiards {

/// x ≡ residue (mod modulus), modulus ≥ 1, 0 ≤ residue < modulus.
struct Congruence {
    Int residue = 0;
    Int modulus = 1;

    friend bool operator==(const Congruence&, const Congruence&) = default;
};

namespace detail {

// Returns (g, x) with a*x ≡ g (mod b), g = gcd(a, b).
inline std::pair<Int, Int> extended_gcd(Int a, Int b)
{
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    return {old_r, old_s};
}

} // namespace detail

/// Merge two congruences into one, or nullopt when they are incompatible.
/// Compatibility requires a1 ≡ a2 (mod gcd(n1, n2)); the merged modulus is lcm(n1, n2).
inline std::optional<Congruence> merge_congruences(Congruence lhs, Congruence rhs)
{
    if (lhs.modulus < 1 || rhs.modulus < 1) {
        throw std::invalid_argument("congruence modulus must be positive");
    }
    const Int a1 = mod_floor(lhs.residue, lhs.modulus);
    const Int a2 = mod_floor(rhs.residue, rhs.modulus);
    const auto [g, inv] = detail::extended_gcd(lhs.modulus, rhs.modulus);
    const Int diff = a2 - a1;
    if (diff % g != 0) {
        return std::nullopt;
    }
    const Int reduced = rhs.modulus / g;
    const Int lcm = checked_mul(lhs.modulus / g, rhs.modulus, "congruence modulus");
    // t ≡ (diff/g) * inv (mod n2/g), then x = a1 + n1*t.
    const __int128 t = static_cast<__int128>(diff / g) * inv % reduced;
    __int128 x = static_cast<__int128>(a1) + static_cast<__int128>(lhs.modulus) * t;
    x %= lcm;
    if (x < 0) {
        x += lcm;
    }
    return Congruence{static_cast<Int>(x), lcm};
}

/// Solve a system of simultaneous congruences. An empty system has solution 0 (mod 1).
inline std::optional<Congruence> solve_congruences(std::span<const Congruence> system)
{
    Congruence acc{0, 1};
    for (const auto& c : system) {
        auto merged = merge_congruences(acc, c);
        if (!merged) {
            return std::nullopt;
        }
        acc = *merged;
    }
    return acc;
}

} // namespace billiards
