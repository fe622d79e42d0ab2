#pragma once

// Circular sequences: the coordinate trace of a single phase circle, i.e. a
// triangle wave of height m and period 2m, and their generating functions
// f(x) / (1 - x^{2m}).

#include <billiards/checked.hpp>
#include <billiards/grid.hpp>
#include <billiards/polynomial.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace billiards {

enum class Sign { Positive, Negative };

struct SeqSpec {
    Sign sign = Sign::Positive;
    Int first = 0;  ///< first term t, 0 ≤ t ≤ m
    Int height = 1; ///< m ≥ 1
};

inline void validate(const SeqSpec& spec)
{
    if (spec.height < 1) {
        throw std::invalid_argument("sequence height must be positive, got " + std::to_string(spec.height));
    }
    if (spec.first < 0 || spec.first > spec.height) {
        throw std::invalid_argument("first term " + std::to_string(spec.first) + " outside [0, "
                                    + std::to_string(spec.height) + "]");
    }
    checked_mul(2, spec.height, "sequence period");
}

/// a^±(n, t, m): walk the phase circle forward (positive) or backward (negative) n steps from t.
inline Int circ_seq(const SeqSpec& spec, Int n)
{
    validate(spec);
    if (n < 0) {
        throw std::invalid_argument("sequence index must be nonnegative");
    }
    const PhaseCircle circle{spec.height};
    Int u = spec.first;
    for (Int k = n % circle.length(); k > 0; --k) {
        u = spec.sign == Sign::Positive ? circle.step(u) : circle.step_back(u);
    }
    return circle.project(u);
}

/// Piecewise closed form evaluated at i = n mod 2m.
inline Int circ_seq_closed(const SeqSpec& spec, Int n)
{
    validate(spec);
    if (n < 0) {
        throw std::invalid_argument("sequence index must be nonnegative");
    }
    const Int t = spec.first;
    const Int m = spec.height;
    const Int i = n % (2 * m);
    if (spec.sign == Sign::Positive) {
        if (i <= m - t) {
            return i + t;
        }
        if (i <= 2 * m - t) {
            return 2 * m - t - i;
        }
        return i - (2 * m - t);
    }
    if (i <= t - 1) {
        return t - i;
    }
    if (i <= m + t) {
        return i - t;
    }
    return 2 * m + t - i;
}

/// F(x, t, n) = t x^{t-1} + (t+1) x^t + ... + n x^{n-1}.
inline IntPolynomial ramp_polynomial(Int t, Int n)
{
    if (t < 1 || n < t) {
        throw std::invalid_argument("ramp polynomial needs 1 <= t <= n");
    }
    std::vector<Int> c(static_cast<std::size_t>(n), 0);
    for (Int k = t; k <= n; ++k) {
        c[static_cast<std::size_t>(k - 1)] = k;
    }
    return IntPolynomial(std::move(c));
}

namespace detail {

// x^a (1 - x^b) = x^a - x^{a+b}; b may be negative as long as a + b ≥ 0.
inline IntPolynomial power_gap(Int a, Int b)
{
    if (a < 0 || a + b < 0) {
        throw std::logic_error("power_gap exponents must stay nonnegative");
    }
    return IntPolynomial::monomial(1, static_cast<std::size_t>(a))
           - IntPolynomial::monomial(1, static_cast<std::size_t>(a + b));
}

inline const IntPolynomial& one_minus_x()
{
    static const IntPolynomial p{1, -1};
    return p;
}

} // namespace detail

/// Numerator f^±(x, t, m) of the generating function, built from the factored
/// closed form
///   f^+ = (1-x^m)/(1-x) · ( x(1-x^{m-t})/(1-x) − x^{m-t+1}(1-x^{t-1})/(1-x) + (t-1)x^m + t )
///   f^- = (1-x^m)/(1-x) · ( x^{t+1}(1-x^{m-t})/(1-x) − x(1-x^t)/(1-x) + t x^m + t )
/// with every 1/(1-x) resolved by exact division.
inline IntPolynomial numerator_poly(const SeqSpec& spec)
{
    validate(spec);
    const Int t = spec.first;
    const Int m = spec.height;
    const auto& q = detail::one_minus_x();
    const auto div = [&](const IntPolynomial& p) { return divide_exact(p, q); };

    const IntPolynomial outer = div(detail::power_gap(0, m));
    IntPolynomial inner;
    if (spec.sign == Sign::Positive) {
        inner = div(detail::power_gap(1, m - t)) - div(detail::power_gap(m - t + 1, t - 1))
                + IntPolynomial::monomial(t - 1, static_cast<std::size_t>(m)) + IntPolynomial{t};
    } else {
        inner = div(detail::power_gap(t + 1, m - t)) - div(detail::power_gap(1, t))
                + IntPolynomial::monomial(t, static_cast<std::size_t>(m)) + IntPolynomial{t};
    }
    return outer * inner;
}

/// Generating function numerator / (1 - x^period).
struct RationalGF {
    IntPolynomial numerator;
    Int period = 1;
};

inline RationalGF gen_function(const SeqSpec& spec)
{
    return RationalGF{numerator_poly(spec), 2 * spec.height};
}

/// First N+1 power series coefficients via c_n = numerator_n + c_{n - period}.
inline std::vector<Int> series_expand(const RationalGF& gf, Int n_terms_minus_one)
{
    if (n_terms_minus_one < 0) {
        throw std::invalid_argument("expansion order must be nonnegative");
    }
    if (gf.period < 1) {
        throw std::invalid_argument("generating function period must be positive");
    }
    std::vector<Int> c(static_cast<std::size_t>(n_terms_minus_one) + 1, 0);
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] = gf.numerator[n];
        if (n >= static_cast<std::size_t>(gf.period)) {
            c[n] = checked_add(c[n], c[n - static_cast<std::size_t>(gf.period)], "series coefficient");
        }
    }
    return c;
}

} // namespace billiards
