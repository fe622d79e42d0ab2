#pragma once

// Dense univariate polynomials with exact 64-bit integer coefficients.

#include <billiards/checked.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace billiards {

/// coeffs()[n] is the coefficient of x^n. Trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { trim(); }
    explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPolynomial monomial(Int coefficient, std::size_t degree)
    {
        std::vector<Int> c(degree + 1, 0);
        c[degree] = coefficient;
        return IntPolynomial(std::move(c));
    }

    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Int operator[](std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : 0; }

    IntPolynomial& operator+=(const IntPolynomial& rhs)
    {
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size(), 0);
        }
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i], "polynomial addition");
        }
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& rhs) { return *this += -rhs; }

    IntPolynomial operator-() const
    {
        IntPolynomial out = *this;
        for (auto& c : out.coeffs_) {
            c = checked_mul(c, -1, "polynomial negation");
        }
        return out;
    }

    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }

    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs)
    {
        if (lhs.is_zero() || rhs.is_zero()) {
            return {};
        }
        std::vector<Int> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                out[i + j] = checked_add(out[i + j], checked_mul(lhs.coeffs_[i], rhs.coeffs_[j], "polynomial product"),
                                         "polynomial product");
            }
        }
        return IntPolynomial(std::move(out));
    }

    IntPolynomial& operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

    /// Multiply by x^k.
    IntPolynomial shifted(std::size_t k) const
    {
        if (is_zero()) {
            return {};
        }
        std::vector<Int> out(k, 0);
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p)
    {
        if (p.is_zero()) {
            return os << "0";
        }
        bool first = true;
        for (std::size_t n = p.coeffs_.size(); n-- > 0;) {
            const Int c = p.coeffs_[n];
            if (c == 0) {
                continue;
            }
            os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            const Int a = c < 0 ? -c : c;
            if (a != 1 || n == 0) {
                os << a;
            }
            if (n >= 1) {
                os << "x";
            }
            if (n >= 2) {
                os << "^" << n;
            }
            first = false;
        }
        return os;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Int> coeffs_;
};

struct PolynomialDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Long division over the integers. Requires the divisor's leading coefficient
/// to divide every intermediate leading term; ±1 leading coefficients always work.
inline PolynomialDivision divide(const IntPolynomial& dividend, const IntPolynomial& divisor)
{
    if (divisor.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Int> rem = dividend.coeffs();
    const auto& d = divisor.coeffs();
    const std::size_t dn = d.size();
    const Int lead = d.back();
    if (rem.size() < dn) {
        return {IntPolynomial{}, dividend};
    }
    std::vector<Int> quot(rem.size() - dn + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Int top = rem[k + dn - 1];
        if (top % lead != 0) {
            throw std::domain_error("polynomial division leaves a non-integral quotient");
        }
        const Int q = top / lead;
        quot[k] = q;
        if (q == 0) {
            continue;
        }
        for (std::size_t j = 0; j < dn; ++j) {
            rem[k + j] = checked_add(rem[k + j], -checked_mul(q, d[j], "polynomial division"), "polynomial division");
        }
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

/// Quotient of a division that must be exact; a nonzero remainder is a logic error.
inline IntPolynomial divide_exact(const IntPolynomial& dividend, const IntPolynomial& divisor)
{
    auto [q, r] = divide(dividend, divisor);
    if (!r.is_zero()) {
        throw std::logic_error("polynomial division is not exact");
    }
    return q;
}

} // namespace billiards
