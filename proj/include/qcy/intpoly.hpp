#ifndef QCY_INTPOLY_HPP
#define QCY_INTPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qcy/numbers.hpp"

namespace qcy {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficients are stored constant term first and kept in canonical form:
/// no trailing zeros, so the zero polynomial has an empty coefficient vector
/// and degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly constant(Int c);
    /// c * t^power
    static IntPoly monomial(Int c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of t^i; zero outside the stored range.
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const;

    Int eval(const Int& x) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs) { return *this = *this * rhs; }
    friend IntPoly operator*(const Int& c, const IntPoly& p);

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }
    friend bool operator<(const IntPoly& a, const IntPoly& b) { return a.coeffs_ < b.coeffs_; }

    /// Quotient q with *this == q * divisor exactly over Z[t]; nullopt when
    /// the division is not exact (including nonzero remainder).
    std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;

    /// Derivative d/dt.
    IntPoly derivative() const;

    /// CLI/test text format: comma-separated coefficients, constant term
    /// first, e.g. "1,-2,1" for t^2 - 2t + 1. Zero prints as "0".
    std::string to_string() const;
    static IntPoly parse(const std::string& text);

    /// Human-oriented rendering like "t^2 - 2t + 1".
    std::string pretty() const;

private:
    std::vector<Int> coeffs_;
    void trim();
};

}  // namespace qcy

#endif
