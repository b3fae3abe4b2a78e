#ifndef QCY_CYC24_HPP
#define QCY_CYC24_HPP

#include <array>
#include <string>

#include "qcy/numbers.hpp"

namespace qcy {

/// Exact element of the degree-8 cyclotomic field Q(zeta) for a fixed
/// primitive 24th root of unity zeta, stored as rational coefficients of
/// zeta^0..zeta^7 and reduced modulo zeta^8 = zeta^4 - 1. Contains every
/// scalar used by the bundled constructions: i = zeta^6, a primitive cube
/// root zeta^8, a primitive 8th root zeta^3.
class Cyc24 {
public:
    std::array<Rat, 8> c{};

    Cyc24() = default;
    static Cyc24 integer(long long v);
    static Cyc24 rational(const Rat& v);
    static Cyc24 zeta_pow(long long k);  // zeta^k for any integer k
    static Cyc24 i() { return zeta_pow(6); }
    static Cyc24 omega() { return zeta_pow(8); }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws when not rational
    bool is_integer() const;
    Int integer_value() const;  // throws when not a rational integer

    friend Cyc24 operator+(const Cyc24& a, const Cyc24& b);
    friend Cyc24 operator-(const Cyc24& a, const Cyc24& b);
    friend Cyc24 operator*(const Cyc24& a, const Cyc24& b);
    Cyc24 operator-() const;
    Cyc24& operator+=(const Cyc24& r) { return *this = *this + r; }
    Cyc24& operator*=(const Cyc24& r) { return *this = *this * r; }

    /// Galois automorphism zeta -> zeta^k, gcd(k, 24) = 1.
    Cyc24 galois(int k) const;
    /// Complex conjugation zeta -> zeta^{-1}.
    Cyc24 conj() const { return galois(23); }
    /// Multiplicative inverse via the Galois norm; throws on zero.
    Cyc24 inverse() const;

    friend bool operator==(const Cyc24& a, const Cyc24& b) { return a.c == b.c; }
    friend bool operator!=(const Cyc24& a, const Cyc24& b) { return !(a == b); }
    friend bool operator<(const Cyc24& a, const Cyc24& b) { return a.c < b.c; }

    std::string to_string() const;
};

}  // namespace qcy

#endif
