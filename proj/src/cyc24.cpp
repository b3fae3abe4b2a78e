#include "qcy/cyc24.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcy {

Cyc24 Cyc24::integer(long long v) {
    Cyc24 x;
    x.c[0] = v;
    return x;
}

Cyc24 Cyc24::rational(const Rat& v) {
    Cyc24 x;
    x.c[0] = v;
    return x;
}

Cyc24 Cyc24::zeta_pow(long long k) {
    k %= 24;
    if (k < 0) k += 24;
    // zeta^12 = -1; above that reduce by sign, below 12 reduce zeta^8..11
    // via zeta^8 = zeta^4 - 1.
    Cyc24 x;
    bool neg = false;
    if (k >= 12) {
        k -= 12;
        neg = true;
    }
    if (k < 8) {
        x.c[static_cast<size_t>(k)] = 1;
    } else {  // 8 <= k <= 11: zeta^k = zeta^{k-4} - zeta^{k-8}
        x.c[static_cast<size_t>(k - 4)] = 1;
        x.c[static_cast<size_t>(k - 8)] = -1;
    }
    if (neg)
        for (auto& v : x.c) v = -v;
    return x;
}

bool Cyc24::is_zero() const {
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

bool Cyc24::is_rational() const {
    for (size_t k = 1; k < 8; ++k)
        if (c[k] != 0) return false;
    return true;
}

Rat Cyc24::rational_value() const {
    if (!is_rational()) throw std::invalid_argument("value is not rational");
    return c[0];
}

bool Cyc24::is_integer() const {
    return is_rational() && boost::multiprecision::denominator(c[0]) == 1;
}

Int Cyc24::integer_value() const {
    if (!is_integer()) throw std::invalid_argument("value is not a rational integer");
    return boost::multiprecision::numerator(c[0]);
}

Cyc24 operator+(const Cyc24& a, const Cyc24& b) {
    Cyc24 r;
    for (size_t k = 0; k < 8; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

Cyc24 operator-(const Cyc24& a, const Cyc24& b) {
    Cyc24 r;
    for (size_t k = 0; k < 8; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

Cyc24 Cyc24::operator-() const {
    Cyc24 r;
    for (size_t k = 0; k < 8; ++k) r.c[k] = -c[k];
    return r;
}

Cyc24 operator*(const Cyc24& a, const Cyc24& b) {
    std::array<Rat, 15> prod{};
    for (size_t i = 0; i < 8; ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < 8; ++j) {
            if (b.c[j] == 0) continue;
            prod[i + j] += a.c[i] * b.c[j];
        }
    }
    // reduce degrees 14..8 via t^8 = t^4 - 1
    for (size_t k = 14; k >= 8; --k) {
        if (prod[k] == 0) continue;
        prod[k - 4] += prod[k];
        prod[k - 8] -= prod[k];
        prod[k] = 0;
    }
    Cyc24 r;
    for (size_t k = 0; k < 8; ++k) r.c[k] = prod[k];
    return r;
}

Cyc24 Cyc24::galois(int k) const {
    if (std::gcd(k, 24) != 1) throw std::invalid_argument("galois exponent must be a unit mod 24");
    Cyc24 r;
    for (size_t j = 0; j < 8; ++j) {
        if (c[j] == 0) continue;
        Cyc24 term = zeta_pow(static_cast<long long>(j) * k);
        for (size_t m = 0; m < 8; ++m) r.c[m] += c[j] * term.c[m];
    }
    return r;
}

Cyc24 Cyc24::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    static const int units[8] = {1, 5, 7, 11, 13, 17, 19, 23};
    Cyc24 prod = Cyc24::integer(1);
    for (int k = 1; k < 8; ++k) prod *= galois(units[k]);
    Cyc24 norm = *this * prod;  // the Galois norm, a nonzero rational
    if (!norm.is_rational()) throw std::logic_error("norm computation not rational");
    Rat n = norm.rational_value();
    Cyc24 r;
    for (size_t k = 0; k < 8; ++k) r.c[k] = prod.c[k] / n;
    return r;
}

std::string Cyc24::to_string() const {
    std::ostringstream os;
    for (size_t k = 0; k < 8; ++k) {
        if (k) os << ' ';
        os << boost::multiprecision::numerator(c[k]) << '/'
           << boost::multiprecision::denominator(c[k]);
    }
    return os.str();
}

}  // namespace qcy
