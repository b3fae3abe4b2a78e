#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qcy/cyc24.hpp"

using namespace qcy;

namespace {

int multiplicative_order(const Cyc24& x) {
    Cyc24 acc = x;
    for (int k = 1; k <= 48; ++k) {
        if (acc == Cyc24::integer(1)) return k;
        acc *= x;
    }
    return -1;
}

}  // namespace

TEST_CASE("root orders") {
    CHECK(multiplicative_order(Cyc24::zeta_pow(1)) == 24);
    CHECK(multiplicative_order(Cyc24::omega()) == 3);   // zeta^8
    CHECK(multiplicative_order(Cyc24::i()) == 4);       // zeta^6
    CHECK(multiplicative_order(Cyc24::zeta_pow(3)) == 8);
    CHECK(Cyc24::zeta_pow(12) == Cyc24::integer(-1));
    CHECK(Cyc24::zeta_pow(24) == Cyc24::integer(1));
    CHECK(Cyc24::zeta_pow(-1) * Cyc24::zeta_pow(1) == Cyc24::integer(1));
}

TEST_CASE("ring arithmetic") {
    Cyc24 w = Cyc24::omega();
    CHECK(w * w * w == Cyc24::integer(1));
    CHECK(w * w + w + Cyc24::integer(1) == Cyc24());  // 1 + w + w^2 = 0
    Cyc24 i = Cyc24::i();
    CHECK(i * i == Cyc24::integer(-1));
    CHECK((Cyc24::integer(2) + i) * (Cyc24::integer(2) - i) == Cyc24::integer(5));
}

TEST_CASE("conjugation is a ring involution") {
    Cyc24 a = Cyc24::zeta_pow(5) + Cyc24::rational(Rat(1, 3)) * Cyc24::zeta_pow(2);
    Cyc24 b = Cyc24::zeta_pow(7) - Cyc24::integer(4);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(Cyc24::i().conj() == -Cyc24::i());
}

TEST_CASE("galois automorphisms") {
    Cyc24 z = Cyc24::zeta_pow(1);
    CHECK(z.galois(5) == Cyc24::zeta_pow(5));
    CHECK(z.galois(7).galois(7) == z.galois(49 % 24));
    CHECK_THROWS_AS(z.galois(2), std::invalid_argument);
}

TEST_CASE("inverses") {
    Cyc24 a = Cyc24::zeta_pow(3) + Cyc24::integer(2);
    CHECK(a * a.inverse() == Cyc24::integer(1));
    CHECK(Cyc24::i().inverse() == -Cyc24::i());
    CHECK_THROWS_AS(Cyc24().inverse(), std::invalid_argument);
}

TEST_CASE("rational detection") {
    CHECK(Cyc24::integer(-7).is_integer());
    CHECK(Cyc24::integer(-7).integer_value() == -7);
    CHECK(Cyc24::rational(Rat(1, 2)).is_rational());
    CHECK(!Cyc24::rational(Rat(1, 2)).is_integer());
    CHECK(!Cyc24::zeta_pow(6).is_rational());
    // zeta^8 reduction: zeta^4 - 1 has two basis coefficients
    Cyc24 w = Cyc24::omega();
    CHECK(w.c[0] == -1);
    CHECK(w.c[4] == 1);
}

TEST_CASE("string round trip") {
    Cyc24 a = Cyc24::zeta_pow(5) + Cyc24::rational(Rat(-2, 3));
    CHECK(a.to_string() == "-2/3 0/1 0/1 0/1 0/1 1/1 0/1 0/1");
}
