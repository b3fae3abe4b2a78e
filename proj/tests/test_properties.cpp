#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "property_suites.hpp"

using namespace qcy_tests;

TEST_CASE("functional equation t^s p(1/t) = -P p(t)^T") {
    CHECK(suite_functional_equation(120) == 0);
}

TEST_CASE("palindromy dichotomy by det(P)") {
    CHECK(suite_palindromy_dichotomy(120) == 0);
}

TEST_CASE("t-coefficient of det p equals -trace(M)") {
    CHECK(suite_t_coefficient(120) == 0);
}

TEST_CASE("three-cycle value and second-derivative identities") {
    CHECK(suite_three_cycle_identities(120) == 0);
}

TEST_CASE("two-two t^2-coefficient identity") {
    CHECK(suite_two_two_coefficients(120) == 0);
}

TEST_CASE("Hilbert recursion p H = I with H_1 = M") {
    CHECK(suite_hilbert_recursion(100) == 0);
}

TEST_CASE("circulant determinant factors over the cyclotomic field") {
    CHECK(suite_circulant_field_factorization(100) == 0);
}

TEST_CASE("cyclotomic factor/expand round trip") {
    CHECK(suite_factor_roundtrip(100) == 0);
}

TEST_CASE("determinant dual route: cofactor vs fraction-free") {
    CHECK(suite_det_dual_route(200) == 0);
}
