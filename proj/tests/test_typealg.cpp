#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "doctest.h"
#include "qcy/classify.hpp"
#include "qcy/cycpoly.hpp"
#include "qcy/quiver.hpp"

using namespace qcy;

namespace {

// Leibniz-formula determinant over the 24 permutations: an oracle
// independent of both production routes.
IntPoly det_leibniz(const PolyMatrix& pm) {
    IntPoly acc;
    Perm4 p = {0, 1, 2, 3};
    do {
        int sign = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) sign = -sign;
        IntPoly term = IntPoly::constant(sign);
        for (int i = 0; i < 4; ++i) term *= pm[i][p[i]];
        acc += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
}

Mat4 circulant(long long a, long long b, long long c, long long d) {
    Mat4 m = zero4();
    long long row[4] = {a, b, c, d};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) m[i][(i + k) % 4] = row[k];
    return m;
}

}  // namespace

TEST_CASE("matrix polynomial: zero adjacency") {
    QuiverType t{zero4(), class_reference_perm(PermClass::FourCycle), 3};
    PolyMatrix p = matrix_polynomial(t);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            IntPoly expected = IntPoly::constant(i == j ? 1 : 0) -
                               Int(t.P[i][j]) * IntPoly::monomial(1, 3);
            CHECK(p[i][j] == expected);
        }
}

TEST_CASE("matrix polynomial: substitution oracle on the circulant example") {
    QuiverType t{circulant(0, 0, 0, 3), class_reference_perm(PermClass::FourCycle), 3};
    PolyMatrix p = matrix_polynomial(t);
    // entry-by-entry oracle: I - Mt + PM^T t^2 - P t^3
    Mat4 pmt = mul(t.P, transpose(t.M));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::vector<Int> c{Int(i == j ? 1 : 0), Int(-t.M[i][j]), Int(pmt[i][j]),
                               Int(-t.P[i][j])};
            CHECK(p[i][j] == IntPoly(std::move(c)));
        }
    // frozen first row: 1, -t^3, 3t^2, -3t
    CHECK(p[0][0] == IntPoly::parse("1"));
    CHECK(p[0][1] == IntPoly::parse("0,0,0,-1"));
    CHECK(p[0][2] == IntPoly::parse("0,0,3"));
    CHECK(p[0][3] == IntPoly::parse("0,-3"));
}

TEST_CASE("matrix polynomial: transformed-type example has unit diagonal constant") {
    // output type of the first displayed Ore transform
    Mat4 m = parse_matrix("1,1,0,1;1,1,1,0;1,0,1,1;0,1,1,1");
    Mat4 p = parse_matrix("0,0,0,1;0,0,1,0;1,0,0,0;0,1,0,0");
    QuiverType t{m, p, 3};
    REQUIRE(commutes(t));
    PolyMatrix pm = matrix_polynomial(t);
    Mat4 pmt = mul(p, transpose(m));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::vector<Int> c{Int(i == j ? 1 : 0), Int(-m[i][j]), Int(pmt[i][j]), Int(-p[i][j])};
            CHECK(pm[i][j] == IntPoly(std::move(c)));
        }
}

TEST_CASE("determinants") {
    PolyMatrix diag{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) diag[i][j] = IntPoly();
    diag[0][0] = IntPoly::parse("1,-1");
    diag[1][1] = IntPoly::parse("1,-1");
    diag[2][2] = IntPoly::parse("1,1");
    diag[3][3] = IntPoly::parse("1,1");
    IntPoly expected = IntPoly::parse("1,-1") * IntPoly::parse("1,-1") * IntPoly::parse("1,1") *
                       IntPoly::parse("1,1");
    CHECK(det_poly(diag) == expected);
    CHECK(det_poly_bareiss(diag) == expected);
    CHECK(det_leibniz(diag) == expected);

    // I - P t^3 for the four-cycle: det = 1 - t^12
    QuiverType t{zero4(), class_reference_perm(PermClass::FourCycle), 3};
    IntPoly d = det_matrix_polynomial(t);
    std::vector<Int> c(13, Int(0));
    c[0] = 1;
    c[12] = -1;
    CHECK(d == IntPoly(std::move(c)));

    // circulant example: oracle + golden factorization
    QuiverType tc{circulant(0, 0, 0, 3), class_reference_perm(PermClass::FourCycle), 3};
    IntPoly dc = det_poly(matrix_polynomial(tc));
    CHECK(dc == det_leibniz(matrix_polynomial(tc)));
    CHECK(dc == det_poly_bareiss(matrix_polynomial(tc)));
    auto f = factor_into_cyclotomics(dc);
    REQUIRE(f);
    CHECK(f->sign == -1);
    CHECK(f->factors == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {4, 3}});
    CHECK(f->multiplicity(1) >= 3);
}

TEST_CASE("hilbert prefix") {
    // H_0 = I and H_1 = M for any type
    QuiverType t{circulant(1, 1, 0, 1), class_reference_perm(PermClass::FourCycle), 3};
    auto h = hilbert_prefix(t, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(h.terms[0][i][j] == (i == j ? 1 : 0));
            CHECK(h.terms[1][i][j] == t.M[i][j]);
        }

    // first matrix of the published s=3 negative-Hilbert list: first
    // negative entry frozen from the inversion oracle
    QuiverType neg{parse_matrix("1,1,1,0;1,1,0,1;0,1,1,0;1,0,0,1"),
                   class_reference_perm(PermClass::TwoTwo), 3};
    auto hn = hilbert_prefix(neg, 12);
    REQUIRE(hn.first_negative);
    CHECK(*hn.first_negative == std::make_tuple(5, 2, 3));

    // the twisted alternating-group type stays nonnegative
    QuiverType a4{parse_matrix("0,0,0,1;0,0,0,1;0,0,0,1;1,1,1,2"), identity4(), 3};
    CHECK(!hilbert_prefix(a4, 12).first_negative);
}

TEST_CASE("strong connectivity") {
    CHECK(!strongly_connected(parse_matrix("0,0,1,0;0,0,0,1;1,0,0,0;0,1,0,0")));
    CHECK(strongly_connected(circulant(0, 0, 0, 3)));
    CHECK(strongly_connected(parse_matrix("0,1,1,1;1,0,1,1;1,1,0,1;1,1,1,0")));
    CHECK(!strongly_connected(zero4()));
}

TEST_CASE("normality") {
    CHECK(is_normal(circulant(2, 1, 0, 0)));
    CHECK(is_normal(identity4()));
    Mat4 m = parse_matrix("0,0,2,0;0,0,0,2;1,1,0,0;1,1,0,0");
    // integer oracle: compare both products entrywise
    Mat4 mmt = mul(m, transpose(m)), mtm = mul(transpose(m), m);
    CHECK(mmt != mtm);
    CHECK(!is_normal(m));
}

TEST_CASE("type validation") {
    QuiverType bad{circulant(1, 0, 0, 0), circulant(1, 1, 0, 0), 3};
    CHECK_THROWS_AS(validate_type(bad), std::invalid_argument);
    QuiverType bad_s{circulant(1, 0, 0, 0), identity4(), 1};
    CHECK_THROWS_AS(validate_type(bad_s), std::invalid_argument);
    Mat4 negm = zero4();
    negm[0][0] = -1;
    CHECK_THROWS_AS(validate_type({negm, identity4(), 3}), std::invalid_argument);
}
