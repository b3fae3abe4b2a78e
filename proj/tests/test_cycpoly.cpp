#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <random>
#include <map>

#include "doctest.h"
#include "qcy/cycpoly.hpp"

using namespace qcy;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly::parse("-1,1"));
    CHECK(cyclotomic(2) == IntPoly::parse("1,1"));
    CHECK(cyclotomic(4) == IntPoly::parse("1,0,1"));
    CHECK(cyclotomic(12) == IntPoly::parse("1,0,-1,0,1"));
    CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
    // prod_{d | n} Phi_d = t^n - 1 for all n <= 60
    for (int n = 1; n <= 60; ++n) {
        IntPoly prod = IntPoly::constant(1);
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        std::vector<Int> tn(static_cast<size_t>(n) + 1, Int(0));
        tn[0] = -1;
        tn.back() = 1;
        CHECK(prod == IntPoly(std::move(tn)));
        CHECK(cyclotomic(n).leading() == 1);
        CHECK(cyclotomic(n).degree() == euler_phi(n));
    }
}

TEST_CASE("palindromicity") {
    CHECK(palindromicity(IntPoly::parse("1,-2,1")) == Palindromy::Palindromic);
    CHECK(palindromicity(IntPoly::parse("-1,1")) == Palindromy::Antipalindromic);
    CHECK(palindromicity(IntPoly::parse("0,1,1")) == Palindromy::Neither);
    CHECK(palindromicity(cyclotomic(1)) == Palindromy::Antipalindromic);
    for (int n = 2; n <= 30; ++n) CHECK(palindromicity(cyclotomic(n)) == Palindromy::Palindromic);
    CHECK_THROWS_AS(palindromicity(IntPoly()), std::invalid_argument);
}

TEST_CASE("root-at-1 multiplicity") {
    IntPoly p = cyclotomic(1) * cyclotomic(1) * cyclotomic(1) * cyclotomic(4);
    CHECK(root1_multiplicity(p) == 3);
    CHECK(root1_multiplicity(IntPoly::parse("1,0,1")) == 0);
    // (1-t)^4 (1+t+t^2)
    IntPoly q = IntPoly::parse("1,-1") * IntPoly::parse("1,-1") * IntPoly::parse("1,-1") *
                IntPoly::parse("1,-1") * IntPoly::parse("1,1,1");
    CHECK(root1_multiplicity(q) == 4);
    CHECK_THROWS_AS(root1_multiplicity(IntPoly()), std::invalid_argument);
}

TEST_CASE("factorization into cyclotomics") {
    // (t-1)^4 (t^2+1)^2
    IntPoly p = IntPoly::constant(1);
    for (int k = 0; k < 4; ++k) p *= cyclotomic(1);
    for (int k = 0; k < 2; ++k) p *= cyclotomic(4);
    auto f = factor_into_cyclotomics(p);
    REQUIRE(f);
    CHECK(f->sign == 1);
    CHECK(f->factors == std::vector<std::pair<int, int>>{{1, 4}, {4, 2}});
    CHECK(f->expand() == p);
    CHECK(f->to_string() == "Phi1^4*Phi4^2");

    // real root of modulus > 1
    CHECK(!factor_into_cyclotomics(IntPoly::parse("1,-3,1")));
    // sign handling
    auto g = factor_into_cyclotomics(-p);
    REQUIRE(g);
    CHECK(g->sign == -1);
    CHECK(g->factors == f->factors);
    // scaled polynomial rejected (residual constant != +-1)
    CHECK(!factor_into_cyclotomics(Int(2) * p));
    CHECK_THROWS_AS(factor_into_cyclotomics(IntPoly()), std::invalid_argument);
    // multiplicity consistency with repeated exact division
    CHECK(root1_multiplicity(p) == f->multiplicity(1));
}

namespace {

// Independent enumeration oracle: integer partitions of the degree into
// totient values first, then index assignments per value, filtered by
// expansion.
void oracle_assign(const std::vector<std::vector<int>>& index_pools, size_t pool,
                   std::map<int, int>& current, int remaining,
                   const ProductConstraint& c, std::vector<CycFactorization>& out) {
    if (pool == index_pools.size()) {
        if (remaining != 0) return;
        CycFactorization f;
        for (const auto& [d, m] : current)
            if (m > 0) f.factors.emplace_back(d, m);
        IntPoly prod = f.expand();
        if (c.t1_coeff && prod.coeff(1) != *c.t1_coeff) return;
        if (c.min_root1_mult > 0 && f.multiplicity(1) < c.min_root1_mult) return;
        if (c.palindromy && palindromicity(prod) != *c.palindromy) return;
        out.push_back(f);
        return;
    }
    // choose multiplicities for every index in this pool (all same phi)
    const auto& pool_indices = index_pools[pool];
    int phi = euler_phi(pool_indices[0]);
    std::function<void(size_t, int)> choose = [&](size_t at, int rem) {
        if (at == pool_indices.size()) {
            oracle_assign(index_pools, pool + 1, current, rem, c, out);
            return;
        }
        for (int m = 0; m * phi <= rem; ++m) {
            current[pool_indices[at]] = m;
            choose(at + 1, rem - m * phi);
        }
        current[pool_indices[at]] = 0;
    };
    choose(0, remaining);
}

std::vector<CycFactorization> oracle_enumerate(const ProductConstraint& c) {
    std::map<int, std::vector<int>> pools_by_phi;
    for (int d = 1; d <= 2 * c.total_degree * c.total_degree; ++d)
        if (euler_phi(d) <= c.total_degree) pools_by_phi[euler_phi(d)].push_back(d);
    std::vector<std::vector<int>> pools;
    for (auto& [phi, idx] : pools_by_phi) pools.push_back(idx);
    std::vector<CycFactorization> out;
    std::map<int, int> current;
    oracle_assign(pools, 0, current, c.total_degree, c, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("enumerate constrained products: stated examples") {
    auto deg1 = enumerate_cyclotomic_products({1, std::nullopt, 0, std::nullopt});
    REQUIRE(deg1.size() == 2);
    CHECK(deg1[0].factors == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(deg1[1].factors == std::vector<std::pair<int, int>>{{2, 1}});

    // degree 4 with t-coefficient -4: brute force confirms only Phi1^4
    ProductConstraint c4{4, Int(-4), 0, std::nullopt};
    auto only = enumerate_cyclotomic_products(c4);
    CHECK(only == oracle_enumerate(c4));
    REQUIRE(only.size() == 1);
    CHECK(only[0].factors == std::vector<std::pair<int, int>>{{1, 4}});

    // degree 12, t-coefficient 0, root order >= 3 at 1: oracle-frozen list
    ProductConstraint c12{12, Int(0), 3, std::nullopt};
    auto list = enumerate_cyclotomic_products(c12);
    CHECK(list == oracle_enumerate(c12));
    CHECK(!list.empty());
    CycFactorization member;
    member.factors = {{1, 3}, {2, 3}, {4, 3}};
    CHECK(std::find(list.begin(), list.end(), member) != list.end());
}

TEST_CASE("enumerate matches the oracle on all degrees <= 12") {
    for (int degree = 0; degree <= 12; ++degree) {
        ProductConstraint c{degree, std::nullopt, 0, std::nullopt};
        CHECK(enumerate_cyclotomic_products(c) == oracle_enumerate(c));
    }
    // a constrained spot check at higher degree
    ProductConstraint c{10, Int(-2), 2, Palindromy::Palindromic};
    CHECK(enumerate_cyclotomic_products(c) == oracle_enumerate(c));
}

TEST_CASE("palindromic product laws on cyclotomic products") {
    // palindromic * palindromic is palindromic; antipalindromic *
    // palindromic is antipalindromic (Phi1 is the antipalindromic factor)
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> idx(2, 16);
    for (int n = 0; n < 100; ++n) {
        IntPoly pal = cyclotomic(idx(rng)) * cyclotomic(idx(rng));
        CHECK(palindromicity(pal) == Palindromy::Palindromic);
        CHECK(palindromicity(pal * cyclotomic(1)) == Palindromy::Antipalindromic);
        CHECK(palindromicity(pal * cyclotomic(1) * cyclotomic(1)) == Palindromy::Palindromic);
    }
}
