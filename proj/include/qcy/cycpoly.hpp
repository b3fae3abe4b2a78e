#ifndef QCY_CYCPOLY_HPP
#define QCY_CYCPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcy/intpoly.hpp"

namespace qcy {

int euler_phi(int n);

/// n-th cyclotomic polynomial, monic of degree phi(n). Cached. n >= 1.
const IntPoly& cyclotomic(int n);

enum class Palindromy { Palindromic, Antipalindromic, Neither };

std::string to_string(Palindromy p);

/// Palindromic iff coeff(i) == coeff(d-i) for the formal degree d of the
/// canonical form; antipalindromic iff coeff(i) == -coeff(d-i). Rejects the
/// zero polynomial.
Palindromy palindromicity(const IntPoly& p);

/// Exact multiplicity of t = 1 as a root, by repeated exact division by
/// (t - 1). Rejects the zero polynomial.
int root1_multiplicity(const IntPoly& p);

/// A polynomial written as sign * prod Phi_d^{m_d}. Factor indices are kept
/// sorted ascending; multiplicities are positive.
struct CycFactorization {
    int sign = 1;
    std::vector<std::pair<int, int>> factors;

    IntPoly expand() const;
    int multiplicity(int d) const;
    int total_degree() const;
    std::string to_string() const;

    friend bool operator==(const CycFactorization& a, const CycFactorization& b) {
        return a.sign == b.sign && a.factors == b.factors;
    }
    friend bool operator<(const CycFactorization& a, const CycFactorization& b) {
        return a.factors != b.factors ? a.factors < b.factors : a.sign < b.sign;
    }
};

/// Factors p as +-prod Phi_d^{m_d} by repeated exact trial division, trying
/// every index d with phi(d) <= remaining degree (d <= 2*deg(p)^2 covers all
/// such d). Returns nullopt when p is not, up to sign, a product of
/// cyclotomic polynomials. Rejects the zero polynomial.
std::optional<CycFactorization> factor_into_cyclotomics(const IntPoly& p);

struct ProductConstraint {
    int total_degree = 0;
    std::optional<Int> t1_coeff;
    int min_root1_mult = 0;
    std::optional<Palindromy> palindromy;
};

/// Every multiset {d -> m_d} with sum m_d*phi(d) == total_degree whose
/// expanded product prod Phi_d^{m_d} satisfies the given constraints.
/// Output is sorted canonically and duplicate-free.
std::vector<CycFactorization> enumerate_cyclotomic_products(const ProductConstraint& c);

}  // namespace qcy

#endif
