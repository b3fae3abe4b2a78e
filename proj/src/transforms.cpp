#include "qcy/transforms.hpp"

#include <stdexcept>

namespace qcy {

QuiverType ore_type(const QuiverType& t, const Mat4& p_prime) {
    validate_type(t);
    if (t.s != 2) throw std::invalid_argument("the Ore transform consumes s = 2 types");
    if (!is_permutation_matrix(p_prime)) throw std::invalid_argument("P' must be a permutation");
    const Mat4 p_prime_inv = transpose(p_prime);
    return {add(t.M, p_prime_inv), mul(t.P, p_prime_inv), 3};
}

QuiverType twist_type(const QuiverType& t, const Mat4& n) {
    validate_type(t);
    if (!is_permutation_matrix(n)) throw std::invalid_argument("N must be a permutation");
    return {mul(n, t.M), mul(n, t.P), t.s};
}

}  // namespace qcy
