#ifndef QCY_TRANSFORMS_HPP
#define QCY_TRANSFORMS_HPP

#include "qcy/quiver.hpp"

namespace qcy {

/// Type transform of an Ore extension by a graded automorphism whose vertex
/// permutation is P': (M, P, 2) -> (M + (P')^{-1}, P (P')^{-1}, 3).
QuiverType ore_type(const QuiverType& t, const Mat4& p_prime);

/// Type transform of a graded twist by a vertex permutation N:
/// (M, P, s) -> (N M, N P, s).
QuiverType twist_type(const QuiverType& t, const Mat4& n);

}  // namespace qcy

#endif
