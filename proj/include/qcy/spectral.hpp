#ifndef QCY_SPECTRAL_HPP
#define QCY_SPECTRAL_HPP

#include "qcy/intpoly.hpp"
#include "qcy/mat4.hpp"

namespace qcy {

/// Decides rho(M) == target exactly for a normal nonnegative integer matrix:
/// (a) target must be a root of the integer characteristic polynomial, and
/// (b) no eigenvalue may have modulus exceeding target. For the structured
/// shapes arising here (circulants, the three-cycle bordered form, the
/// two-two paired form) (b) uses exact closed-form eigenvalue arithmetic;
/// otherwise it falls back to exact Sturm real-root counting on the
/// characteristic polynomial, which is decisive because the spectral radius
/// of a nonnegative matrix is itself a real eigenvalue.
/// Throws std::invalid_argument on non-normal or negative input.
bool spectral_radius_equals(const Mat4& m, long long target);

/// Number of distinct real roots of p in the open interval (a, +infinity),
/// by Sturm's theorem over exact rationals.
int count_real_roots_above(const IntPoly& p, const Int& a);

}  // namespace qcy

#endif
