#ifndef QCY_QUIVER_HPP
#define QCY_QUIVER_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "qcy/intpoly.hpp"
#include "qcy/mat4.hpp"

namespace qcy {

/// A type (M, P, s): adjacency matrix, vertex permutation of the Nakayama
/// automorphism (as a permutation matrix with P[i][mu(i)] = 1), and the
/// degree s of the defining relations' superpotential.
struct QuiverType {
    Mat4 M;
    Mat4 P;
    int s = 3;

    friend bool operator==(const QuiverType& a, const QuiverType& b) {
        return a.M == b.M && a.P == b.P && a.s == b.s;
    }
};

/// Structural validity: M nonnegative, P a permutation matrix, s >= 2.
/// Commutation MP == PM is checked separately (it is a property a claimed
/// type must satisfy, not an assumption of the constructors).
void validate_type(const QuiverType& t);
bool commutes(const QuiverType& t);

using PolyMatrix = std::array<std::array<IntPoly, 4>, 4>;

/// p(t) = I - M t + P M^T t^{s-1} - P t^s, entrywise. For s = 2 the t and
/// t^{s-1} contributions land on the same coefficient.
PolyMatrix matrix_polynomial(const QuiverType& t);

/// Exact determinant in Z[t] by cofactor expansion.
IntPoly det_poly(const PolyMatrix& pm);
/// Same determinant by fraction-free (Bareiss) elimination; used as the
/// second route of the dual-route check.
IntPoly det_poly_bareiss(const PolyMatrix& pm);

/// det p(t) of a type.
IntPoly det_matrix_polynomial(const QuiverType& t);

struct HilbertPrefix {
    std::vector<Mat4Z> terms;  // H_0 .. H_N
    std::optional<std::tuple<int, int, int>> first_negative;  // (degree, row, col)
};

/// Power-series inverse of p(t) through degree N: H_0 = I and
/// H_k = -sum_{j=1..min(k,s)} p_j H_{k-j}. Records the first negative entry
/// (smallest degree, then row-major) if one occurs.
HilbertPrefix hilbert_prefix(const QuiverType& t, int N);

/// True iff the digraph with an edge i->j whenever M[i][j] > 0 is strongly
/// connected on all 4 vertices.
bool strongly_connected(const Mat4& m);

/// M M^T == M^T M, exactly.
bool is_normal(const Mat4& m);

/// Characteristic polynomial det(tI - M), exact.
IntPoly char_poly(const Mat4& m);

}  // namespace qcy

#endif
