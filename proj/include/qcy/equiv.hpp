#ifndef QCY_EQUIV_HPP
#define QCY_EQUIV_HPP

#include <string>

#include "qcy/quiver.hpp"

namespace qcy {

/// T1 ~ T2 iff s matches and some vertex relabeling sigma (all 24 checked)
/// carries (M1, P1) to (M2, P2) simultaneously.
bool types_equivalent(const QuiverType& a, const QuiverType& b);

/// Lexicographically minimal byte encoding of (M, P) over all 24
/// relabelings, prefixed by s. Equal strings iff types_equivalent.
std::string canonical_type_key(const QuiverType& t);

/// Lexicographically minimal encoding of M alone over all 24 relabelings.
/// This is the identity used to compare classification output against the
/// published matrix lists, which identify candidates by adjacency matrix up
/// to relabeling (the class of the permutation is fixed per engine).
std::string canonical_matrix_key(const Mat4& m);

bool matrices_conjugate(const Mat4& a, const Mat4& b);

}  // namespace qcy

#endif
