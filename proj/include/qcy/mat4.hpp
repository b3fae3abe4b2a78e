#ifndef QCY_MAT4_HPP
#define QCY_MAT4_HPP

#include <array>
#include <string>
#include <vector>

#include "qcy/numbers.hpp"

namespace qcy {

// 4x4 integer matrices and vertex permutations. Adjacency and permutation
// matrices are small, so plain int64 entries suffice; Hilbert terms use
// Mat4Z because their entries grow with the expansion depth.
using Mat4 = std::array<std::array<long long, 4>, 4>;
using Mat4Z = std::array<std::array<Int, 4>, 4>;

/// perm[i] = image of vertex i (0-indexed).
using Perm4 = std::array<int, 4>;

Mat4 zero4();
Mat4 identity4();
Mat4 add(const Mat4& a, const Mat4& b);
Mat4 mul(const Mat4& a, const Mat4& b);
Mat4 transpose(const Mat4& a);
long long trace(const Mat4& a);

bool is_permutation_matrix(const Mat4& p);
Perm4 perm_of_matrix(const Mat4& p);
/// P[i][perm[i]] = 1.
Mat4 matrix_of_perm(const Perm4& p);
Perm4 identity_perm();
Perm4 compose(const Perm4& f, const Perm4& g);  // (f o g)(i) = f(g(i))
Perm4 inverse(const Perm4& p);
/// Cycle lengths sorted descending, fixed points included, e.g. {4}, {3,1},
/// {2,2}, {2,1,1}, {1,1,1,1}.
std::vector<int> cycle_type(const Perm4& p);

/// Simultaneous relabeling: out[k][l] = m[pi[k]][pi[l]].
Mat4 relabel(const Mat4& m, const Perm4& pi);
const std::vector<Perm4>& all_perms4();

// Text formats (bit-exact round trip):
//   matrix       rows separated by ';', entries by ',' : "0,0,0,3;3,0,0,0;..."
//   permutation  "cycles:(1 2 3 4)", "cycles:(1 2)(3 4)", "cycles:()" or an
//                explicit permutation matrix in the matrix format
std::string matrix_to_string(const Mat4& m);
Mat4 parse_matrix(const std::string& text);
/// parse_matrix + rejects negative entries.
Mat4 parse_adjacency(const std::string& text);
std::string perm_to_cycles(const Perm4& p);
Mat4 parse_permutation(const std::string& text);

std::string matrix_to_string(const Mat4Z& m);

}  // namespace qcy

#endif
