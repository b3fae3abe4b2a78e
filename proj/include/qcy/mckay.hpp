#ifndef QCY_MCKAY_HPP
#define QCY_MCKAY_HPP

#include <map>
#include <string>
#include <vector>

#include "qcy/groups.hpp"
#include "qcy/mat4.hpp"

namespace qcy {

/// Exact class function: one value per conjugacy class.
using ClassFn = std::vector<Cyc24>;

/// Trace of the given block on each class; asserts the trace is constant on
/// every class.
ClassFn character_of_block(const MatrixGroup& g, size_t block);

/// (1/|G|) sum_g chi(g) conj(psi(g)).
Cyc24 character_inner_product(const MatrixGroup& g, const ClassFn& chi, const ClassFn& psi);

struct McKayMatrix {
    std::vector<std::vector<Int>> entries;        // m x m, M[i][j] = mult of W_i in V (x) W_j
    std::vector<Int> completeness_defect;         // per column j: sum_i M[i][j] dim W_i - dim V dim W_j
    Mat4 as_mat4() const;                         // requires m == 4
};

/// M[i][j] = (1/|G|) sum_g chi_V(g) chi_j(g) conj(chi_i(g)). Every entry must
/// be a nonnegative rational integer (throws non_integer_entry otherwise).
/// A nonzero completeness defect is reported, not an error: it signals that
/// the supplied irreps do not close under tensoring with V.
McKayMatrix mckay_matrix(const MatrixGroup& g, const std::vector<ClassFn>& irrep_chars,
                         const std::vector<Int>& irrep_dims, const ClassFn& v_char,
                         const Int& v_dim);

/// Permutation i -> j with chi_j = chi_i * conj(hdet) as class functions.
/// hdet must be a degree-1 character; throws no_matching_character when some
/// target character is missing from the supplied list.
Mat4 winding_permutation(const std::vector<ClassFn>& irrep_chars, const ClassFn& hdet);

/// The homological determinant of a linear action on a polynomial ring is
/// the ordinary determinant.
Cyc24 hdet_of_linear_action(const CycMat& g);

/// Finitely supported element of the free algebra on {x, y}, homogeneous of
/// the given word length; carrier for superpotentials.
struct Superpotential {
    int length = 0;
    std::map<std::string, Cyc24> terms;

    friend bool operator==(const Superpotential& a, const Superpotential& b) {
        return a.length == b.length && a.terms == b.terms;
    }
};

/// Text format: one `<coefficient> <word>` line per term, e.g. "-1 yxxy".
/// Coefficients may be integers, i, -i, or eight comma-separated rationals.
Superpotential parse_superpotential(const std::string& text);
Superpotential load_superpotential_file(const std::string& path);

/// Applies the 2x2 matrix g letterwise (x -> g00 x + g01 y, y -> g10 x +
/// g11 y), extended multiplicatively over words, and returns the unique
/// scalar c with g(w) = c*w. Throws not_eigenvector otherwise.
Cyc24 hdet_of_superpotential_action(const Superpotential& w, const CycMat& g);

// ---- assembled construction step -------------------------------------------

struct McKayConstruction {
    MatrixGroup group;
    std::vector<ClassFn> irrep_chars;
    std::vector<Int> irrep_dims;
    McKayMatrix mckay;
    Mat4 M;      // the 4x4 McKay matrix
    Mat4 P;      // winding permutation of the vertices
    ClassFn hdet;
};

/// Runs the whole skew-group-ring quiver computation for a bundled action:
/// tuple closure over (irreps..., action), characters, McKay matrix on the
/// irrep block, hdet per the action's declared mode, winding permutation.
/// Verifies irreducibility and pairwise distinctness of the supplied irreps.
McKayConstruction mckay_construction(const GroupData& gd, const std::string& action_name);

}  // namespace qcy

#endif
