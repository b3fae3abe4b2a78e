#ifndef QCY_GROUPS_HPP
#define QCY_GROUPS_HPP

#include <map>
#include <string>
#include <vector>

#include "qcy/cyc24.hpp"

namespace qcy {

/// Small dense matrix over the 24th cyclotomic field.
struct CycMat {
    int n = 0;
    std::vector<Cyc24> a;  // row-major

    CycMat() = default;
    explicit CycMat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim) {}
    static CycMat identity(int dim);

    Cyc24& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    const Cyc24& at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

    friend CycMat operator*(const CycMat& x, const CycMat& y);
    Cyc24 trace() const;
    Cyc24 det() const;  // Laplace expansion; matrices here are tiny

    friend bool operator==(const CycMat& x, const CycMat& y) { return x.n == y.n && x.a == y.a; }
    friend bool operator<(const CycMat& x, const CycMat& y) {
        return x.n != y.n ? x.n < y.n : x.a < y.a;
    }
};

/// Group element represented by its images in every bundled representation
/// (the direct sum is faithful for each bundled group, so exact tuple
/// equality is exact group equality).
struct GroupElement {
    std::vector<CycMat> blocks;
    friend bool operator==(const GroupElement& x, const GroupElement& y) {
        return x.blocks == y.blocks;
    }
    friend bool operator<(const GroupElement& x, const GroupElement& y) {
        return x.blocks < y.blocks;
    }
};

GroupElement element_mul(const GroupElement& x, const GroupElement& y);

/// A finite matrix group: full element list from breadth-first product
/// closure, plus inverses and conjugacy classes.
struct MatrixGroup {
    std::vector<GroupElement> elements;  // [0] = identity
    std::vector<int> inverse_of;
    std::vector<int> class_index;
    std::vector<std::vector<int>> classes;
    size_t order() const { return elements.size(); }
};

/// Breadth-first closure under products. Throws closure_cap_exceeded when
/// more than `cap` elements are generated.
MatrixGroup group_closure(const std::vector<GroupElement>& generators, size_t cap = 10000);
/// Single-representation convenience overload.
MatrixGroup group_closure(const std::vector<CycMat>& generators, size_t cap = 10000);

// ---- bundled group data files ----------------------------------------------
//
//   group <name>
//   generators <g1> <g2> ...
//   irrep <name> dim <d>            (vertex order = listing order)
//   gen <gi>
//   row <scalar> | <scalar> | ...   (d rows of d scalars; a scalar is eight
//                                    whitespace-separated rationals p/q in
//                                    the zeta-power basis)
//   action <name> dim <d> hdet (det | superpotential <file> | trivial)
//   ...same matrix block layout...

struct RepData {
    std::string name;
    int dim = 0;
    bool irrep = false;
    std::vector<CycMat> images;  // one per generator, in declaration order
    enum class HdetMode { None, Det, Superpotential, Trivial };
    HdetMode hdet_mode = HdetMode::None;
    std::string superpotential_file;
};

struct GroupData {
    std::string name;
    std::string dir;  // directory of the file, for resolving references
    std::vector<std::string> generators;
    std::vector<RepData> irreps;
    std::vector<RepData> actions;

    const RepData& action(const std::string& action_name) const;
};

GroupData parse_group_file(const std::string& path);

}  // namespace qcy

#endif
