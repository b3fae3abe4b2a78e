#ifndef QCY_CATALOG_HPP
#define QCY_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcy/classify.hpp"
#include "qcy/quiver.hpp"

namespace qcy {

/// One catalogued construction: a recipe (skew group ring via a McKay
/// computation, an Ore extension, a graded twist, or a composite) together
/// with the classified candidate it realizes. Linked entries record an
/// if-and-only-if equivalence between two candidates rather than a
/// construction.
struct CatalogEntry {
    std::string name;
    PermClass perm_class;
    int s = 3;
    Mat4 target_M;
    bool linked_equivalence = false;
    std::function<QuiverType(const std::string& data_dir)> execute;
    /// For linked entries: the partner type the executed type must be
    /// equivalent to as a pair.
    std::optional<QuiverType> linked_partner;
};

const std::vector<CatalogEntry>& realization_catalog();

struct CatalogCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Executes every recipe and verifies it lands, up to relabeling of the
/// adjacency matrix and within the right permutation class, on its
/// catalogued candidate. With throw_on_mismatch, raises catalog_mismatch at
/// the first failure.
std::vector<CatalogCheck> execute_catalog(const std::string& data_dir, bool throw_on_mismatch);

/// Directory containing the bundled group/superpotential/golden data;
/// honors QCY_GOLDEN_DIR, falling back to the build-time default.
std::string default_data_dir();

}  // namespace qcy

#endif
