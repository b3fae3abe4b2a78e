#include "qcy/catalog.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

#include "qcy/equiv.hpp"
#include "qcy/errors.hpp"
#include "qcy/mckay.hpp"
#include "qcy/transforms.hpp"

namespace qcy {

std::string default_data_dir() {
    if (const char* env = std::getenv("QCY_GOLDEN_DIR")) return env;
#ifdef QCY_DEFAULT_DATA_DIR
    return QCY_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

namespace {

const GroupData& group(const std::string& data_dir, const std::string& file) {
    static std::map<std::string, GroupData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::string path = data_dir + "/groups/" + file;
    auto it = cache.find(path);
    if (it == cache.end()) it = cache.emplace(path, parse_group_file(path)).first;
    return it->second;
}

/// Skew group ring step: quiver and winding permutation of R # kG for the
/// named bundled action; s comes from the degree of R's relations.
QuiverType skew(const std::string& data_dir, const std::string& file, const std::string& action,
                int s) {
    auto mc = mckay_construction(group(data_dir, file), action);
    return {mc.M, mc.P, s};
}

Mat4 mat(std::initializer_list<std::initializer_list<long long>> rows) {
    Mat4 m = zero4();
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (long long v : r) m[i][j++] = v;
        ++i;
    }
    return m;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;
    auto add = [&](std::string name, PermClass cls, int s, Mat4 target,
                   std::function<QuiverType(const std::string&)> exec) {
        CatalogEntry e;
        e.name = std::move(name);
        e.perm_class = cls;
        e.s = s;
        e.target_M = target;
        e.execute = std::move(exec);
        cat.push_back(std::move(e));
    };

    // ---- four-cycle class, s = 3 ----
    add("four/C(0,0,0,3) skew c4 diag(i,i,i)", PermClass::FourCycle, 3,
        mat({{0, 0, 0, 3}, {3, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}}),
        [](const std::string& d) { return skew(d, "c4.group", "V_iii", 3); });
    add("four/C(0,1,2,0) skew c4 diag(-1,-1,-i)", PermClass::FourCycle, 3,
        mat({{0, 1, 2, 0}, {0, 0, 1, 2}, {2, 0, 0, 1}, {1, 2, 0, 0}}),
        [](const std::string& d) { return skew(d, "c4.group", "V_mmi", 3); });
    add("four/C(0,1,0,2) skew c4 diag(i,i,-i)", PermClass::FourCycle, 3,
        mat({{0, 1, 0, 2}, {2, 0, 1, 0}, {0, 2, 0, 1}, {1, 0, 2, 0}}),
        [](const std::string& d) { return skew(d, "c4.group", "V_iimi", 3); });
    add("four/C(1,1,1,0) skew c4 diag(1,-1,i)", PermClass::FourCycle, 3,
        mat({{1, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}),
        [](const std::string& d) { return skew(d, "c4.group", "V_1m1i", 3); });
    add("four/C(2,1,0,0) skew c4 diag(1,1,i)", PermClass::FourCycle, 3,
        mat({{2, 1, 0, 0}, {0, 2, 1, 0}, {0, 0, 2, 1}, {1, 0, 0, 2}}),
        [](const std::string& d) { return skew(d, "c4.group", "V_11i", 3); });
    add("four/C(1,1,1,0) Ore of k[x,y]#c4 by g->-g", PermClass::FourCycle, 3,
        mat({{1, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}),
        [](const std::string& d) {
            QuiverType base = skew(d, "c4.group", "V_1i", 2);
            // g -> -g shifts every character index by 2: vertices (1 3)(2 4)
            Mat4 p_prime = matrix_of_perm({2, 3, 0, 1});
            return ore_type(base, p_prime);
        });

    // ---- three-cycle class, s = 3 ----
    add("three/A4 matrix: twist of k[x,y,z]#a4", PermClass::ThreeCycle, 3,
        mat({{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 1, 2}}),
        [](const std::string& d) {
            QuiverType base = skew(d, "a4.group", "V3act", 3);
            Mat4 n = mat({{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
            return twist_type(base, n);
        });
    add("three/first matrix: twist of k[x,y,z]#klein", PermClass::ThreeCycle, 3,
        mat({{1, 0, 1, 1}, {1, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}}),
        [](const std::string& d) {
            QuiverType base = skew(d, "klein.group", "V_allones", 3);
            Mat4 n = mat({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}});
            return twist_type(base, n);
        });

    // ---- two two-cycles class, s = 3 ----
    add("two-two/#1 skew c4 diag(1,-i,-i)", PermClass::TwoTwo, 3,
        mat({{1, 0, 2, 0}, {0, 1, 0, 2}, {0, 2, 1, 0}, {2, 0, 0, 1}}),
        [](const std::string& d) { return skew(d, "c4.group", "V_1mimi", 3); });
    add("two-two/#2 skew c4 diag(-1,i,-i)", PermClass::TwoTwo, 3,
        mat({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}),
        [](const std::string& d) { return skew(d, "c4.group", "V_m1imi", 3); });
    add("two-two/#3 skew klein (diag(1,-1,1), diag(1,1,-1))", PermClass::TwoTwo, 3,
        mat({{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}}),
        [](const std::string& d) { return skew(d, "klein.group", "V_tt3", 3); });
    add("two-two/#4 skew klein (diag(-1,-1,1), diag(1,1,-1))", PermClass::TwoTwo, 3,
        mat({{0, 1, 2, 0}, {1, 0, 0, 2}, {2, 0, 0, 1}, {0, 2, 1, 0}}),
        [](const std::string& d) { return skew(d, "klein.group", "V_tt4", 3); });
    add("two-two/#3 twist of k[x,y,z]#klein by g->-g", PermClass::TwoTwo, 3,
        mat({{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}}),
        [](const std::string& d) {
            QuiverType base = skew(d, "klein.group", "V_allones", 3);
            Mat4 n = matrix_of_perm({1, 0, 3, 2});
            return twist_type(base, n);
        });
    add("two-two/#6 Ore of the diagonal-plus-swap block by s->-s", PermClass::TwoTwo, 3,
        mat({{1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 0, 2}, {0, 1, 2, 0}}),
        [](const std::string& d) {
            QuiverType base = skew(d, "diagswap.group", "V", 2);
            // s -> -s swaps W0 <-> W3 and W1 <-> W2
            Mat4 p_prime = matrix_of_perm({3, 2, 1, 0});
            return ore_type(base, p_prime);
        });

    // ---- two two-cycles class, s = 4 ----
    add("two-two/s4#1 skew quartic-superpotential algebra # c4, diag(1,i)", PermClass::TwoTwo, 4,
        mat({{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}}),
        [](const std::string& d) { return skew(d, "c4.group", "V_quartic1", 4); });
    add("two-two/s4#2 skew quartic-superpotential algebra # c4, x->y y->-x", PermClass::TwoTwo, 4,
        mat({{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}}),
        [](const std::string& d) { return skew(d, "c4.group", "V_quartic2", 4); });

    // ---- linked equivalence: starred two-two s=3 <-> starred four-cycle ----
    {
        CatalogEntry e;
        e.name = "link/two-two starred <-> four-cycle starred (twist + relabel)";
        e.perm_class = PermClass::TwoTwo;
        e.s = 3;
        e.target_M = mat({{1, 1, 1, 0}, {1, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
        e.linked_equivalence = true;
        e.linked_partner = QuiverType{e.target_M, class_reference_perm(PermClass::TwoTwo), 3};
        e.execute = [](const std::string&) {
            Mat4 j_minus_i = mat({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
            Mat4 p4 = class_reference_perm(PermClass::FourCycle);
            return twist_type({j_minus_i, p4, 3}, p4);
        };
        cat.push_back(std::move(e));
    }

    return cat;
}

std::vector<int> class_pattern(PermClass c) {
    switch (c) {
        case PermClass::FourCycle: return {4};
        case PermClass::ThreeCycle: return {3, 1};
        default: return {2, 2};
    }
}

}  // namespace

const std::vector<CatalogEntry>& realization_catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

std::vector<CatalogCheck> execute_catalog(const std::string& data_dir, bool throw_on_mismatch) {
    std::vector<CatalogCheck> out;
    for (const auto& entry : realization_catalog()) {
        CatalogCheck check;
        check.name = entry.name;
        QuiverType t = entry.execute(data_dir);
        std::ostringstream detail;
        detail << "computed M=" << matrix_to_string(t.M)
               << " P=" << perm_to_cycles(perm_of_matrix(t.P)) << " s=" << t.s;
        bool ok = commutes(t);
        if (!ok) detail << " [does not commute]";
        if (entry.linked_equivalence) {
            ok = ok && types_equivalent(t, *entry.linked_partner);
            if (!ok) detail << " [not equivalent to linked partner]";
        } else {
            if (t.s != entry.s) {
                ok = false;
                detail << " [wrong s]";
            }
            if (canonical_matrix_key(t.M) != canonical_matrix_key(entry.target_M)) {
                ok = false;
                detail << " [adjacency orbit differs from catalogued "
                       << matrix_to_string(entry.target_M) << "]";
            }
            if (cycle_type(perm_of_matrix(t.P)) != class_pattern(entry.perm_class)) {
                ok = false;
                detail << " [permutation class differs]";
            }
        }
        check.ok = ok;
        check.detail = detail.str();
        if (!ok && throw_on_mismatch) throw catalog_mismatch(check.name + ": " + check.detail);
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace qcy
