#include "qcy/equiv.hpp"

#include <sstream>

namespace qcy {

namespace {

std::string encode_pair(const Mat4& m, const Mat4& p) {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) os << m[i][j] << ',';
    os << '|';
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) os << p[i][j];
    return os.str();
}

std::string encode_mat(const Mat4& m) {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) os << m[i][j] << ',';
    return os.str();
}

}  // namespace

bool types_equivalent(const QuiverType& a, const QuiverType& b) {
    if (a.s != b.s) return false;
    for (const auto& pi : all_perms4())
        if (relabel(a.M, pi) == b.M && relabel(a.P, pi) == b.P) return true;
    return false;
}

std::string canonical_type_key(const QuiverType& t) {
    std::string best;
    for (const auto& pi : all_perms4()) {
        std::string enc = encode_pair(relabel(t.M, pi), relabel(t.P, pi));
        if (best.empty() || enc < best) best = enc;
    }
    return "s" + std::to_string(t.s) + ":" + best;
}

std::string canonical_matrix_key(const Mat4& m) {
    std::string best;
    for (const auto& pi : all_perms4()) {
        std::string enc = encode_mat(relabel(m, pi));
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

bool matrices_conjugate(const Mat4& a, const Mat4& b) {
    for (const auto& pi : all_perms4())
        if (relabel(a, pi) == b) return true;
    return false;
}

}  // namespace qcy
