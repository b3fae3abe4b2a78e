#include "qcy/mat4.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qcy/errors.hpp"

namespace qcy {

Mat4 zero4() {
    Mat4 m{};
    for (auto& r : m) r.fill(0);
    return m;
}

Mat4 identity4() {
    Mat4 m = zero4();
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
}

Mat4 add(const Mat4& a, const Mat4& b) {
    Mat4 c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c[i][j] = a[i][j] + b[i][j];
    return c;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
    Mat4 c = zero4();
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Mat4 transpose(const Mat4& a) {
    Mat4 c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c[i][j] = a[j][i];
    return c;
}

long long trace(const Mat4& a) { return a[0][0] + a[1][1] + a[2][2] + a[3][3]; }

bool is_permutation_matrix(const Mat4& p) {
    for (int i = 0; i < 4; ++i) {
        int row_ones = 0;
        for (int j = 0; j < 4; ++j) {
            if (p[i][j] != 0 && p[i][j] != 1) return false;
            row_ones += static_cast<int>(p[i][j]);
        }
        if (row_ones != 1) return false;
    }
    for (int j = 0; j < 4; ++j) {
        int col_ones = 0;
        for (int i = 0; i < 4; ++i) col_ones += static_cast<int>(p[i][j]);
        if (col_ones != 1) return false;
    }
    return true;
}

Perm4 perm_of_matrix(const Mat4& p) {
    if (!is_permutation_matrix(p)) throw std::invalid_argument("not a permutation matrix");
    Perm4 perm{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (p[i][j] == 1) perm[i] = j;
    return perm;
}

Mat4 matrix_of_perm(const Perm4& p) {
    Mat4 m = zero4();
    for (int i = 0; i < 4; ++i) m[i][p[i]] = 1;
    return m;
}

Perm4 identity_perm() { return {0, 1, 2, 3}; }

Perm4 compose(const Perm4& f, const Perm4& g) {
    Perm4 h{};
    for (int i = 0; i < 4; ++i) h[i] = f[g[i]];
    return h;
}

Perm4 inverse(const Perm4& p) {
    Perm4 q{};
    for (int i = 0; i < 4; ++i) q[p[i]] = i;
    return q;
}

std::vector<int> cycle_type(const Perm4& p) {
    std::vector<int> lens;
    std::array<bool, 4> seen{};
    for (int i = 0; i < 4; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

Mat4 relabel(const Mat4& m, const Perm4& pi) {
    Mat4 out;
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) out[k][l] = m[pi[k]][pi[l]];
    return out;
}

const std::vector<Perm4>& all_perms4() {
    static const std::vector<Perm4> perms = [] {
        std::vector<Perm4> v;
        Perm4 p = identity_perm();
        do v.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return v;
    }();
    return perms;
}

std::string matrix_to_string(const Mat4& m) {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        if (i) os << ';';
        for (int j = 0; j < 4; ++j) {
            if (j) os << ',';
            os << m[i][j];
        }
    }
    return os.str();
}

std::string matrix_to_string(const Mat4Z& m) {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        if (i) os << ';';
        for (int j = 0; j < 4; ++j) {
            if (j) os << ',';
            os << m[i][j];
        }
    }
    return os.str();
}

namespace {

long long parse_int_at(const std::string& text, size_t& pos) {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw parse_error("expected integer", start);
    try {
        return std::stoll(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
        throw parse_error("integer out of range", start);
    }
}

}  // namespace

Mat4 parse_matrix(const std::string& text) {
    Mat4 m = zero4();
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m[i][j] = parse_int_at(text, pos);
            if (j < 3) {
                if (pos >= text.size() || text[pos] != ',') throw parse_error("expected ','", pos);
                ++pos;
            }
        }
        if (i < 3) {
            if (pos >= text.size() || text[pos] != ';') throw parse_error("expected ';'", pos);
            ++pos;
        }
    }
    if (pos != text.size()) throw parse_error("trailing characters after matrix", pos);
    return m;
}

Mat4 parse_adjacency(const std::string& text) {
    Mat4 m = parse_matrix(text);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (m[i][j] < 0) throw parse_error("adjacency entries must be nonnegative", 0);
    return m;
}

std::string perm_to_cycles(const Perm4& p) {
    std::ostringstream os;
    os << "cycles:";
    std::array<bool, 4> seen{};
    bool any = false;
    for (int i = 0; i < 4; ++i) {
        if (seen[i] || p[i] == i) {
            seen[i] = true;
            continue;
        }
        os << '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ' ';
            first = false;
            os << (j + 1);
            j = p[j];
        }
        os << ')';
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

Mat4 parse_permutation(const std::string& text) {
    if (text.rfind("cycles:", 0) != 0) {
        Mat4 m = parse_matrix(text);
        if (!is_permutation_matrix(m)) throw parse_error("not a permutation matrix", 0);
        return m;
    }
    size_t pos = 7;
    Perm4 perm = identity_perm();
    std::array<bool, 4> used{};
    bool empty_marker = false;
    while (pos < text.size()) {
        if (text[pos] != '(') throw parse_error("expected '('", pos);
        ++pos;
        std::vector<int> cyc;
        while (pos < text.size() && text[pos] != ')') {
            if (text[pos] == ' ') {
                ++pos;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw parse_error("expected vertex number", pos);
            int v = text[pos] - '0';
            if (v < 1 || v > 4) throw parse_error("vertex out of range 1..4", pos);
            if (used[v - 1]) throw parse_error("repeated vertex in cycles", pos);
            used[v - 1] = true;
            cyc.push_back(v - 1);
            ++pos;
        }
        if (pos >= text.size()) throw parse_error("unterminated cycle", pos);
        ++pos;  // ')'
        if (cyc.empty()) {
            empty_marker = true;
            continue;
        }
        for (size_t k = 0; k < cyc.size(); ++k) perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    if (pos != text.size()) throw parse_error("trailing characters after cycles", pos);
    (void)empty_marker;
    return matrix_of_perm(perm);
}

}  // namespace qcy
