#include "qcy/quiver.hpp"

#include <stdexcept>

namespace qcy {

void validate_type(const QuiverType& t) {
    if (t.s < 2) throw std::invalid_argument("type requires s >= 2");
    if (!is_permutation_matrix(t.P)) throw std::invalid_argument("P is not a permutation matrix");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (t.M[i][j] < 0) throw std::invalid_argument("adjacency entries must be nonnegative");
}

bool commutes(const QuiverType& t) { return mul(t.M, t.P) == mul(t.P, t.M); }

PolyMatrix matrix_polynomial(const QuiverType& t) {
    validate_type(t);
    const Mat4 pmt = mul(t.P, transpose(t.M));
    PolyMatrix out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            std::vector<Int> c(static_cast<size_t>(t.s) + 1, Int(0));
            if (i == j) c[0] += 1;
            c[1] -= t.M[i][j];
            c[static_cast<size_t>(t.s) - 1] += pmt[i][j];
            c[static_cast<size_t>(t.s)] -= t.P[i][j];
            out[i][j] = IntPoly(std::move(c));
        }
    }
    return out;
}

namespace {

IntPoly det_minor(const PolyMatrix& pm, const std::vector<int>& rows, const std::vector<int>& cols) {
    const size_t n = rows.size();
    if (n == 1) return pm[rows[0]][cols[0]];
    IntPoly acc;
    for (size_t k = 0; k < n; ++k) {
        const IntPoly& e = pm[rows[0]][cols[k]];
        if (e.is_zero()) continue;
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols;
        for (size_t j = 0; j < n; ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        IntPoly term = e * det_minor(pm, sub_rows, sub_cols);
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace

IntPoly det_poly(const PolyMatrix& pm) {
    return det_minor(pm, {0, 1, 2, 3}, {0, 1, 2, 3});
}

IntPoly det_poly_bareiss(const PolyMatrix& pm) {
    // Fraction-free Gaussian elimination; every division is exact in Z[t].
    std::array<std::array<IntPoly, 4>, 4> a = pm;
    IntPoly prev = IntPoly::constant(1);
    int sign = 1;
    for (int k = 0; k < 3; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < 4; ++i)
                if (!a[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return IntPoly();  // singular
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < 4; ++i) {
            for (int j = k + 1; j < 4; ++j) {
                IntPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = num.divide_exact(prev);
                if (!q) throw std::logic_error("Bareiss division not exact");
                a[i][j] = std::move(*q);
            }
            a[i][k] = IntPoly();
        }
        prev = a[k][k];
    }
    IntPoly det = a[3][3];
    return sign < 0 ? -det : det;
}

IntPoly det_matrix_polynomial(const QuiverType& t) { return det_poly(matrix_polynomial(t)); }

HilbertPrefix hilbert_prefix(const QuiverType& t, int N) {
    validate_type(t);
    // coefficient matrices p_j of p(t), j = 0..s (p_0 = I by construction)
    std::vector<Mat4Z> pj(static_cast<size_t>(t.s) + 1);
    {
        const Mat4 pmt = mul(t.P, transpose(t.M));
        for (auto& m : pj)
            for (auto& r : m) r.fill(Int(0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (i == j) pj[0][i][j] += 1;
                pj[1][i][j] -= t.M[i][j];
                pj[static_cast<size_t>(t.s) - 1][i][j] += pmt[i][j];
                pj[static_cast<size_t>(t.s)][i][j] -= t.P[i][j];
            }
    }
    HilbertPrefix out;
    out.terms.reserve(static_cast<size_t>(N) + 1);
    Mat4Z h0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h0[i][j] = (i == j) ? 1 : 0;
    out.terms.push_back(h0);
    for (int k = 1; k <= N; ++k) {
        Mat4Z hk;
        for (auto& r : hk) r.fill(Int(0));
        for (int j = 1; j <= std::min(k, t.s); ++j) {
            const Mat4Z& prev = out.terms[static_cast<size_t>(k - j)];
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    if (pj[static_cast<size_t>(j)][r][c] == 0) continue;
                    for (int m = 0; m < 4; ++m) hk[r][m] -= pj[static_cast<size_t>(j)][r][c] * prev[c][m];
                }
        }
        if (!out.first_negative) {
            for (int r = 0; r < 4 && !out.first_negative; ++r)
                for (int c = 0; c < 4; ++c)
                    if (hk[r][c] < 0) {
                        out.first_negative = std::make_tuple(k, r, c);
                        break;
                    }
        }
        out.terms.push_back(std::move(hk));
    }
    return out;
}

bool strongly_connected(const Mat4& m) {
    std::array<std::array<bool, 4>, 4> reach{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) reach[i][j] = m[i][j] > 0;
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && !reach[i][j]) return false;
    return true;
}

bool is_normal(const Mat4& m) {
    const Mat4 mt = transpose(m);
    return mul(m, mt) == mul(mt, m);
}

IntPoly char_poly(const Mat4& m) {
    PolyMatrix pm;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::vector<Int> c{Int(-m[i][j])};
            if (i == j) c.push_back(1);
            pm[i][j] = IntPoly(std::move(c));
        }
    return det_poly(pm);
}

}  // namespace qcy
