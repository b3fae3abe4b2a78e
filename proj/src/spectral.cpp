#include "qcy/spectral.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

#include "qcy/quiver.hpp"

namespace qcy {

namespace {

// ---- Sturm machinery over Q[t] -------------------------------------------

using RatPoly = std::vector<Rat>;  // constant term first, trimmed

void rtrim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& p) {
    RatPoly r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return r;
}

RatPoly rat_derivative(const RatPoly& p) {
    RatPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
    rtrim(d);
    return d;
}

RatPoly rat_rem(RatPoly num, const RatPoly& den) {
    while (num.size() >= den.size() && !num.empty()) {
        Rat q = num.back() / den.back();
        size_t shift = num.size() - den.size();
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
        rtrim(num);
    }
    return num;
}

Rat rat_eval(const RatPoly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

RatPoly rat_gcd(RatPoly a, RatPoly b) {
    while (!b.empty()) {
        RatPoly r = rat_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize monic for a stable quotient
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

RatPoly rat_div_exact(const RatPoly& num, const RatPoly& den) {
    RatPoly rem = num, quot(num.size() - den.size() + 1, Rat(0));
    while (rem.size() >= den.size() && !rem.empty()) {
        Rat q = rem.back() / den.back();
        size_t shift = rem.size() - den.size();
        quot[shift] = q;
        for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= q * den[i];
        rtrim(rem);
    }
    return quot;
}

/// Sturm chain of the squarefree part; with a squarefree head the chain has
/// well-defined sign variations even at multiple roots of the original.
std::vector<RatPoly> sturm_chain(const IntPoly& p) {
    std::vector<RatPoly> chain;
    RatPoly p0 = to_rat(p);
    rtrim(p0);
    if (p0.empty() || p0.size() == 1) return chain;
    RatPoly d0 = rat_derivative(p0);
    RatPoly g = rat_gcd(p0, d0);
    if (g.size() > 1) p0 = rat_div_exact(p0, g);
    chain.push_back(p0);
    RatPoly p1 = rat_derivative(p0);
    if (p1.empty()) return chain;
    chain.push_back(p1);
    while (true) {
        RatPoly r = rat_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// ---- structured closed-form bounds ----------------------------------------

bool abs_le(long long x, long long t) { return x <= t && -x <= t; }

// sqrt(disc) <= bound with disc >= 0 known, all integers
bool sqrt_le(long long disc, long long bound) {
    if (bound < 0) return false;
    return disc <= bound * bound;
}

/// Both eigenvalues of [[p,q],[r,s]] have modulus <= t (real 2x2 block).
bool block2_moduli_le(long long p, long long q, long long r, long long s, long long t) {
    long long disc = (p - s) * (p - s) + 4 * q * r;
    if (disc < 0) {
        // complex pair, |lambda|^2 = det
        return p * s - q * r <= t * t;
    }
    // lambda_pm = ((p+s) +- sqrt(disc)) / 2
    long long tr = p + s;
    return sqrt_le(disc, 2 * t - tr) && sqrt_le(disc, 2 * t + tr);
}

std::optional<bool> circulant_moduli_le(const Mat4& m, long long t) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (m[i][j] != m[(i + 1) % 4][(j + 1) % 4]) return std::nullopt;
    long long a = m[0][0], b = m[0][1], c = m[0][2], d = m[0][3];
    // eigenvalues a + b i^k + c (-1)^k + d (-i)^k
    if (!abs_le(a + b + c + d, t)) return false;
    if (!abs_le(a - b + c - d, t)) return false;
    long long mod2 = (a - c) * (a - c) + (b - d) * (b - d);
    return mod2 <= t * t;
}

std::optional<bool> three_cycle_moduli_le(const Mat4& m, long long t) {
    // rows (w,x,y,v),(y,w,x,v),(x,y,w,v),(u,u,u,r)
    long long w = m[0][0], x = m[0][1], y = m[0][2], v = m[0][3];
    long long u = m[3][0], r = m[3][3];
    Mat4 expect = {{{w, x, y, v}, {y, w, x, v}, {x, y, w, v}, {u, u, u, r}}};
    if (m != expect) return std::nullopt;
    // conjugate pair w + x*omega + y*omega^2 with |.|^2 = w^2+x^2+y^2-wx-xy-yw
    long long zmod2 = w * w + x * x + y * y - w * x - x * y - y * w;
    if (zmod2 > t * t) return false;
    // remaining 2x2 block on span{(1,1,1,0),(0,0,0,1)}: [[w+x+y, v],[3u, r]]
    return block2_moduli_le(w + x + y, v, 3 * u, r, t);
}

std::optional<bool> two_two_moduli_le(const Mat4& m, long long t) {
    // rows (a,b,c,d),(b,a,d,c),(e,f,g,h),(f,e,h,g)
    long long a = m[0][0], b = m[0][1], c = m[0][2], d = m[0][3];
    long long e = m[2][0], f = m[2][1], g = m[2][2], h = m[2][3];
    Mat4 expect = {{{a, b, c, d}, {b, a, d, c}, {e, f, g, h}, {f, e, h, g}}};
    if (m != expect) return std::nullopt;
    // symmetric/antisymmetric pair-basis blocks
    return block2_moduli_le(a + b, c + d, e + f, g + h, t) &&
           block2_moduli_le(a - b, c - d, e - f, g - h, t);
}

}  // namespace

int count_real_roots_above(const IntPoly& p, const Int& a) {
    if (p.is_zero()) throw std::invalid_argument("root counting needs a nonzero polynomial");
    auto chain = sturm_chain(p);
    if (chain.empty() || chain[0].size() <= 1) return 0;
    Rat ra(a);
    std::vector<int> at_a, at_inf;
    for (const auto& q : chain) {
        at_a.push_back(sign_of(rat_eval(q, ra)));
        at_inf.push_back(sign_of(q.back()));
    }
    return variations(at_a) - variations(at_inf);
}

bool spectral_radius_equals(const Mat4& m, long long target) {
    if (!is_normal(m))
        throw std::invalid_argument("spectral radius criterion applies to normal matrices only");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (m[i][j] < 0) throw std::invalid_argument("matrix must be nonnegative");
    if (target < 0) return false;

    IntPoly chi = char_poly(m);
    if (chi.eval(Int(target)) != 0) return false;

    if (auto r = circulant_moduli_le(m, target)) return *r;
    if (auto r = three_cycle_moduli_le(m, target)) return *r;
    if (auto r = two_two_moduli_le(m, target)) return *r;
    // Nonnegative matrix: rho is a real eigenvalue, so it suffices that no
    // real root of chi exceeds target.
    return count_real_roots_above(chi, Int(target)) == 0;
}

}  // namespace qcy
