#include "qcy/cycpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qcy {

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi requires n >= 1");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const IntPoly& cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    static std::map<int, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up so the
    // recursion never re-enters the lock.
    for (int k = 1; k <= n; ++k) {
        if (n % k != 0 || cache.count(k)) continue;
        std::vector<Int> tn(static_cast<size_t>(k) + 1, Int(0));
        tn[0] = -1;
        tn.back() = 1;
        IntPoly num{std::move(tn)};
        for (int d = 1; d < k; ++d) {
            if (k % d != 0) continue;
            auto q = num.divide_exact(cache.at(d));
            if (!q) throw std::logic_error("cyclotomic division not exact");
            num = std::move(*q);
        }
        cache.emplace(k, std::move(num));
    }
    return cache.at(n);
}

std::string to_string(Palindromy p) {
    switch (p) {
        case Palindromy::Palindromic: return "palindromic";
        case Palindromy::Antipalindromic: return "antipalindromic";
        default: return "neither";
    }
}

Palindromy palindromicity(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("palindromicity of zero polynomial");
    const int d = p.degree();
    bool pal = true, anti = true;
    for (int i = 0; i <= d; ++i) {
        if (p.coeff(i) != p.coeff(d - i)) pal = false;
        if (p.coeff(i) != -p.coeff(d - i)) anti = false;
    }
    if (pal) return Palindromy::Palindromic;
    if (anti) return Palindromy::Antipalindromic;
    return Palindromy::Neither;
}

int root1_multiplicity(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root1_multiplicity of zero polynomial");
    IntPoly rem = p;
    int mult = 0;
    while (true) {
        auto q = rem.divide_exact(cyclotomic(1));
        if (!q) return mult;
        rem = std::move(*q);
        ++mult;
    }
}

IntPoly CycFactorization::expand() const {
    IntPoly p = IntPoly::constant(sign);
    for (const auto& [d, m] : factors)
        for (int k = 0; k < m; ++k) p *= cyclotomic(d);
    return p;
}

int CycFactorization::multiplicity(int d) const {
    for (const auto& [idx, m] : factors)
        if (idx == d) return m;
    return 0;
}

int CycFactorization::total_degree() const {
    int deg = 0;
    for (const auto& [d, m] : factors) deg += m * euler_phi(d);
    return deg;
}

std::string CycFactorization::to_string() const {
    std::ostringstream os;
    if (sign < 0) os << "-";
    if (factors.empty()) {
        os << "1";
        return os.str();
    }
    bool first = true;
    for (const auto& [d, m] : factors) {
        if (!first) os << "*";
        first = false;
        os << "Phi" << d;
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

std::optional<CycFactorization> factor_into_cyclotomics(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot factor zero polynomial");
    CycFactorization result;
    IntPoly rem = p;
    const int bound = 2 * p.degree() * p.degree();
    for (int d = 1; d <= std::max(bound, 1); ++d) {
        if (rem.degree() == 0) break;
        if (euler_phi(d) > rem.degree()) continue;
        int m = 0;
        while (true) {
            auto q = rem.divide_exact(cyclotomic(d));
            if (!q) break;
            rem = std::move(*q);
            ++m;
        }
        if (m > 0) result.factors.emplace_back(d, m);
    }
    if (rem.degree() != 0) return std::nullopt;
    const Int& c = rem.coeff(0);
    if (c == 1)
        result.sign = 1;
    else if (c == -1)
        result.sign = -1;
    else
        return std::nullopt;
    return result;
}

namespace {

void enumerate_rec(const std::vector<int>& candidates, size_t idx, int remaining,
                   const IntPoly& partial, CycFactorization& current,
                   const ProductConstraint& c, std::vector<CycFactorization>& out) {
    if (remaining == 0) {
        const IntPoly& prod = partial;
        if (c.t1_coeff && prod.coeff(1) != *c.t1_coeff) return;
        if (c.min_root1_mult > 0 && current.multiplicity(1) < c.min_root1_mult) return;
        if (c.palindromy && palindromicity(prod) != *c.palindromy) return;
        out.push_back(current);
        return;
    }
    if (idx == candidates.size()) return;
    const int d = candidates[idx];
    const int phi = euler_phi(d);
    // multiplicity 0 branch first keeps output lexicographic in (d, m) pairs
    enumerate_rec(candidates, idx + 1, remaining, partial, current, c, out);
    if (phi > remaining) return;
    IntPoly acc = partial;
    for (int m = 1; m * phi <= remaining; ++m) {
        acc *= cyclotomic(d);
        current.factors.emplace_back(d, m);
        enumerate_rec(candidates, idx + 1, remaining - m * phi, acc, current, c, out);
        current.factors.pop_back();
    }
}

}  // namespace

std::vector<CycFactorization> enumerate_cyclotomic_products(const ProductConstraint& c) {
    std::vector<CycFactorization> out;
    if (c.total_degree < 0) return out;
    if (c.total_degree == 0) {
        CycFactorization unit;
        IntPoly one = IntPoly::constant(1);
        ProductConstraint cc = c;
        bool ok = true;
        if (cc.t1_coeff && *cc.t1_coeff != 0) ok = false;
        if (cc.min_root1_mult > 0) ok = false;
        if (cc.palindromy && *cc.palindromy != Palindromy::Palindromic) ok = false;
        if (ok) out.push_back(unit);
        return out;
    }
    std::vector<int> candidates;
    const int bound = 2 * c.total_degree * c.total_degree;
    for (int d = 1; d <= bound; ++d)
        if (euler_phi(d) <= c.total_degree) candidates.push_back(d);
    CycFactorization current;
    enumerate_rec(candidates, 0, c.total_degree, IntPoly::constant(1), current, c, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qcy
