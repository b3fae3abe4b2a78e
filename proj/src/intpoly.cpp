#include "qcy/intpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "qcy/errors.hpp"

namespace qcy {

namespace {
const Int kZero = 0;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int c, int power) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(power) + 1, Int(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Int& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<Int> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const Int& c, const IntPoly& p) {
    IntPoly r = p;
    for (auto& x : r.coeffs_) x *= c;
    r.trim();
    return r;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(static_cast<size_t>(degree() - divisor.degree()) + 1, Int(0));
    const Int& dl = divisor.leading();
    for (int k = degree() - divisor.degree(); k >= 0; --k) {
        Int& lead = rem[static_cast<size_t>(k + divisor.degree())];
        if (lead == 0) continue;
        if (lead % dl != 0) return std::nullopt;
        Int q = lead / dl;
        quot[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= divisor.degree(); ++i)
            rem[static_cast<size_t>(k + i)] -= q * divisor.coeff(i);
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<Int> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Int(i) * coeffs_[i];
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    return os.str();
}

IntPoly IntPoly::parse(const std::string& text) {
    std::vector<Int> out;
    size_t pos = 0;
    const size_t n = text.size();
    if (n == 0) throw parse_error("empty polynomial", 0);
    while (true) {
        size_t start = pos;
        if (pos < n && (text[pos] == '+' || text[pos] == '-')) ++pos;
        size_t digits = 0;
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw parse_error("expected integer coefficient", start);
        out.emplace_back(text.substr(start, pos - start));
        if (pos == n) break;
        if (text[pos] != ',') throw parse_error("expected ','", pos);
        ++pos;
        if (pos == n) throw parse_error("trailing ','", pos - 1);
    }
    return IntPoly(std::move(out));
}

std::string IntPoly::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeff(i);
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << a;
        if (i > 0) {
            os << 't';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

}  // namespace qcy
