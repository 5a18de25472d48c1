#include "descent/tpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace descent {

TPoly::TPoly(Int constant) {
    if (constant != 0) coeffs_[0] = std::move(constant);
}

TPoly TPoly::t() { return monomial(1, 1); }

TPoly TPoly::monomial(Int coeff, int exp) {
    TPoly p;
    if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
    return p;
}

Int TPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int{0} : it->second;
}

int TPoly::degree() const {
    if (is_zero()) throw std::logic_error("TPoly::degree: zero polynomial");
    return coeffs_.rbegin()->first;
}

int TPoly::min_exponent() const {
    if (is_zero()) throw std::logic_error("TPoly::min_exponent: zero polynomial");
    return coeffs_.begin()->first;
}

bool TPoly::is_polynomial() const { return is_zero() || min_exponent() >= 0; }

void TPoly::set(int exp, Int c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = std::move(c);
}

TPoly& TPoly::operator+=(const TPoly& other) {
    for (const auto& [exp, c] : other.coeffs_) set(exp, coeff(exp) + c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
    for (const auto& [exp, c] : other.coeffs_) set(exp, coeff(exp) - c);
    return *this;
}

TPoly TPoly::operator+(const TPoly& other) const {
    TPoly r = *this;
    r += other;
    return r;
}

TPoly TPoly::operator-(const TPoly& other) const {
    TPoly r = *this;
    r -= other;
    return r;
}

TPoly TPoly::operator-() const {
    TPoly r;
    for (const auto& [exp, c] : coeffs_) r.coeffs_[exp] = -c;
    return r;
}

TPoly TPoly::operator*(const TPoly& other) const {
    TPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : other.coeffs_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

TPoly& TPoly::operator*=(const TPoly& other) {
    *this = *this * other;
    return *this;
}

TPoly TPoly::shifted(int shift) const {
    TPoly r;
    for (const auto& [exp, c] : coeffs_) r.coeffs_[exp + shift] = c;
    return r;
}

TPoly TPoly::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("TPoly::pow: negative exponent");
    TPoly r{1};
    for (int i = 0; i < exponent; ++i) r *= *this;
    return r;
}

std::optional<TPoly> TPoly::divided_exactly_by(const TPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("TPoly::divided_exactly_by: zero divisor");
    if (is_zero()) return TPoly{};
    TPoly rem = *this;
    TPoly quot;
    int ddeg = divisor.degree();
    const Int& dlead = divisor.coeffs_.rbegin()->second;
    while (!rem.is_zero() && rem.degree() >= ddeg) {
        Int rlead = rem.coeffs_.rbegin()->second;
        if (rlead % dlead != 0) return std::nullopt;
        TPoly term = monomial(rlead / dlead, rem.degree() - ddeg);
        quot += term;
        rem -= term * divisor;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

Rat TPoly::eval(const Rat& at) const {
    if (is_zero()) return 0;
    if (at == 0 && min_exponent() < 0)
        throw std::domain_error("TPoly::eval: negative exponent at t = 0");
    // Horner over the exponent gaps, then divide out any negative offset.
    Rat acc = 0;
    int prev_exp = degree();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        for (int e = prev_exp; e > it->first; --e) acc *= at;
        acc += it->second;
        prev_exp = it->first;
    }
    int low = min_exponent();
    for (int e = 0; e < low; ++e) acc *= at;
    for (int e = 0; e > low; --e) acc /= at;
    return acc;
}

Int TPoly::eval_int(const Int& at) const {
    if (is_zero()) return 0;
    if (min_exponent() < 0) throw std::domain_error("TPoly::eval_int: negative exponents present");
    Int acc = 0;
    int prev_exp = degree();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        for (int e = prev_exp; e > it->first; --e) acc *= at;
        acc += it->second;
        prev_exp = it->first;
    }
    for (int e = 0; e < min_exponent(); ++e) acc *= at;
    return acc;
}

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [exp, c] = *it;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool show_coeff = (mag != 1) || exp == 0;
        if (show_coeff) out << mag;
        if (exp != 0) {
            if (show_coeff) out << "*";
            out << "t";
            if (exp != 1) out << "^" << exp;
        }
    }
    return out.str();
}

TPoly operator*(const Int& scalar, const TPoly& p) { return TPoly{scalar} * p; }

}  // namespace descent
