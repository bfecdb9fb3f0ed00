#include "unitpoly/qpoly.hpp"

#include <algorithm>

namespace unitpoly {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
    normalize();
}

RationalPoly::RationalPoly(std::initializer_list<Rational> coefficients)
    : RationalPoly(std::vector<Rational>(coefficients)) {}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::linear(const Rational& a, const Rational& b) { return RationalPoly({a, b}); }

std::optional<std::size_t> RationalPoly::degree() const noexcept {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.size() - 1;
}

Rational RationalPoly::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

void RationalPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
    *this = mul(*this, rhs);
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

RationalPoly add(const RationalPoly& p, const RationalPoly& q) { return p + q; }

RationalPoly sub(const RationalPoly& p, const RationalPoly& q) { return p - q; }

RationalPoly mul(const RationalPoly& p, const RationalPoly& q) {
    if (p.is_zero() || q.is_zero()) {
        return {};
    }
    const auto& a = p.coefficients();
    const auto& b = q.coefficients();
    std::vector<Rational> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return RationalPoly(std::move(out));
}

Rational eval(const RationalPoly& p, const Rational& at) {
    Rational acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

bool is_positive_integral(const RationalPoly& p) {
    if (p.is_zero()) {
        return false;
    }
    return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                       [](const Rational& c) { return is_integral(c) && c > 0; });
}

std::string to_text(const RationalPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) {
            continue;
        }
        Rational mag = abs(c[i]);
        if (out.empty()) {
            if (c[i] < 0) {
                out += "-";
            }
        } else {
            out += c[i] < 0 ? " - " : " + ";
        }
        const bool whole = is_integral(mag);
        if (i == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) {
            out += whole ? to_string(mag) : "(" + to_string(mag) + ")";
        }
        out += "λ";
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace unitpoly
