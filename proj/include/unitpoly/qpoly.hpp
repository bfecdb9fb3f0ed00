#pragma once

// Dense univariate polynomials in lambda with exact rational coefficients.

#include "unitpoly/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace unitpoly {

/// coefficient(i) multiplies lambda^i. The stored sequence never ends in a
/// zero coefficient; the zero polynomial stores nothing and has no degree.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coefficients);
    RationalPoly(std::initializer_list<Rational> coefficients);

    static RationalPoly constant(const Rational& c);
    /// a + b*lambda
    static RationalPoly linear(const Rational& a, const Rational& b);

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] std::optional<std::size_t> degree() const noexcept;
    /// Zero past the last stored coefficient.
    [[nodiscard]] Rational coefficient(std::size_t i) const;
    [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    RationalPoly& operator+=(const RationalPoly& rhs);
    RationalPoly& operator-=(const RationalPoly& rhs);
    RationalPoly& operator*=(const RationalPoly& rhs);
    RationalPoly& operator*=(const Rational& scalar);

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

RationalPoly add(const RationalPoly& p, const RationalPoly& q);
RationalPoly sub(const RationalPoly& p, const RationalPoly& q);
RationalPoly mul(const RationalPoly& p, const RationalPoly& q);

inline RationalPoly operator+(RationalPoly p, const RationalPoly& q) { return p += q; }
inline RationalPoly operator-(RationalPoly p, const RationalPoly& q) { return p -= q; }
inline RationalPoly operator*(const RationalPoly& p, const RationalPoly& q) { return mul(p, q); }
inline RationalPoly operator*(RationalPoly p, const Rational& c) { return p *= c; }
inline RationalPoly operator*(const Rational& c, RationalPoly p) { return p *= c; }

/// Horner evaluation.
Rational eval(const RationalPoly& p, const Rational& at);

/// Nonzero, and every stored coefficient is an integer >= 1.
bool is_positive_integral(const RationalPoly& p);

/// "7 + 16λ + 9λ^2"; rational coefficients print as "(9/5)λ"; zero prints "0".
std::string to_text(const RationalPoly& p);

}  // namespace unitpoly
