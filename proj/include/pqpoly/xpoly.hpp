#ifndef PQPOLY_XPOLY_HPP
#define PQPOLY_XPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pqpoly/rational.hpp"

namespace pqpoly {

/// Dense univariate polynomial over Rational. Coefficient i multiplies x^i.
/// Trailing zeros are never stored, so the zero polynomial has no
/// coefficients and equality is structural.
class XPoly {
public:
    XPoly() = default;
    XPoly(const Rational& constant);  // NOLINT: scalars embed as constants
    XPoly(long constant) : XPoly(Rational(constant)) {}  // NOLINT
    explicit XPoly(std::vector<Rational> coeffs);
    XPoly(std::initializer_list<Rational> coeffs) : XPoly(std::vector<Rational>(coeffs)) {}

    /// The indeterminate x.
    static XPoly x();
    /// c * x^power.
    static XPoly monomial(std::size_t power, const Rational& c = Rational(1));

    std::span<const Rational> coeffs() const { return coeffs_; }
    /// Coefficient of x^i (zero past the degree).
    Rational coeff(std::size_t i) const;

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    Rational operator()(const Rational& at) const;
    /// f(a*x + b).
    XPoly substitute_affine(const Rational& a, const Rational& b) const;
    /// f(g(x)).
    XPoly compose(const XPoly& g) const;
    /// Ordinary derivative d/dx.
    XPoly derivative() const;

    XPoly& operator+=(const XPoly& rhs);
    XPoly& operator-=(const XPoly& rhs);
    XPoly& operator*=(const XPoly& rhs);
    XPoly& operator*=(const Rational& c);

    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(XPoly a, const Rational& c) { return a *= c; }
    friend XPoly operator*(const Rational& c, XPoly a) { return a *= c; }
    friend XPoly operator-(XPoly a);

    friend bool operator==(const XPoly&, const XPoly&) = default;

    /// Human-readable form, e.g. "2/1*x^2 - 1/1".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const XPoly& p) {
        return os << p.to_string();
    }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace pqpoly

#endif  // PQPOLY_XPOLY_HPP
