#include "pqpoly/xpoly.hpp"

#include <algorithm>
#include <sstream>

namespace pqpoly {

XPoly::XPoly(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

XPoly::XPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly XPoly::x() { return monomial(1); }

XPoly XPoly::monomial(std::size_t power, const Rational& c) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return XPoly(std::move(v));
}

Rational XPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational XPoly::operator()(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

XPoly XPoly::substitute_affine(const Rational& a, const Rational& b) const {
    return compose(XPoly{b, a});
}

XPoly XPoly::compose(const XPoly& g) const {
    XPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= g;
        acc += XPoly(*it);
    }
    return acc;
}

XPoly XPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return XPoly(std::move(d));
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return XPoly(std::move(out));
}

XPoly& XPoly::operator*=(const XPoly& rhs) { return *this = *this * rhs; }

XPoly& XPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

XPoly operator-(XPoly a) {
    for (auto& v : a.coeffs_) v = -v;
    return a;
}

std::string XPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        os << (c.sign() < 0 ? -c : c).to_string();
        if (i >= 1) os << "*x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace pqpoly
