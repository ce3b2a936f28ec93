#ifndef PQPOLY_EGF_SERIES_HPP
#define PQPOLY_EGF_SERIES_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pqpoly/combinatorics.hpp"
#include "pqpoly/rational.hpp"
#include "pqpoly/xpoly.hpp"

namespace pqpoly {

/// Ring operations the series engine needs beyond + - * and scaling by a
/// Rational.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& r) { return r.is_zero(); }
    static Rational unit_inverse(const Rational& r) {
        if (r.is_zero()) throw std::domain_error("EgfSeries: constant term is not invertible");
        return r.inverse();
    }
};

template <>
struct RingTraits<XPoly> {
    static XPoly zero() { return XPoly(); }
    static XPoly one() { return XPoly(1); }
    static bool is_zero(const XPoly& p) { return p.is_zero(); }
    // Units of Q[x] are the nonzero constants.
    static XPoly unit_inverse(const XPoly& p) {
        if (p.is_zero() || !p.is_constant())
            throw std::domain_error("EgfSeries: constant term is not invertible");
        return XPoly(p.coeff(0).inverse());
    }
};

/// Truncated exponential generating function sum_{n<=N} a_n t^n / n!.
///
/// The series is known through t^N, where N is the order. Binary
/// operations require equal orders and keep that order.
template <class R>
class EgfSeries {
public:
    using Traits = RingTraits<R>;

    /// The zero series of the given order.
    explicit EgfSeries(std::size_t order) : coeffs_(order + 1, Traits::zero()) {}

    explicit EgfSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("EgfSeries: needs at least a_0");
    }

    static EgfSeries constant(const R& c, std::size_t order) {
        EgfSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static EgfSeries one(std::size_t order) { return constant(Traits::one(), order); }

    /// e^{c t}: a_n = c^n.
    static EgfSeries exp_of(const R& c, std::size_t order) {
        EgfSeries s(order);
        R power = Traits::one();
        for (std::size_t n = 0; n <= order; ++n) {
            s.coeffs_[n] = power;
            power = power * c;
        }
        return s;
    }

    /// EGF of the ordinary series sum c_n t^n, i.e. a_n = n! c_n. Missing
    /// trailing ordinary coefficients are taken as zero.
    static EgfSeries from_ordinary(std::span<const R> ordinary, std::size_t order) {
        EgfSeries s(order);
        Rational fact(1);
        for (std::size_t n = 0; n <= order && n < ordinary.size(); ++n) {
            if (n > 0) fact *= Rational(static_cast<long>(n));
            s.coeffs_[n] = fact * ordinary[n];
        }
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const R> coeffs() const { return coeffs_; }

    /// a_n, the coefficient of t^n/n!.
    const R& coeff(std::size_t n) const {
        if (n > order())
            throw std::out_of_range("EgfSeries: index " + std::to_string(n) +
                                    " beyond order " + std::to_string(order()));
        return coeffs_[n];
    }

    EgfSeries& operator+=(const EgfSeries& rhs) {
        require_same_order(rhs);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] = coeffs_[n] + rhs.coeffs_[n];
        return *this;
    }
    EgfSeries& operator-=(const EgfSeries& rhs) {
        require_same_order(rhs);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] = coeffs_[n] - rhs.coeffs_[n];
        return *this;
    }
    EgfSeries& operator*=(const Rational& c) {
        for (auto& a : coeffs_) a = c * a;
        return *this;
    }

    friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
    friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }
    friend EgfSeries operator*(const Rational& c, EgfSeries a) { return a *= c; }

    friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

    void require_same_order(const EgfSeries& other) const {
        if (other.order() != order())
            throw std::invalid_argument("EgfSeries: order mismatch (" + std::to_string(order()) +
                                        " vs " + std::to_string(other.order()) + ")");
    }

private:
    std::vector<R> coeffs_;
};

/// Binomial convolution c_n = sum_i C(n,i) a_i b_{n-i}.
template <class R>
EgfSeries<R> mul(const EgfSeries<R>& a, const EgfSeries<R>& b) {
    a.require_same_order(b);
    const std::size_t order = a.order();
    std::vector<R> out(order + 1, RingTraits<R>::zero());
    for (std::size_t n = 0; n <= order; ++n) {
        R acc = RingTraits<R>::zero();
        for (std::size_t i = 0; i <= n; ++i) {
            const R& ai = a.coeff(i);
            const R& bj = b.coeff(n - i);
            if (RingTraits<R>::is_zero(ai) || RingTraits<R>::is_zero(bj)) continue;
            acc = acc + binomial(static_cast<long>(n), static_cast<long>(i)) * (ai * bj);
        }
        out[n] = std::move(acc);
    }
    return EgfSeries<R>(std::move(out));
}

template <class R>
EgfSeries<R> power(const EgfSeries<R>& a, unsigned exponent) {
    EgfSeries<R> acc = EgfSeries<R>::one(a.order());
    for (unsigned i = 0; i < exponent; ++i) acc = mul(acc, a);
    return acc;
}

/// Multiplicative inverse through the same order; a_0 must be a unit.
template <class R>
EgfSeries<R> reciprocal(const EgfSeries<R>& a) {
    const std::size_t order = a.order();
    const R inv0 = RingTraits<R>::unit_inverse(a.coeff(0));
    std::vector<R> b(order + 1, RingTraits<R>::zero());
    b[0] = inv0;
    for (std::size_t n = 1; n <= order; ++n) {
        R acc = RingTraits<R>::zero();
        for (std::size_t i = 1; i <= n; ++i) {
            if (RingTraits<R>::is_zero(a.coeff(i))) continue;
            acc = acc + binomial(static_cast<long>(n), static_cast<long>(i)) * (a.coeff(i) * b[n - i]);
        }
        b[n] = Rational(-1) * (inv0 * acc);
    }
    return EgfSeries<R>(std::move(b));
}

/// t -> sum_m outer[m] * inner(t)^m, where `outer` is an ordinary power
/// series in its argument and `inner` has zero constant term. Evaluated by
/// Horner's rule on truncated products.
template <class R>
EgfSeries<R> compose(std::span<const R> outer, const EgfSeries<R>& inner) {
    if (!RingTraits<R>::is_zero(inner.coeff(0)))
        throw std::invalid_argument("compose: inner series has a nonzero constant term");
    const std::size_t order = inner.order();
    if (outer.size() < order + 1)
        throw std::invalid_argument("compose: outer series shorter than the truncation order");
    EgfSeries<R> acc = EgfSeries<R>::constant(outer[order], order);
    for (std::size_t m = order; m-- > 0;) {
        acc = mul(acc, inner);
        acc += EgfSeries<R>::constant(outer[m], order);
    }
    return acc;
}

/// Embeds a Rational series into the XPoly coefficient ring.
inline EgfSeries<XPoly> lift(const EgfSeries<Rational>& s) {
    std::vector<XPoly> out;
    out.reserve(s.order() + 1);
    for (const auto& c : s.coeffs()) out.emplace_back(c);
    return EgfSeries<XPoly>(std::move(out));
}

/// Common EGFs over Rational.
namespace egf {

/// e^{c t} - 1.
inline EgfSeries<Rational> exp_minus_one(const Rational& c, std::size_t order) {
    return EgfSeries<Rational>::exp_of(c, order) - EgfSeries<Rational>::one(order);
}

/// ln(1 + c t) = sum_{m>=1} (-1)^{m+1} c^m t^m / m.
inline EgfSeries<Rational> log1p(const Rational& c, std::size_t order) {
    std::vector<Rational> a(order + 1);
    Rational cm(1);
    for (std::size_t m = 1; m <= order; ++m) {
        cm *= c;
        a[m] = sign_power(static_cast<long>(m) + 1) * factorial(static_cast<long>(m) - 1) * cm;
    }
    return EgfSeries<Rational>(std::move(a));
}

}  // namespace egf

}  // namespace pqpoly

#endif  // PQPOLY_EGF_SERIES_HPP
