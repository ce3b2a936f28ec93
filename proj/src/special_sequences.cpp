#include "pqpoly/special_sequences.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "pqpoly/combinatorics.hpp"
#include "pqpoly/egf_series.hpp"

namespace pqpoly {

RationalFunction::RationalFunction(XPoly numerator, XPoly denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (denominator_.coeff(0).is_zero())
        throw std::invalid_argument("RationalFunction: denominator must have a nonzero constant term");
}

std::vector<Rational> RationalFunction::series(std::size_t order) const {
    // Solve denominator * s = numerator term by term.
    const Rational d0_inv = denominator_.coeff(0).inverse();
    std::vector<Rational> s(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc = numerator_.coeff(n);
        for (std::size_t i = 1; i <= n; ++i) acc -= denominator_.coeff(i) * s[n - i];
        s[n] = acc * d0_inv;
    }
    return s;
}

namespace {

/// Lower-triangular table T[n][m], 0 <= m <= n <= size, rebuilt at a larger
/// size on demand.
template <class T>
class TriangleCache {
public:
    using Builder = std::function<std::vector<std::vector<T>>(long)>;
    explicit TriangleCache(Builder build) : build_(std::move(build)) {}

    T get(long n, long m) {
        if (n < 0 || m < 0) throw std::invalid_argument("Stirling index must be nonnegative");
        if (m > n) return T{};
        {
            std::shared_lock lock(mutex_);
            if (n < static_cast<long>(rows_.size())) return rows_[n][m];
        }
        std::unique_lock lock(mutex_);
        if (n >= static_cast<long>(rows_.size())) {
            long size = std::max<long>(16, static_cast<long>(rows_.size()));
            while (size <= n) size *= 2;
            rows_ = build_(size);
        }
        return rows_[n][m];
    }

private:
    Builder build_;
    std::shared_mutex mutex_;
    std::vector<std::vector<T>> rows_;
};

template <class T>
std::vector<std::vector<T>> empty_triangle(long size) {
    std::vector<std::vector<T>> rows(size + 1);
    for (long n = 0; n <= size; ++n) rows[n].resize(n + 1);
    return rows;
}

// Column m of every triangle below is the EGF column(m) / m!.
template <class T, class Column>
std::vector<std::vector<T>> build_by_columns(long size, Column column) {
    auto rows = empty_triangle<T>(size);
    for (long m = 0; m <= size; ++m) {
        const auto series = column(m, static_cast<std::size_t>(size));
        for (long n = m; n <= size; ++n) rows[n][m] = series.coeff(n);
    }
    return rows;
}

TriangleCache<Rational>& stirling2_cache() {
    static TriangleCache<Rational> cache([](long size) {
        return build_by_columns<Rational>(size, [](long m, std::size_t order) {
            auto s = power(egf::exp_minus_one(Rational(1), order), static_cast<unsigned>(m));
            return factorial(m).inverse() * s;
        });
    });
    return cache;
}

TriangleCache<Rational>& stirling1_cache() {
    static TriangleCache<Rational> cache([](long size) {
        auto rows = build_by_columns<Rational>(size, [](long m, std::size_t order) {
            auto s = power(egf::log1p(Rational(1), order), static_cast<unsigned>(m));
            return factorial(m).inverse() * s;
        });
        for (long n = 0; n <= size; ++n)
            for (long m = 0; m <= n; ++m) rows[n][m] *= sign_power(n - m);
        return rows;
    });
    return cache;
}

TriangleCache<XPoly>& weighted_stirling2_cache() {
    static TriangleCache<XPoly> cache([](long size) {
        return build_by_columns<XPoly>(size, [](long m, std::size_t order) {
            auto base = power(egf::exp_minus_one(Rational(1), order), static_cast<unsigned>(m));
            auto lifted = lift(factorial(m).inverse() * base);
            return mul(lifted, EgfSeries<XPoly>::exp_of(XPoly::x(), order));
        });
    });
    return cache;
}

/// EGF of (1-t)^{-x}: a_n = (x)^(n).
EgfSeries<XPoly> one_minus_t_pow_neg_x(std::size_t order) {
    std::vector<XPoly> a;
    for (std::size_t n = 0; n <= order; ++n) a.push_back(rising_factorial(static_cast<long>(n)));
    return EgfSeries<XPoly>(std::move(a));
}

TriangleCache<XPoly>& weighted_stirling1_cache() {
    static TriangleCache<XPoly> cache([](long size) {
        return build_by_columns<XPoly>(size, [](long m, std::size_t order) {
            // -ln(1-t)
            auto neg_log = Rational(-1) * egf::log1p(Rational(-1), order);
            auto base = lift(factorial(m).inverse() * power(neg_log, static_cast<unsigned>(m)));
            return mul(one_minus_t_pow_neg_x(order), base);
        });
    });
    return cache;
}

XPoly times_exp_xt_coeff(const EgfSeries<Rational>& base, long n) {
    return mul(lift(base), EgfSeries<XPoly>::exp_of(XPoly::x(), base.order())).coeff(n);
}

}  // namespace

Rational stirling2(long n, long m) {
#if defined(PQPOLY_MUTANT_STIRLING2)
    if (n == 4 && m == 2) return stirling2_cache().get(n, m) + Rational(1);
#endif
    return stirling2_cache().get(n, m);
}

Rational stirling1_unsigned(long n, long m) { return stirling1_cache().get(n, m); }

XPoly weighted_stirling2(long n, long m) { return weighted_stirling2_cache().get(n, m); }

XPoly weighted_stirling1(long n, long m) { return weighted_stirling1_cache().get(n, m); }

XPoly euler_poly(long n) {
    if (n < 0) throw std::invalid_argument("euler_poly: negative index");
    const auto order = static_cast<std::size_t>(n);
    // (1 + e^t)/2
    auto half_sum = Rational(1, 2) * (EgfSeries<Rational>::one(order) + EgfSeries<Rational>::exp_of(1, order));
    return times_exp_xt_coeff(reciprocal(half_sum), n);
}

XPoly bernoulli_order(long n, long s) {
    if (n < 0) throw std::invalid_argument("bernoulli_order: negative index");
    if (s < 1) throw std::invalid_argument("bernoulli_order: order s must be >= 1");
    const auto order = static_cast<std::size_t>(n);
    // (e^t - 1)/t has EGF coefficients 1/(m+1).
    std::vector<Rational> a(order + 1);
    for (std::size_t m = 0; m <= order; ++m) a[m] = Rational(1, static_cast<long>(m) + 1);
    auto base = reciprocal(power(EgfSeries<Rational>(std::move(a)), static_cast<unsigned>(s)));
    return times_exp_xt_coeff(base, n);
}

XPoly frobenius_euler(long n, long s, const Rational& u) {
    if (n < 0) throw std::invalid_argument("frobenius_euler: negative index");
    if (s < 1) throw std::invalid_argument("frobenius_euler: order s must be >= 1");
    if (u == Rational(1)) throw std::invalid_argument("frobenius_euler: u = 1 is not allowed");
    const auto order = static_cast<std::size_t>(n);
    // (e^t - u)/(1 - u)
    std::vector<Rational> a(order + 1, (Rational(1) - u).inverse());
    a[0] = Rational(1);
    auto base = reciprocal(power(EgfSeries<Rational>(std::move(a)), static_cast<unsigned>(s)));
    return times_exp_xt_coeff(base, n);
}

std::vector<Rational> li_pq_ordinary_coeffs(long k, const PQParams& params, std::size_t order) {
    std::vector<Rational> c(order + 1);
    for (std::size_t m = 1; m <= order; ++m) {
#if defined(PQPOLY_MUTANT_PLAIN_INTEGER)
        (void)params;
        c[m] = Rational(static_cast<long>(m)).pow(-k);
#else
        c[m] = pq_weight(static_cast<long>(m), k, params);
#endif
    }
    return c;
}

std::vector<Rational> lif_pq_ordinary_coeffs(long k, const PQParams& params, std::size_t order) {
    std::vector<Rational> c(order + 1);
    for (std::size_t m = 0; m <= order; ++m)
        c[m] = pq_weight(static_cast<long>(m) + 1, k, params) / factorial(static_cast<long>(m));
    return c;
}

RationalFunction li_pq_closed_form(long k, const PQParams& params) {
    if (k > 0) throw std::invalid_argument("li_pq_closed_form: requires k <= 0");
    if (params.is_equal_limit())
        throw std::invalid_argument("li_pq_closed_form: requires p != q");
    const long kk = -k;
    std::vector<Rational> ratio(kk + 1);
    for (long l = 0; l <= kk; ++l) ratio[l] = params.p().pow(l) * params.q().pow(kk - l);

    XPoly denominator(1);
    for (long l = 0; l <= kk; ++l) denominator *= XPoly{Rational(1), -ratio[l]};

    XPoly numerator;
    for (long l = 0; l <= kk; ++l) {
        XPoly term = XPoly::monomial(1, sign_power(kk - l) * binomial(kk, l) * ratio[l]);
        for (long j = 0; j <= kk; ++j)
            if (j != l) term *= XPoly{Rational(1), -ratio[j]};
        numerator += term;
    }
    numerator *= (params.p() - params.q()).pow(-kk);
    return RationalFunction(std::move(numerator), std::move(denominator));
}

}  // namespace pqpoly
