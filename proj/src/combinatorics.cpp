#include "pqpoly/combinatorics.hpp"

#include <stdexcept>

namespace pqpoly {

Rational factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f, mpz_class(1));
}

Rational binomial(const Rational& n, long k) {
    if (k < 0) throw std::invalid_argument("binomial: negative lower argument");
    Rational acc(1);
    for (long i = 0; i < k; ++i) acc *= (n - Rational(i)) / Rational(i + 1);
    return acc;
}

Rational binomial(long n, long k) {
    if (k < 0) return Rational(0);
    if (n >= 0) {
        if (k > n) return Rational(0);
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return Rational(b, mpz_class(1));
    }
    return binomial(Rational(n), k);
}

XPoly falling_factorial(long n) {
    if (n < 0) throw std::invalid_argument("falling_factorial: negative order");
    XPoly acc(1);
    for (long i = 0; i < n; ++i) acc *= XPoly{Rational(-i), Rational(1)};
    return acc;
}

XPoly rising_factorial(long n) {
    if (n < 0) throw std::invalid_argument("rising_factorial: negative order");
    XPoly acc(1);
    for (long i = 0; i < n; ++i) acc *= XPoly{Rational(i), Rational(1)};
    return acc;
}

}  // namespace pqpoly
