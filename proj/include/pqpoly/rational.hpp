#ifndef PQPOLY_RATIONAL_HPP
#define PQPOLY_RATIONAL_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pqpoly {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: implicit by design of a scalar type
    Rational(long num, long den);
    explicit Rational(mpq_class value);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "a/b" or "a" (base 10, optional leading minus). Throws
    /// std::invalid_argument on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    /// Canonical "num/den" form; integers are written "n/1".
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }

    Rational pow(long exponent) const;
    Rational inverse() const;

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class value_{0};
};

}  // namespace pqpoly

#endif  // PQPOLY_RATIONAL_HPP
