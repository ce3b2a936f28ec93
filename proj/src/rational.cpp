#include "pqpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pqpoly {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : value_(mpz_class(num), mpz_class(den)) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    return Rational(parse_integer(num), parse_integer(den));
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

}  // namespace pqpoly
