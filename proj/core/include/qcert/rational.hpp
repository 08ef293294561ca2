#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers backed by GMP.
 *
 * Every value is kept in canonical form: the denominator is positive and
 * coprime with the numerator, zero is 0/1. All arithmetic is exact; the only
 * failure mode is division by zero, reported as std::domain_error.
 */

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qcert {

/// Raised when a textual number cannot be parsed. `position()` is the
/// zero-based offset of the first offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class Rational {
public:
    Rational() = default;
    Rational(long long value) : value_(mpz_class(static_cast<long>(value))) {}
    Rational(const mpz_class& value) : value_(value) {}
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    Rational(long long numerator, long long denominator)
        : Rational(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator))) {}

    /// Parses "p", "p/q", or a finite decimal such as "-0.25" or "1.5e-3".
    /// The result is exact: "0.1" becomes 1/10.
    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational abs() const;

    /// Exact square root when this is the square of a rational.
    std::optional<Rational> exact_sqrt() const;

    /// "p" for integers, "p/q" otherwise. Round-trips through parse().
    std::string to_string() const;

    /// Correctly rounded decimal rendering with `significant` digits, in the
    /// style of printf's %g.
    std::string to_decimal(int significant = 12) const;

    double to_double() const { return value_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

inline int sign(const Rational& value) { return value.sign(); }

/// Rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Integer power with non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace qcert
