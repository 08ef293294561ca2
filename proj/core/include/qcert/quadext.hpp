#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qcert/rational.hpp"

namespace qcert {

/// Raised when combining p + q*sqrt(d) values with different radicands.
class MismatchedRadicand : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Exact element p + q*sqrt(d) of the real quadratic field Q(sqrt(d)).
 *
 * The radicand is a non-negative rational. When d is the square of a
 * rational the value collapses to a plain rational (surd part 0). A value
 * with a zero surd part is a rational and combines with any radicand.
 */
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational rational) : p_(std::move(rational)) {}
    QuadExt(long long rational) : p_(rational) {}
    /// std::domain_error when radicand < 0.
    QuadExt(Rational rat_part, Rational surd_part, Rational radicand);

    const Rational& rat_part() const { return p_; }
    const Rational& surd_part() const { return q_; }
    const Rational& radicand() const { return d_; }

    bool is_rational() const { return q_.is_zero(); }

    /// Exact sign of p + q*sqrt(d), decided without extracting the root.
    int sign() const;

    /// "p + q*sqrt(d)" or just "p" when rational.
    std::string to_string() const;

    /// Decimal rendering with `significant` digits. Exact for rationals,
    /// otherwise computed from a 100-digit approximation of sqrt(d).
    std::string to_decimal(int significant = 12) const;

    /// Rational within 10^-digits (relative to magnitude of sqrt(d)) of the value.
    Rational approximate(int digits = 100) const;

    long double to_long_double() const;

    QuadExt operator-() const { return QuadExt(-p_, -q_, d_, Trusted{}); }
    QuadExt& operator+=(const QuadExt& rhs);
    QuadExt& operator-=(const QuadExt& rhs);
    QuadExt& operator*=(const QuadExt& rhs);

    friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
    friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
    friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }

    /// Value equality (radicands of rational values are ignored).
    friend bool operator==(const QuadExt& lhs, const QuadExt& rhs) { return (lhs - rhs).sign() == 0; }

private:
    struct Trusted {};
    QuadExt(Rational p, Rational q, Rational d, Trusted)
        : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {}

    const Rational& common_radicand(const QuadExt& rhs) const;

    Rational p_;
    Rational q_;
    Rational d_;
};

inline int sign(const QuadExt& value) { return value.sign(); }

std::ostream& operator<<(std::ostream& os, const QuadExt& value);

} // namespace qcert
