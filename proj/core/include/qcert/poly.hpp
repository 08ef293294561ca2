#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Q with exact real-root tools.
 *
 * Just enough algebra for degree <= 4: Euclidean division and gcd, Yun's
 * square-free decomposition, Sturm sequences and exact root isolation.
 */

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcert/rational.hpp"

namespace qcert {

class Polynomial {
public:
    Polynomial() = default;
    /// Coefficients in ascending powers: {c0, c1, c2, ...}.
    explicit Polynomial(std::vector<Rational> ascending);
    Polynomial(std::initializer_list<Rational> ascending)
        : Polynomial(std::vector<Rational>(ascending)) {}

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int power) const;
    const Rational& leading() const;

    Rational operator()(const Rational& t) const;

    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Yun decomposition: result[k] is the monic square-free product of the
/// factors of multiplicity k + 1. Constant factors are dropped; trailing
/// entries equal to 1 are omitted.
std::vector<Polynomial> square_free_decomposition(const Polynomial& p);

/// Sturm chain for `p`; assumes p is non-zero.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of distinct real roots of a square-free `p` in (lo, hi].
int count_roots(const std::vector<Polynomial>& sturm, const Rational& lo, const Rational& hi);

/// Number of distinct real roots of `p`.
int count_real_roots(const Polynomial& p);

/// Upper bound on |root| (Cauchy).
Rational root_bound(const Polynomial& p);

/// Closed interval [lo, hi] containing exactly one root of a square-free
/// polynomial. When lo == hi the root is the rational lo; otherwise neither
/// endpoint is a root and the polynomial changes sign across the interval.
struct RootInterval {
    Rational lo;
    Rational hi;

    bool is_exact() const { return lo == hi; }
};

/// Disjoint isolating intervals for the real roots of square-free `p`, ascending.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);

/// Halves a non-exact isolating interval of `p`, collapsing it when the
/// midpoint is a root.
void bisect(const Polynomial& p, RootInterval& interval);

/// Rational root inside the isolating interval, if the root is rational.
/// Decided exactly via the bound on denominators of rational roots.
std::optional<Rational> rational_root_in(const Polynomial& p, RootInterval interval);

} // namespace qcert
