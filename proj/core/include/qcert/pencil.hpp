#pragma once

/**
 * @file pencil.hpp
 * @brief The pencil of conics M(lambda) = A1 + lambda*A2 attached to a monic quartic.
 *
 * With z = [x^2, xy, y^2], every member satisfies z^T M(lambda) z = f(x, y),
 * and det M(lambda) is the cubic
 *
 *     g(lambda) = -1/4 lambda^3 + b2 lambda^2 + b1 lambda + b0.
 *
 * The larger stationary point of g,
 *
 *     lambda0 = (4 b2 + 2 sqrt(3 b1 + 4 b2^2)) / 3,
 *
 * is the member that certifies (semi)definiteness. It lives in Q(sqrt(d))
 * with d = 3 b1 + 4 b2^2, so everything here is exact.
 */

#include <optional>
#include <utility>

#include "qcert/forms.hpp"
#include "qcert/poly.hpp"
#include "qcert/quadext.hpp"
#include "qcert/sym3.hpp"

namespace qcert {

/// Coefficients of g(lambda) = -1/4 lambda^3 + b2 lambda^2 + b1 lambda + b0.
struct PencilCubic {
    Rational b0, b1, b2;

    friend bool operator==(const PencilCubic&, const PencilCubic&) = default;
};

/// b0 = (-a1^2 + a1 a2 a3 - a0 a3^2)/4, b1 = (4 a0 - a2^2 - a1 a3)/4, b2 = a2/2.
PencilCubic pencil_coeffs(const MonicQuartic& m);

/// a3^2 / 4: the lambda at which the leading 2x2 minor of M(lambda) vanishes.
Rational minor_threshold(const MonicQuartic& m);

/// M(lambda) = [[1, a3/2, (a2-lambda)/2], [a3/2, lambda, a1/2], [(a2-lambda)/2, a1/2, a0]].
template <ExactScalar S>
Sym3Matrix<S> pencil_matrix(const MonicQuartic& m, const S& lambda) {
    const S half(Rational(1, 2));
    return {S(Rational(1)), half * S(m.a3), half * (S(m.a2) - lambda),
            lambda,         half * S(m.a1), S(m.a0)};
}

/// g(lambda) by Horner's scheme in the scalar's field.
template <ExactScalar S>
S g_eval(const PencilCubic& p, const S& lambda) {
    return ((S(Rational(-1, 4)) * lambda + S(p.b2)) * lambda + S(p.b1)) * lambda + S(p.b0);
}

/// g'(lambda) = -3/4 lambda^2 + 2 b2 lambda + b1.
template <ExactScalar S>
S g_derivative_eval(const PencilCubic& p, const S& lambda) {
    return (S(Rational(-3, 4)) * lambda + S(Rational(2) * p.b2)) * lambda + S(p.b1);
}

/// g as a polynomial in lambda.
Polynomial as_polynomial(const PencilCubic& p);

/// lambda0, or the marker that it is not real (d < 0).
struct CriticalParam {
    Rational radicand;
    std::optional<QuadExt> value;

    bool is_real() const { return value.has_value(); }
};

CriticalParam critical_param(const PencilCubic& p);

/// (4 b2 - 2 sqrt(d)) / 3, the smaller stationary point; empty when d < 0.
std::optional<QuadExt> lower_stationary_point(const PencilCubic& p);

/// D(g) = [16 (3 b1 + 4 b2^2)^3 - (27 b0 + 36 b1 b2 + 32 b2^3)^2] / 432.
Rational discriminant_g(const PencilCubic& p);

/// (g(a3^2/4), -(8 a1 - 4 a2 a3 + a3^3)^2 / 256); the components agree for every form.
std::pair<Rational, Rational> boundary_identity_check(const MonicQuartic& m);

} // namespace qcert
