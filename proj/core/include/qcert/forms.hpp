#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qcert/poly.hpp"
#include "qcert/rational.hpp"

namespace qcert {

/// e4 x^4 + e3 x^3 y + e2 x^2 y^2 + e1 x y^3 + e0 y^4, as entered by a user.
struct PlainQuartic {
    Rational e4, e3, e2, e1, e0;

    friend bool operator==(const PlainQuartic&, const PlainQuartic&) = default;
};

/// x^4 + a3 x^3 y + a2 x^2 y^2 + a1 x y^3 + a0 y^4.
struct MonicQuartic {
    Rational a3, a2, a1, a0;

    friend bool operator==(const MonicQuartic&, const MonicQuartic&) = default;
};

/// c0 x^4 + 4 c1 x^3 y + 6 c2 x^2 y^2 + 4 c3 x y^3 + c4 y^4.
struct GeneralQuartic {
    Rational c0, c1, c2, c3, c4;

    friend bool operator==(const GeneralQuartic&, const GeneralQuartic&) = default;
};

enum class Orientation { positive_side, negative_side };

std::string_view to_string(Orientation orientation);

/**
 * A plain quartic reduced to monic shape.
 *
 * For e4 != 0 the monic form is f / e4, so that f = e4 * form everywhere:
 * a negative leading coefficient flips the problem onto the positive side
 * (the negativity of f is the positivity of the reduced form). For e4 == 0
 * no monic form exists and `degenerate_leading` is set.
 */
struct NormalizedProblem {
    PlainQuartic original;
    std::optional<MonicQuartic> form;
    Orientation orientation = Orientation::positive_side;
    bool degenerate_leading = false;
};

NormalizedProblem from_plain_coeffs(const PlainQuartic& plain);
NormalizedProblem from_plain_coeffs(const Rational& e4, const Rational& e3, const Rational& e2,
                                    const Rational& e1, const Rational& e0);

/// Monic form to binomially weighted coefficients (c0 = 1).
GeneralQuartic to_weighted(const MonicQuartic& m);

/// Inverse of to_weighted; a general form is divided through by c0, which
/// must be non-zero.
MonicQuartic from_weighted(const GeneralQuartic& v);

PlainQuartic to_plain(const MonicQuartic& m);

Rational evaluate(const MonicQuartic& m, const Rational& x, const Rational& y);
Rational evaluate(const PlainQuartic& f, const Rational& x, const Rational& y);
Rational evaluate(const GeneralQuartic& v, const Rational& x, const Rational& y);

/// f(t, 1) as a univariate polynomial in t.
Polynomial dehomogenize(const MonicQuartic& m);
Polynomial dehomogenize(const PlainQuartic& f);

std::string to_string(const MonicQuartic& m);

} // namespace qcert
