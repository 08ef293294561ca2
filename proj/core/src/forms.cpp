#include "qcert/forms.hpp"

#include <stdexcept>

namespace qcert {

std::string_view to_string(Orientation orientation) {
    return orientation == Orientation::positive_side ? "positive-side" : "negative-side";
}

NormalizedProblem from_plain_coeffs(const PlainQuartic& plain) {
    NormalizedProblem problem;
    problem.original = plain;
    const int lead = plain.e4.sign();
    if (lead == 0) {
        problem.degenerate_leading = true;
        return problem;
    }
    problem.orientation = lead > 0 ? Orientation::positive_side : Orientation::negative_side;
    problem.form = MonicQuartic{plain.e3 / plain.e4, plain.e2 / plain.e4, plain.e1 / plain.e4,
                                plain.e0 / plain.e4};
    return problem;
}

NormalizedProblem from_plain_coeffs(const Rational& e4, const Rational& e3, const Rational& e2,
                                    const Rational& e1, const Rational& e0) {
    return from_plain_coeffs(PlainQuartic{e4, e3, e2, e1, e0});
}

GeneralQuartic to_weighted(const MonicQuartic& m) {
    return {Rational(1), m.a3 / Rational(4), m.a2 / Rational(6), m.a1 / Rational(4), m.a0};
}

MonicQuartic from_weighted(const GeneralQuartic& v) {
    if (v.c0.is_zero()) {
        throw std::domain_error("from_weighted: leading coefficient c0 is zero");
    }
    return {Rational(4) * v.c1 / v.c0, Rational(6) * v.c2 / v.c0, Rational(4) * v.c3 / v.c0,
            v.c4 / v.c0};
}

PlainQuartic to_plain(const MonicQuartic& m) { return {Rational(1), m.a3, m.a2, m.a1, m.a0}; }

Rational evaluate(const PlainQuartic& f, const Rational& x, const Rational& y) {
    // Horner in x with powers of y folded in.
    const Rational y2 = y * y;
    return (((f.e4 * x + f.e3 * y) * x + f.e2 * y2) * x + f.e1 * y2 * y) * x + f.e0 * y2 * y2;
}

Rational evaluate(const MonicQuartic& m, const Rational& x, const Rational& y) {
    return evaluate(to_plain(m), x, y);
}

Rational evaluate(const GeneralQuartic& v, const Rational& x, const Rational& y) {
    return evaluate(PlainQuartic{v.c0, Rational(4) * v.c1, Rational(6) * v.c2, Rational(4) * v.c3, v.c4},
                    x, y);
}

Polynomial dehomogenize(const PlainQuartic& f) { return Polynomial{f.e0, f.e1, f.e2, f.e3, f.e4}; }

Polynomial dehomogenize(const MonicQuartic& m) { return dehomogenize(to_plain(m)); }

std::string to_string(const MonicQuartic& m) {
    return "(" + m.a3.to_string() + ", " + m.a2.to_string() + ", " + m.a1.to_string() + ", " +
           m.a0.to_string() + ")";
}

} // namespace qcert
