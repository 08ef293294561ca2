#include "qcert/pencil.hpp"

namespace qcert {

PencilCubic pencil_coeffs(const MonicQuartic& m) {
    const Rational quarter(1, 4);
    return {quarter * (-m.a1 * m.a1 + m.a1 * m.a2 * m.a3 - m.a0 * m.a3 * m.a3),
            quarter * (Rational(4) * m.a0 - m.a2 * m.a2 - m.a1 * m.a3), m.a2 / Rational(2)};
}

Rational minor_threshold(const MonicQuartic& m) { return m.a3 * m.a3 / Rational(4); }

Polynomial as_polynomial(const PencilCubic& p) { return Polynomial{p.b0, p.b1, p.b2, Rational(-1, 4)}; }

namespace {

Rational radicand(const PencilCubic& p) { return Rational(3) * p.b1 + Rational(4) * p.b2 * p.b2; }

} // namespace

CriticalParam critical_param(const PencilCubic& p) {
    CriticalParam out{radicand(p), std::nullopt};
    if (out.radicand.sign() >= 0) {
        out.value = QuadExt(Rational(4, 3) * p.b2, Rational(2, 3), out.radicand);
    }
    return out;
}

std::optional<QuadExt> lower_stationary_point(const PencilCubic& p) {
    const Rational d = radicand(p);
    if (d.sign() < 0) {
        return std::nullopt;
    }
    return QuadExt(Rational(4, 3) * p.b2, Rational(-2, 3), d);
}

Rational discriminant_g(const PencilCubic& p) {
    const Rational d = radicand(p);
    const Rational t = Rational(27) * p.b0 + Rational(36) * p.b1 * p.b2 + Rational(32) * pow(p.b2, 3);
    return (Rational(16) * pow(d, 3) - t * t) / Rational(432);
}

std::pair<Rational, Rational> boundary_identity_check(const MonicQuartic& m) {
    const Rational at = g_eval(pencil_coeffs(m), minor_threshold(m));
    const Rational s = Rational(8) * m.a1 - Rational(4) * m.a2 * m.a3 + pow(m.a3, 3);
    return {at, -(s * s) / Rational(256)};
}

} // namespace qcert
