#include "qcert/classical.hpp"

namespace qcert {

ClassicalQuantities classical_quantities(const GeneralQuartic& v) {
    const auto& [c0, c1, c2, c3, c4] = v;
    ClassicalQuantities q;
    q.G = c0 * c0 * c3 - Rational(3) * c0 * c1 * c2 + Rational(2) * c1 * c1 * c1;
    q.H = c0 * c2 - c1 * c1;
    q.I = c0 * c4 - Rational(4) * c1 * c3 + Rational(3) * c2 * c2;
    q.J = c0 * (c2 * c4 - c3 * c3) - c1 * (c1 * c4 - c3 * c2) + c2 * (c1 * c3 - c2 * c2);
    q.Delta = q.I * q.I * q.I - Rational(27) * q.J * q.J;
    q.aux = Rational(12) * q.H * q.H - c0 * c0 * q.I;
    return q;
}

int classical_condition(const GeneralQuartic& v) {
    if (v.c0.sign() <= 0) {
        throw std::invalid_argument("classical criterion requires c0 > 0, got " + v.c0.to_string());
    }
    const ClassicalQuantities q = classical_quantities(v);
    if (q.Delta.is_zero() && q.G.is_zero() && q.aux.is_zero() && q.H.sign() > 0) {
        return 1;
    }
    if (q.Delta.sign() > 0 && q.H.sign() >= 0) {
        return 2;
    }
    if (q.Delta.sign() > 0 && q.H.sign() < 0 && q.aux.sign() < 0) {
        return 3;
    }
    return 0;
}

bool classical_is_pd(const GeneralQuartic& v) { return classical_condition(v) != 0; }

} // namespace qcert
