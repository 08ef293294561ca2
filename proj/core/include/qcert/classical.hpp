#pragma once

/**
 * @file classical.hpp
 * @brief The discriminant-based positive-definiteness test for
 *        V = c0 x^4 + 4 c1 x^3 y + 6 c2 x^2 y^2 + 4 c3 x y^3 + c4 y^4.
 *
 * Used only as an independent oracle against the pencil criterion.
 */

#include <stdexcept>

#include "qcert/forms.hpp"

namespace qcert {

struct ClassicalQuantities {
    Rational G;     ///< c0^2 c3 - 3 c0 c1 c2 + 2 c1^3
    Rational H;     ///< c0 c2 - c1^2
    Rational I;     ///< c0 c4 - 4 c1 c3 + 3 c2^2
    Rational J;     ///< det [[c0,c1,c2],[c1,c2,c3],[c2,c3,c4]]
    Rational Delta; ///< I^3 - 27 J^2
    Rational aux;   ///< 12 H^2 - c0^2 I
};

ClassicalQuantities classical_quantities(const GeneralQuartic& v);

/// Which of the three alternatives accepted the form (0 when none did).
int classical_condition(const GeneralQuartic& v);

/// True iff V is positive definite. Requires c0 > 0 (std::invalid_argument otherwise).
bool classical_is_pd(const GeneralQuartic& v);

} // namespace qcert
