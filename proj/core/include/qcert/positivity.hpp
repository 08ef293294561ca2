#pragma once

/**
 * @file positivity.hpp
 * @brief Definiteness decisions for binary quartic forms.
 *
 * A monic form f is positive semidefinite iff lambda0 is real,
 * lambda0 >= a3^2/4 and g(lambda0) >= 0; it is positive definite iff both
 * inequalities are strict. In those cases M(lambda0) is a positive
 * (semi)definite Gram matrix with z^T M(lambda0) z = f for z = [x^2, xy, y^2],
 * and it is returned as the certificate.
 *
 * Negative leading coefficients are handled by flipping f onto the positive
 * side; forms with zero x^4 coefficient go through a separate path.
 */

#include <optional>
#include <string_view>

#include "qcert/forms.hpp"
#include "qcert/oracle.hpp"
#include "qcert/pencil.hpp"
#include "qcert/sym3.hpp"

namespace qcert {

enum class Definiteness {
    positive_definite,
    positive_semidefinite, ///< semidefinite but not definite
    indefinite,
    negative_definite,
    negative_semidefinite, ///< semidefinite but not definite
    identically_zero,
};

std::string_view to_string(Definiteness cls);

/// Inverse of to_string; std::invalid_argument on unknown names.
Definiteness definiteness_from_string(std::string_view name);

/**
 * Outcome of a decision.
 *
 * When present, `certificate` C is positive semidefinite and the input form
 * equals certificate_scale * z^T C z. For monic input the scale is 1 and C
 * is M(lambda0).
 */
struct Verdict {
    Definiteness cls = Definiteness::indefinite;
    std::optional<Sym3Matrix<QuadExt>> certificate;
    Rational certificate_scale{1};
    std::optional<Witnesses> witnesses;
};

/// All leading principal minors > 0.
template <ExactScalar S>
bool sylvester_pd(const Sym3Matrix<S>& m) {
    return sign(m.m11) > 0 && sign(m.minors2()[0]) > 0 && sign(m.det()) > 0;
}

/// All seven principal minors >= 0.
template <ExactScalar S>
bool sylvester_psd(const Sym3Matrix<S>& m) {
    for (const auto& minor : m.minors1()) {
        if (sign(minor) < 0) {
            return false;
        }
    }
    for (const auto& minor : m.minors2()) {
        if (sign(minor) < 0) {
            return false;
        }
    }
    return sign(m.det()) >= 0;
}

/// Everything computed on the way to a monic verdict.
struct MonicAnalysis {
    MonicQuartic form;
    PencilCubic cubic;
    CriticalParam lambda0;
    std::optional<QuadExt> g_at_lambda0;
    Rational threshold; ///< a3^2 / 4
    Verdict verdict;
};

MonicAnalysis analyze_monic(const MonicQuartic& m);

Verdict decide_monic(const MonicQuartic& m);

/// g coefficients written directly in the coefficients of
/// -x^4 + a3 x^3 y + a2 x^2 y^2 + a1 x y^3 + a0 y^4.
PencilCubic negative_side_coeffs(const MonicQuartic& negated);

/// The negative semidefinite matrix for the negated form at `lambda0`:
/// [[-1, a3/2, (a2+l)/2], [a3/2, -l, a1/2], [(a2+l)/2, a1/2, a0]].
Sym3Matrix<QuadExt> negative_side_matrix(const MonicQuartic& negated, const QuadExt& lambda0);

/// `reduced` is f / e4 for a form with e4 < 0. Maps PD/PSD of the reduced
/// form to ND/NSD of the original and cross-checks the direct
/// negative-side formulas (std::logic_error on mismatch).
Verdict decide_negative_side(const MonicQuartic& reduced);

/// Forms e3 x^3 y + e2 x^2 y^2 + e1 x y^3 + e0 y^4 (no x^4 term).
Verdict decide_degenerate_leading(const Rational& e3, const Rational& e2, const Rational& e1,
                                  const Rational& e0);

/// Full decision for any plain quartic.
Verdict decide(const NormalizedProblem& problem);
Verdict decide(const PlainQuartic& plain);

} // namespace qcert
