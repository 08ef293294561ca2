#include "qcert/positivity.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qcert {

namespace {

constexpr std::array<std::pair<Definiteness, std::string_view>, 6> kNames = {{
    {Definiteness::positive_definite, "positive-definite"},
    {Definiteness::positive_semidefinite, "positive-semidefinite"},
    {Definiteness::indefinite, "indefinite"},
    {Definiteness::negative_definite, "negative-definite"},
    {Definiteness::negative_semidefinite, "negative-semidefinite"},
    {Definiteness::identically_zero, "identically-zero"},
}};

Definiteness mirror(Definiteness cls) {
    switch (cls) {
    case Definiteness::positive_definite:
        return Definiteness::negative_definite;
    case Definiteness::positive_semidefinite:
        return Definiteness::negative_semidefinite;
    case Definiteness::negative_definite:
        return Definiteness::positive_definite;
    case Definiteness::negative_semidefinite:
        return Definiteness::positive_semidefinite;
    default:
        return cls;
    }
}

// Sign of a real binary quadratic form e2 x^2 + e1 xy + e0 y^2 on the positive side.
bool quadratic_psd(const Rational& e2, const Rational& e1, const Rational& e0) {
    return e2.sign() >= 0 && e0.sign() >= 0 && e1 * e1 <= Rational(4) * e2 * e0;
}

} // namespace

std::string_view to_string(Definiteness cls) {
    for (const auto& [value, name] : kNames) {
        if (value == cls) {
            return name;
        }
    }
    return "unknown";
}

Definiteness definiteness_from_string(std::string_view name) {
    for (const auto& [value, n] : kNames) {
        if (n == name) {
            return value;
        }
    }
    throw std::invalid_argument("unknown definiteness class '" + std::string(name) + "'");
}

MonicAnalysis analyze_monic(const MonicQuartic& m) {
    MonicAnalysis a{m, pencil_coeffs(m), {}, std::nullopt, minor_threshold(m), {}};
    a.lambda0 = critical_param(a.cubic);
    a.verdict.cls = Definiteness::indefinite;
    if (a.lambda0.is_real()) {
        const QuadExt& l0 = *a.lambda0.value;
        a.g_at_lambda0 = g_eval(a.cubic, l0);
        const int vs_threshold = (l0 - QuadExt(a.threshold)).sign();
        const int g_sign = a.g_at_lambda0->sign();
        if (vs_threshold > 0 && g_sign > 0) {
            a.verdict.cls = Definiteness::positive_definite;
        } else if (vs_threshold >= 0 && g_sign >= 0) {
            a.verdict.cls = Definiteness::positive_semidefinite;
        }
    }
    if (a.verdict.cls == Definiteness::indefinite) {
        a.verdict.witnesses = witness_search(m);
    } else {
        a.verdict.certificate = pencil_matrix(m, *a.lambda0.value);
    }
    return a;
}

Verdict decide_monic(const MonicQuartic& m) { return analyze_monic(m).verdict; }

PencilCubic negative_side_coeffs(const MonicQuartic& n) {
    const Rational quarter(1, 4);
    return {quarter * (-n.a1 * n.a1 - n.a1 * n.a2 * n.a3 + n.a0 * n.a3 * n.a3),
            -quarter * (Rational(4) * n.a0 + n.a2 * n.a2 + n.a1 * n.a3), -n.a2 / Rational(2)};
}

Sym3Matrix<QuadExt> negative_side_matrix(const MonicQuartic& n, const QuadExt& lambda0) {
    const QuadExt half(Rational(1, 2));
    return {QuadExt(-1),       half * QuadExt(n.a3), half * (QuadExt(n.a2) + lambda0),
            -lambda0,          half * QuadExt(n.a1), QuadExt(n.a0)};
}

Verdict decide_negative_side(const MonicQuartic& reduced) {
    // The original form is -x^4 + a3 x^3 y + ... with a_i = -reduced a_i.
    const MonicQuartic negated{-reduced.a3, -reduced.a2, -reduced.a1, -reduced.a0};
    const PencilCubic direct = negative_side_coeffs(negated);
    if (direct != pencil_coeffs(reduced)) {
        throw std::logic_error("negative-side pencil coefficients disagree with the reduced form");
    }
    Verdict verdict = decide_monic(reduced);
    verdict.cls = mirror(verdict.cls);
    verdict.certificate_scale = Rational(-1);
    if (verdict.certificate) {
        const QuadExt l0 = *critical_param(direct).value;
        if (negative_side_matrix(negated, l0) != -*verdict.certificate) {
            throw std::logic_error("negative-side certificate disagrees with the reduced form");
        }
    }
    if (verdict.witnesses) {
        std::swap(verdict.witnesses->positive, verdict.witnesses->negative);
    }
    return verdict;
}

Verdict decide_degenerate_leading(const Rational& e3, const Rational& e2, const Rational& e1,
                                  const Rational& e0) {
    const PlainQuartic f{Rational(0), e3, e2, e1, e0};
    Verdict verdict;
    if (e3.is_zero() && e2.is_zero() && e1.is_zero() && e0.is_zero()) {
        verdict.cls = Definiteness::identically_zero;
        verdict.certificate = Sym3Matrix<QuadExt>{0, 0, 0, 0, 0, 0};
        return verdict;
    }
    // f = y^2 (e2 x^2 + e1 xy + e0 y^2) when e3 = 0; x^4 is absent so f(1, 0) = 0.
    if (e3.is_zero()) {
        const Rational half_e1 = e1 / Rational(2);
        if (quadratic_psd(e2, e1, e0)) {
            verdict.cls = Definiteness::positive_semidefinite;
            verdict.certificate = Sym3Matrix<QuadExt>{0, 0, 0, e2, half_e1, e0};
            return verdict;
        }
        if (quadratic_psd(-e2, -e1, -e0)) {
            verdict.cls = Definiteness::negative_semidefinite;
            verdict.certificate = Sym3Matrix<QuadExt>{0, 0, 0, -e2, -half_e1, -e0};
            verdict.certificate_scale = Rational(-1);
            return verdict;
        }
    }
    verdict.cls = Definiteness::indefinite;
    verdict.witnesses = witness_search(f);
    return verdict;
}

Verdict decide(const NormalizedProblem& problem) {
    const PlainQuartic& f = problem.original;
    if (problem.degenerate_leading) {
        return decide_degenerate_leading(f.e3, f.e2, f.e1, f.e0);
    }
    Verdict verdict = problem.orientation == Orientation::positive_side ? decide_monic(*problem.form)
                                                                          : decide_negative_side(*problem.form);
    // f = e4 * reduced form = |e4| * (orientation sign) * z^T C z.
    verdict.certificate_scale = f.e4;
    return verdict;
}

Verdict decide(const PlainQuartic& plain) { return decide(from_plain_coeffs(plain)); }

} // namespace qcert
