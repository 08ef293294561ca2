#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qcert/classical.hpp"
#include "qcert/classifier.hpp"
#include "qcert/oracle.hpp"
#include "qcert/pencil.hpp"

namespace qcert::cli {

using nlohmann::json;

namespace {

constexpr long double kOracleTolerance = 1e-6L;

bool is_definite(Definiteness cls) {
    return cls == Definiteness::positive_definite || cls == Definiteness::negative_definite;
}

bool is_positive_side_psd(Definiteness cls) {
    return cls == Definiteness::positive_definite || cls == Definiteness::positive_semidefinite;
}

bool is_negative_side_psd(Definiteness cls) {
    return cls == Definiteness::negative_definite || cls == Definiteness::negative_semidefinite;
}

PlainQuartic negated(const PlainQuartic& f) { return {-f.e4, -f.e3, -f.e2, -f.e1, -f.e0}; }

long double max_abs_coefficient(const PlainQuartic& f) {
    long double m = 1.0L;
    for (const Rational* c : {&f.e4, &f.e3, &f.e2, &f.e1, &f.e0}) {
        m = std::max(m, std::fabs(static_cast<long double>(c->to_double())));
    }
    return m;
}

json point_json(const Point& p, const PlainQuartic& f) {
    return {{"x", p.x.to_string()}, {"y", p.y.to_string()}, {"value", evaluate(f, p.x, p.y).to_string()}};
}

json certificate_json(const Sym3Matrix<QuadExt>& c, int precision) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) {
            row.push_back(quadext_json(c.at(i, j), precision));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// scale * z^T C z must reproduce the input coefficient by coefficient.
bool gram_identity_holds(const Sym3Matrix<QuadExt>& c, const Rational& scale, const PlainQuartic& f) {
    const QuadExt two(2);
    const QuadExt s(scale);
    return s * c.m11 == QuadExt(f.e4) && s * two * c.m12 == QuadExt(f.e3) &&
           s * (two * c.m13 + c.m22) == QuadExt(f.e2) && s * two * c.m23 == QuadExt(f.e1) &&
           s * c.m33 == QuadExt(f.e0);
}

void disagree(Report& report, const std::string& what) {
    report.agreement = false;
    report.json["diagnostic"].push_back(what);
}

void add_classical(Report& report, const MonicQuartic& m) {
    const GeneralQuartic v = to_weighted(m);
    const ClassicalQuantities q = classical_quantities(v);
    const bool pd = classical_is_pd(v);
    report.json["classical"] = {{"G", q.G.to_string()},         {"H", q.H.to_string()},
                                {"I", q.I.to_string()},         {"J", q.J.to_string()},
                                {"Delta", q.Delta.to_string()}, {"aux", q.aux.to_string()},
                                {"pd", pd}};
    // The classical test sees the monic reduction, which is PD exactly when f is PD or ND.
    const bool ok = pd == is_definite(report.verdict);
    report.json["agreement"]["classical"] = ok;
    if (!ok) {
        disagree(report, "classical criterion disagrees with the pencil verdict");
    }
}

void add_oracle(Report& report, const PlainQuartic& f, int samples) {
    const CircleMin low = circle_min_estimate(f, samples);
    const CircleMin high = circle_min_estimate(negated(f), samples);
    const long double tol = kOracleTolerance * max_abs_coefficient(f);
    report.json["oracle"] = {{"circle_min", static_cast<double>(low.value)},
                             {"circle_max", static_cast<double>(-high.value)},
                             {"argmin", static_cast<double>(low.angle)},
                             {"samples", samples},
                             {"tolerance", static_cast<double>(tol)}};
    bool ok = true;
    switch (report.verdict) {
    case Definiteness::positive_definite:
    case Definiteness::positive_semidefinite:
        ok = low.value >= -tol;
        break;
    case Definiteness::negative_definite:
    case Definiteness::negative_semidefinite:
        ok = high.value >= -tol;
        break;
    case Definiteness::indefinite:
        ok = low.value <= tol && high.value <= tol;
        break;
    case Definiteness::identically_zero:
        ok = std::fabs(low.value) <= tol && std::fabs(high.value) <= tol;
        break;
    }
    report.json["agreement"]["oracle"] = ok;
    if (!ok) {
        disagree(report, "circle sampling contradicts the verdict");
    }
}

void add_case(Report& report, const MonicQuartic& m, bool crosscheck) {
    const IntersectionCase c = classify_case(m);
    report.json["case"] = {{"id", c.id}, {"description", std::string(c.description)}};
    if (!crosscheck) {
        return;
    }
    bool ok = case_from_nature(quartic_root_nature(m)) == c.id && lambda0_facts_hold(c.id, m);
    const bool psd_case = c.id == 2 || c.id == 5 || c.id == 6 || c.id == 7 || c.id == 9;
    const bool pd_case = c.id == 2 || c.id == 7;
    const bool psd = report.verdict != Definiteness::indefinite;
    ok = ok && psd == psd_case && is_definite(report.verdict) == pd_case;
    report.json["agreement"]["case"] = ok;
    if (!ok) {
        disagree(report, "root-configuration case disagrees with the verdict or the quartic roots");
    }
}

void assemble(Report& report, const PlainQuartic& form, const ReportOptions& options) {
    const NormalizedProblem problem = from_plain_coeffs(form);
    const Verdict verdict = decide(problem);
    report.verdict = verdict.cls;
    json& j = report.json;
    j["verdict"] = std::string(to_string(verdict.cls));
    j["orientation"] = std::string(to_string(problem.orientation));
    j["degenerate_leading"] = problem.degenerate_leading;

    if (problem.form) {
        const MonicQuartic& m = *problem.form;
        const PencilCubic cubic = pencil_coeffs(m);
        const CriticalParam l0 = critical_param(cubic);
        j["reduced"] = {{"a3", m.a3.to_string()}, {"a2", m.a2.to_string()},
                        {"a1", m.a1.to_string()}, {"a0", m.a0.to_string()}};
        j["pencil"] = {{"b0", cubic.b0.to_string()}, {"b1", cubic.b1.to_string()},
                       {"b2", cubic.b2.to_string()}};
        if (l0.is_real()) {
            j["lambda0"] = quadext_json(*l0.value, options.precision);
            j["lambda0"]["real"] = true;
            j["g_lambda0"] = quadext_json(g_eval(cubic, *l0.value), options.precision);
        } else {
            j["lambda0"] = {{"real", false}, {"d", l0.radicand.to_string()}};
            j["g_lambda0"] = nullptr;
        }
        j["a3_sq_over_4"] = minor_threshold(m).to_string();
    } else {
        j["lambda0"] = nullptr;
        j["g_lambda0"] = nullptr;
        j["a3_sq_over_4"] = nullptr;
    }

    if (verdict.certificate) {
        j["certificate"] = certificate_json(*verdict.certificate, options.precision);
        j["certificate_scale"] = verdict.certificate_scale.to_string();
        bool ok = sylvester_psd(*verdict.certificate);
        if (is_definite(verdict.cls)) {
            ok = ok && sylvester_pd(*verdict.certificate);
        }
        ok = ok && gram_identity_holds(*verdict.certificate, verdict.certificate_scale, form);
        j["agreement"]["sylvester"] = ok;
        if (!ok) {
            disagree(report, "certificate fails the principal-minor test or does not reproduce the form");
        }
    } else {
        j["certificate"] = nullptr;
        j["certificate_scale"] = nullptr;
        j["agreement"]["sylvester"] = nullptr;
    }

    if (verdict.witnesses) {
        const bool ok = evaluate(form, verdict.witnesses->positive.x, verdict.witnesses->positive.y).sign() > 0 &&
                        evaluate(form, verdict.witnesses->negative.x, verdict.witnesses->negative.y).sign() < 0;
        j["witnesses"] = {{"positive", point_json(verdict.witnesses->positive, form)},
                          {"negative", point_json(verdict.witnesses->negative, form)}};
        if (!ok) {
            disagree(report, "witness points do not have the expected signs");
        }
    } else {
        j["witnesses"] = nullptr;
    }

    j["case"] = nullptr;
    j["classical"] = nullptr;
    j["oracle"] = nullptr;
    j["agreement"]["classical"] = nullptr;
    j["agreement"]["oracle"] = nullptr;
    j["agreement"]["case"] = nullptr;
    if (problem.form && options.include_case) {
        add_case(report, *problem.form, options.crosscheck);
    }
    if (options.crosscheck) {
        if (problem.form) {
            add_classical(report, *problem.form);
        }
        add_oracle(report, form, options.oracle_samples);
    }
    // Exact sign sanity on the two axes.
    const int at_x = form.e4.sign();
    const int at_y = form.e0.sign();
    if ((is_positive_side_psd(verdict.cls) && (at_x < 0 || at_y < 0)) ||
        (is_negative_side_psd(verdict.cls) && (at_x > 0 || at_y > 0))) {
        disagree(report, "verdict contradicts the sign of f on an axis");
    }
}

} // namespace

int exit_code_for(Definiteness cls) {
    switch (cls) {
    case Definiteness::positive_definite:
    case Definiteness::negative_definite:
        return exit_code::definite;
    case Definiteness::positive_semidefinite:
    case Definiteness::negative_semidefinite:
    case Definiteness::identically_zero:
        return exit_code::semidefinite;
    case Definiteness::indefinite:
        break;
    }
    return exit_code::indefinite;
}

json quadext_json(const QuadExt& value, int precision) {
    return {{"p", value.rat_part().to_string()},
            {"q", value.surd_part().to_string()},
            {"d", value.radicand().to_string()},
            {"decimal", value.to_decimal(precision)}};
}

QuadExt quadext_from_json(const json& j) {
    return QuadExt(Rational::parse(j.at("p").get<std::string>()), Rational::parse(j.at("q").get<std::string>()),
                   Rational::parse(j.at("d").get<std::string>()));
}

Report build_report(const PlainQuartic& form, const ReportOptions& options) {
    Report report;
    report.json["input"] = {{"e4", form.e4.to_string()}, {"e3", form.e3.to_string()},
                            {"e2", form.e2.to_string()}, {"e1", form.e1.to_string()},
                            {"e0", form.e0.to_string()}};
    report.json["agreement"] = json::object();
    try {
        assemble(report, form, options);
    } catch (const std::exception& e) {
        // ClassificationDefect, the negative-side checks, a failed witness search.
        disagree(report, e.what());
    }
    report.json["exit"] = report.exit_code = report.agreement ? exit_code_for(report.verdict) : exit_code::disagreement;
    return report;
}

void write_text(std::ostream& out, const Report& report) {
    const json& j = report.json;
    const json& in = j["input"];
    out << "form      " << in["e4"].get<std::string>() << " x^4 + " << in["e3"].get<std::string>() << " x^3 y + "
        << in["e2"].get<std::string>() << " x^2 y^2 + " << in["e1"].get<std::string>() << " x y^3 + "
        << in["e0"].get<std::string>() << " y^4\n";
    if (!j.contains("verdict")) {
        out << "verdict   (none)\n";
    } else {
        out << "verdict   " << j["verdict"].get<std::string>() << '\n';
    }
    if (j.contains("pencil")) {
        const json& b = j["pencil"];
        out << "g         -1/4 l^3 + (" << b["b2"].get<std::string>() << ") l^2 + (" << b["b1"].get<std::string>()
            << ") l + (" << b["b0"].get<std::string>() << ")\n";
    }
    const auto print_ext = [&](const char* label, const json& v) {
        if (v.is_null()) {
            return;
        }
        if (v.contains("real") && !v["real"].get<bool>()) {
            out << label << "not real (d = " << v["d"].get<std::string>() << ")\n";
            return;
        }
        const QuadExt value = quadext_from_json(v);
        out << label << value.to_string() << "  ~ " << v["decimal"].get<std::string>() << '\n';
    };
    if (j.contains("lambda0")) {
        print_ext("lambda0   ", j["lambda0"]);
        print_ext("g(lambda0) ", j["g_lambda0"]);
    }
    if (j.contains("a3_sq_over_4") && !j["a3_sq_over_4"].is_null()) {
        out << "a3^2/4    " << j["a3_sq_over_4"].get<std::string>() << '\n';
    }
    if (j.contains("case") && !j["case"].is_null()) {
        out << "case      " << j["case"]["id"].get<int>() << " (" << j["case"]["description"].get<std::string>()
            << ")\n";
    }
    if (j.contains("certificate") && !j["certificate"].is_null()) {
        out << "certificate (f = " << j["certificate_scale"].get<std::string>() << " * z^T C z, z = [x^2, xy, y^2])\n";
        for (const auto& row : j["certificate"]) {
            out << "  [";
            bool first = true;
            for (const auto& entry : row) {
                out << (first ? " " : ", ") << quadext_from_json(entry).to_string();
                first = false;
            }
            out << " ]\n";
        }
    }
    if (j.contains("witnesses") && !j["witnesses"].is_null()) {
        for (const char* which : {"positive", "negative"}) {
            const json& w = j["witnesses"][which];
            out << "witness   f(" << w["x"].get<std::string>() << ", " << w["y"].get<std::string>()
                << ") = " << w["value"].get<std::string>() << '\n';
        }
    }
    if (j.contains("classical") && !j["classical"].is_null()) {
        out << "classical pd = " << (j["classical"]["pd"].get<bool>() ? "yes" : "no")
            << ", Delta = " << j["classical"]["Delta"].get<std::string>() << '\n';
    }
    if (j.contains("oracle") && !j["oracle"].is_null()) {
        out << "oracle    min on unit circle ~ " << j["oracle"]["circle_min"].get<double>() << " ("
            << j["oracle"]["samples"].get<int>() << " samples)\n";
    }
    out << "checks    ";
    bool first = true;
    for (const auto& [name, value] : j["agreement"].items()) {
        out << (first ? "" : ", ") << name << '=' << (value.is_null() ? "skipped" : value.get<bool>() ? "ok" : "FAILED");
        first = false;
    }
    out << '\n';
    if (j.contains("diagnostic")) {
        for (const auto& d : j["diagnostic"]) {
            out << "error     " << d.get<std::string>() << '\n';
        }
    }
}

} // namespace qcert::cli
