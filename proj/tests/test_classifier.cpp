#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qcert/classifier.hpp"
#include "qcert/oracle.hpp"
#include "qcert/positivity.hpp"
#include "support.hpp"

using namespace qcert;
using qcert::testing::Rng;

namespace {

Polynomial power(const Polynomial& p, int k) {
    Polynomial result{1};
    for (int i = 0; i < k; ++i) {
        result = result * p;
    }
    return result;
}

// Every reported root really is a root of g with exactly the reported multiplicity.
void check_profile(const PencilCubic& cubic, const CubicRootProfile& profile) {
    const Polynomial g = as_polynomial(cubic);
    CHECK(profile.total_multiplicity() == 3);
    CHECK(profile.real_roots.size() + (profile.conjugate_pair ? 2u : 0u) <= 3u);
    for (std::size_t i = 0; i < profile.real_roots.size(); ++i) {
        const CubicRealRoot& root = profile.real_roots[i];
        CHECK(divmod(g, power(root.factor, root.multiplicity)).second.is_zero());
        CHECK_FALSE(divmod(g, power(root.factor, root.multiplicity + 1)).second.is_zero());
        if (root.exact) {
            Polynomial d = g;
            for (int k = 0; k < root.multiplicity; ++k) {
                CHECK(d(*root.exact).is_zero());
                d = d.derivative();
            }
            CHECK_FALSE(d(*root.exact).is_zero());
        } else {
            const int lo = root.factor(root.interval.lo).sign();
            const int hi = root.factor(root.interval.hi).sign();
            CHECK(lo * hi < 0);
        }
        if (i > 0) {
            CHECK(profile.real_roots[i - 1].interval.hi <= root.interval.lo);
        }
    }
}

} // namespace

TEST_CASE("cubic root profiles") {
    const auto ex4 = cubic_root_profile({-16, 4, 1});
    REQUIRE(ex4.real_roots.size() == 2);
    CHECK(ex4.real_roots[0].exact == Rational(-4));
    CHECK(ex4.real_roots[0].multiplicity == 1);
    CHECK(ex4.real_roots[1].exact == Rational(4));
    CHECK(ex4.real_roots[1].multiplicity == 2);
    CHECK_FALSE(ex4.conjugate_pair);

    const auto ex5 = cubic_root_profile({16, -12, 3});
    REQUIRE(ex5.real_roots.size() == 1);
    CHECK(ex5.real_roots[0].exact == Rational(4));
    CHECK(ex5.real_roots[0].multiplicity == 3);

    const auto zero = cubic_root_profile({0, 0, 0});
    REQUIRE(zero.real_roots.size() == 1);
    CHECK(zero.real_roots[0].exact == Rational(0));
    CHECK(zero.real_roots[0].multiplicity == 3);

    // x^4 + xy^3 + y^4: three distinct irrational roots.
    const auto ex1 = cubic_root_profile({Rational(-1, 4), 1, 0});
    CHECK(ex1.real_roots.size() == 3);
    CHECK(ex1.rational_roots().empty());
    CHECK(ex1.irrational_real_count() == 3);
    check_profile({Rational(-1, 4), 1, 0}, ex1);
}

TEST_CASE("nine-case suite") {
    for (const auto& example : qcert::testing::nine_case_suite()) {
        CAPTURE(example.label);
        CHECK(classify_case(example.form).id == example.expected_case);
        CHECK(case_from_nature(quartic_root_nature(example.form)) == example.expected_case);
        CHECK(lambda0_facts_hold(example.expected_case, example.form));
        const auto profile = cubic_root_profile(pencil_coeffs(example.form));
        check_profile(pencil_coeffs(example.form), profile);
        CHECK(degenerate_member_lemmas_hold(example.form, profile));
        CHECK_FALSE(case_description(example.expected_case).empty());
    }
}

TEST_CASE("root natures of worked examples") {
    const auto ex3 = quartic_root_nature({1, 0, 1, 1});
    CHECK(ex3 == QuarticRootNature{0, 1, 0, 0, 1, 0});
    const auto ex4 = quartic_root_nature({4, 2, -4, 1});
    CHECK(ex4 == QuarticRootNature{0, 2, 0, 0, 0, 0});
    const auto c1 = quartic_root_nature({0, -5, 0, 4});
    CHECK(c1 == QuarticRootNature{4, 0, 0, 0, 0, 0});
    CHECK(quartic_root_nature({-8, 26, -40, 25}) == QuarticRootNature{0, 0, 0, 0, 0, 1});
    CHECK(quartic_root_nature({4, 6, 4, 1}) == QuarticRootNature{0, 0, 0, 1, 0, 0});
    CHECK(classify_case({0, 0, 1, 1}).id == 2);
    CHECK(classify_case({-8, 26, -40, 25}).id == 7);
    CHECK(classify_case({4, 6, 4, 1}).id == 9);
}

TEST_CASE("natures that do not describe a real quartic are rejected") {
    CHECK_THROWS_AS(case_from_nature({1, 0, 0, 0, 0, 0}), ClassificationDefect);
    CHECK_THROWS_AS(case_from_nature({0, 0, 0, 0, 0, 0}), ClassificationDefect);
}

TEST_CASE("constructed root patterns") {
    Rng rng(89);
    for (int i = 0; i < 300; ++i) {
        const Rational r1 = qcert::testing::random_rational(rng, 20, 5);
        Rational r2 = qcert::testing::random_rational(rng, 20, 5);
        if (r2 == r1) {
            r2 += Rational(1, 7);
        }
        const auto [p, q] = qcert::testing::random_pd_quadratic(rng);
        auto [r, s] = qcert::testing::random_pd_quadratic(rng);
        if (r == p && s == q) {
            s += Rational(1);
        }
        const MonicQuartic quad_double = qcert::testing::quadratic_product(p, q, p, q);
        CHECK(classify_case(quad_double).id == 7);
        CHECK(classify_case(qcert::testing::quadratic_product(p, q, r, s)).id == 2);
        CHECK(classify_case(qcert::testing::linear_product(r1, r1, r2, r2)).id == 6);
        CHECK(classify_case(qcert::testing::linear_product(r1, r1, r1, r2)).id == 8);
        CHECK(classify_case(qcert::testing::linear_product(r2, r2, r2, r2)).id == 9);
        const MonicQuartic double_and_pair = qcert::testing::quadratic_product(-(r1 + r1), r1 * r1, p, q);
        CHECK(classify_case(double_and_pair).id == 5);
        const MonicQuartic real_pair_and_complex = qcert::testing::quadratic_product(-(r1 + r2), r1 * r2, p, q);
        CHECK(classify_case(real_pair_and_complex).id == 3);
    }
}

TEST_CASE("random forms: both classification routes agree") {
    Rng rng(97);
    for (std::size_t i = 0; i < 2000; ++i) {
        const MonicQuartic m = qcert::testing::mixed_form(rng, i);
        const PencilCubic cubic = pencil_coeffs(m);
        const CubicRootProfile profile = cubic_root_profile(cubic);
        check_profile(cubic, profile);
        const int id = classify_case(m, profile).id;
        CHECK(case_from_nature(quartic_root_nature(m)) == id);
        CHECK(lambda0_facts_hold(id, m));
        CHECK(degenerate_member_lemmas_hold(m, profile));
    }
}

TEST_CASE("degenerate members") {
    // (x^2 - y^2)(x^2 - 4y^2): g has three rational roots.
    const MonicQuartic c1{0, -5, 0, 4};
    const auto profile = cubic_root_profile(pencil_coeffs(c1));
    for (const auto& [lambda, mult] : profile.rational_roots()) {
        const DegenerateMember member = classify_member(c1, lambda);
        CHECK(member.rank == 2);
        CHECK(member.kind == MemberKind::real_line_pair);
        CHECK(lambda <= minor_threshold(c1));
    }
    // (x + y)^4 at lambda = 4: a repeated line.
    const DegenerateMember ex5 = classify_member({4, 6, 4, 1}, Rational(4));
    CHECK(ex5.rank == 1);
    CHECK(ex5.kind == MemberKind::repeated_line);
    CHECK(classify_member({0, 0, 1, 1}, Rational(1)).kind == MemberKind::nondegenerate);
    CHECK(to_string(MemberKind::conjugate_line_pair) != to_string(MemberKind::real_line_pair));
}

TEST_CASE("circle minimum estimate") {
    const auto circle = circle_min_estimate(qcert::testing::quadratic_product(0, 1, 0, 1), 64);
    CHECK(std::fabs(static_cast<double>(circle.value) - 1.0) < 1e-12);

    const auto ex5 = circle_min_estimate(MonicQuartic{4, 6, 4, 1}, 10000);
    CHECK(std::fabs(static_cast<double>(ex5.value)) < 1e-9);
    const double angle = static_cast<double>(ex5.angle);
    const double three_quarter = 3 * std::numbers::pi / 4;
    CHECK((std::fabs(angle - three_quarter) < 1e-4 || std::fabs(angle - three_quarter - std::numbers::pi) < 1e-4));

    CHECK(circle_min_estimate(MonicQuartic{0, -5, 0, 4}, 10000).value < 0);
    CHECK_THROWS_AS(circle_min_estimate(MonicQuartic{0, 0, 0, 0}, 7), std::invalid_argument);

    // Refinement never does worse than dense plain sampling.
    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        const MonicQuartic m = qcert::testing::random_monic(rng, 100, 10);
        const auto est = circle_min_estimate(m, 4096);
        const auto f = to_plain(m);
        double brute = 1e300;
        for (int k = 0; k < 20000; ++k) {
            const double t = 2 * std::numbers::pi * k / 20000;
            const double c = std::cos(t), s = std::sin(t);
            const double v = f.e4.to_double() * std::pow(c, 4) + f.e3.to_double() * std::pow(c, 3) * s +
                             f.e2.to_double() * c * c * s * s + f.e1.to_double() * c * std::pow(s, 3) +
                             f.e0.to_double() * std::pow(s, 4);
            brute = std::min(brute, v);
        }
        CHECK(static_cast<double>(est.value) <= brute + 1e-9 * std::max(1.0, std::fabs(brute)));
    }
}

TEST_CASE("witness search") {
    const auto w1 = witness_search(MonicQuartic{0, -5, 0, 4});
    CHECK(evaluate(MonicQuartic{0, -5, 0, 4}, w1.positive.x, w1.positive.y).sign() > 0);
    CHECK(evaluate(MonicQuartic{0, -5, 0, 4}, w1.negative.x, w1.negative.y).sign() < 0);
    CHECK(evaluate(MonicQuartic{0, -5, 0, 4}, 3, 2) == Rational(-35));

    const auto w2 = witness_search(MonicQuartic{0, 0, 0, -1});
    CHECK(w2.positive.x == Rational(1));
    CHECK(w2.positive.y == Rational(0));
    CHECK(w2.negative.x == Rational(0));
    CHECK(w2.negative.y == Rational(1));

    const auto w3 = witness_search(MonicQuartic{0, 0, 0, Rational(-1, 100)});
    CHECK(w3.negative.x == Rational(0));

    CHECK_THROWS_AS(witness_search(MonicQuartic{4, 6, 4, 1}), std::invalid_argument);

    // Narrow negative dip: (x - y)(x - (1 + 10^-9) y)(x^2 + y^2).
    const MonicQuartic narrow = qcert::testing::quadratic_product(-(Rational(2) + Rational(1, 1000000000)),
                                                                  Rational(1) + Rational(1, 1000000000), 0, 1);
    const auto w4 = witness_search(narrow);
    CHECK(evaluate(narrow, w4.negative.x, w4.negative.y).sign() < 0);
    CHECK(evaluate(narrow, w4.positive.x, w4.positive.y).sign() > 0);
}
