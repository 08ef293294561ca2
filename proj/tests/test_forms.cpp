#include <doctest.h>

#include "qcert/forms.hpp"
#include "support.hpp"

using namespace qcert;
using qcert::testing::random_rational;
using qcert::testing::Rng;

namespace {

// Direct expansion without Horner's scheme.
Rational expand(const PlainQuartic& f, const Rational& x, const Rational& y) {
    return f.e4 * pow(x, 4) + f.e3 * pow(x, 3) * y + f.e2 * pow(x, 2) * pow(y, 2) + f.e1 * x * pow(y, 3) +
           f.e0 * pow(y, 4);
}

} // namespace

TEST_CASE("normalization of worked examples") {
    const auto ex1 = from_plain_coeffs(1, 0, 0, 1, 1);
    REQUIRE(ex1.form);
    CHECK(*ex1.form == MonicQuartic{0, 0, 1, 1});
    CHECK(ex1.orientation == Orientation::positive_side);
    CHECK_FALSE(ex1.degenerate_leading);

    const auto scaled = from_plain_coeffs(2, 0, 0, 2, 2);
    CHECK(*scaled.form == MonicQuartic{0, 0, 1, 1});
    CHECK(scaled.orientation == Orientation::positive_side);

    const auto ex6 = from_plain_coeffs(-1, 6, -13, 24, -36);
    CHECK(*ex6.form == MonicQuartic{-6, 13, -24, 36});
    CHECK(ex6.orientation == Orientation::negative_side);

    const auto flat = from_plain_coeffs(0, 1, 2, 3, 4);
    CHECK(flat.degenerate_leading);
    CHECK_FALSE(flat.form.has_value());
    CHECK(flat.original == PlainQuartic{0, 1, 2, 3, 4});
}

TEST_CASE("weighted conversion") {
    CHECK(to_weighted({0, 0, 1, 1}) == GeneralQuartic{1, 0, 0, Rational(1, 4), 1});
    CHECK(to_weighted({0, 0, 0, 0}) == GeneralQuartic{1, 0, 0, 0, 0});
    CHECK(to_weighted({4, 6, 4, 1}) == GeneralQuartic{1, 1, 1, 1, 1});
    CHECK(from_weighted({2, 2, 2, 2, 2}) == MonicQuartic{4, 6, 4, 1});
    CHECK_THROWS_AS(from_weighted({0, 1, 1, 1, 1}), std::domain_error);

    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        const MonicQuartic m = qcert::testing::random_monic(rng);
        CHECK(from_weighted(to_weighted(m)) == m);
        const Rational x = random_rational(rng, 50, 9);
        const Rational y = random_rational(rng, 50, 9);
        CHECK(evaluate(to_weighted(m), x, y) == evaluate(m, x, y));
    }
}

TEST_CASE("evaluation") {
    const MonicQuartic ex1{0, 0, 1, 1};
    CHECK(evaluate(ex1, 1, 1) == Rational(3));
    CHECK(evaluate(MonicQuartic{4, 6, 4, 1}, 1, -1) == Rational(0));
    Rng rng(37);
    for (int i = 0; i < 500; ++i) {
        const MonicQuartic m = qcert::testing::random_monic(rng);
        CHECK(evaluate(m, 1, 0) == Rational(1));
        const Rational x = random_rational(rng, 100, 20);
        Rational y = random_rational(rng, 100, 20);
        if (y.is_zero()) {
            y = Rational(1);
        }
        CHECK(evaluate(m, x, y) == expand(to_plain(m), x, y));
        CHECK(evaluate(m, x, y) == pow(y, 4) * dehomogenize(m)(x / y));
    }
}

TEST_CASE("orientation soundness") {
    Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        const PlainQuartic f{random_rational(rng, 100, 10), random_rational(rng, 100, 10),
                             random_rational(rng, 100, 10), random_rational(rng, 100, 10),
                             random_rational(rng, 100, 10)};
        const auto problem = from_plain_coeffs(f);
        const Rational x = random_rational(rng, 30, 7);
        const Rational y = random_rational(rng, 30, 7);
        if (f.e4.is_zero()) {
            CHECK(problem.degenerate_leading);
            continue;
        }
        const Rational sign_factor(problem.orientation == Orientation::positive_side ? 1 : -1);
        CHECK(problem.orientation == (f.e4.sign() > 0 ? Orientation::positive_side : Orientation::negative_side));
        CHECK(evaluate(f, x, y) == f.e4.abs() * sign_factor * evaluate(*problem.form, x, y));
    }
}

TEST_CASE("rendering") {
    CHECK(to_string(MonicQuartic{0, Rational(-1, 2), 1, 1}) == "(0, -1/2, 1, 1)");
    CHECK(to_string(Orientation::negative_side) != to_string(Orientation::positive_side));
    CHECK(dehomogenize(PlainQuartic{1, 2, 3, 4, 5}) == Polynomial{5, 4, 3, 2, 1});
}
