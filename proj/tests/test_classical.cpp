#include <doctest.h>

#include "qcert/classical.hpp"
#include "qcert/classifier.hpp"
#include "qcert/positivity.hpp"
#include "support.hpp"

using namespace qcert;
using qcert::testing::Rng;

TEST_CASE("quantities of reference forms") {
    const auto ex1 = classical_quantities({1, 0, 0, Rational(1, 4), 1});
    CHECK(ex1.G == Rational(1, 4));
    CHECK(ex1.H == Rational(0));
    CHECK(ex1.I == Rational(1));
    CHECK(ex1.J == Rational(-1, 16));
    CHECK(ex1.Delta == Rational(229, 256));

    const auto circle = classical_quantities({1, 0, Rational(1, 3), 0, 1});
    CHECK(circle.H == Rational(1, 3));
    CHECK(circle.I == Rational(4, 3));
    CHECK(circle.J == Rational(8, 27));
    CHECK(circle.Delta == Rational(0));
    CHECK(circle.G == Rational(0));
    CHECK(circle.aux == Rational(0));

    const auto x4 = classical_quantities({1, 0, 0, 0, 0});
    CHECK(x4.G == Rational(0));
    CHECK(x4.H == Rational(0));
    CHECK(x4.I == Rational(0));
    CHECK(x4.J == Rational(0));
    CHECK(x4.Delta == Rational(0));
}

TEST_CASE("positive definiteness by the classical conditions") {
    CHECK(classical_condition({1, 0, 0, Rational(1, 4), 1}) == 2);
    CHECK(classical_condition({1, 0, Rational(1, 3), 0, 1}) == 1);
    CHECK_FALSE(classical_is_pd({1, 0, Rational(-5, 6), 0, 4}));
    // (x^2 - y^2)(x^2 - 4y^2) vanishes at (1, 1).
    CHECK(evaluate(GeneralQuartic{1, 0, Rational(-5, 6), 0, 4}, 1, 1) == Rational(0));
    CHECK_THROWS_AS(classical_is_pd({0, 1, 0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(classical_is_pd({-1, 0, 0, 0, -1}), std::invalid_argument);
}

TEST_CASE("J is the Hankel determinant") {
    Rng rng(71);
    for (int i = 0; i < 500; ++i) {
        const GeneralQuartic v = to_weighted(qcert::testing::random_monic(rng, 100, 10));
        const Sym3Matrix<Rational> hankel{v.c0, v.c1, v.c2, v.c2, v.c3, v.c4};
        CHECK(classical_quantities(v).J == hankel.det());
    }
}

TEST_CASE("agreement with the pencil criterion") {
    Rng rng(73);
    int pd = 0;
    for (std::size_t i = 0; i < 3000; ++i) {
        const MonicQuartic m = qcert::testing::mixed_form(rng, i);
        const bool pencil_pd = decide_monic(m).cls == Definiteness::positive_definite;
        CHECK(classical_is_pd(to_weighted(m)) == pencil_pd);
        pd += pencil_pd ? 1 : 0;
    }
    CHECK(pd > 100);
}

TEST_CASE("products of two definite quadratics are positive definite") {
    Rng rng(79);
    for (int i = 0; i < 300; ++i) {
        const auto [p, q] = qcert::testing::random_pd_quadratic(rng);
        const auto [r, s] = qcert::testing::random_pd_quadratic(rng);
        CHECK(classical_is_pd(to_weighted(qcert::testing::quadratic_product(p, q, r, s))));
    }
}

TEST_CASE("negative Delta marks two real and two complex simple roots") {
    Rng rng(83);
    int negative = 0;
    for (int i = 0; i < 1000; ++i) {
        const MonicQuartic m = qcert::testing::random_monic(rng, 100, 10);
        const QuarticRootNature nature = quartic_root_nature(m);
        if (nature.real_simple + 2 * nature.complex_simple_pairs != 4) {
            continue;
        }
        const bool case3 = nature.real_simple == 2 && nature.complex_simple_pairs == 1;
        CHECK((classical_quantities(to_weighted(m)).Delta.sign() < 0) == case3);
        negative += case3 ? 1 : 0;
    }
    CHECK(negative > 100);
}
