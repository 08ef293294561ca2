#pragma once

// Generators and constructed forms shared by the unit and acceptance tests.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qcert/forms.hpp"

namespace qcert::testing {

using Rng = std::mt19937_64;

inline long long uniform_int(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// num / den with |num| <= max_num and 1 <= den <= max_den.
inline Rational random_rational(Rng& rng, long long max_num, long long max_den) {
    return Rational(uniform_int(rng, -max_num, max_num), uniform_int(rng, 1, max_den));
}

inline MonicQuartic random_monic(Rng& rng, long long max_num = 1000, long long max_den = 1000) {
    return {random_rational(rng, max_num, max_den), random_rational(rng, max_num, max_den),
            random_rational(rng, max_num, max_den), random_rational(rng, max_num, max_den)};
}

/// (x^2 + p xy + q y^2)(x^2 + r xy + s y^2).
inline MonicQuartic quadratic_product(const Rational& p, const Rational& q, const Rational& r, const Rational& s) {
    return {p + r, q + s + p * r, p * s + q * r, q * s};
}

/// (x - r1 y)(x - r2 y)(x - r3 y)(x - r4 y).
inline MonicQuartic linear_product(const Rational& r1, const Rational& r2, const Rational& r3, const Rational& r4) {
    return quadratic_product(-(r1 + r2), r1 * r2, -(r3 + r4), r3 * r4);
}

/// (x^2 + p xy + q y^2)^2: always positive semidefinite.
inline MonicQuartic random_square(Rng& rng) {
    const Rational p = random_rational(rng, 30, 10);
    const Rational q = random_rational(rng, 30, 10);
    return quadratic_product(p, q, p, q);
}

/// Product of two real linear factors with a random quadratic: indefinite
/// whenever the two linear roots differ.
inline MonicQuartic random_indefinite(Rng& rng) {
    Rational r1 = random_rational(rng, 30, 10);
    Rational r2 = random_rational(rng, 30, 10);
    while (r2 == r1) {
        r2 = r2 + Rational(1, 3);
    }
    // x^2 + p xy + q y^2 with q > p^2 / 4 is positive definite.
    const Rational p = random_rational(rng, 30, 10);
    const Rational q = p * p / Rational(4) + Rational(uniform_int(rng, 1, 50), uniform_int(rng, 1, 10));
    return quadratic_product(-(r1 + r2), r1 * r2, p, q);
}

/// Positive definite quadratic factor x^2 + p xy + q y^2.
inline std::pair<Rational, Rational> random_pd_quadratic(Rng& rng) {
    const Rational p = random_rational(rng, 30, 10);
    return {p, p * p / Rational(4) + Rational(uniform_int(rng, 1, 50), uniform_int(rng, 1, 10))};
}

/// Draws one form from the mixed corpus: a third each of fully random,
/// squares, and real-root products.
inline MonicQuartic mixed_form(Rng& rng, std::size_t index) {
    switch (index % 3) {
    case 0:
        return random_monic(rng);
    case 1:
        return random_square(rng);
    default:
        return random_indefinite(rng);
    }
}

struct CaseExample {
    int expected_case;
    std::string label;
    MonicQuartic form;
};

/// One or more forms for each of the nine intersection cases.
inline std::vector<CaseExample> nine_case_suite() {
    return {
        {1, "(x^2-y^2)(x^2-4y^2)", quadratic_product(0, -1, 0, -4)},
        {2, "x^4+xy^3+y^4", {0, 0, 1, 1}},
        {3, "(x^2-y^2)(x^2+4y^2)", quadratic_product(0, -1, 0, 4)},
        {4, "(x-y)(x+y)(x-2y)^2", linear_product(1, -1, 2, 2)},
        {5, "x^4+x^3y+xy^3+y^4", {1, 0, 1, 1}},
        {6, "x^4+4x^3y+2x^2y^2-4xy^3+y^4", {4, 2, -4, 1}},
        {7, "x^4-8x^3y+26x^2y^2-40xy^3+25y^4", {-8, 26, -40, 25}},
        {7, "(x^2+y^2)^2", quadratic_product(0, 1, 0, 1)},
        {8, "(x-y)^3(x+3y)", linear_product(1, 1, 1, -3)},
        {9, "x^4+4x^3y+6x^2y^2+4xy^3+y^4", {4, 6, 4, 1}},
    };
}

} // namespace qcert::testing
