#pragma once

/**
 * @file oracle.hpp
 * @brief Sampling oracle on the unit circle and exact sign witnesses.
 *
 * circle_min_estimate() is advisory only: it runs in long double and is
 * never used to decide a boundary case. witness_search() is exact.
 */

#include "qcert/forms.hpp"

namespace qcert {

struct Point {
    Rational x;
    Rational y;
};

/// Points where the form is strictly positive and strictly negative.
struct Witnesses {
    Point positive;
    Point negative;
};

struct CircleMin {
    long double value = 0; ///< min of f(cos t, sin t)
    long double angle = 0; ///< argmin t in [0, 2 pi)
    int samples = 0;
};

/// Samples f(cos t, sin t) at n equally spaced angles, then refines the best
/// local minima by golden-section search. Requires n >= 8.
CircleMin circle_min_estimate(const PlainQuartic& f, int samples);
CircleMin circle_min_estimate(const MonicQuartic& m, int samples);

/// Rational points with f > 0 and f < 0. Tries the rationalized circle
/// minimum first, then falls back to exact root isolation of f(t, 1).
/// Throws std::invalid_argument when f takes only one sign.
Witnesses witness_search(const PlainQuartic& f);
Witnesses witness_search(const MonicQuartic& m);

} // namespace qcert
