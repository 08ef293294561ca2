#pragma once

#include <array>
#include <concepts>
#include <utility>

#include "qcert/quadext.hpp"
#include "qcert/rational.hpp"

namespace qcert {

/// Scalars with exact ring arithmetic and exact sign: Rational, QuadExt.
template <class S>
concept ExactScalar = std::constructible_from<S, Rational> && requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { sign(a) } -> std::convertible_to<int>;
};

/// Symmetric 3x3 matrix; only the upper triangle is stored.
template <ExactScalar S>
struct Sym3Matrix {
    S m11, m12, m13, m22, m23, m33;

    /// Entry (i, j) with zero-based indices.
    const S& at(int i, int j) const {
        if (i > j) {
            std::swap(i, j);
        }
        static constexpr int offsets[3] = {0, 3, 5};
        const S* upper[6] = {&m11, &m12, &m13, &m22, &m23, &m33};
        return *upper[offsets[i] + (j - i)];
    }

    S det() const {
        return m11 * (m22 * m33 - m23 * m23) - m12 * (m12 * m33 - m23 * m13) +
               m13 * (m12 * m23 - m22 * m13);
    }

    /// The three 1x1 principal minors: m11, m22, m33.
    std::array<S, 3> minors1() const { return {m11, m22, m33}; }

    /// The three 2x2 principal minors on index sets {1,2}, {1,3}, {2,3}.
    std::array<S, 3> minors2() const {
        return {m11 * m22 - m12 * m12, m11 * m33 - m13 * m13, m22 * m33 - m23 * m23};
    }

    /// z^T M z.
    S quadratic_form(const std::array<S, 3>& z) const {
        const S two(Rational(2));
        return m11 * z[0] * z[0] + m22 * z[1] * z[1] + m33 * z[2] * z[2] +
               two * (m12 * z[0] * z[1] + m13 * z[0] * z[2] + m23 * z[1] * z[2]);
    }

    Sym3Matrix operator-() const { return {-m11, -m12, -m13, -m22, -m23, -m33}; }

    friend Sym3Matrix operator*(const S& scale, const Sym3Matrix& m) {
        return {scale * m.m11, scale * m.m12, scale * m.m13, scale * m.m22, scale * m.m23, scale * m.m33};
    }

    friend bool operator==(const Sym3Matrix& lhs, const Sym3Matrix& rhs) {
        return lhs.m11 == rhs.m11 && lhs.m12 == rhs.m12 && lhs.m13 == rhs.m13 && lhs.m22 == rhs.m22 &&
               lhs.m23 == rhs.m23 && lhs.m33 == rhs.m33;
    }
};

/// Lifts a rational matrix into Q(sqrt(d)).
inline Sym3Matrix<QuadExt> lift(const Sym3Matrix<Rational>& m) {
    return {m.m11, m.m12, m.m13, m.m22, m.m23, m.m33};
}

} // namespace qcert
