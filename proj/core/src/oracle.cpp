#include "qcert/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qcert {

namespace {

struct FloatQuartic {
    long double e4, e3, e2, e1, e0;

    long double operator()(long double t) const {
        const long double c = std::cos(t);
        const long double s = std::sin(t);
        return (((e4 * c + e3 * s) * c + e2 * s * s) * c + e1 * s * s * s) * c + e0 * s * s * s * s;
    }
};

FloatQuartic to_float(const PlainQuartic& f) {
    return {static_cast<long double>(f.e4.to_double()), static_cast<long double>(f.e3.to_double()),
            static_cast<long double>(f.e2.to_double()), static_cast<long double>(f.e1.to_double()),
            static_cast<long double>(f.e0.to_double())};
}

std::pair<long double, long double> golden_section(const FloatQuartic& f, long double lo, long double hi) {
    const long double inv_phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    long double a = hi - inv_phi * (hi - lo);
    long double b = lo + inv_phi * (hi - lo);
    long double fa = f(a);
    long double fb = f(b);
    for (int iter = 0; iter < 96 && hi - lo > 1e-18L; ++iter) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = f(b);
        }
    }
    return fa < fb ? std::pair{fa, a} : std::pair{fb, b};
}

// Rational approximation of cos/sin with a 2^-40 grid.
Rational dyadic(long double value) {
    const long double scaled = std::round(value * 1099511627776.0L);
    return Rational(static_cast<long long>(scaled), 1099511627776LL);
}

} // namespace

CircleMin circle_min_estimate(const PlainQuartic& form, int samples) {
    if (samples < 8) {
        throw std::invalid_argument("circle_min_estimate needs at least 8 samples");
    }
    const FloatQuartic f = to_float(form);
    const long double step = 2.0L * std::numbers::pi_v<long double> / samples;
    std::vector<long double> values(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        values[static_cast<std::size_t>(i)] = f(step * i);
    }
    std::vector<int> minima;
    for (int i = 0; i < samples; ++i) {
        const long double prev = values[static_cast<std::size_t>((i + samples - 1) % samples)];
        const long double next = values[static_cast<std::size_t>((i + 1) % samples)];
        const long double here = values[static_cast<std::size_t>(i)];
        if (here <= prev && here <= next) {
            minima.push_back(i);
        }
    }
    std::sort(minima.begin(), minima.end(), [&](int a, int b) {
        return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
    });
    // A degree-4 trigonometric polynomial has at most four local minima per period.
    if (minima.size() > 8) {
        minima.resize(8);
    }

    CircleMin best{values[0], 0.0L, samples};
    for (int i : minima) {
        const auto [value, angle] = golden_section(f, step * (i - 1), step * (i + 1));
        if (value < best.value) {
            best.value = value;
            best.angle = angle;
        }
        if (values[static_cast<std::size_t>(i)] < best.value) {
            best.value = values[static_cast<std::size_t>(i)];
            best.angle = step * i;
        }
    }
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    best.angle = std::fmod(best.angle + two_pi, two_pi);
    return best;
}

CircleMin circle_min_estimate(const MonicQuartic& m, int samples) {
    return circle_min_estimate(to_plain(m), samples);
}

Witnesses witness_search(const PlainQuartic& f) {
    std::optional<Point> positive;
    std::optional<Point> negative;
    const auto consider = [&](Rational x, Rational y) {
        const int s = evaluate(f, x, y).sign();
        if (s > 0 && !positive) {
            positive = Point{std::move(x), std::move(y)};
        } else if (s < 0 && !negative) {
            negative = Point{std::move(x), std::move(y)};
        }
        return positive && negative;
    };

    if (consider(Rational(1), Rational(0)) || consider(Rational(0), Rational(1))) {
        return {*positive, *negative};
    }
    // Rationalized extrema of f and -f on the circle.
    for (int flip : {1, -1}) {
        const PlainQuartic g = flip > 0 ? f : PlainQuartic{-f.e4, -f.e3, -f.e2, -f.e1, -f.e0};
        const CircleMin est = circle_min_estimate(g, 4096);
        if (consider(dyadic(std::cos(est.angle)), dyadic(std::sin(est.angle)))) {
            return {*positive, *negative};
        }
    }

    // Exact fallback: f(t, 1) keeps its sign between consecutive real roots,
    // so one rational point per gap sees every sign f takes off y = 0.
    const Polynomial p = dehomogenize(f);
    if (p.degree() >= 1) {
        const Polynomial squarefree = divmod(p, gcd(p, p.derivative())).first;
        auto roots = isolate_real_roots(squarefree);
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            while (!(roots[i].hi < roots[i + 1].lo)) {
                if (roots[i].is_exact()) {
                    bisect(squarefree, roots[i + 1]);
                } else {
                    bisect(squarefree, roots[i]);
                }
            }
        }
        std::vector<Rational> probes;
        if (roots.empty()) {
            probes.emplace_back(0);
        } else {
            probes.push_back(roots.front().lo - Rational(1));
            for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
                probes.push_back((roots[i].hi + roots[i + 1].lo) / Rational(2));
            }
            probes.push_back(roots.back().hi + Rational(1));
        }
        for (auto& t : probes) {
            if (consider(std::move(t), Rational(1))) {
                return {*positive, *negative};
            }
        }
    }
    throw std::invalid_argument("witness_search: form is not indefinite");
}

Witnesses witness_search(const MonicQuartic& m) { return witness_search(to_plain(m)); }

} // namespace qcert
