#include "qcert/poly.hpp"

#include <stdexcept>

namespace qcert {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::coefficient(int power) const {
    if (power < 0 || power > degree()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(power)];
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) {
        throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out.push_back(coeffs_[i] * Rational(static_cast<long long>(i)));
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) {
        return *this;
    }
    const Rational lead = leading();
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) {
        c /= lead;
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) {
        c = -c;
    }
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
    const auto n = std::max(lhs.coeffs_.size(), rhs.coeffs_.size());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = lhs.coefficient(static_cast<int>(i)) + rhs.coefficient(static_cast<int>(i));
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) { return lhs + (-rhs); }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += c.sign() < 0 ? " - " : " + ";
        } else if (c.sign() < 0) {
            out += "-";
        }
        const Rational mag = c.abs();
        if (k == 0 || mag != Rational(1)) {
            out += mag.to_string();
            if (k > 0) {
                out += "*";
            }
        }
        if (k >= 1) {
            out += "t";
        }
        if (k >= 2) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) {
        throw std::domain_error("Polynomial: division by zero polynomial");
    }
    std::vector<Rational> rem = dividend.coefficients();
    const int dd = divisor.degree();
    const Rational& lead = divisor.leading();
    if (dividend.degree() < dd) {
        return {Polynomial{}, dividend};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
    for (int k = dividend.degree(); k >= dd; --k) {
        const Rational factor = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - dd)] = factor;
        if (factor.is_zero()) {
            continue;
        }
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(k - dd + j)] -= factor * divisor.coefficient(j);
        }
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<Polynomial> square_free_decomposition(const Polynomial& p) {
    std::vector<Polynomial> out;
    if (p.degree() <= 0) {
        return out;
    }
    const Polynomial f = p.monic();
    const Polynomial fp = f.derivative();
    const Polynomial a0 = gcd(f, fp);
    Polynomial b = divmod(f, a0).first;
    Polynomial c = divmod(fp, a0).first;
    Polynomial d = c - b.derivative();
    while (b.degree() > 0) {
        const Polynomial a = gcd(b, d);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
        out.push_back(a);
    }
    while (!out.empty() && out.back().degree() == 0) {
        out.pop_back();
    }
    return out;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        const auto& prev = chain[chain.size() - 2];
        chain.push_back(-divmod(prev, chain.back()).second);
    }
    chain.pop_back();
    return chain;
}

namespace {

int sign_variations(const std::vector<int>& signs) {
    int variations = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++variations;
        }
        last = s;
    }
    return variations;
}

int variations_at(const std::vector<Polynomial>& sturm, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(sturm.size());
    for (const auto& q : sturm) {
        signs.push_back(q(x).sign());
    }
    return sign_variations(signs);
}

int variations_at_infinity(const std::vector<Polynomial>& sturm, int direction) {
    std::vector<int> signs;
    for (const auto& q : sturm) {
        int s = q.leading().sign();
        if (direction < 0 && q.degree() % 2 == 1) {
            s = -s;
        }
        signs.push_back(s);
    }
    return sign_variations(signs);
}

void isolate(const Polynomial& p, const std::vector<Polynomial>& sturm, const Rational& lo,
             const Rational& hi, int count, std::vector<RootInterval>& out) {
    if (count <= 0) {
        return;
    }
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    const Rational mid = (lo + hi) / Rational(2);
    const int left = count_roots(sturm, lo, mid);
    if (!p(mid).is_zero()) {
        isolate(p, sturm, lo, mid, left, out);
        isolate(p, sturm, mid, hi, count - left, out);
        return;
    }
    // mid is a root: step away from it on both sides far enough that the
    // new endpoints are not roots and no other root is skipped.
    Rational delta = (mid - lo) / Rational(2);
    while (p(mid - delta).is_zero() || count_roots(sturm, mid - delta, mid) != 1) {
        delta /= Rational(2);
    }
    isolate(p, sturm, lo, mid - delta, left - 1, out);
    out.push_back({mid, mid});
    delta = (hi - mid) / Rational(2);
    while (p(mid + delta).is_zero() || count_roots(sturm, mid, mid + delta) != 0) {
        delta /= Rational(2);
    }
    isolate(p, sturm, mid + delta, hi, count - left, out);
}

} // namespace

int count_roots(const std::vector<Polynomial>& sturm, const Rational& lo, const Rational& hi) {
    return variations_at(sturm, lo) - variations_at(sturm, hi);
}

int count_real_roots(const Polynomial& p) {
    if (p.degree() <= 0) {
        return 0;
    }
    const auto sturm = sturm_sequence(p);
    return variations_at_infinity(sturm, -1) - variations_at_infinity(sturm, +1);
}

Rational root_bound(const Polynomial& p) {
    Rational bound(0);
    for (int k = 0; k < p.degree(); ++k) {
        const Rational ratio = (p.coefficient(k) / p.leading()).abs();
        if (ratio > bound) {
            bound = ratio;
        }
    }
    return bound + Rational(1);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
    std::vector<RootInterval> out;
    if (p.degree() <= 0) {
        return out;
    }
    const auto sturm = sturm_sequence(p);
    const Rational bound = root_bound(p);
    // |root| < bound, so neither endpoint is a root.
    isolate(p, sturm, -bound, bound, count_roots(sturm, -bound, bound), out);
    return out;
}

void bisect(const Polynomial& p, RootInterval& interval) {
    if (interval.is_exact()) {
        return;
    }
    const Rational mid = (interval.lo + interval.hi) / Rational(2);
    const int s_mid = p(mid).sign();
    if (s_mid == 0) {
        interval.lo = mid;
        interval.hi = mid;
    } else if (s_mid == p(interval.lo).sign()) {
        interval.lo = mid;
    } else {
        interval.hi = mid;
    }
}

std::optional<Rational> rational_root_in(const Polynomial& p, RootInterval interval) {
    if (interval.is_exact()) {
        return interval.lo;
    }
    // Integer coefficients c_0..c_n of L*p. With mu = c_n t the polynomial
    // Q(mu) = c_n^(n-1) L p(mu / c_n) is monic with integer coefficients, so
    // the rational roots of p are exactly the integer roots of Q over c_n.
    const int n = p.degree();
    mpz_class common(1);
    for (const auto& c : p.coefficients()) {
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.denominator().get_mpz_t());
    }
    std::vector<mpz_class> c(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        const Rational& a = p.coefficients()[static_cast<std::size_t>(k)];
        c[static_cast<std::size_t>(k)] = a.numerator() * (common / a.denominator());
    }
    const mpz_class lead = c.back();
    std::vector<mpz_class> q(static_cast<std::size_t>(n + 1));
    mpz_class scale(1);
    for (int k = n; k >= 0; --k) {
        // coefficient of mu^k is c_k * lead^(n-1-k) for k < n
        q[static_cast<std::size_t>(k)] = k == n ? mpz_class(1) : c[static_cast<std::size_t>(k)] * scale;
        if (k < n) {
            scale *= lead;
        }
    }
    const auto eval_sign = [&](const mpz_class& mu) {
        mpz_class acc(0);
        for (int k = n; k >= 0; --k) {
            acc = acc * mu + q[static_cast<std::size_t>(k)];
        }
        return sgn(acc);
    };

    Rational mu_lo = interval.lo * Rational(lead);
    Rational mu_hi = interval.hi * Rational(lead);
    if (mu_hi < mu_lo) {
        std::swap(mu_lo, mu_hi);
    }
    mpz_class lo_int;
    mpz_class hi_int;
    mpz_cdiv_q(lo_int.get_mpz_t(), mu_lo.numerator().get_mpz_t(), mu_lo.denominator().get_mpz_t());
    mpz_fdiv_q(hi_int.get_mpz_t(), mu_hi.numerator().get_mpz_t(), mu_hi.denominator().get_mpz_t());
    if (lo_int > hi_int) {
        return std::nullopt;
    }
    // Q has exactly one (simple) root in (mu_lo, mu_hi); neither endpoint is a root.
    const int s_start = (Polynomial(std::vector<Rational>(q.begin(), q.end()))(mu_lo)).sign();
    const int s_lo = eval_sign(lo_int);
    if (s_lo == 0) {
        return Rational(lo_int, lead);
    }
    if (s_lo != s_start) {
        return std::nullopt;
    }
    const int s_hi = eval_sign(hi_int);
    if (s_hi == 0) {
        return Rational(hi_int, lead);
    }
    if (s_hi == s_start) {
        return std::nullopt;
    }
    while (hi_int - lo_int > 1) {
        const mpz_class mid = (lo_int + hi_int) / 2;
        const int s_mid = eval_sign(mid);
        if (s_mid == 0) {
            return Rational(mid, lead);
        }
        if (s_mid == s_lo) {
            lo_int = mid;
        } else {
            hi_int = mid;
        }
    }
    return std::nullopt;
}

} // namespace qcert
