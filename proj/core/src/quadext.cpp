#include "qcert/quadext.hpp"

#include <ostream>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace qcert {

namespace {

using Decimal = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<120>>;

Decimal to_decimal_float(const Rational& value) {
    return Decimal(value.numerator().get_str()) / Decimal(value.denominator().get_str());
}

} // namespace

QuadExt::QuadExt(Rational rat_part, Rational surd_part, Rational radicand)
    : p_(std::move(rat_part)), q_(std::move(surd_part)), d_(std::move(radicand)) {
    if (d_.sign() < 0) {
        throw std::domain_error("QuadExt: negative radicand " + d_.to_string());
    }
    if (q_.is_zero()) {
        return;
    }
    if (auto root = d_.exact_sqrt()) {
        p_ += q_ * *root;
        q_ = Rational(0);
    }
}

const Rational& QuadExt::common_radicand(const QuadExt& rhs) const {
    if (is_rational()) {
        return rhs.is_rational() && rhs.d_.is_zero() ? d_ : rhs.d_;
    }
    if (!rhs.is_rational() && rhs.d_ != d_) {
        throw MismatchedRadicand("QuadExt: radicands " + d_.to_string() + " and " + rhs.d_.to_string() +
                                 " differ");
    }
    return d_;
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
    d_ = common_radicand(rhs);
    p_ += rhs.p_;
    q_ += rhs.q_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
    d_ = common_radicand(rhs);
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
    const Rational d = common_radicand(rhs);
    // (p1 + q1 r)(p2 + q2 r) = (p1 p2 + q1 q2 d) + (p1 q2 + p2 q1) r
    Rational p = p_ * rhs.p_;
    if (!q_.is_zero() && !rhs.q_.is_zero()) {
        p += q_ * rhs.q_ * d;
    }
    Rational q = p_ * rhs.q_ + rhs.p_ * q_;
    p_ = std::move(p);
    q_ = std::move(q);
    d_ = d;
    return *this;
}

int QuadExt::sign() const {
    const int sp = p_.sign();
    const int sq = q_.sign() * (d_.is_zero() ? 0 : 1);
    if (sq == 0) {
        return sp;
    }
    if (sp == 0 || sp == sq) {
        return sq;
    }
    // Opposite signs: compare p^2 with q^2 d.
    const Rational lhs = p_ * p_;
    const Rational rhs = q_ * q_ * d_;
    if (lhs == rhs) {
        return 0;
    }
    return lhs > rhs ? sp : sq;
}

std::string QuadExt::to_string() const {
    if (is_rational()) {
        return p_.to_string();
    }
    return p_.to_string() + " + " + q_.to_string() + "*sqrt(" + d_.to_string() + ")";
}

Rational QuadExt::approximate(int digits) const {
    if (is_rational()) {
        return p_;
    }
    const Decimal root = boost::multiprecision::sqrt(to_decimal_float(d_));
    // 110 significant digits of sqrt(d) in scientific notation parse exactly.
    const Rational root_approx = Rational::parse(root.str(digits + 10, std::ios_base::scientific));
    return p_ + q_ * root_approx;
}

std::string QuadExt::to_decimal(int significant) const {
    return approximate(100).to_decimal(significant);
}

long double QuadExt::to_long_double() const {
    Decimal value = to_decimal_float(p_);
    if (!is_rational()) {
        value += to_decimal_float(q_) * boost::multiprecision::sqrt(to_decimal_float(d_));
    }
    return value.convert_to<long double>();
}

std::ostream& operator<<(std::ostream& os, const QuadExt& value) { return os << value.to_string(); }

} // namespace qcert
