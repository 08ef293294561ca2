#include "qcert/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace qcert {

namespace {

mpz_class pow10(unsigned long exponent) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Consumes a run of digits starting at `pos`; returns the end offset.
std::size_t scan_digits(std::string_view text, std::size_t pos) {
    while (pos < text.size() && is_digit(text[pos])) {
        ++pos;
    }
    return pos;
}

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& what) {
    throw ParseError("cannot parse '" + std::string(text) + "' at position " + std::to_string(pos) +
                         ": " + what,
                     pos);
}

} // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) {
        fail(text, 0, "empty number");
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }

    const std::size_t int_begin = pos;
    pos = scan_digits(text, pos);
    std::string digits(text.substr(int_begin, pos - int_begin));
    long long exponent = 0;

    if (pos < text.size() && text[pos] == '/') {
        if (digits.empty()) {
            fail(text, pos, "missing numerator");
        }
        const std::size_t den_begin = ++pos;
        pos = scan_digits(text, pos);
        if (pos == den_begin) {
            fail(text, pos, "expected denominator digits");
        }
        if (pos != text.size()) {
            fail(text, pos, "unexpected character");
        }
        mpz_class den(std::string(text.substr(den_begin, pos - den_begin)), 10);
        if (den == 0) {
            fail(text, den_begin, "zero denominator");
        }
        mpz_class num(digits, 10);
        return Rational(negative ? mpz_class(-num) : num, den);
    }

    if (pos < text.size() && text[pos] == '.') {
        const std::size_t frac_begin = ++pos;
        pos = scan_digits(text, pos);
        digits.append(text.substr(frac_begin, pos - frac_begin));
        exponent -= static_cast<long long>(pos - frac_begin);
    }
    if (digits.empty()) {
        fail(text, pos, "expected digits");
    }
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool exp_negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp_negative = text[pos] == '-';
            ++pos;
        }
        const std::size_t exp_begin = pos;
        pos = scan_digits(text, pos);
        if (pos == exp_begin) {
            fail(text, pos, "expected exponent digits");
        }
        if (pos - exp_begin > 6) {
            fail(text, exp_begin, "exponent out of range");
        }
        const long long e = std::stoll(std::string(text.substr(exp_begin, pos - exp_begin)));
        exponent += exp_negative ? -e : e;
    }
    if (pos != text.size()) {
        fail(text, pos, "unexpected character");
    }

    mpz_class mantissa(digits, 10);
    if (negative) {
        mantissa = -mantissa;
    }
    if (exponent >= 0) {
        return Rational(mpz_class(mantissa * pow10(static_cast<unsigned long>(exponent))));
    }
    return Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) {
        return std::nullopt;
    }
    if (!mpz_perfect_square_p(numerator().get_mpz_t()) ||
        !mpz_perfect_square_p(denominator().get_mpz_t())) {
        return std::nullopt;
    }
    return Rational(sqrt(numerator()), sqrt(denominator()));
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return numerator().get_str();
    }
    return numerator().get_str() + "/" + denominator().get_str();
}

std::string Rational::to_decimal(int significant) const {
    if (significant < 1) {
        significant = 1;
    }
    if (is_zero()) {
        return "0";
    }
    const mpz_class num = ::abs(numerator());
    const mpz_class& den = denominator();

    // Decimal exponent e with 10^e <= |x| < 10^(e+1).
    long exponent = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
                    static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
    const auto at_least = [&](long e) {
        // |x| >= 10^e
        return e >= 0 ? num >= den * pow10(static_cast<unsigned long>(e))
                      : num * pow10(static_cast<unsigned long>(-e)) >= den;
    };
    while (!at_least(exponent)) {
        --exponent;
    }
    while (at_least(exponent + 1)) {
        ++exponent;
    }

    // Round |x| * 10^(significant - 1 - exponent) half away from zero.
    const long shift = significant - 1 - exponent;
    mpz_class scaled_num = num;
    mpz_class scaled_den = den;
    if (shift >= 0) {
        scaled_num *= pow10(static_cast<unsigned long>(shift));
    } else {
        scaled_den *= pow10(static_cast<unsigned long>(-shift));
    }
    mpz_class rounded = (2 * scaled_num + scaled_den) / (2 * scaled_den);
    if (rounded == pow10(static_cast<unsigned long>(significant))) {
        rounded /= 10;
        ++exponent;
    }
    std::string digits = rounded.get_str();

    std::string out = sign() < 0 ? "-" : "";
    if (exponent < -4 || exponent >= significant) {
        std::string mantissa = digits.substr(0, 1);
        std::string fraction = digits.substr(1);
        while (!fraction.empty() && fraction.back() == '0') {
            fraction.pop_back();
        }
        if (!fraction.empty()) {
            mantissa += "." + fraction;
        }
        const std::string exp_digits = std::to_string(exponent < 0 ? -exponent : exponent);
        out += mantissa + (exponent < 0 ? "e-" : "e+") + (exp_digits.size() < 2 ? "0" : "") +
               exp_digits;
        return out;
    }

    std::string fixed;
    if (exponent < 0) {
        fixed = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
    } else {
        const auto int_len = static_cast<std::size_t>(exponent + 1);
        fixed = digits.substr(0, int_len);
        if (digits.size() > int_len) {
            fixed += "." + digits.substr(int_len);
        }
    }
    if (fixed.find('.') != std::string::npos) {
        while (fixed.back() == '0') {
            fixed.pop_back();
        }
        if (fixed.back() == '.') {
            fixed.pop_back();
        }
    }
    return out + fixed;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (hi < lo) {
        return simplest_between(hi, lo);
    }
    if (lo.sign() <= 0 && hi.sign() >= 0) {
        return Rational(0);
    }
    if (hi.sign() < 0) {
        return -simplest_between(-hi, -lo);
    }
    mpz_class floor_lo;
    mpz_fdiv_q(floor_lo.get_mpz_t(), lo.numerator().get_mpz_t(), lo.denominator().get_mpz_t());
    if (lo.is_integer()) {
        return lo;
    }
    const Rational ceil_lo(mpz_class(floor_lo + 1));
    if (ceil_lo <= hi) {
        return ceil_lo;
    }
    // floor_lo < lo <= hi < floor_lo + 1
    const Rational base(floor_lo);
    const Rational inner = simplest_between(Rational(1) / (hi - base), Rational(1) / (lo - base));
    return base + Rational(1) / inner;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

} // namespace qcert
