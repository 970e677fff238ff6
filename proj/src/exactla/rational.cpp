#include "bierkit/exactla/rational.hpp"

#include "bierkit/exactla/error.hpp"

#include <cctype>
#include <ostream>

namespace bierkit::exactla {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::from_mpq(const mpq_class& q) {
    Rational r;
    r.q_ = q;
    r.q_.canonicalize();
    return r;
}

Rational Rational::abs() const { return from_mpq(::abs(q_)); }

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    return from_mpq(1 / q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::size_t Rational::hash() const {
    // Low limbs are plenty for bucketing; equality does the real work.
    const auto num = q_.get_num_mpz_t();
    const auto den = q_.get_den_mpz_t();
    std::size_t h = mpz_size(num) ? static_cast<std::size_t>(mpz_getlimbn(num, 0)) : 0;
    h ^= static_cast<std::size_t>(mpz_sgn(num)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(mpz_getlimbn(den, 0)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

constexpr long kMaxExponent = 100000;

struct DecimalParts {
    bool negative = false;
    std::string digits;   // integer digits followed by fraction digits, no sign
    long exponent = 0;    // value = digits * 10^exponent
};

[[noreturn]] void fail_at(std::string_view s, std::size_t pos) {
    if (pos >= s.size())
        throw ParseError("malformed decimal \"" + std::string(s) + "\": unexpected end of input at position " +
                         std::to_string(pos));
    throw ParseError("malformed decimal \"" + std::string(s) + "\": unexpected character '" +
                     std::string(1, s[pos]) + "' at position " + std::to_string(pos));
}

DecimalParts split_decimal(std::string_view s) {
    DecimalParts out;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        out.negative = s[i] == '-';
        ++i;
    }
    std::size_t int_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        out.digits.push_back(s[i]);
        ++int_digits;
        ++i;
    }
    std::size_t frac_digits = 0;
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            out.digits.push_back(s[i]);
            ++frac_digits;
            ++i;
        }
    }
    if (int_digits + frac_digits == 0) fail_at(s, i);
    long exp = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            exp_negative = s[i] == '-';
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            exp = exp * 10 + (s[i] - '0');
            if (exp > kMaxExponent) throw ParseError("decimal exponent out of range in \"" + std::string(s) + "\"");
            ++i;
        }
        if (i == start) fail_at(s, i);
        if (exp_negative) exp = -exp;
    }
    if (i != s.size()) fail_at(s, i);
    out.exponent = exp - static_cast<long>(frac_digits);
    return out;
}

BigInt pow10(unsigned long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

}  // namespace

Rational parse_decimal(std::string_view s) {
    const DecimalParts parts = split_decimal(s);
    BigInt mag(parts.digits, 10);
    if (parts.negative) mag = -mag;
    if (parts.exponent >= 0) return Rational(BigInt(mag * pow10(static_cast<unsigned long>(parts.exponent))));
    return Rational(mag, pow10(static_cast<unsigned long>(-parts.exponent)));
}

Rational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return parse_decimal(s);
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    auto is_int = [](std::string_view t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!is_int(num, true) || !is_int(den, false))
        throw ParseError("malformed rational \"" + std::string(s) + "\"");
    const std::string num_str(num[0] == '+' ? num.substr(1) : num);
    return Rational(BigInt(num_str, 10), BigInt(std::string(den), 10));
}

std::string round_decimal_string(std::string_view s, int digits) {
    if (digits < 0) throw DomainError("negative rounding precision");
    const DecimalParts parts = split_decimal(s);
    BigInt mag(parts.digits, 10);
    BigInt scaled;  // magnitude in units of 10^-digits, rounded half away from zero
    const long shift = parts.exponent + digits;
    if (shift >= 0) {
        scaled = mag * pow10(static_cast<unsigned long>(shift));
    } else {
        const BigInt unit = pow10(static_cast<unsigned long>(-shift));
        BigInt rem;
        mpz_tdiv_qr(scaled.get_mpz_t(), rem.get_mpz_t(), mag.get_mpz_t(), unit.get_mpz_t());
        if (2 * rem >= unit) scaled += 1;
    }
    std::string body = scaled.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (parts.negative && scaled != 0 ? "-" : "") + body;
}

}  // namespace bierkit::exactla
