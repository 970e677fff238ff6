#pragma once

/**
 * Exact rational scalar.
 *
 * Thin value type over GMP's mpq_class. Values are always canonical:
 * lowest terms, positive denominator, zero stored as 0/1. No operation ever
 * rounds.
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");

namespace bierkit::exactla {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : q_(v) {}                     // NOLINT(google-explicit-constructor)
    Rational(long long v) : q_(static_cast<long>(v)) {}       // NOLINT
    Rational(unsigned v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT
    Rational(unsigned long v) : q_(v) {}                        // NOLINT
    Rational(const BigInt& v) : q_(v) {}            // NOLINT(google-explicit-constructor)

    // Throws DomainError on a zero denominator.
    Rational(const BigInt& num, const BigInt& den);

    static Rational from_mpq(const mpq_class& q);

    const mpq_class& mpq() const { return q_; }
    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // "p" for integers, "p/q" otherwise.
    std::string str() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }

    Rational abs() const;
    Rational reciprocal() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return from_mpq(-a.q_); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const;

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/**
 * Parses an optional sign, digits, an optional fractional part and an
 * optional exponent ("-1.25e-3") into the exact value p / 10^k.
 * Throws ParseError naming the offending character position.
 */
Rational parse_decimal(std::string_view s);

// Accepts "p/q" as well as anything parse_decimal accepts.
Rational parse_rational(std::string_view s);

/**
 * Rounds a decimal literal to `digits` fractional digits, half away from
 * zero, operating on the digit string itself. Exponent notation is
 * normalized first. Returns the rounded literal.
 */
std::string round_decimal_string(std::string_view s, int digits);

}  // namespace bierkit::exactla

template <>
struct std::hash<bierkit::exactla::Rational> {
    std::size_t operator()(const bierkit::exactla::Rational& r) const noexcept { return r.hash(); }
};
