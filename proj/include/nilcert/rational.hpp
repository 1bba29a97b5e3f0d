#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace nilcert {

using Integer = mpz_class;

/*
 * Exact rational number backed by GMP.
 *
 * Always kept in lowest terms with a positive denominator, so equality is
 * structural and zero is 0/1.
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: integers promote implicitly
    Rational(const Integer& value) : value_(value) {}  // NOLINT
    Rational(const Integer& numerator, const Integer& denominator);

    /// Parses "a" or "a/b" with an optional leading '-'; b must be positive.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const;
    Rational inverse() const;

    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// q^k for k >= 0.
Rational power(const Rational& q, unsigned k);

/// p-adic valuation of a non-zero rational.
long valuation(const Rational& q, std::uint64_t p);

}  // namespace nilcert
