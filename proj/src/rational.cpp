#include "nilcert/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace nilcert {

namespace {

bool is_decimal(std::string_view digits)
{
    if (digits.empty())
        return false;
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto bad = [&] { return std::invalid_argument("malformed rational \"" + std::string(text) + "\""); };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_decimal(num) || !is_decimal(den))
        throw bad();
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw bad();
    if (negative)
        n = -n;
    return Rational(n, d);
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const
{
    return value_.get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.to_string();
}

Rational power(const Rational& q, unsigned k)
{
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q.numerator().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.denominator().get_mpz_t(), k);
    return Rational(num, den);
}

long valuation(const Rational& q, std::uint64_t p)
{
    if (q.is_zero())
        throw std::domain_error("valuation of zero");
    const Integer prime(static_cast<unsigned long>(p));
    long v = 0;
    Integer n = q.numerator();
    while (mpz_divisible_p(n.get_mpz_t(), prime.get_mpz_t())) {
        n /= prime;
        ++v;
    }
    Integer d = q.denominator();
    while (mpz_divisible_p(d.get_mpz_t(), prime.get_mpz_t())) {
        d /= prime;
        --v;
    }
    return v;
}

}  // namespace nilcert
