#include "nilcert/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nilcert {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients))
{
    trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim()
{
    while (!coefficients_.empty() && coefficients_.back().is_zero())
        coefficients_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const
{
    return k < coefficients_.size() ? coefficients_[k] : Rational(0);
}

Rational Polynomial::evaluate(const Rational& x) const
{
    Rational acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RationalMatrix Polynomial::evaluate(const RationalMatrix& m) const
{
    if (!m.is_square())
        throw std::invalid_argument("polynomial evaluated at a non-square matrix");
    const auto id = RationalMatrix::identity(m.rows());
    RationalMatrix acc(m.rows(), m.cols());
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = acc * m + id * *it;
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coefficient(k) + b.coefficient(k);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coefficient(k) - b.coefficient(k);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
            c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
        const Rational& c = coefficients_[k];
        if (c.is_zero())
            continue;
        const Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit)
            os << (k > 0 && !mag.is_integer() ? "(" + mag.to_string() + ")" : mag.to_string());
        if (k >= 1)
            os << 'x';
        if (k >= 2)
            os << '^' << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << p.to_string();
}

}  // namespace nilcert
