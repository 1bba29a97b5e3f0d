#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nilcert/matrix.hpp"
#include "nilcert/rational.hpp"

namespace nilcert {

/// Univariate polynomial over Q, constant term first. The zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return coefficients_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    Rational coefficient(std::size_t k) const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    Rational evaluate(const Rational& x) const;
    RationalMatrix evaluate(const RationalMatrix& m) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace nilcert
