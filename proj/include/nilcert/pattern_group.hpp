#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nilcert/matrix.hpp"
#include "nilcert/module_shape.hpp"
#include "nilcert/primes.hpp"

namespace nilcert {

/// A strictly upper triangular matrix position, 0-based.
struct Position {
    std::size_t row = 0;
    std::size_t col = 0;

    std::size_t height() const { return col - row; }
    /// "E12"-style label using 1-based indices.
    std::string label() const;

    friend bool operator==(const Position&, const Position&) = default;
};

/// Canonical basis order: increasing col - row, then lexicographic.
bool canonical_less(const Position& a, const Position& b);

struct ClosureViolation {
    std::size_t i, j, k;  // 0-based, i < j < k
    std::string reason;
};

/*
 * A unitriangular pattern group N ≤ UTₙ(Q).
 *
 * Position (i,j) ranges over Z[1/π_ij] or is identically zero. `pi` is the
 * ambient prime set used for divisibility claims about N.
 */
class Pattern {
public:
    explicit Pattern(std::size_t degree, PrimeSet pi = {});

    std::size_t degree() const { return degree_; }
    const PrimeSet& pi() const { return pi_; }
    void set_pi(PrimeSet pi) { pi_ = std::move(pi); }

    const LocalRing& ring(std::size_t i, std::size_t j) const;
    const LocalRing& ring(const Position& p) const { return ring(p.row, p.col); }
    void set_ring(std::size_t i, std::size_t j, LocalRing ring);

    /// Nonzero positions in canonical order; this is the Lie basis order.
    std::vector<Position> positions() const;
    std::size_t rank() const { return positions().size(); }

    /// Every (i,j) with i<j nonzero over the given prime sets.
    static Pattern full(std::size_t degree, const PrimeSet& inverted, PrimeSet pi = {});

    bool is_member(const RationalMatrix& m) const;
    bool is_lie_member(const RationalMatrix& x) const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::size_t degree_;
    PrimeSet pi_;
    std::vector<LocalRing> rings_;  // degree × degree, only i<j used
};

/// Closure violations plus an empty-pattern check; empty result means ok.
std::vector<ClosureViolation> validate_pattern(const Pattern& p);

bool is_pi_divisible(const Pattern& p, const PrimeSet& pi);
inline bool is_pi_divisible(const Pattern& p) { return is_pi_divisible(p, p.pi()); }

/// Strictly upper triangular element of the rational Lie algebra of a pattern.
class LieVector {
public:
    explicit LieVector(RationalMatrix matrix);
    static LieVector from_coordinates(const Pattern& p, const RationalVector& coords);

    const RationalMatrix& matrix() const { return matrix_; }
    RationalVector coordinates(const Pattern& p) const;

    friend bool operator==(const LieVector&, const LieVector&) = default;

private:
    RationalMatrix matrix_;
};

/// A member of a pattern group. Construction checks membership.
class GroupElement {
public:
    GroupElement(std::shared_ptr<const Pattern> pattern, RationalMatrix matrix);
    static GroupElement identity(std::shared_ptr<const Pattern> pattern);
    /// e_{ij}(t) = 1 + t·E_{ij}.
    static GroupElement elementary(std::shared_ptr<const Pattern> pattern, const Position& p, const Rational& t);

    const RationalMatrix& matrix() const { return matrix_; }
    const Pattern& pattern() const { return *pattern_; }
    const std::shared_ptr<const Pattern>& pattern_ptr() const { return pattern_; }

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.matrix_ == b.matrix_; }

private:
    std::shared_ptr<const Pattern> pattern_;
    RationalMatrix matrix_;
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
/// [g, h] = g⁻¹h⁻¹gh.
GroupElement commutator(const GroupElement& g, const GroupElement& h);

/// Finite log series of a unipotent matrix.
RationalMatrix log_unipotent(const RationalMatrix& g);
/// Finite exp series of a nilpotent matrix.
RationalMatrix exp_nilpotent(const RationalMatrix& x);

LieVector log(const GroupElement& g);
/// exp(x) as a plain matrix; membership in the pattern is not implied.
RationalMatrix exp(const LieVector& x);

/// exp(m·log g). Requires the denominator of m to be a pattern.pi-number and
/// the pattern to be pi-divisible; throws std::domain_error otherwise.
GroupElement rational_power(const GroupElement& g, const Rational& m);

struct ElementaryFactor {
    Position position;
    Rational value;
};

/// g as an ordered product of e_p(t), positions in canonical order, zero factors omitted.
std::vector<ElementaryFactor> factor_into_elementaries(const GroupElement& g);

}  // namespace nilcert
