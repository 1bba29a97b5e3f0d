#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilcert/matrix.hpp"
#include "nilcert/primes.hpp"

namespace nilcert {

/// Z[1/π] for a finite prime set π, or the zero ring.
class LocalRing {
public:
    LocalRing() = default;
    LocalRing(PrimeSet inverted) : inverted_(std::move(inverted)) {}  // NOLINT
    static LocalRing zero_ring();

    bool is_zero() const { return zero_; }
    const PrimeSet& inverted() const { return inverted_; }

    bool contains(const Rational& q) const;
    /// True iff q·R ⊆ target, where R is this ring.
    bool scales_into(const Rational& q, const LocalRing& target) const;
    /// The conductor (target : this) = {q : q·this ⊆ target}. A zero source is
    /// normalized to the zero ring since its entries never act.
    LocalRing conductor_into(const LocalRing& target) const;

    std::string to_string() const;

    friend bool operator==(const LocalRing&, const LocalRing&) = default;

private:
    PrimeSet inverted_;
    bool zero_ = false;
};

/*
 * A lattice ⊕ᵢ Rᵢ·eᵢ in Qⁿ where each Rᵢ is Z[1/πᵢ] or zero.
 *
 * This is the only kind of module the certifier needs: every section of a
 * pattern group decomposes this way in its coordinate basis.
 */
class ModuleShape {
public:
    ModuleShape() = default;
    explicit ModuleShape(std::vector<LocalRing> rings) : rings_(std::move(rings)) {}

    std::size_t rank() const { return rings_.size(); }
    const LocalRing& ring(std::size_t i) const { return rings_.at(i); }
    const std::vector<LocalRing>& rings() const { return rings_; }
    bool has_zero_ring() const;

    /// Parses "[[],[2],[2,3]]"; `null` denotes a zero coordinate.
    static ModuleShape parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const ModuleShape&, const ModuleShape&) = default;

private:
    std::vector<LocalRing> rings_;
};

bool contains(const ModuleShape& shape, const RationalVector& v);

/// True iff A maps the lattice `src` into the lattice `dst`.
bool maps_into(const RationalMatrix& a, const ModuleShape& src, const ModuleShape& dst);

/// True iff A·shape ⊆ shape.
bool map_preserves(const RationalMatrix& a, const ModuleShape& shape);

/*
 * Decides A·shape = shape for an injective A preserving the shape.
 *
 * Works one prime at a time. Two lattices in Qⁿ agree iff their localizations
 * at every prime agree. At a prime p outside the supports of A's entries and
 * of det(A), A and its inverse are both p-integral and A is block triangular
 * for the p-divisible/p-free coordinate split, so A is a p-local isomorphism.
 * Only the remaining finitely many primes need examination.
 *
 * Throws std::invalid_argument("not an endomorphism of the module") when A
 * fails to preserve the shape or is singular, and for shapes with zero
 * coordinates.
 */
bool map_surjective(const RationalMatrix& a, const ModuleShape& shape);

/// The first prime (in increasing order) at which A·shape ≠ shape, if any.
std::optional<Prime> surjectivity_failure_prime(const RationalMatrix& a, const ModuleShape& shape);

/// Shape of {f : f(src) ⊆ dst}, coordinatized by entries f(u,i) in row-major order (u over dst).
ModuleShape hom_shape(const ModuleShape& src, const ModuleShape& dst);

}  // namespace nilcert
