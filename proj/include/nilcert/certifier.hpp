#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcert/lie_lattice.hpp"
#include "nilcert/matrix.hpp"
#include "nilcert/polynomial.hpp"
#include "nilcert/primes.hpp"

namespace nilcert {

class EndomorphismError : public std::invalid_argument {
public:
    enum class Kind { size_mismatch, not_lie_homomorphism, not_injective, not_pattern_preserving };

    EndomorphismError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Raised when two routes that must agree do not. Always an implementation bug.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/*
 * An injective endomorphism σ = exp∘φ∘log of a pattern group, given by the
 * Lie map φ on the lattice basis. Only validate_endomorphism builds these, so
 * every instance is a Lie homomorphism with det φ ≠ 0 and σ(N) ⊆ N.
 */
class Endomorphism {
public:
    const LieLattice& lattice() const { return *lattice_; }
    const std::shared_ptr<const LieLattice>& lattice_ptr() const { return lattice_; }
    const RationalMatrix& phi() const { return phi_; }
    const Rational& determinant() const { return determinant_; }

    const RationalMatrix& abelianisation_map() const { return lower_maps_.front(); }
    const RationalMatrix& centre_map() const { return upper_maps_.front(); }
    /// Induced maps on Γᵢ/Γᵢ₊₁, i = 1..class.
    const std::vector<RationalMatrix>& lower_section_maps() const { return lower_maps_; }
    /// Induced maps on Z^{i+1}/Z^i, i = 0..class-1.
    const std::vector<RationalMatrix>& upper_section_maps() const { return upper_maps_; }

    /// σ applied to a group element.
    GroupElement apply(const GroupElement& g) const;
    /// φ applied to Lie coordinates.
    RationalVector apply(const RationalVector& x) const { return phi_ * x; }

private:
    friend Endomorphism validate_endomorphism(std::shared_ptr<const LieLattice>, RationalMatrix);
    Endomorphism() = default;

    std::shared_ptr<const LieLattice> lattice_;
    RationalMatrix phi_;
    Rational determinant_;
    std::vector<RationalMatrix> lower_maps_;
    std::vector<RationalMatrix> upper_maps_;
};

/*
 * Checks the three invariants and builds the section caches.
 *
 * Pattern preservation: N is generated by the elementary elements e_p(t), so
 * σ(N) ⊆ N iff each exp(t·φ(E_p)) lies in N for t in ring(p). Entry (u,v) of
 * that matrix is a polynomial f(t) with f(0) = 0. It maps Z[1/π_p] into
 * Z[1/π_uv] iff f vanishes, or π_p ⊆ π_uv and every coefficient of f in the
 * binomial basis C(t,k) lies in Z[1/π_uv].
 */
Endomorphism validate_endomorphism(std::shared_ptr<const LieLattice> lattice, RationalMatrix phi);

/// Composite e∘f (apply f first). Both must live on the same lattice.
Endomorphism compose(const Endomorphism& e, const Endomorphism& f);

enum class PiLikeRoute { charpoly, abelianisation, both };

bool coefficients_in(const Polynomial& p, const PrimeSet& pi);
bool is_pi_like(const Endomorphism& e, const PrimeSet& pi, PiLikeRoute route = PiLikeRoute::both);

/// det of φ on the centre Z¹(V), in the centre-section basis.
Rational centre_determinant(const Endomorphism& e);

enum class Conclusion { automorphism, not_applicable };

struct Hypothesis {
    std::string name;
    bool passed = false;
    std::string witness;

    friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

struct Verdict {
    std::string criterion;  // "central" or "tfab"
    std::vector<Hypothesis> hypotheses;
    Conclusion conclusion = Conclusion::not_applicable;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// π-divisible + π-like + centre determinant a π-unit ⇒ automorphism. With π = ∅ the hypotheses read: integer-like and det ±1 on the centre.
Verdict check_central_criterion(const Endomorphism& e, const PrimeSet& pi);

/// Surjective on the torsion-free abelianisation ⇒ automorphism.
Verdict check_tfab_criterion(const Endomorphism& e);

struct Witness {
    Position position;
    Rational value;
    std::size_t section = 0;  // 0-based lower-central section index

    friend bool operator==(const Witness&, const Witness&) = default;
};

enum class OracleOutcome { automorphism, proper_injection, skipped };

struct OracleResult {
    OracleOutcome outcome = OracleOutcome::skipped;
    std::optional<Witness> witness;
    std::vector<bool> section_surjective;

    friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

/*
 * Ground truth for surjectivity: σ is onto iff it is onto every isolated
 * lower-central section. For a proper injection the witness is an elementary
 * e_p(t) in the first failing section whose section preimage leaves the
 * lattice; such an element has no σ-preimage in N.
 */
OracleResult surjectivity_oracle(const Endomorphism& e);

struct Report {
    Verdict central;
    Verdict tfab;
    OracleResult oracle;
    /// A criterion concluded automorphism while the oracle found a proper injection.
    bool soundness_bug = false;

    friend bool operator==(const Report&, const Report&) = default;
};

Report full_report(const Endomorphism& e, const PrimeSet& pi, bool run_oracle = true);

/// Matrix of θ ↦ Φ_Z∘θ∘Φ_ab⁻¹ on hom coordinates (row-major, centre index major).
RationalMatrix hom_action(const RationalMatrix& phi_ab, const RationalMatrix& phi_centre);
/// Matrix of θ ↦ Φ_Z⁻¹∘θ∘Φ_ab, the action of σ⁻¹.
RationalMatrix hom_inverse_action(const RationalMatrix& phi_ab, const RationalMatrix& phi_centre);

std::string to_string(Conclusion c);
std::string to_string(OracleOutcome o);

}  // namespace nilcert
