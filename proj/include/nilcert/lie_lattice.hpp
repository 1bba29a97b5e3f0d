#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "nilcert/matrix.hpp"
#include "nilcert/module_shape.hpp"
#include "nilcert/pattern_group.hpp"
#include "nilcert/subspace.hpp"

namespace nilcert {

/*
 * One isolated section of a filtration, upper/lower.
 *
 * All filtration terms of a pattern Lie algebra are spanned by basis
 * positions, so a section is described by the basis indices it adds and the
 * rings sitting at those positions.
 */
struct Section {
    std::vector<std::size_t> coordinates;  // indices into the lattice basis
    ModuleShape shape;
};

/// A chain of subspaces together with the sections between consecutive terms.
struct Filtration {
    std::vector<Subspace> terms;
    std::vector<Section> sections;  // sections[k] sits between terms[k] and terms[k+1]
};

/// Lie algebra of a pattern together with its coordinate lattice ⊕ ring(p)·E_p.
class LieLattice {
public:
    explicit LieLattice(std::shared_ptr<const Pattern> pattern);

    const Pattern& pattern() const { return *pattern_; }
    const std::shared_ptr<const Pattern>& pattern_ptr() const { return pattern_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Position>& basis() const { return basis_; }
    const ModuleShape& shape() const { return shape_; }
    std::optional<std::size_t> index_of(const Position& p) const;

    /// [E_a, E_b] = sign·E_index, or nullopt when the bracket vanishes.
    struct BasisBracket {
        int sign;
        std::size_t index;
    };
    std::optional<BasisBracket> basis_bracket(std::size_t a, std::size_t b) const;
    RationalVector bracket(const RationalVector& x, const RationalVector& y) const;
    /// Left-normed [[x1, x2], ..., xk].
    RationalVector bracket(const std::vector<RationalVector>& xs) const;
    RationalVector unit(std::size_t index) const;

    const Filtration& lower_central() const { return lower_; }
    const Filtration& upper_central() const { return upper_; }
    std::size_t nilpotency_class() const { return lower_.sections.size(); }

    /// Index sets of the torsion-free abelianisation and the centre sections.
    const Section& abelianisation() const { return lower_.sections.front(); }
    const Section& centre() const { return upper_.sections.front(); }

private:
    void check_bracket_axioms() const;

    std::shared_ptr<const Pattern> pattern_;
    std::vector<Position> basis_;
    ModuleShape shape_;
    std::vector<std::optional<BasisBracket>> table_;
    Filtration lower_;
    Filtration upper_;
};

/// γ₁ ⊇ γ₂ ⊇ … ⊇ 0 with sections Γᵢ/Γᵢ₊₁.
Filtration lower_central_series(const LieLattice& lattice);
/// Terms listed Z¹ ⊆ Z² ⊆ … = V, preceded by Z⁰ = 0; section k is Z^{k+1}/Z^k.
Filtration upper_central_series(const LieLattice& lattice);

struct GradedBracketMap {
    std::size_t degree;
    RationalMatrix matrix;   // rows: section-i coordinates; cols: ab-tuples, first factor major
    ModuleShape image;       // image of (ab lattice)^{⊗i}, zero ring where nothing lands
};

/// α_i : (abelianisation)^{⊗i} → Γᵢ/Γᵢ₊₁, x̄₁⊗…⊗x̄ᵢ ↦ [x₁,…,xᵢ] (left-normed).
GradedBracketMap graded_bracket_map(const LieLattice& lattice, std::size_t i);

struct CentralHomEmbedding {
    RationalMatrix matrix;  // rows: hom coordinates (centre u, ab i) row-major; cols: Z²/Z¹ coordinates
    ModuleShape hom;        // hom_shape(abelianisation shape, centre shape)
};

/// β₁ : Z²/Z¹ → Hom(abelianisation, Z¹), w̄ ↦ (x̄ ↦ [w, x]). Requires class ≥ 2.
CentralHomEmbedding central_hom_embedding(const LieLattice& lattice);

/// Matrix of a linear map on V induced on a section (rows/cols in section coordinate order).
RationalMatrix induced_section_map(const RationalMatrix& phi, const Section& section);

/// True iff phi maps the subspace into itself.
bool preserves_subspace(const RationalMatrix& phi, const Subspace& s);

}  // namespace nilcert
