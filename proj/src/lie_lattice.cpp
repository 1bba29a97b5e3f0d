#include "nilcert/lie_lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilcert/linear_algebra.hpp"

namespace nilcert {

namespace {

Section make_section(const LieLattice& lattice, const Subspace& bigger, const Subspace& smaller)
{
    const auto big = bigger.coordinate_support();
    const auto small = smaller.coordinate_support();
    // Brackets of basis positions are ± basis positions, so every central
    // series term is a coordinate subspace. Anything else is a bug.
    if (!big || !small)
        throw std::logic_error("filtration term is not spanned by basis positions");
    Section s;
    std::vector<LocalRing> rings;
    for (auto c : *big)
        if (!std::binary_search(small->begin(), small->end(), c)) {
            s.coordinates.push_back(c);
            rings.push_back(lattice.shape().ring(c));
        }
    s.shape = ModuleShape(std::move(rings));
    return s;
}

Filtration compute_lower(const LieLattice& lattice)
{
    const std::size_t dim = lattice.dimension();
    Filtration f;
    f.terms.push_back(Subspace::whole(dim));
    while (f.terms.back().dimension() > 0) {
        std::vector<RationalVector> brackets;
        for (std::size_t a = 0; a < dim; ++a)
            for (const auto& v : f.terms.back().basis()) {
                RationalVector b = lattice.bracket(lattice.unit(a), v);
                if (!is_zero_vector(b))
                    brackets.push_back(std::move(b));
            }
        Subspace next = Subspace::span(dim, brackets);
        if (next.dimension() == f.terms.back().dimension())
            throw std::logic_error("lower central series does not terminate: algebra is not nilpotent");
        f.terms.push_back(std::move(next));
    }
    for (std::size_t k = 0; k + 1 < f.terms.size(); ++k)
        f.sections.push_back(make_section(lattice, f.terms[k], f.terms[k + 1]));
    return f;
}

Filtration compute_upper(const LieLattice& lattice)
{
    const std::size_t dim = lattice.dimension();
    Filtration f;
    f.terms.emplace_back(dim);
    while (f.terms.back().dimension() < dim) {
        const Subspace& current = f.terms.back();
        // Column a holds ([E_a, E_b] mod current) for every b, stacked.
        RationalMatrix m(dim * dim, dim);
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                const RationalVector r = current.reduce(lattice.bracket(lattice.unit(a), lattice.unit(b)));
                for (std::size_t c = 0; c < dim; ++c)
                    m(b * dim + c, a) = r[c];
            }
        Subspace next = Subspace::span(dim, kernel_basis(m));
        if (next.dimension() == current.dimension())
            throw std::logic_error("upper central series stalls: algebra is not nilpotent");
        f.terms.push_back(std::move(next));
    }
    for (std::size_t k = 0; k + 1 < f.terms.size(); ++k)
        f.sections.push_back(make_section(lattice, f.terms[k + 1], f.terms[k]));
    return f;
}

}  // namespace

LieLattice::LieLattice(std::shared_ptr<const Pattern> pattern) : pattern_(std::move(pattern))
{
    if (!pattern_)
        throw std::invalid_argument("Lie lattice needs a pattern");
    basis_ = pattern_->positions();
    if (basis_.empty())
        throw std::invalid_argument("pattern has no nonzero positions");
    std::vector<LocalRing> rings;
    for (const auto& p : basis_)
        rings.push_back(pattern_->ring(p));
    shape_ = ModuleShape(std::move(rings));

    const std::size_t dim = basis_.size();
    table_.resize(dim * dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            const Position& x = basis_[a];
            const Position& y = basis_[b];
            // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj; at most one term survives.
            std::optional<Position> target;
            int sign = 0;
            if (x.col == y.row) {
                target = Position{x.row, y.col};
                sign = 1;
            } else if (y.col == x.row) {
                target = Position{y.row, x.col};
                sign = -1;
            }
            if (!target)
                continue;
            const auto idx = index_of(*target);
            if (!idx)
                throw std::invalid_argument("bracket " + x.label() + "," + y.label()
                                            + " leaves the pattern; closure is violated");
            table_[a * dim + b] = BasisBracket{sign, *idx};
        }
    check_bracket_axioms();
    lower_ = compute_lower(*this);
    upper_ = compute_upper(*this);
}

std::optional<std::size_t> LieLattice::index_of(const Position& p) const
{
    const auto it = std::find(basis_.begin(), basis_.end(), p);
    if (it == basis_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - basis_.begin());
}

std::optional<LieLattice::BasisBracket> LieLattice::basis_bracket(std::size_t a, std::size_t b) const
{
    return table_.at(a * basis_.size() + b);
}

RationalVector LieLattice::unit(std::size_t index) const
{
    RationalVector v(basis_.size());
    v.at(index) = 1;
    return v;
}

RationalVector LieLattice::bracket(const RationalVector& x, const RationalVector& y) const
{
    const std::size_t dim = basis_.size();
    if (x.size() != dim || y.size() != dim)
        throw std::invalid_argument("bracket operands have the wrong length");
    RationalVector out(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        if (x[a].is_zero())
            continue;
        for (std::size_t b = 0; b < dim; ++b) {
            if (y[b].is_zero())
                continue;
            const auto& entry = table_[a * dim + b];
            if (!entry)
                continue;
            const Rational term = x[a] * y[b];
            if (entry->sign > 0)
                out[entry->index] += term;
            else
                out[entry->index] -= term;
        }
    }
    return out;
}

RationalVector LieLattice::bracket(const std::vector<RationalVector>& xs) const
{
    if (xs.empty())
        throw std::invalid_argument("empty bracket");
    RationalVector acc = xs.front();
    for (std::size_t k = 1; k < xs.size(); ++k)
        acc = bracket(acc, xs[k]);
    return acc;
}

void LieLattice::check_bracket_axioms() const
{
    // Works on the structure constants directly: brackets of basis vectors
    // are signed basis vectors, so every term below is one table lookup.
    const std::size_t dim = basis_.size();
    const auto at = [&](std::size_t a, std::size_t b) { return table_[a * dim + b]; };
    // [E_x, [E_y, E_z]] as (sign, index), sign 0 when it vanishes.
    const auto nested = [&](std::size_t x, std::size_t y, std::size_t z) -> BasisBracket {
        const auto inner = at(y, z);
        if (!inner)
            return {0, 0};
        const auto outer = at(x, inner->index);
        if (!outer)
            return {0, 0};
        return {inner->sign * outer->sign, outer->index};
    };
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            const auto ab = at(a, b);
            const auto ba = at(b, a);
            if (ab.has_value() != ba.has_value() || (ab && (ab->index != ba->index || ab->sign != -ba->sign)))
                throw std::logic_error("bracket table is not antisymmetric");
            for (std::size_t c = 0; c < dim; ++c) {
                std::vector<int> sum(dim, 0);
                for (const BasisBracket& t : {nested(a, b, c), nested(b, c, a), nested(c, a, b)})
                    sum[t.index] += t.sign;
                if (std::any_of(sum.begin(), sum.end(), [](int v) { return v != 0; }))
                    throw std::logic_error("bracket table violates the Jacobi identity");
            }
        }
}

Filtration lower_central_series(const LieLattice& lattice)
{
    return lattice.lower_central();
}

Filtration upper_central_series(const LieLattice& lattice)
{
    return lattice.upper_central();
}

GradedBracketMap graded_bracket_map(const LieLattice& lattice, std::size_t i)
{
    if (i < 1 || i > lattice.nilpotency_class())
        throw std::out_of_range("bracket degree out of range");
    const auto& ab = lattice.abelianisation().coordinates;
    const Section& target = lattice.lower_central().sections[i - 1];

    std::size_t tuples = 1;
    for (std::size_t k = 0; k < i; ++k)
        tuples *= ab.size();

    GradedBracketMap out{i, RationalMatrix(target.coordinates.size(), tuples), {}};
    std::vector<std::optional<PrimeSet>> image(target.coordinates.size());
    std::vector<std::size_t> digits(i, 0);
    for (std::size_t col = 0; col < tuples; ++col) {
        // Mixed radix with the first factor most significant.
        std::size_t rest = col;
        for (std::size_t k = i; k-- > 0;) {
            digits[k] = rest % ab.size();
            rest /= ab.size();
        }
        std::vector<RationalVector> xs;
        PrimeSet inverted;
        for (auto d : digits) {
            xs.push_back(lattice.unit(ab[d]));
            inverted = inverted.united(lattice.shape().ring(ab[d]).inverted());
        }
        const RationalVector v = lattice.bracket(xs);
        for (std::size_t r = 0; r < target.coordinates.size(); ++r) {
            const Rational& e = v[target.coordinates[r]];
            out.matrix(r, col) = e;
            if (!e.is_zero())
                image[r] = image[r] ? image[r]->united(inverted) : inverted;
        }
    }
    std::vector<LocalRing> rings;
    for (const auto& r : image)
        rings.push_back(r ? LocalRing(*r) : LocalRing::zero_ring());
    out.image = ModuleShape(std::move(rings));
    return out;
}

CentralHomEmbedding central_hom_embedding(const LieLattice& lattice)
{
    if (lattice.nilpotency_class() < 2)
        throw std::domain_error("no second centre section");
    const auto& ab = lattice.abelianisation();
    const auto& centre = lattice.centre();
    const auto& second = lattice.upper_central().sections[1];

    CentralHomEmbedding out{RationalMatrix(centre.coordinates.size() * ab.coordinates.size(),
                                           second.coordinates.size()),
                            hom_shape(ab.shape, centre.shape)};
    for (std::size_t w = 0; w < second.coordinates.size(); ++w)
        for (std::size_t x = 0; x < ab.coordinates.size(); ++x) {
            const RationalVector v =
                lattice.bracket(lattice.unit(second.coordinates[w]), lattice.unit(ab.coordinates[x]));
            for (std::size_t u = 0; u < centre.coordinates.size(); ++u)
                out.matrix(u * ab.coordinates.size() + x, w) = v[centre.coordinates[u]];
        }
    if (rank(out.matrix) != second.coordinates.size())
        throw std::logic_error("β₁ is not injective on Z²/Z¹");
    return out;
}

RationalMatrix induced_section_map(const RationalMatrix& phi, const Section& section)
{
    return phi.submatrix(section.coordinates, section.coordinates);
}

bool preserves_subspace(const RationalMatrix& phi, const Subspace& s)
{
    for (const auto& b : s.basis())
        if (!s.contains(phi * b))
            return false;
    return true;
}

}  // namespace nilcert
