#include "nilcert/pattern_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcert {

std::string Position::label() const
{
    return "E" + std::to_string(row + 1) + std::to_string(col + 1);
}

bool canonical_less(const Position& a, const Position& b)
{
    if (a.height() != b.height())
        return a.height() < b.height();
    return a.row != b.row ? a.row < b.row : a.col < b.col;
}

Pattern::Pattern(std::size_t degree, PrimeSet pi)
    : degree_(degree), pi_(std::move(pi)), rings_(degree * degree, LocalRing::zero_ring())
{
    if (degree < 2)
        throw std::invalid_argument("pattern degree must be at least 2");
}

const LocalRing& Pattern::ring(std::size_t i, std::size_t j) const
{
    if (i >= j || j >= degree_)
        throw std::out_of_range("pattern position is not strictly upper triangular");
    return rings_[i * degree_ + j];
}

void Pattern::set_ring(std::size_t i, std::size_t j, LocalRing ring)
{
    if (i >= j || j >= degree_)
        throw std::out_of_range("pattern position is not strictly upper triangular");
    rings_[i * degree_ + j] = std::move(ring);
}

std::vector<Position> Pattern::positions() const
{
    std::vector<Position> out;
    for (std::size_t h = 1; h < degree_; ++h)
        for (std::size_t i = 0; i + h < degree_; ++i)
            if (!ring(i, i + h).is_zero())
                out.push_back({i, i + h});
    return out;
}

Pattern Pattern::full(std::size_t degree, const PrimeSet& inverted, PrimeSet pi)
{
    Pattern p(degree, std::move(pi));
    for (std::size_t i = 0; i < degree; ++i)
        for (std::size_t j = i + 1; j < degree; ++j)
            p.set_ring(i, j, inverted);
    return p;
}

bool Pattern::is_member(const RationalMatrix& m) const
{
    if (m.rows() != degree_ || m.cols() != degree_)
        return false;
    for (std::size_t i = 0; i < degree_; ++i)
        for (std::size_t j = 0; j < degree_; ++j) {
            const Rational& e = m(i, j);
            if (i == j) {
                if (e != Rational(1))
                    return false;
            } else if (i > j) {
                if (!e.is_zero())
                    return false;
            } else if (!ring(i, j).contains(e)) {
                return false;
            }
        }
    return true;
}

bool Pattern::is_lie_member(const RationalMatrix& x) const
{
    if (x.rows() != degree_ || x.cols() != degree_)
        return false;
    for (std::size_t i = 0; i < degree_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!x(i, j).is_zero())
                return false;
    for (std::size_t i = 0; i < degree_; ++i)
        for (std::size_t j = i + 1; j < degree_; ++j)
            if (ring(i, j).is_zero() && !x(i, j).is_zero())
                return false;
    return true;
}

std::vector<ClosureViolation> validate_pattern(const Pattern& p)
{
    std::vector<ClosureViolation> out;
    const std::size_t n = p.degree();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const LocalRing& left = p.ring(i, j);
                const LocalRing& right = p.ring(j, k);
                if (left.is_zero() || right.is_zero())
                    continue;
                const LocalRing& target = p.ring(i, k);
                const std::string where = Position{i, j}.label() + "·" + Position{j, k}.label() + " into "
                                          + Position{i, k}.label();
                if (target.is_zero()) {
                    out.push_back({i, j, k, where + ": target position is zero"});
                } else {
                    const PrimeSet needed = left.inverted().united(right.inverted());
                    if (!needed.is_subset_of(target.inverted()))
                        out.push_back({i, j, k,
                                       where + ": " + left.to_string() + "·" + right.to_string() + " is not contained in "
                                           + target.to_string()});
                }
            }
    if (p.positions().empty())
        out.push_back({0, 0, 0, "pattern has no nonzero positions"});
    return out;
}

bool is_pi_divisible(const Pattern& p, const PrimeSet& pi)
{
    for (const auto& pos : p.positions())
        if (!pi.is_subset_of(p.ring(pos).inverted()))
            return false;
    return true;
}

LieVector::LieVector(RationalMatrix matrix) : matrix_(std::move(matrix))
{
    if (!matrix_.is_square())
        throw std::invalid_argument("Lie vector must be square");
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!matrix_(i, j).is_zero())
                throw std::invalid_argument("Lie vector must be strictly upper triangular");
}

LieVector LieVector::from_coordinates(const Pattern& p, const RationalVector& coords)
{
    const auto positions = p.positions();
    if (coords.size() != positions.size())
        throw std::invalid_argument("coordinate count does not match pattern rank");
    RationalMatrix m(p.degree(), p.degree());
    for (std::size_t k = 0; k < positions.size(); ++k)
        m(positions[k].row, positions[k].col) = coords[k];
    return LieVector(std::move(m));
}

RationalVector LieVector::coordinates(const Pattern& p) const
{
    if (!p.is_lie_member(matrix_))
        throw std::invalid_argument("Lie vector has entries at zero positions of the pattern");
    RationalVector out;
    for (const auto& pos : p.positions())
        out.push_back(matrix_(pos.row, pos.col));
    return out;
}

GroupElement::GroupElement(std::shared_ptr<const Pattern> pattern, RationalMatrix matrix)
    : pattern_(std::move(pattern)), matrix_(std::move(matrix))
{
    if (!pattern_)
        throw std::invalid_argument("group element needs a pattern");
    if (!pattern_->is_member(matrix_))
        throw std::invalid_argument("matrix is not a member of the pattern group");
}

GroupElement GroupElement::identity(std::shared_ptr<const Pattern> pattern)
{
    const std::size_t n = pattern->degree();
    return GroupElement(std::move(pattern), RationalMatrix::identity(n));
}

GroupElement GroupElement::elementary(std::shared_ptr<const Pattern> pattern, const Position& p, const Rational& t)
{
    RationalMatrix m = RationalMatrix::identity(pattern->degree());
    m(p.row, p.col) = t;
    return GroupElement(std::move(pattern), std::move(m));
}

namespace {

void require_same_pattern(const GroupElement& g, const GroupElement& h)
{
    if (g.pattern_ptr() != h.pattern_ptr() && !(g.pattern() == h.pattern()))
        throw std::invalid_argument("pattern mismatch");
}

}  // namespace

GroupElement multiply(const GroupElement& g, const GroupElement& h)
{
    require_same_pattern(g, h);
    return GroupElement(g.pattern_ptr(), g.matrix() * h.matrix());
}

GroupElement inverse(const GroupElement& g)
{
    // (1 + u)^-1 = Σ (-u)^k, finite since u is nilpotent.
    const std::size_t n = g.pattern().degree();
    const RationalMatrix id = RationalMatrix::identity(n);
    const RationalMatrix neg_u = (g.matrix() - id) * Rational(-1);
    RationalMatrix term = id;
    RationalMatrix sum = id;
    for (std::size_t k = 1; k < n; ++k) {
        term = term * neg_u;
        sum += term;
    }
    return GroupElement(g.pattern_ptr(), std::move(sum));
}

GroupElement commutator(const GroupElement& g, const GroupElement& h)
{
    return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

RationalMatrix log_unipotent(const RationalMatrix& g)
{
    const std::size_t n = g.rows();
    const RationalMatrix u = g - RationalMatrix::identity(n);
    RationalMatrix power = u;
    RationalMatrix sum(n, n);
    for (std::size_t k = 1; k < n; ++k) {
        const Rational c = Rational(k % 2 ? 1 : -1) / Rational(static_cast<long>(k));
        sum += power * c;
        power = power * u;
    }
    return sum;
}

RationalMatrix exp_nilpotent(const RationalMatrix& x)
{
    const std::size_t n = x.rows();
    RationalMatrix term = RationalMatrix::identity(n);
    RationalMatrix sum = term;
    for (std::size_t k = 1; k < n; ++k) {
        term = term * x * (Rational(1) / Rational(static_cast<long>(k)));
        sum += term;
    }
    return sum;
}

LieVector log(const GroupElement& g)
{
    return LieVector(log_unipotent(g.matrix()));
}

RationalMatrix exp(const LieVector& x)
{
    return exp_nilpotent(x.matrix());
}

GroupElement rational_power(const GroupElement& g, const Rational& m)
{
    const Pattern& p = g.pattern();
    if (!lies_in(m, p.pi()) || !is_pi_divisible(p))
        throw std::domain_error("root not guaranteed in N");
    return GroupElement(g.pattern_ptr(), exp_nilpotent(log(g).matrix() * m));
}

std::vector<ElementaryFactor> factor_into_elementaries(const GroupElement& g)
{
    std::vector<ElementaryFactor> out;
    RationalMatrix residual = g.matrix();
    const std::size_t n = residual.rows();
    for (const auto& pos : g.pattern().positions()) {
        const Rational t = residual(pos.row, pos.col);
        if (t.is_zero())
            continue;
        // Left-multiply by e_p(-t): row `pos.row` -= t·row `pos.col`.
        for (std::size_t c = pos.col; c < n; ++c)
            residual(pos.row, c) -= t * residual(pos.col, c);
        out.push_back({pos, t});
    }
    if (residual != RationalMatrix::identity(n))
        throw std::logic_error("elementary factorization left a non-trivial residual");
    return out;
}

}  // namespace nilcert
