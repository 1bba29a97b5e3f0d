#include "nilcert/subspace.hpp"

#include <stdexcept>

#include "nilcert/linear_algebra.hpp"

namespace nilcert {

Subspace::Subspace(std::size_t ambient_dimension) : ambient_(ambient_dimension) {}

Subspace Subspace::span(std::size_t ambient_dimension, const std::vector<RationalVector>& vectors)
{
    Subspace s(ambient_dimension);
    if (vectors.empty())
        return s;
    RationalMatrix m(vectors.size(), ambient_dimension);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient_dimension)
            throw std::invalid_argument("spanning vector has the wrong length");
        for (std::size_t c = 0; c < ambient_dimension; ++c)
            m(r, c) = vectors[r][c];
    }
    const RationalMatrix e = reduced_row_echelon(std::move(m), &s.pivots_);
    for (std::size_t r = 0; r < s.pivots_.size(); ++r)
        s.basis_.push_back(e.row(r));
    return s;
}

Subspace Subspace::whole(std::size_t ambient_dimension)
{
    std::vector<RationalVector> units;
    for (std::size_t i = 0; i < ambient_dimension; ++i) {
        RationalVector v(ambient_dimension);
        v[i] = 1;
        units.push_back(std::move(v));
    }
    return span(ambient_dimension, units);
}

RationalVector Subspace::reduce(const RationalVector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("vector has the wrong length");
    RationalVector r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Rational f = r[pivots_[k]];
        if (f.is_zero())
            continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            r[c] -= f * basis_[k][c];
    }
    return r;
}

bool Subspace::contains(const RationalVector& v) const
{
    return is_zero_vector(reduce(v));
}

bool Subspace::contains(const Subspace& other) const
{
    for (const auto& b : other.basis_)
        if (!contains(b))
            return false;
    return true;
}

std::optional<std::vector<std::size_t>> Subspace::coordinate_support() const
{
    for (std::size_t k = 0; k < basis_.size(); ++k)
        for (std::size_t c = 0; c < ambient_; ++c)
            if (c != pivots_[k] && !basis_[k][c].is_zero())
                return std::nullopt;
    return pivots_;
}

}  // namespace nilcert
