#pragma once

#include <optional>
#include <vector>

#include "nilcert/matrix.hpp"

namespace nilcert {

/// A subspace of Qⁿ held as the rows of its reduced row echelon basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dimension = 0);
    static Subspace span(std::size_t ambient_dimension, const std::vector<RationalVector>& vectors);
    static Subspace whole(std::size_t ambient_dimension);

    std::size_t ambient_dimension() const { return ambient_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<RationalVector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const RationalVector& v) const;
    bool contains(const Subspace& other) const;
    /// Canonical representative of v modulo this subspace (pivot coordinates zeroed).
    RationalVector reduce(const RationalVector& v) const;

    /// Coordinate indices if the subspace is spanned by standard basis vectors.
    std::optional<std::vector<std::size_t>> coordinate_support() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_;
    std::vector<RationalVector> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace nilcert
