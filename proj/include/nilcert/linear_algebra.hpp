#pragma once

#include <stdexcept>
#include <vector>

#include "nilcert/matrix.hpp"
#include "nilcert/polynomial.hpp"

namespace nilcert {

class SingularMatrixError : public std::domain_error {
public:
    SingularMatrixError() : std::domain_error("singular") {}
};

/*
 * Exact determinant by fraction-free elimination.
 *
 * Each row is scaled by the lcm of its denominators so the work happens on an
 * integer matrix; Bareiss' update keeps every intermediate an exact integer
 * minor. The scaling is divided back out at the end.
 */
Rational determinant(const RationalMatrix& m);

/// det(xI - M), monic of degree n. Computed by Hessenberg reduction and the
/// standard determinant recurrence on the Hessenberg form.
Polynomial characteristic_polynomial(const RationalMatrix& m);

/// Unique solution of Mx = v; throws SingularMatrixError when det(M) = 0.
RationalVector solve_linear(const RationalMatrix& m, const RationalVector& v);

RationalMatrix inverse(const RationalMatrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each non-zero row.
RationalMatrix reduced_row_echelon(RationalMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : Mx = 0}, one vector per free column, in column order.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

}  // namespace nilcert
