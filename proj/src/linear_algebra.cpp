#include "nilcert/linear_algebra.hpp"

#include <utility>

namespace nilcert {

namespace {

void require_square(const RationalMatrix& m, const char* what)
{
    if (!m.is_square())
        throw std::invalid_argument(std::string(what) + " of a non-square matrix");
}

}  // namespace

Rational determinant(const RationalMatrix& m)
{
    require_square(m, "determinant");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;

    std::vector<Integer> a(n * n);
    Integer scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < n; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).denominator().get_mpz_t());
        scale *= l;
        for (std::size_t c = 0; c < n; ++c)
            a[r * n + c] = m(r, c).numerator() * (l / m(r, c).denominator());
    }
    const auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };

    int sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && at(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(at(k, c), at(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            at(i, k) = 0;
        }
        previous = at(k, k);
    }
    return Rational(Integer(sign * at(n - 1, n - 1)), scale);
}

Polynomial characteristic_polynomial(const RationalMatrix& m)
{
    require_square(m, "characteristic polynomial");
    const std::size_t n = m.rows();
    RationalMatrix h = m;

    // Similarity transforms to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && h(pivot, j).is_zero())
            ++pivot;
        if (pivot == n)
            continue;
        if (pivot != j + 1) {
            h.swap_rows(pivot, j + 1);
            h.swap_cols(pivot, j + 1);
        }
        for (std::size_t r = j + 2; r < n; ++r) {
            if (h(r, j).is_zero())
                continue;
            const Rational f = h(r, j) / h(j + 1, j);
            for (std::size_t c = 0; c < n; ++c)
                h(r, c) -= f * h(j + 1, c);
            for (std::size_t c = 0; c < n; ++c)
                h(c, j + 1) += f * h(c, r);
        }
    }

    // p_k = det(xI - H[0..k, 0..k]).
    const Polynomial x({Rational(0), Rational(1)});
    std::vector<Polynomial> p;
    p.reserve(n + 1);
    p.emplace_back(std::vector<Rational>{1});
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial next = (x - Polynomial({h(k, k)})) * p[k];
        Rational chain = 1;
        for (std::size_t i = k; i-- > 0;) {
            chain *= h(i + 1, i);
            if (chain.is_zero())
                break;
            next = next - Polynomial({h(i, k) * chain}) * p[i];
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

RationalMatrix reduced_row_echelon(RationalMatrix m, std::vector<std::size_t>* pivots)
{
    if (pivots)
        pivots->clear();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(p, row);
        const Rational inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero())
                continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(row, c);
        }
        if (pivots)
            pivots->push_back(col);
        ++row;
    }
    return m;
}

std::size_t rank(const RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    reduced_row_echelon(m, &pivots);
    return pivots.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    const RationalMatrix r = reduced_row_echelon(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalVector solve_linear(const RationalMatrix& m, const RationalVector& v)
{
    require_square(m, "solve");
    if (v.size() != m.rows())
        throw std::invalid_argument("right-hand side length mismatch");
    const std::size_t n = m.rows();
    if (n == 0)
        return {};
    RationalMatrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n) = v[r];
    }
    std::vector<std::size_t> pivots;
    const RationalMatrix e = reduced_row_echelon(std::move(aug), &pivots);
    if (pivots.size() < n || pivots.back() >= n)
        throw SingularMatrixError();
    return e.column(n);
}

RationalMatrix inverse(const RationalMatrix& m)
{
    require_square(m, "inverse");
    const std::size_t n = m.rows();
    if (n == 0)
        return {};
    RationalMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    std::vector<std::size_t> pivots;
    const RationalMatrix e = reduced_row_echelon(std::move(aug), &pivots);
    if (pivots.size() < n || pivots[n - 1] >= n)
        throw SingularMatrixError();
    RationalMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = e(r, n + c);
    return out;
}

}  // namespace nilcert
