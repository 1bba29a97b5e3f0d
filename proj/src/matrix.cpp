#include "nilcert/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace nilcert {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> entries)
{
    RationalMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::span<const RationalVector> columns, std::size_t rows)
{
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

bool RationalMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q.is_zero(); });
}

RationalVector RationalMatrix::column(std::size_t c) const
{
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

RationalVector RationalMatrix::row(std::size_t r) const
{
    return RationalVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalMatrix RationalMatrix::transposed() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::submatrix(std::span<const std::size_t> row_indices,
                                         std::span<const std::size_t> col_indices) const
{
    RationalMatrix s(row_indices.size(), col_indices.size());
    for (std::size_t r = 0; r < row_indices.size(); ++r)
        for (std::size_t c = 0; c < col_indices.size(); ++c)
            s(r, c) = (*this)(row_indices[r], col_indices[c]);
    return s;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void RationalMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix size mismatch in addition");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += rhs.entries_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix size mismatch in subtraction");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= rhs.entries_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar)
{
    for (auto& e : entries_)
        e *= scalar;
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix size mismatch in product");
    RationalMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    p(i, j) += aik * b(k, j);
        }
    return p;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v)
{
    if (a.cols_ != v.size())
        throw std::invalid_argument("matrix-vector size mismatch");
    RationalVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero())
                out[i] += a(i, k) * v[k];
    return out;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "," : "") << '[';
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? "," : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b)
{
    RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t u = 0; u < b.rows(); ++u)
                for (std::size_t v = 0; v < b.cols(); ++v)
                    k(i * b.rows() + u, j * b.cols() + v) = a(i, j) * b(u, v);
        }
    return k;
}

bool is_zero_vector(const RationalVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
}

}  // namespace nilcert
