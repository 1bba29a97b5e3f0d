#include "nilcert/module_shape.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nilcert/linear_algebra.hpp"

namespace nilcert {

LocalRing LocalRing::zero_ring()
{
    LocalRing r;
    r.zero_ = true;
    return r;
}

bool LocalRing::contains(const Rational& q) const
{
    if (q.is_zero())
        return true;
    return !zero_ && lies_in(q, inverted_);
}

bool LocalRing::scales_into(const Rational& q, const LocalRing& target) const
{
    if (q.is_zero() || zero_)
        return true;
    if (target.zero_)
        return false;
    return lies_in(q, target.inverted_) && inverted_.is_subset_of(target.inverted_);
}

LocalRing LocalRing::conductor_into(const LocalRing& target) const
{
    if (zero_ || target.zero_ || !inverted_.is_subset_of(target.inverted_))
        return zero_ring();
    return target;
}

std::string LocalRing::to_string() const
{
    if (zero_)
        return "0";
    if (inverted_.empty())
        return "Z";
    std::string s = "Z[1/";
    for (std::size_t i = 0; i < inverted_.size(); ++i)
        s += (i ? "," : "") + std::to_string(inverted_.primes()[i]);
    return s + "]";
}

bool ModuleShape::has_zero_ring() const
{
    return std::any_of(rings_.begin(), rings_.end(), [](const LocalRing& r) { return r.is_zero(); });
}

ModuleShape ModuleShape::parse(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument("malformed module shape \"" + text + "\"");
    }
    if (!j.is_array())
        throw std::invalid_argument("module shape must be a list of prime lists");
    std::vector<LocalRing> rings;
    for (const auto& entry : j) {
        if (entry.is_null())
            rings.push_back(LocalRing::zero_ring());
        else if (entry.is_array() && std::all_of(entry.begin(), entry.end(), [](const auto& p) { return p.is_number_unsigned(); }))
            rings.emplace_back(PrimeSet(entry.get<std::vector<Prime>>()));
        else
            throw std::invalid_argument("malformed module shape \"" + text + "\"");
    }
    return ModuleShape(std::move(rings));
}

std::string ModuleShape::to_string() const
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rings_) {
        if (r.is_zero())
            j.push_back(nullptr);
        else
            j.push_back(r.inverted().primes());
    }
    return j.dump();
}

bool contains(const ModuleShape& shape, const RationalVector& v)
{
    if (v.size() != shape.rank())
        throw std::invalid_argument("vector length does not match module rank");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!shape.ring(i).contains(v[i]))
            return false;
    return true;
}

bool maps_into(const RationalMatrix& a, const ModuleShape& src, const ModuleShape& dst)
{
    if (a.cols() != src.rank() || a.rows() != dst.rank())
        throw std::invalid_argument("matrix size does not match module ranks");
    for (std::size_t u = 0; u < a.rows(); ++u)
        for (std::size_t i = 0; i < a.cols(); ++i)
            if (!src.ring(i).scales_into(a(u, i), dst.ring(u)))
                return false;
    return true;
}

bool map_preserves(const RationalMatrix& a, const ModuleShape& shape)
{
    return maps_into(a, shape, shape);
}

namespace {

/*
 * Is the square matrix invertible over the local ring Z_(p)?
 *
 * Smith-style elimination: the pivot is an entry of least p-adic valuation in
 * the remaining block (ties broken by lowest row-major index). Every pivot
 * must be a p-adic unit; a pivot of positive valuation means the columns span
 * a proper sublattice.
 */
bool invertible_over_local_integers(RationalMatrix m, Prime p)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> rows(n), cols(n);
    for (std::size_t i = 0; i < n; ++i)
        rows[i] = cols[i] = i;

    for (std::size_t step = 0; step < n; ++step) {
        std::optional<long> best;
        std::size_t best_r = 0, best_c = 0;
        for (std::size_t r = step; r < n; ++r)
            for (std::size_t c = step; c < n; ++c) {
                const Rational& e = m(rows[r], cols[c]);
                if (e.is_zero())
                    continue;
                const long v = valuation(e, p);
                if (!best || v < *best) {
                    best = v;
                    best_r = r;
                    best_c = c;
                }
            }
        if (!best || *best > 0)
            return false;
        if (*best < 0)
            throw std::logic_error("entry is not p-integral in local elimination");
        std::swap(rows[step], rows[best_r]);
        std::swap(cols[step], cols[best_c]);
        const Rational pivot = m(rows[step], cols[step]);
        for (std::size_t r = step + 1; r < n; ++r) {
            const Rational f = m(rows[r], cols[step]) / pivot;
            if (f.is_zero())
                continue;
            for (std::size_t c = step; c < n; ++c)
                m(rows[r], cols[c]) -= f * m(rows[step], cols[c]);
        }
        for (std::size_t c = step + 1; c < n; ++c)
            m(rows[step], cols[c]) = 0;
    }
    return true;
}

// Steps (a)-(c) of the local test at a single prime.
bool surjective_at(const RationalMatrix& a, const ModuleShape& shape, Prime p)
{
    const std::size_t n = shape.rank();
    std::vector<std::size_t> divisible, free;
    for (std::size_t i = 0; i < n; ++i)
        (shape.ring(i).inverted().contains(p) ? divisible : free).push_back(i);
    if (free.empty())
        return true;

    // (a) W = Q-span of the images of the p-divisible coordinates.
    std::vector<RationalVector> w_span;
    for (auto i : divisible)
        w_span.push_back(a.column(i));
    RationalMatrix w = RationalMatrix::from_columns(w_span, n).transposed();

    // (b) Every p-divisible target coordinate must lie in W.
    const std::size_t w_rank = rank(w);
    for (auto j : divisible) {
        RationalMatrix extended(w.rows() + 1, n);
        for (std::size_t r = 0; r < w.rows(); ++r)
            for (std::size_t c = 0; c < n; ++c)
                extended(r, c) = w(r, c);
        extended(w.rows(), j) = 1;
        if (rank(extended) != w_rank)
            return false;
    }
    if (w_rank != divisible.size())
        return false;

    // W is now exactly the span of the p-divisible coordinates, so V/W is
    // read off on the p-free coordinates.
    // (c) The free-coordinate images must generate Z_(p)^free.
    return invertible_over_local_integers(a.submatrix(free, free), p);
}

std::vector<Prime> relevant_primes(const RationalMatrix& a, const ModuleShape& shape, const Rational& det)
{
    PrimeSet all;
    for (const auto& e : a.entries()) {
        if (e.is_zero())
            continue;
        auto [num, den] = prime_support(e);
        all = all.united(num).united(den);
    }
    auto [num, den] = prime_support(det);
    all = all.united(num).united(den);

    std::vector<Prime> out;
    for (Prime p : all) {
        const bool matters = std::any_of(shape.rings().begin(), shape.rings().end(),
                                         [p](const LocalRing& r) { return !r.inverted().contains(p); });
        if (matters)
            out.push_back(p);
    }
    return out;
}

}  // namespace

std::optional<Prime> surjectivity_failure_prime(const RationalMatrix& a, const ModuleShape& shape)
{
    if (!a.is_square() || a.rows() != shape.rank())
        throw std::invalid_argument("matrix size does not match module rank");
    if (shape.has_zero_ring())
        throw std::invalid_argument("surjectivity is only decided for full-rank lattices");
    const Rational det = determinant(a);
    if (det.is_zero() || !map_preserves(a, shape))
        throw std::invalid_argument("not an endomorphism of the module");
    for (Prime p : relevant_primes(a, shape, det))
        if (!surjective_at(a, shape, p))
            return p;
    return std::nullopt;
}

bool map_surjective(const RationalMatrix& a, const ModuleShape& shape)
{
    return !surjectivity_failure_prime(a, shape).has_value();
}

ModuleShape hom_shape(const ModuleShape& src, const ModuleShape& dst)
{
    std::vector<LocalRing> rings;
    rings.reserve(src.rank() * dst.rank());
    for (const auto& target : dst.rings())
        for (const auto& source : src.rings())
            rings.push_back(source.conductor_into(target));
    return ModuleShape(std::move(rings));
}

}  // namespace nilcert
