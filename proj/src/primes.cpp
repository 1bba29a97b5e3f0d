#include "nilcert/primes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilcert {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Pollard rho on a composite with no small factors. Returns a non-trivial divisor.
Integer pollard_rho(const Integer& n)
{
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        const auto f = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Integer diff = x - y;
            mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n)
            return d;
    }
}

void collect_factors(Integer n, std::vector<Prime>& out)
{
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        if (!mpz_fits_ulong_p(n.get_mpz_t()))
            throw std::overflow_error("prime factor exceeds 64 bits");
        out.push_back(n.get_ui());
        return;
    }
    Integer d = pollard_rho(n);
    collect_factors(d, out);
    collect_factors(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses make Miller-Rabin deterministic below 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<Prime> prime_divisors(const Integer& n)
{
    if (n == 0)
        throw std::domain_error("zero has no support");
    Integer m = n;
    mpz_abs(m.get_mpz_t(), m.get_mpz_t());
    std::vector<Prime> out;
    for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out.push_back(p);
            while (mpz_divisible_ui_p(m.get_mpz_t(), p))
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    collect_factors(m, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PrimeSet::PrimeSet(std::initializer_list<Prime> primes) : PrimeSet(std::vector<Prime>(primes)) {}

PrimeSet::PrimeSet(std::vector<Prime> primes) : primes_(std::move(primes))
{
    for (Prime p : primes_)
        if (!is_prime(p))
            throw std::invalid_argument(std::to_string(p) + " is not prime");
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PrimeSet::contains(Prime p) const
{
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const
{
    return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
}

PrimeSet PrimeSet::united(const PrimeSet& other) const
{
    PrimeSet out;
    std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                   std::back_inserter(out.primes_));
    return out;
}

PrimeSet PrimeSet::intersected(const PrimeSet& other) const
{
    PrimeSet out;
    std::set_intersection(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                          std::back_inserter(out.primes_));
    return out;
}

PrimeSet PrimeSet::without(const PrimeSet& other) const
{
    PrimeSet out;
    std::set_difference(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                        std::back_inserter(out.primes_));
    return out;
}

std::string PrimeSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < primes_.size(); ++i)
        os << (i ? "," : "") << primes_[i];
    os << '}';
    return os.str();
}

std::pair<PrimeSet, PrimeSet> prime_support(const Rational& q)
{
    if (q.is_zero())
        throw std::domain_error("zero has no support");
    return {PrimeSet(prime_divisors(q.numerator())), PrimeSet(prime_divisors(q.denominator()))};
}

bool is_pi_number(const Integer& n, const PrimeSet& pi)
{
    if (n == 0)
        return false;
    Integer m = n;
    mpz_abs(m.get_mpz_t(), m.get_mpz_t());
    for (Prime p : pi) {
        const Integer prime(static_cast<unsigned long>(p));
        mpz_remove(m.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t());
    }
    return m == 1;
}

bool is_pi_unit(const Rational& q, const PrimeSet& pi)
{
    return !q.is_zero() && is_pi_number(q.numerator(), pi) && is_pi_number(q.denominator(), pi);
}

bool lies_in(const Rational& q, const PrimeSet& pi)
{
    return is_pi_number(q.denominator(), pi);
}

}  // namespace nilcert
