#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nilcert/rational.hpp"

namespace nilcert {

using Prime = std::uint64_t;

/// Deterministic primality test for 64-bit values.
bool is_prime(std::uint64_t n);

/// Distinct prime divisors of |n| in increasing order; n must be non-zero.
std::vector<Prime> prime_divisors(const Integer& n);

/*
 * A finite set of primes, the π in Z[1/π].
 *
 * Stored strictly increasing. Construction rejects non-primes and silently
 * merges duplicates.
 */
class PrimeSet {
public:
    PrimeSet() = default;
    PrimeSet(std::initializer_list<Prime> primes);
    explicit PrimeSet(std::vector<Prime> primes);

    bool empty() const { return primes_.empty(); }
    std::size_t size() const { return primes_.size(); }
    bool contains(Prime p) const;
    bool is_subset_of(const PrimeSet& other) const;

    PrimeSet united(const PrimeSet& other) const;
    PrimeSet intersected(const PrimeSet& other) const;
    PrimeSet without(const PrimeSet& other) const;

    const std::vector<Prime>& primes() const { return primes_; }
    auto begin() const { return primes_.begin(); }
    auto end() const { return primes_.end(); }

    /// "{2,3}", or "{}" when empty.
    std::string to_string() const;

    friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

private:
    std::vector<Prime> primes_;
};

/// Prime supports of the numerator and denominator of a non-zero rational.
std::pair<PrimeSet, PrimeSet> prime_support(const Rational& q);

/// True iff n is non-zero and every prime dividing n lies in pi.
bool is_pi_number(const Integer& n, const PrimeSet& pi);

/// True iff q is a unit of Z[1/pi].
bool is_pi_unit(const Rational& q, const PrimeSet& pi);

/// True iff q lies in Z[1/pi], i.e. its denominator is a pi-number.
bool lies_in(const Rational& q, const PrimeSet& pi);

}  // namespace nilcert
