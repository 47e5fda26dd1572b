#ifndef SGRAPH_ARITH_HPP
#define SGRAPH_ARITH_HPP

#include <cstdint>
#include <vector>

namespace sgraph {

using Order = std::uint64_t;
using Prime = std::uint64_t;

/// Ascending list of the distinct primes dividing n. prime_divisors(1) is
/// empty, which matters for the hypothesis test: an index of 1 has no prime
/// factor below anything.
std::vector<Prime> prime_divisors(Order n);

/// Prime factorisation with multiplicity, ascending.
std::vector<Prime> prime_factors(Order n);

bool is_prime(Order n);

/// Largest power of p dividing n.
Order p_part(Order n, Prime p);

/// If n = p^k for a prime p and k >= 1, returns true and sets p, k.
bool prime_power(Order n, Prime& p, unsigned& k);

/// Product with overflow detection; throws InvalidArgument on overflow.
Order checked_mul(Order a, Order b);

bool divides(Order d, Order n);

}  // namespace sgraph

#endif  // SGRAPH_ARITH_HPP
