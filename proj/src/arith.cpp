#include "sgraph/arith.hpp"

#include "sgraph/errors.hpp"

namespace sgraph {

std::vector<Prime> prime_factors(Order n) {
  std::vector<Prime> out;
  if (n == 0) {
    throw InvalidArgument("cannot factor 0");
  }
  for (Order d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) {
    out.push_back(n);
  }
  return out;
}

std::vector<Prime> prime_divisors(Order n) {
  std::vector<Prime> out;
  for (Prime p : prime_factors(n)) {
    if (out.empty() || out.back() != p) {
      out.push_back(p);
    }
  }
  return out;
}

bool is_prime(Order n) {
  if (n < 2) {
    return false;
  }
  for (Order d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

Order p_part(Order n, Prime p) {
  Order r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool prime_power(Order n, Prime& p, unsigned& k) {
  auto const primes = prime_divisors(n);
  if (primes.size() != 1) {
    return false;
  }
  p = primes.front();
  k = 0;
  for (; n > 1; n /= p) {
    ++k;
  }
  return true;
}

Order checked_mul(Order a, Order b) {
  Order r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw InvalidArgument("integer overflow computing a group order");
  }
  return r;
}

bool divides(Order d, Order n) { return d != 0 && n % d == 0; }

}  // namespace sgraph
