#include "sgraph/finite_field.hpp"

#include "sgraph/errors.hpp"

namespace sgraph {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) {
    a.pop_back();
  }
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, Poly const& m, std::uint32_t p) {
  trim(a);
  std::size_t const dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint32_t const lead = a.back();
    std::size_t const shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + static_cast<std::uint64_t>(p - lead) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p
// digits of n.
Poly monic_from_index(std::uint64_t n, unsigned d, std::uint32_t p) {
  Poly f(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(n % p);
    n /= p;
  }
  f[d] = 1;
  return f;
}

bool is_irreducible(Poly const& f, std::uint32_t p) {
  unsigned const k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) {
      count *= p;
    }
    for (std::uint64_t n = 0; n < count; ++n) {
      if (poly_mod(f, monic_from_index(n, d, p), p).empty()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

FieldGF::FieldGF(Prime p, unsigned k) : p_(p), k_(k), q_(1) {
  if (!is_prime(p)) {
    throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (k == 0) {
    throw InvalidArgument("extension degree must be positive");
  }
  for (unsigned i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > kMaxSize) {
      throw InvalidArgument("field size exceeds 2^20");
    }
  }
  auto const pp = static_cast<std::uint32_t>(p);

  // Enumerating lower coefficients as a base-p number with c_{k-1} most
  // significant gives lexicographic order from x^{k-1} down to x^0.
  Order const candidates = q_;
  for (Order n = 0; n < candidates; ++n) {
    Poly f = monic_from_index(n, k, pp);
    if (k == 1 || is_irreducible(f, pp)) {
      modulus_ = std::move(f);
      break;
    }
  }
  if (modulus_.empty()) {
    throw InvariantViolation("no irreducible polynomial found");
  }

  // Primitive element: smallest encoding whose order is q-1.
  Order const group_order = q_ - 1;
  auto const primes = prime_divisors(group_order);
  auto slow_pow = [this](Element a, Order e) {
    Element r = 1;
    while (e > 0) {
      if (e & 1U) {
        r = slow_mul(r, a);
      }
      a = slow_mul(a, a);
      e >>= 1U;
    }
    return r;
  };
  for (Element g = 1; g < q_; ++g) {
    bool ok = true;
    for (Prime r : primes) {
      if (slow_pow(g, group_order / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = g;
      break;
    }
  }

  exp_.resize(group_order);
  log_.assign(q_, 0);
  Element x = 1;
  for (Order i = 0; i < group_order; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, primitive_);
  }
  if (x != 1) {
    throw InvariantViolation("primitive element has the wrong order");
  }
}

std::vector<std::uint32_t> FieldGF::digits(Element a) const {
  std::vector<std::uint32_t> d(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = static_cast<std::uint32_t>(a % p_);
    a = static_cast<Element>(a / p_);
  }
  return d;
}

FieldGF::Element FieldGF::from_digits(std::vector<std::uint32_t> const& d) const {
  Element a = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    a = static_cast<Element>(a * p_ + d[i]);
  }
  return a;
}

FieldGF::Element FieldGF::slow_mul(Element a, Element b) const {
  auto const da = digits(a);
  auto const db = digits(b);
  Poly prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  auto r = poly_mod(prod, modulus_, static_cast<std::uint32_t>(p_));
  r.resize(k_, 0);
  return from_digits(r);
}

FieldGF::Element FieldGF::add(Element a, Element b) const noexcept {
  Element r = 0;
  Element scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    auto const da = a % p_;
    auto const db = b % p_;
    r += static_cast<Element>(((da + db) % p_) * scale);
    a = static_cast<Element>(a / p_);
    b = static_cast<Element>(b / p_);
    scale = static_cast<Element>(scale * p_);
  }
  return r;
}

FieldGF::Element FieldGF::neg(Element a) const noexcept {
  Element r = 0;
  Element scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    auto const da = a % p_;
    r += static_cast<Element>(((p_ - da) % p_) * scale);
    a = static_cast<Element>(a / p_);
    scale = static_cast<Element>(scale * p_);
  }
  return r;
}

FieldGF::Element FieldGF::mul(Element a, Element b) const noexcept {
  if (a == 0 || b == 0) {
    return 0;
  }
  auto const n = q_ - 1;
  return exp_[(static_cast<Order>(log_[a]) + log_[b]) % n];
}

FieldGF::Element FieldGF::inv(Element a) const {
  if (a == 0) {
    throw InvalidArgument("zero has no inverse");
  }
  auto const n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

FieldGF::Element FieldGF::pow(Element a, Order e) const noexcept {
  if (e == 0) {
    return 1;
  }
  if (a == 0) {
    return 0;
  }
  auto const n = q_ - 1;
  return exp_[(static_cast<Order>(log_[a]) * (e % n)) % n];
}

FieldGF::Element FieldGF::frobenius(Element a, unsigned e) const noexcept {
  Order exponent = 1;
  for (unsigned i = 0; i < e; ++i) {
    exponent *= p_;
  }
  return pow(a, exponent);
}

Order FieldGF::multiplicative_order(Element a) const {
  if (a == 0) {
    throw InvalidArgument("zero has no multiplicative order");
  }
  Order o = q_ - 1;
  for (Prime r : prime_divisors(q_ - 1)) {
    while (o % r == 0 && pow(a, o / r) == 1) {
      o /= r;
    }
  }
  return o;
}

}  // namespace sgraph
