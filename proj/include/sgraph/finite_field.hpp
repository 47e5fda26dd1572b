#ifndef SGRAPH_FINITE_FIELD_HPP
#define SGRAPH_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "sgraph/arith.hpp"

namespace sgraph {

/// GF(p^k) with elements encoded as integers 0..q-1: the residue
/// c_0 + c_1 x + ... + c_{k-1} x^{k-1} is stored as c_0 + c_1 p + ... .
/// Multiplication goes through discrete log tables of a primitive element.
class FieldGF {
 public:
  using Element = std::uint32_t;

  static constexpr Order kMaxSize = Order{1} << 20;

  /// Throws InvalidArgument if p is not prime, k == 0, or p^k > kMaxSize.
  FieldGF(Prime p, unsigned k);

  Prime characteristic() const noexcept { return p_; }
  unsigned extension_degree() const noexcept { return k_; }
  Order size() const noexcept { return q_; }

  /// Monic modulus, coefficients from x^0 up to x^k. The lexicographically
  /// smallest irreducible one, comparing coefficients from x^{k-1} down.
  std::vector<std::uint32_t> const& modulus() const noexcept { return modulus_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element primitive_element() const noexcept { return primitive_; }

  Element add(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element mul(Element a, Element b) const noexcept;
  /// Throws InvalidArgument for zero.
  Element inv(Element a) const;
  Element pow(Element a, Order e) const noexcept;
  /// x -> x^(p^e).
  Element frobenius(Element a, unsigned e = 1) const noexcept;
  /// Least n >= 1 with a^n = 1; throws for zero.
  Order multiplicative_order(Element a) const;

 private:
  std::vector<std::uint32_t> digits(Element a) const;
  Element from_digits(std::vector<std::uint32_t> const& d) const;
  Element slow_mul(Element a, Element b) const;

  Prime p_;
  unsigned k_;
  Order q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> exp_;       // exp_[i] = primitive^i, i < q-1
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  Element primitive_ = 1;
};

/// Factory matching the natural spelling: field_gf(3, 3) is GF(27).
inline FieldGF field_gf(Prime p, unsigned k) { return FieldGF(p, k); }

}  // namespace sgraph

#endif  // SGRAPH_FINITE_FIELD_HPP
