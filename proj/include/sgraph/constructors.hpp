#ifndef SGRAPH_CONSTRUCTORS_HPP
#define SGRAPH_CONSTRUCTORS_HPP

#include <cstddef>
#include <string_view>

#include "sgraph/finite_field.hpp"
#include "sgraph/perm_group.hpp"

namespace sgraph {

/// Sym(n) and Alt(n) for 1 <= n <= 20, Cyc(n) for n >= 1, and the dihedral
/// group of order 2n on n points for n >= 3.
PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
PermGroup cyclic(std::size_t n);
PermGroup dihedral(std::size_t n);

/// Points of PG(1, q): index 0 is infinity, index 1 + x is the field element
/// with encoding x.
class ProjectiveLine {
 public:
  explicit ProjectiveLine(FieldGF field) : field_(std::move(field)) {}

  FieldGF const& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(field_.size()) + 1; }

  static constexpr Point kInfinity = 0;
  static Point point_of(FieldGF::Element x) { return static_cast<Point>(x + 1); }

  /// The permutation z -> (a z + b) / (c z + d); ad - bc must be nonzero.
  Permutation moebius(FieldGF::Element a, FieldGF::Element b, FieldGF::Element c,
                      FieldGF::Element d) const;

  /// infinity fixed, x -> x^(p^e).
  Permutation frobenius(unsigned e) const;

 private:
  FieldGF field_;
};

/// |PSL(2, q)| = q (q^2 - 1) / gcd(2, q - 1).
Order psl2_order(Order q);

/// PSL(2, q) acting on the q + 1 points of the projective line, generated by
/// z -> z + 1, z -> z + w (w primitive; omitted over prime fields) and
/// z -> -1/z. Requires q >= 4 a prime power.
PermGroup psl2(Order q);

/// PSL(2, q) extended by the field automorphism x -> x^(p^e), acting on the
/// same points. Requires q = p^k, 1 <= e < k and e | k; the order is
/// |PSL(2, q)| * k / e.
PermGroup psl2_frobenius_extension(Order q, unsigned e);

/// Mathieu groups M11, M12, M22 from shipped generator data. Throws
/// InvariantViolation if the data does not produce the known order.
PermGroup mathieu(unsigned n);

/// Janko groups J1 (on 266 points) and J2 (on 100 points) from shipped
/// generator data.
PermGroup janko(unsigned n);

/// A x B acting on the disjoint union of the two domains.
PermGroup direct_product(PermGroup const& a, PermGroup const& b);

namespace detail {
/// Raw text of an embedded generator file ("m11", "j2", ...).
std::string_view resource_text(std::string_view name);
}  // namespace detail

}  // namespace sgraph

#endif  // SGRAPH_CONSTRUCTORS_HPP
