#ifndef SGRAPH_PERMUTATION_HPP
#define SGRAPH_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgraph/arith.hpp"

namespace sgraph {

/// Points are stored 0-based; the text format and all user-facing output are
/// 1-based.
using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = 65535;

/// A bijection of {0, ..., degree-1} stored as an image table.
///
/// Products follow the "left to right" convention: `a * b` applies `a`
/// first, then `b`, so `(a * b)[x] == b[a[x]]`.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Takes a 0-based image table; throws InvalidArgument unless it is a
  /// bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Skips the bijection check; for hot loops whose output is a product of
  /// valid permutations.
  static Permutation from_images_unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }

  Point operator[](Point x) const noexcept { return images_[x]; }

  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Smallest moved point, or degree() if this is the identity.
  std::size_t first_moved_point() const noexcept;

  /// Disjoint cycle notation, 1-based, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const& a, Permutation const& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// "Apply a, then b". Throws InvalidArgument on degree mismatch.
Permutation compose(Permutation const& a, Permutation const& b);

inline Permutation operator*(Permutation const& a, Permutation const& b) {
  return compose(a, b);
}

Permutation inverse(Permutation const& a);

/// a^k for k >= 0.
Permutation power(Permutation const& a, Order k);

/// g^-1 * h * g.
Permutation conjugate(Permutation const& h, Permutation const& g);

/// a^-1 * b^-1 * a * b.
Permutation commutator(Permutation const& a, Permutation const& b);

/// Least k >= 1 with a^k = identity; the lcm of the cycle lengths.
Order element_order(Permutation const& a);

/// The p-part of a: the unique power a_p with a = a_p a_p', a_p of p-power
/// order and a_p' of order prime to p.
Permutation p_part_element(Permutation const& a, Prime p);

/// Parses disjoint cycle notation, e.g. "(1,2,3)(4,5)", or "()".
/// Whitespace is ignored. Throws ParseError on malformed syntax, on points
/// repeated across cycles and on points outside 1..degree.
Permutation parse_permutation(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
};

}  // namespace sgraph

#endif  // SGRAPH_PERMUTATION_HPP
