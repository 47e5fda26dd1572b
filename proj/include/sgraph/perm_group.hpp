#ifndef SGRAPH_PERM_GROUP_HPP
#define SGRAPH_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgraph/arith.hpp"
#include "sgraph/permutation.hpp"

namespace sgraph {

inline constexpr Order kDefaultExhaustiveCap = 2'000'000;
inline constexpr Order kDefaultQuotientCap = 50'000;

/// Process-wide caps. Element enumeration (and everything built on it)
/// refuses groups larger than the exhaustive cap; quotients refuse indices
/// above the quotient cap.
Order exhaustive_cap() noexcept;
void set_exhaustive_cap(Order cap);
Order quotient_cap() noexcept;
void set_quotient_cap(Order cap);

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level i stabilises base points 0..i-1 and stores the orbit of base point i
/// under its strong generators. Transversal elements u_b (with base^u_b = b)
/// are kept explicitly when the orbit is small enough; otherwise they are
/// recovered from a Schreier vector.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree);

  /// Runs Schreier-Sims over `gens`. When `known_order` is given the
  /// algorithm stops as soon as the chain certifies that many elements.
  static StabilizerChain build(std::span<Permutation const> gens,
                               std::optional<Order> known_order = {});

  /// Extends the chain by g. Returns false (and changes nothing) when g is
  /// already a member.
  bool add_generator(Permutation const& g);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  Order order() const;

  std::vector<Point> base() const;
  Point base_point(std::size_t level) const { return levels_[level].base; }
  std::span<Point const> orbit(std::size_t level) const {
    return levels_[level].orbit;
  }
  std::span<Permutation const> level_generators(std::size_t level) const {
    return levels_[level].generators;
  }
  /// Distinct strong generators over all levels.
  std::vector<Permutation> strong_generators() const;

  /// u_b for an orbit point b of the given level.
  Permutation representative(std::size_t level, Point b) const;

  bool contains(Permutation const& g) const;

  /// Membership of the product word[0] * word[1] * ... without forming it
  /// unless the sift survives every level.
  bool contains_product(std::span<Permutation const* const> word) const;

  /// Membership of g^-1 * h * g, with g^-1 supplied by the caller.
  bool contains_conjugate(Permutation const& h, Permutation const& g,
                          Permutation const& g_inverse) const;

  /// Every element, as products of transversal elements (unsorted).
  std::vector<Permutation> enumerate() const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> inverse_generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;  // point -> orbit index, -1 if absent
    std::vector<std::int32_t> label;     // orbit index -> generator, -1 at root
    std::vector<Point> parent;           // orbit index -> parent point
    std::vector<Permutation> reps;       // explicit u_b, when small
    std::vector<Permutation> inverse_reps;
    bool explicit_reps = false;
  };

  void add_level(Point base);
  void rebuild_orbit(Level& level);
  void place(Permutation const& g, std::size_t& deepest);
  void schreier_sims(std::size_t start, std::optional<Order> target);
  /// Sifts from level `from`; returns the residue and the level it stopped
  /// at (length() if it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  Permutation times_inverse_rep(Permutation const& x, Level const& level,
                                std::int32_t index) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Immutable permutation group handle. Copies share state; the element list
/// is computed at most once, on first request.
class PermGroup {
 public:
  /// The trivial group on one point.
  PermGroup();

  /// Builds the stabilizer chain. Identity generators are dropped (a group
  /// given only identities keeps one so the degree is recorded).
  static PermGroup from_generators(std::vector<Permutation> gens,
                                   std::optional<Order> known_order = {});

  /// A group whose sorted element list is already known (e.g. the result of
  /// filtering a parent's elements). Chooses a small generating set.
  static PermGroup from_sorted_elements(std::size_t degree,
                                        std::vector<Permutation> elements);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept;
  std::vector<Permutation> const& generators() const noexcept;
  StabilizerChain const& chain() const noexcept;
  Order order() const noexcept;
  bool is_trivial() const noexcept { return order() == 1; }

  /// Throws InvalidArgument on degree mismatch.
  bool contains(Permutation const& g) const;

  /// All elements, lexicographically ordered by image table. Throws
  /// CapExceeded when order() exceeds the cap.
  std::vector<Permutation> const& elements() const;
  std::vector<Permutation> const& elements(Order cap) const;

  /// Position of g in elements(), or -1.
  std::ptrdiff_t index_of(Permutation const& g) const;

  /// Same underlying object (not merely equal groups).
  bool shares_state_with(PermGroup const& other) const noexcept {
    return state_ == other.state_;
  }

 private:
  struct State;
  explicit PermGroup(std::shared_ptr<State const> state);
  std::shared_ptr<State const> state_;
};

/// True when both groups have the same degree and each contains the other's
/// generators.
bool same_group(PermGroup const& a, PermGroup const& b);

/// True when every generator of `sub` lies in `group`.
bool is_subgroup(PermGroup const& sub, PermGroup const& group);

/// Generator file format: first line "degree N", then one permutation per
/// line in cycle notation. Blank lines and lines starting with '#' are
/// ignored.
PermGroup parse_generator_text(std::string_view text,
                               std::optional<Order> known_order = {});
PermGroup read_generator_file(std::string const& path);
std::string format_generator_text(PermGroup const& group);

}  // namespace sgraph

#endif  // SGRAPH_PERM_GROUP_HPP
