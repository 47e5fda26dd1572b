#ifndef SGRAPH_SUBGROUPS_HPP
#define SGRAPH_SUBGROUPS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sgraph/perm_group.hpp"

namespace sgraph {

/// A group together with the parent it was computed inside. Construction
/// checks that every generator lies in the parent and that the order
/// divides the parent's.
class Subgroup {
 public:
  Subgroup(PermGroup parent, PermGroup group);

  PermGroup const& parent() const noexcept { return parent_; }
  PermGroup const& group() const noexcept { return group_; }
  Order order() const noexcept { return group_.order(); }
  Order index() const noexcept { return parent_.order() / group_.order(); }

  operator PermGroup const&() const noexcept { return group_; }

 private:
  PermGroup parent_;
  PermGroup group_;
};

/// A Sylow p-subgroup built by normalizer growth. `seed_offset` rotates the
/// element sweep, so different offsets generally give different (conjugate)
/// subgroups. Throws InvalidArgument if p does not divide |G|.
Subgroup sylow(PermGroup const& G, Prime p, std::size_t seed_offset = 0);

/// Filters elements(G); H must have G's degree.
Subgroup normalizer(PermGroup const& G, PermGroup const& H);
Subgroup centralizer(PermGroup const& G, PermGroup const& H);
Subgroup center(PermGroup const& G);

/// Smallest subgroup containing S that is normalized by G. Works from the
/// stabilizer chain alone, so it is not subject to the exhaustive cap.
Subgroup normal_closure(PermGroup const& G, std::span<Permutation const> S);

bool is_normal(PermGroup const& G, PermGroup const& H);
bool is_abelian(PermGroup const& G);

/// Commutator-based; none of these enumerate elements.
Subgroup derived_subgroup(PermGroup const& G);
/// G = G^(0) > G^(1) > ... down to the first repeated term.
std::vector<PermGroup> derived_series(PermGroup const& G);
Subgroup perfect_core(PermGroup const& G);
bool is_solvable(PermGroup const& G);
bool is_perfect(PermGroup const& G);
/// Every Sylow subgroup normal.
bool is_nilpotent(PermGroup const& G);

/// G acting regularly on the right cosets of a normal subgroup N. The coset
/// of an element is found by position in elements(G), so G must be within
/// the exhaustive cap and |G:N| within the quotient cap.
class Quotient {
 public:
  PermGroup const& group() const noexcept { return group_; }
  Order index() const noexcept { return group_.order(); }

  /// Induced permutation of the cosets.
  Permutation project(Permutation const& g) const;

  /// Coset number of g (0 is N itself).
  std::uint32_t coset_of(Permutation const& g) const;

 private:
  friend Quotient quotient(PermGroup const& G, PermGroup const& N);
  Quotient() = default;

  PermGroup parent_;
  std::vector<std::uint32_t> coset_;  // indexed like elements(parent)
  std::vector<std::uint32_t> representative_;  // coset -> element index
  PermGroup group_;
};

/// Throws NotNormal or QuotientCapExceeded.
Quotient quotient(PermGroup const& G, PermGroup const& N);

/// { g in G : [g, h] in K for every generator h of H }, the kernel of G
/// acting on H/K. Requires K normal in G, H normal in G and K <= H; each
/// violation throws with its own message (NotNormal / InvalidArgument).
Subgroup action_kernel_on_factor(PermGroup const& G, PermGroup const& H, PermGroup const& K);

struct ChiefFactor {
  PermGroup lower;   // K_i
  PermGroup upper;   // K_{i+1}
  PermGroup kernel;  // C_G(K_{i+1}/K_i)
  Order order = 1;   // |K_{i+1} : K_i|
  std::vector<Prime> primes;
};

/// 1 = K_0 < K_1 < ... < K_m = G with every K_{i+1}/K_i a minimal normal
/// subgroup of G/K_i.
struct ChiefSeries {
  std::vector<PermGroup> terms;
  std::vector<ChiefFactor> factors;
};

/// Built inside G: at each step the candidates are the normal closures of
/// K_i together with one element x, for x sweeping elements(G) from position
/// `sweep_offset` (cyclically). The smallest candidate wins; ties go to the
/// earliest in the sweep.
ChiefSeries chief_series(PermGroup const& G, std::size_t sweep_offset = 0);

}  // namespace sgraph

#endif  // SGRAPH_SUBGROUPS_HPP
