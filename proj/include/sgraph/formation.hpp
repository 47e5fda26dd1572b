#ifndef SGRAPH_FORMATION_HPP
#define SGRAPH_FORMATION_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sgraph/perm_group.hpp"

namespace sgraph {

/// Ascending, duplicate-free. Infinite classes such as "all odd primes" are
/// represented by a finite window wide enough for the groups under test.
using PrimeSet = std::vector<Prime>;

PrimeSet normalized(PrimeSet s);
bool is_subset(PrimeSet const& a, PrimeSet const& b);

/// A family of prime sets pi(p), one for each p in pi.
struct Covering {
  PrimeSet pi;
  std::map<Prime, PrimeSet> blocks;
};

/// condition 1: the blocks cover pi exactly; 2: p lies in its own block;
/// 3: q in pi(p) implies p in pi(q).
struct CoveringViolation {
  int condition = 0;
  std::vector<Prime> primes;
  std::string message;
};

struct SymmetryReport {
  bool symmetric = true;
  std::vector<CoveringViolation> violations;
};

SymmetryReport validate_symmetric(Covering const& c);

/// Distinct blocks are pairwise disjoint. Throws InvalidArgument if the
/// covering is not symmetric.
bool is_partition(Covering const& c);

/// A class of groups as used by local definitions: nothing, all pi-groups,
/// or solvable pi-groups.
struct ClassSpec {
  enum class Kind { Empty, AllPi, SolvablePi };

  Kind kind = Kind::Empty;
  PrimeSet primes;

  static ClassSpec empty() { return {}; }
  /// Throw InvalidArgument on an empty prime set.
  static ClassSpec all_pi(PrimeSet s);
  static ClassSpec solvable_pi(PrimeSet s);

  std::string to_string() const;
  friend bool operator==(ClassSpec const&, ClassSpec const&) = default;
};

/// q -> f(q), with `fallback` for primes not in the map.
struct LocalDefinition {
  ClassSpec fallback;
  std::map<Prime, ClassSpec> map;

  ClassSpec const& at(Prime q) const;
};

/// f(p) = all pi(p)-groups for p in pi, nothing elsewhere. Throws
/// InvalidArgument unless the covering is symmetric.
LocalDefinition local_definition_from_covering(Covering const& c);

/// Intersects every value with the solvable groups.
LocalDefinition with_solvable_intersection(LocalDefinition f);

/// f(p) = solvable pi-groups, f(q) = all pi-groups for the other q in pi,
/// nothing outside pi. p must lie in pi.
LocalDefinition fundamental_definition(PrimeSet pi, Prime p);

/// Groups of odd order within the window: f(2) empty, f(q) = solvable
/// groups over the odd primes of the window for odd q in it.
LocalDefinition odd_order_definition(PrimeSet window);

/// Empty accepts only the trivial group; AllPi(S) needs pi(G) in S;
/// SolvablePi(S) additionally needs G solvable.
bool class_membership(ClassSpec const& spec, PermGroup const& G);

struct FactorCheck {
  std::size_t factor = 0;  // position in the chief series, from the bottom
  Order factor_order = 1;
  Prime q = 0;
  Order quotient_order = 1;  // |G : C_G(H/K)|
  ClassSpec spec;
  bool verdict = false;
};

struct LfResult {
  bool member = true;
  std::vector<FactorCheck> trace;
};

struct LfOptions {
  /// Build each G/C_G(H/K) as a permutation group and test it directly,
  /// instead of reading its primes and solvability off G and C.
  bool materialize_quotients = false;
  std::size_t sweep_offset = 0;
};

/// For every chief factor H/K and every prime q dividing |H/K|,
/// G/C_G(H/K) must lie in f(q). An empty f(q) rejects, even when the
/// quotient is trivial.
LfResult lf_membership(LocalDefinition const& f, PermGroup const& G, LfOptions const& options = {});

/// pi(G) within pi and p not dividing |G^inf|.
bool lemma1_membership(PrimeSet const& pi, Prime p, PermGroup const& G);

using GroupPredicate = std::function<bool(PermGroup const&)>;

struct NClosureRow {
  Prime p = 0;
  Order normalizer_order = 1;
  bool verdict = false;
};

struct NClosureResult {
  bool holds = true;
  std::vector<NClosureRow> trace;
};

/// Every Sylow normalizer N_G(G_p) satisfies the predicate.
NClosureResult n_closure_test(GroupPredicate const& member, PermGroup const& G);

/// Membership in the class of direct products of pi_i-groups for the
/// blocks pi_i of a partition. Throws InvalidArgument if `partition` is not
/// a symmetric partition.
bool lattice_formation_membership(Covering const& partition, PermGroup const& G);

/// {"pi":[2,3,5],"blocks":{"2":[2,3,5],"3":[2,3],"5":[2,5]}}
Covering parse_covering_json(std::string_view text);

/// {"default":"empty","map":{"2":{"kind":"solvable_pi","pi":[2,3,5]}}}
/// A class is "empty" or {"kind": "empty"|"all_pi"|"solvable_pi", "pi": [...]}.
LocalDefinition parse_local_definition_json(std::string_view text);

/// Accepts either document above; a covering is turned into its local
/// definition.
LocalDefinition parse_formation_spec_json(std::string_view text);

}  // namespace sgraph

#endif  // SGRAPH_FORMATION_HPP
