#ifndef SGRAPH_SYLOW_GRAPH_HPP
#define SGRAPH_SYLOW_GRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sgraph/perm_group.hpp"

namespace sgraph {

/// Orders attached to one Sylow subgroup P of G:
///   nc_index  = |N_G(P) : C_G(P)|
///   automiser = |N_G(P) : P C_G(P)|, using P n C_G(P) = Z(P).
struct SylowData {
  Prime p = 0;
  Order sylow_order = 1;
  Order normalizer_order = 1;
  Order centralizer_order = 1;
  Order center_of_sylow_order = 1;
  Order nc_index = 1;
  Order automiser_order = 1;

  /// Derives the two indices and checks the arithmetic identities; throws
  /// InvariantViolation if they fail.
  static SylowData from_orders(Prime p, Order sylow, Order normalizer, Order centralizer,
                               Order center_of_sylow);
};

/// Throws InvalidArgument if p does not divide |G|.
SylowData sylow_data(PermGroup const& G, Prime p, std::size_t seed_offset = 0);

enum class GraphVariant { Gamma, Delta };

/// Both Sylow graphs over pi(G). Gamma edges are directed (p, q) with q
/// dividing the automiser order at p; Delta edges are unordered pairs
/// {p, q} with p < q, and Delta loops are listed separately.
class SylowGraph {
 public:
  SylowGraph() = default;
  SylowGraph(Order group_order, std::vector<SylowData> data);

  Order group_order() const noexcept { return order_; }
  std::vector<Prime> const& vertices() const noexcept { return vertices_; }
  std::vector<SylowData> const& data() const noexcept { return data_; }
  SylowData const& at(Prime p) const;

  std::vector<std::pair<Prime, Prime>> const& gamma_edges() const noexcept { return gamma_; }
  std::vector<std::pair<Prime, Prime>> const& delta_edges() const noexcept { return delta_; }
  std::vector<Prime> const& delta_loops() const noexcept { return loops_; }

  /// Connected components (ascending, each ascending); edges taken as
  /// undirected and loops ignored.
  std::vector<std::vector<Prime>> components(GraphVariant variant) const;

  /// Empty and single-vertex graphs count as connected.
  bool is_connected(GraphVariant variant) const;

  /// Same Delta component, i.e. the relation p ~ q of sequences of
  /// consecutive divisibilities.
  bool delta_related(Prime p, Prime q) const;

 private:
  Order order_ = 1;
  std::vector<Prime> vertices_;
  std::vector<SylowData> data_;
  std::vector<std::pair<Prime, Prime>> gamma_;
  std::vector<std::pair<Prime, Prime>> delta_;
  std::vector<Prime> loops_;
};

SylowGraph sylow_graph(PermGroup const& G, std::size_t seed_offset = 0);

/// The per-prime test of the hypothesis: some prime factor of Q = nc_index
/// is smaller than p (Q = 1 has no prime factors, so it fails).
struct HypothesisRow {
  Prime p = 0;
  Order nc_index = 1;
  std::vector<Prime> factors;  // with multiplicity
  bool has_smaller_factor = false;
  bool counted = true;  // false for p = 2 when 2 is the smallest prime
};

struct HypothesisReport {
  std::vector<HypothesisRow> rows;
  bool holds = true;
  /// First counted prime whose row fails, or 0.
  Prime failing_prime = 0;
};

/// With pi ascending, R[i] says whether nc_index(pi[i]) has a prime factor
/// below pi[i]. The verdict is the conjunction of R[2..] when pi[1] = 2 and
/// of all of R otherwise; the empty conjunction is true.
HypothesisReport hypothesis_check(SylowGraph const& graph);
HypothesisReport hypothesis_check(PermGroup const& G);

enum class ExportFormat { Dot, Json };

/// DOT: a digraph with "p -> q;" lines for Gamma, a graph with "p -- q;"
/// lines (loops as self-edges) for Delta. JSON: one fixed document
/// regardless of variant, keys sorted, two-space indent.
std::string export_graph(SylowGraph const& graph, ExportFormat format,
                         GraphVariant variant = GraphVariant::Gamma);

}  // namespace sgraph

#endif  // SGRAPH_SYLOW_GRAPH_HPP
