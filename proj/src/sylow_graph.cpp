#include "sgraph/sylow_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "sgraph/errors.hpp"
#include "sgraph/subgroups.hpp"

namespace sgraph {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<std::size_t> parent_;
};

void check(bool ok, Prime p, char const* what) {
  if (!ok) {
    throw InvariantViolation("Sylow data at " + std::to_string(p) + ": " + what);
  }
}

}  // namespace

SylowData SylowData::from_orders(Prime p, Order sylow, Order normalizer, Order centralizer,
                                 Order center_of_sylow) {
  SylowData d{p, sylow, normalizer, centralizer, center_of_sylow, 1, 1};
  check(sylow > 0 && normalizer > 0 && centralizer > 0 && center_of_sylow > 0, p,
        "orders must be positive");
  check(normalizer % centralizer == 0, p, "centralizer order does not divide normalizer order");
  check(sylow % center_of_sylow == 0, p, "center order does not divide Sylow order");
  d.nc_index = normalizer / centralizer;
  Order const num = checked_mul(normalizer, center_of_sylow);
  Order const den = checked_mul(sylow, centralizer);
  check(num % den == 0, p, "automiser order is not an integer");
  d.automiser_order = num / den;
  check(d.automiser_order % p != 0, p, "automiser order is divisible by p");
  check(checked_mul(d.automiser_order, sylow / center_of_sylow) == d.nc_index, p,
        "nc index differs from automiser order times |P:Z(P)|");
  return d;
}

SylowData sylow_data(PermGroup const& G, Prime p, std::size_t seed_offset) {
  auto const P = sylow(G, p, seed_offset).group();
  auto const N = normalizer(G, P).group();
  // C_G(P) lies inside N_G(P), so filtering N is enough.
  auto const C = centralizer(N, P).group();
  Order z = 0;
  for (auto const& x : P.elements()) {
    if (C.contains(x)) {
      ++z;
    }
  }
  return SylowData::from_orders(p, P.order(), N.order(), C.order(), z);
}

SylowGraph::SylowGraph(Order group_order, std::vector<SylowData> data)
    : order_(group_order), data_(std::move(data)) {
  std::sort(data_.begin(), data_.end(),
            [](SylowData const& a, SylowData const& b) { return a.p < b.p; });
  for (auto const& d : data_) {
    vertices_.push_back(d.p);
  }
  if (vertices_ != prime_divisors(order_)) {
    throw InvariantViolation("graph vertices differ from the primes of the group order");
  }
  for (auto const& d : data_) {
    for (Prime q : vertices_) {
      if (q != d.p && d.automiser_order % q == 0) {
        gamma_.emplace_back(d.p, q);
      }
    }
    if (d.nc_index % d.p == 0) {
      loops_.push_back(d.p);
    }
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    for (std::size_t j = i + 1; j < data_.size(); ++j) {
      Prime const p = data_[i].p;
      Prime const q = data_[j].p;
      if (data_[j].nc_index % p == 0 || data_[i].nc_index % q == 0) {
        delta_.emplace_back(p, q);
      }
    }
  }
}

SylowData const& SylowGraph::at(Prime p) const {
  for (auto const& d : data_) {
    if (d.p == p) {
      return d;
    }
  }
  throw InvalidArgument(std::to_string(p) + " is not a vertex");
}

std::vector<std::vector<Prime>> SylowGraph::components(GraphVariant variant) const {
  UnionFind uf(vertices_.size());
  auto index = [this](Prime p) {
    return static_cast<std::size_t>(std::lower_bound(vertices_.begin(), vertices_.end(), p) -
                                    vertices_.begin());
  };
  for (auto const& [p, q] : variant == GraphVariant::Gamma ? gamma_ : delta_) {
    uf.unite(index(p), index(q));
  }
  std::map<std::size_t, std::vector<Prime>> groups;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    groups[uf.find(i)].push_back(vertices_[i]);
  }
  std::vector<std::vector<Prime>> out;
  for (auto& [root, members] : groups) {
    out.push_back(std::move(members));
  }
  return out;
}

bool SylowGraph::is_connected(GraphVariant variant) const {
  return components(variant).size() <= 1;
}

bool SylowGraph::delta_related(Prime p, Prime q) const {
  for (auto const& component : components(GraphVariant::Delta)) {
    bool const has_p = std::binary_search(component.begin(), component.end(), p);
    bool const has_q = std::binary_search(component.begin(), component.end(), q);
    if (has_p || has_q) {
      return has_p && has_q;
    }
  }
  return false;
}

SylowGraph sylow_graph(PermGroup const& G, std::size_t seed_offset) {
  std::vector<SylowData> data;
  for (Prime p : prime_divisors(G.order())) {
    data.push_back(sylow_data(G, p, seed_offset));
  }
  return SylowGraph(G.order(), std::move(data));
}

HypothesisReport hypothesis_check(SylowGraph const& graph) {
  HypothesisReport report;
  auto const& data = graph.data();
  bool const skip_first = !data.empty() && data.front().p == 2;
  for (std::size_t i = 0; i < data.size(); ++i) {
    HypothesisRow row;
    row.p = data[i].p;
    row.nc_index = data[i].nc_index;
    row.factors = prime_factors(row.nc_index);
    row.has_smaller_factor = std::any_of(row.factors.begin(), row.factors.end(),
                                         [&](Prime q) { return q < row.p; });
    row.counted = !(skip_first && i == 0);
    if (row.counted && !row.has_smaller_factor && report.holds) {
      report.holds = false;
      report.failing_prime = row.p;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

HypothesisReport hypothesis_check(PermGroup const& G) { return hypothesis_check(sylow_graph(G)); }

std::string export_graph(SylowGraph const& graph, ExportFormat format, GraphVariant variant) {
  if (format == ExportFormat::Json) {
    using nlohmann::json;
    json doc;
    doc["order"] = graph.group_order();
    doc["pi"] = graph.vertices();
    json gamma = json::array();
    for (auto const& [p, q] : graph.gamma_edges()) {
      gamma.push_back({p, q});
    }
    doc["gamma_edges"] = gamma;
    json delta = json::array();
    for (auto const& [p, q] : graph.delta_edges()) {
      delta.push_back({p, q});
    }
    doc["delta_edges"] = delta;
    doc["delta_loops"] = graph.delta_loops();
    json nc = json::object();
    json aut = json::object();
    for (auto const& d : graph.data()) {
      nc[std::to_string(d.p)] = d.nc_index;
      aut[std::to_string(d.p)] = d.automiser_order;
    }
    doc["nc_indices"] = nc;
    doc["automiser_orders"] = aut;
    doc["connected"] = {{"gamma", graph.is_connected(GraphVariant::Gamma)},
                        {"delta", graph.is_connected(GraphVariant::Delta)}};
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  bool const gamma = variant == GraphVariant::Gamma;
  out << (gamma ? "digraph gamma {\n" : "graph delta {\n");
  for (Prime p : graph.vertices()) {
    out << "  " << p << ";\n";
  }
  if (gamma) {
    for (auto const& [p, q] : graph.gamma_edges()) {
      out << "  " << p << " -> " << q << ";\n";
    }
  } else {
    for (auto const& [p, q] : graph.delta_edges()) {
      out << "  " << p << " -- " << q << ";\n";
    }
    for (Prime p : graph.delta_loops()) {
      out << "  " << p << " -- " << p << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace sgraph
