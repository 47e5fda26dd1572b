#ifndef SGRAPH_TESTS_SUPPORT_HPP
#define SGRAPH_TESTS_SUPPORT_HPP

// Corpus and brute-force oracles shared by the unit and acceptance tests.
// The oracles work on explicit element sets (closure by breadth-first
// multiplication) and never touch a stabilizer chain.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "sgraph/constructors.hpp"
#include "sgraph/group_expr.hpp"
#include "sgraph/perm_group.hpp"
#include "sgraph/permutation.hpp"

namespace sgraph::testing {

using ElementSet = std::set<Permutation>;

inline ElementSet closure(std::vector<Permutation> const& gens) {
  std::size_t const n = gens.front().degree();
  ElementSet seen{Permutation(n)};
  std::vector<Permutation> frontier{Permutation(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const& x : frontier) {
      for (auto const& g : gens) {
        auto y = x * g;
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline ElementSet element_set(PermGroup const& G) { return closure(G.generators()); }

inline bool normalizes(Permutation const& g, ElementSet const& H) {
  auto const gi = inverse(g);
  return std::all_of(H.begin(), H.end(), [&](Permutation const& h) { return H.count(gi * h * g); });
}

inline ElementSet brute_normalizer(ElementSet const& G, ElementSet const& H) {
  ElementSet out;
  for (auto const& g : G) {
    if (normalizes(g, H)) {
      out.insert(g);
    }
  }
  return out;
}

inline ElementSet brute_centralizer(ElementSet const& G, ElementSet const& H) {
  ElementSet out;
  for (auto const& g : G) {
    if (std::all_of(H.begin(), H.end(), [&](Permutation const& h) { return g * h == h * g; })) {
      out.insert(g);
    }
  }
  return out;
}

/// Subgroup generated inside an explicit set (closure of the given elements).
inline ElementSet generated(std::vector<Permutation> const& xs, std::size_t degree) {
  std::vector<Permutation> gens = xs;
  if (gens.empty()) {
    gens.push_back(Permutation(degree));
  }
  return closure(gens);
}

struct CorpusEntry {
  std::string name;
  PermGroup group;
};

/// The Frobenius group of order 21 on 7 points.
inline PermGroup frobenius21() {
  return PermGroup::from_generators(
      {parse_permutation("(1,2,3,4,5,6,7)", 7), parse_permutation("(2,3,5)(4,7,6)", 7)});
}

inline std::vector<std::string> small_corpus_expressions() {
  return {"Cyc(1)",          "Cyc(2)",          "Cyc(3)",          "Cyc(4)",
          "Cyc(6)",          "Cyc(8)",          "Cyc(12)",         "Cyc(15)",
          "Cyc(30)",         "Dih(3)",          "Dih(4)",          "Dih(5)",
          "Dih(6)",          "Dih(10)",         "Dih(15)",         "Sym(3)",
          "Sym(4)",          "Sym(5)",          "Sym(6)",          "Alt(4)",
          "Alt(5)",          "Alt(6)",          "PSL2(4)",         "PSL2(5)",
          "PSL2(7)",         "PSL2(8)",         "Cyc(2) x Cyc(2)", "Cyc(2) x Cyc(2) x Cyc(2)",
          "Cyc(3) x Cyc(3)", "Sym(3) x Cyc(2)", "Sym(3) x Cyc(5)", "Sym(3) x Sym(3)",
          "Alt(4) x Cyc(3)", "Alt(5) x Cyc(2)", "Dih(4) x Cyc(3)", "Dih(5) x Cyc(3)",
          "Sym(4) x Cyc(2)", "Sym(4) x Sym(3)", "Alt(5) x Cyc(7)", "PSL2(7) x Cyc(2)",
          "Dih(7) x Cyc(5)", "Cyc(5) x Cyc(5)"};
}

/// Groups of order at most 2000, including two odd-order nonabelian ones.
inline std::vector<CorpusEntry> small_corpus() {
  std::vector<CorpusEntry> out;
  for (auto const& e : small_corpus_expressions()) {
    out.push_back({e, group_from_expr(e)});
  }
  out.push_back({"F21", frobenius21()});
  out.push_back({"F21 x Cyc(5)", direct_product(frobenius21(), cyclic(5))});
  return out;
}

/// Almost-simple groups within the default cap.
inline std::vector<CorpusEntry> almost_simple_corpus() {
  std::vector<CorpusEntry> out;
  for (auto const* e : {"Alt(5)", "Sym(5)", "Alt(6)", "Sym(6)", "Alt(7)", "PSL2(7)", "PSL2(8)",
                        "PSL2(11)", "PSL2(13)", "PSL2(9):1", "PSL2(8):1", "PSL2(27):1", "M11",
                        "M12"}) {
    out.push_back({e, group_from_expr(e)});
  }
  return out;
}

inline std::vector<CorpusEntry> full_corpus() {
  auto out = small_corpus();
  for (auto& e : almost_simple_corpus()) {
    if (std::none_of(out.begin(), out.end(), [&](CorpusEntry const& c) { return c.name == e.name; })) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace sgraph::testing

#endif  // SGRAPH_TESTS_SUPPORT_HPP
