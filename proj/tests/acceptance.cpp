// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or overruns its time limit.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "sgraph/appendix.hpp"
#include "sgraph/arith.hpp"
#include "sgraph/constructors.hpp"
#include "sgraph/formation.hpp"
#include "sgraph/subgroups.hpp"
#include "sgraph/sylow_graph.hpp"
#include "support.hpp"

using namespace sgraph;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, std::string const& what) {
    if (!condition) {
      if (ok) {
        detail << what;
      }
      ok = false;
    }
  }
};

// Shared by criteria 1 and 2.
void check_mathieu_item(Outcome& r, char const* name, Order order) {
  auto const item = *find_appendix_item(name);
  auto const G = appendix_group(item);
  r.require(G.order() == order, "order");
  auto const graph = sylow_graph(G);
  r.require(graph.vertices() == std::vector<Prime>{2, 3, 5, 11}, "pi");
  for (auto [d, at] : {std::pair<Prime, Prime>{2, 3}, {2, 5}, {2, 11}, {5, 11}}) {
    std::ostringstream what;
    what << d << " does not divide nc_index(" << at << ") = " << graph.at(at).nc_index;
    r.require(divides(d, graph.at(at).nc_index), what.str());
  }
  r.require(graph.is_connected(GraphVariant::Gamma), "gamma disconnected");
  r.require(verify_appendix_item(item).all_match, "appendix replay mismatch");
}

Outcome criterion1() {
  Outcome r;
  check_mathieu_item(r, "M11", 7920);
  return r;
}

Outcome criterion2() {
  Outcome r;
  check_mathieu_item(r, "M12", 95040);
  return r;
}

Outcome criterion3() {
  Outcome r;
  auto const G = psl2_frobenius_extension(27, 1);
  r.require(G.order() == 29484, "order");
  auto const graph = sylow_graph(G);
  r.require(!divides(2, graph.at(3).nc_index), "2 divides nc_index(3)");
  r.require(!hypothesis_check(graph).holds, "hypothesis holds");
  bool witness = false;
  for (Prime l : graph.vertices()) {
    if (l != 2 && l != 3 && divides(2, graph.at(l).nc_index) && divides(3, graph.at(l).nc_index)) {
      witness = true;
    }
  }
  r.require(witness, "no l outside {2,3} with 6 | nc_index(l)");
  r.require(graph.is_connected(GraphVariant::Gamma), "gamma disconnected");
  return r;
}

Outcome criterion4() {
  Outcome r;
  Covering const c{{2, 3, 5}, {{2, {2, 3, 5}}, {3, {2, 3}}, {5, {2, 5}}}};
  r.require(validate_symmetric(c).symmetric, "covering not symmetric");
  auto const f = local_definition_from_covering(c);
  auto const A5 = alternating(5);
  r.require(!lf_membership(f, A5).member, "A5 in LF(f)");
  auto const nc = n_closure_test([&](PermGroup const& H) { return lf_membership(f, H).member; }, A5);
  r.require(nc.holds, "some Sylow normalizer of A5 outside LF(f)");
  return r;
}

Outcome criterion5() {
  Outcome r;
  std::vector<testing::CorpusEntry> corpus;
  for (auto& e : testing::small_corpus()) {
    if (e.group.order() <= 2000) {
      corpus.push_back(std::move(e));
    }
  }
  std::vector<std::pair<PrimeSet, Prime>> const matrix{
      {{2, 3, 5}, 2}, {{2, 3, 5}, 3}, {{2, 3, 5}, 5}, {{2, 3}, 2},
      {{2, 3, 5, 7}, 7}, {{2, 3, 7}, 3}, {{3, 5, 7}, 5}};
  r.require(corpus.size() >= 30, "corpus too small");
  std::size_t cases = 0;
  std::size_t agree = 0;
  for (auto const& [name, G] : corpus) {
    for (auto const& [pi, p] : matrix) {
      ++cases;
      bool const lf = lf_membership(fundamental_definition(pi, p), G).member;
      bool const lemma = lemma1_membership(pi, p, G);
      if (lf == lemma) {
        ++agree;
      } else {
        r.require(false, "disagreement on " + name + " at p = " + std::to_string(p));
      }
    }
  }
  r.detail << (r.ok ? "" : "; ") << agree << "/" << cases << " cases over " << corpus.size()
           << " groups";
  return r;
}

Outcome criterion6() {
  Outcome r;
  auto const corpus = testing::full_corpus();
  r.require(corpus.size() >= 40, "corpus too small");
  for (auto const& [name, G] : corpus) {
    auto const graph = sylow_graph(G);
    std::vector<std::pair<Prime, Prime>> undirected;
    for (auto [p, q] : graph.gamma_edges()) {
      r.require(p != q, name + ": gamma loop");
      undirected.emplace_back(std::min(p, q), std::max(p, q));
    }
    std::sort(undirected.begin(), undirected.end());
    undirected.erase(std::unique(undirected.begin(), undirected.end()), undirected.end());
    r.require(undirected == graph.delta_edges(), name + ": edge sets differ");
    for (auto const& d : graph.data()) {
      r.require(std::gcd(d.automiser_order, Order{d.p}) == 1, name + ": automiser not p'");
      bool const loop = std::find(graph.delta_loops().begin(), graph.delta_loops().end(), d.p) !=
                        graph.delta_loops().end();
      r.require(loop == (d.sylow_order != d.center_of_sylow_order), name + ": loop criterion");
    }
    r.require(graph.is_connected(GraphVariant::Gamma) == graph.is_connected(GraphVariant::Delta),
              name + ": connectivity differs");
  }
  if (r.ok) {
    r.detail << corpus.size() << " groups";
  }
  return r;
}

Outcome criterion7() {
  Outcome r;
  auto const corpus = testing::full_corpus();
  for (auto const& [name, G] : corpus) {
    auto const graph = sylow_graph(G);
    if (hypothesis_check(graph).holds) {
      r.require(graph.is_connected(GraphVariant::Delta), name + ": hypothesis without connectivity");
    }
  }
  auto const e3 = sylow_graph(psl2_frobenius_extension(27, 1));
  r.require(e3.is_connected(GraphVariant::Delta) && !hypothesis_check(e3).holds,
            "converse not falsified by PSL2(27):1");
  if (r.ok) {
    r.detail << corpus.size() << " groups";
  }
  return r;
}

Outcome criterion8() {
  Outcome r;
  r.require(hypothesis_check(PermGroup::trivial(1)).holds, "trivial group");
  for (auto const* e : {"Cyc(3)", "Cyc(15)", "Cyc(5) x Cyc(5)", "Dih(5) x Cyc(3)"}) {
    auto const G = group_from_expr(e);
    if (G.order() % 2 == 1) {
      r.require(!hypothesis_check(G).holds, std::string(e) + " (odd order)");
    }
  }
  r.require(!hypothesis_check(testing::frobenius21()).holds, "F21 (odd order)");
  for (auto const* e : {"Cyc(2)", "Cyc(8)", "Dih(4)", "Cyc(2) x Cyc(2) x Cyc(2)"}) {
    r.require(hypothesis_check(group_from_expr(e)).holds, std::string(e) + " (2-group)");
  }
  return r;
}

Outcome criterion9() {
  Outcome r;
  for (Order q : {4, 5, 7, 8, 9, 11, 13, 27}) {
    r.require(psl2(q).order() == q * (q * q - 1) / std::gcd(Order{2}, q - 1),
              "PSL2(" + std::to_string(q) + ")");
  }
  r.require(mathieu(11).order() == 7920, "M11");
  r.require(mathieu(12).order() == 95040, "M12");
  r.require(mathieu(22).order() == 443520, "M22");
  return r;
}

struct Criterion {
  int number;
  char const* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "M11 item: nc_index divisibilities and connectivity", 30, criterion1},
      {2, "M12 item: nc_index divisibilities and connectivity", 120, criterion2},
      {3, "PSL2(27):1: 2 does not divide nc_index(3), hypothesis false, connected", 60, criterion3},
      {4, "A5 lies in N(LF(f)) but not in LF(f)", 5, criterion4},
      {5, "pi-group shortcut agrees with LF membership", 300, criterion5},
      {6, "graph structure invariants on the full corpus", 600, criterion6},
      {7, "hypothesis implies Delta connectivity; converse fails", 600, criterion7},
      {8, "hypothesis test edge cases", 60, criterion8},
      {9, "constructor orders", 60, criterion9},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (std::exception const& e) {
      r.ok = false;
      r.detail << "exception: " << e.what();
    }
    double const seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const in_time = seconds <= c.limit_seconds;
    bool const pass = r.ok && in_time;
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ["
              << std::fixed << std::setprecision(2) << seconds << " s, limit " << c.limit_seconds
              << " s]";
    auto const detail = r.detail.str();
    if (!detail.empty()) {
      std::cout << " (" << detail << ")";
    }
    if (!in_time) {
      std::cout << " (time limit exceeded)";
    }
    std::cout << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
