#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "sgraph/arith.hpp"
#include "sgraph/errors.hpp"
#include "sgraph/subgroups.hpp"
#include "support.hpp"

using namespace sgraph;
using namespace sgraph::testing;

namespace {

Permutation P(char const* text, std::size_t n) { return parse_permutation(text, n); }

ElementSet set_of(PermGroup const& G) {
  auto const& els = G.elements();
  return ElementSet(els.begin(), els.end());
}

std::vector<Permutation> as_vector(ElementSet const& s) { return {s.begin(), s.end()}; }

// Closure of S together with all its G-conjugates.
ElementSet brute_normal_closure(ElementSet const& G, std::vector<Permutation> const& S,
                                std::size_t degree) {
  ElementSet gens;
  for (auto const& s : S) {
    for (auto const& g : G) {
      gens.insert(inverse(g) * s * g);
    }
  }
  return generated(as_vector(gens), degree);
}

ElementSet brute_derived(ElementSet const& G, std::size_t degree) {
  std::vector<Permutation> comms;
  ElementSet seen;
  for (auto const& a : G) {
    for (auto const& b : G) {
      auto c = commutator(a, b);
      if (seen.insert(c).second) {
        comms.push_back(c);
      }
    }
  }
  return generated(comms, degree);
}

bool brute_nilpotent(ElementSet const& G, std::size_t degree) {
  ElementSet term = G;
  for (int i = 0; i < 64; ++i) {
    if (term.size() == 1) {
      return true;
    }
    ElementSet comms;
    for (auto const& x : term) {
      for (auto const& g : G) {
        comms.insert(commutator(x, g));
      }
    }
    auto next = generated(as_vector(comms), degree);
    if (next == term) {
      return false;
    }
    term = std::move(next);
  }
  return false;
}

bool brute_normal(ElementSet const& G, ElementSet const& H) {
  return std::all_of(G.begin(), G.end(), [&](Permutation const& g) { return normalizes(g, H); });
}

std::vector<CorpusEntry> corpus_upto(Order bound) {
  std::vector<CorpusEntry> out;
  for (auto& e : small_corpus()) {
    if (e.group.order() <= bound) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("subgroup wrapper checks containment", "[subgroups]") {
  auto const S4 = symmetric(4);
  Subgroup const A(S4, alternating(4));
  CHECK(A.order() == 12);
  CHECK(A.index() == 2);
  CHECK_THROWS_AS(Subgroup(alternating(4), S4), InvariantViolation);
}

TEST_CASE("Sylow examples", "[subgroups][sylow]") {
  CHECK(sylow(symmetric(4), 2).order() == 8);
  CHECK(sylow(alternating(5), 5).order() == 5);
  CHECK(sylow(mathieu(11), 11).order() == 11);
  CHECK(sylow(mathieu(11), 2).order() == 16);
  CHECK(sylow(group_from_expr("PSL2(27):1"), 3).order() == 81);
  CHECK_THROWS_AS(sylow(symmetric(4), 5), InvalidArgument);
  CHECK_THROWS_AS(sylow(symmetric(4), 4), InvalidArgument);
}

TEST_CASE("Sylow subgroups against brute force", "[subgroups][sylow][oracle]") {
  for (auto const& [name, G] : corpus_upto(2000)) {
    auto const Gs = set_of(G);
    for (Prime p : prime_divisors(G.order())) {
      INFO(name << ", p = " << p);
      auto const S = sylow(G, p);
      CHECK(S.order() == p_part(G.order(), p));
      auto const Ps = element_set(S.group());
      CHECK(Ps.size() == S.order());
      for (auto const& x : Ps) {
        CHECK(G.contains(x));
        Order o = element_order(x);
        CHECK(p_part(o, p) == o);
      }
      auto const N = normalizer(G, S);
      auto const C = centralizer(G, S);
      CHECK(element_set(N.group()) == brute_normalizer(Gs, Ps));
      CHECK(element_set(C.group()) == brute_centralizer(Gs, Ps));
    }
  }
}

TEST_CASE("Sylow subgroups from different seeds are conjugate", "[subgroups][sylow][property]") {
  for (auto const& [name, G] : corpus_upto(800)) {
    auto const Gs = set_of(G);
    for (Prime p : prime_divisors(G.order())) {
      INFO(name << ", p = " << p);
      auto const P0 = element_set(sylow(G, p).group());
      for (std::size_t offset : {1u, 7u, 31u, 113u}) {
        auto const Pk = element_set(sylow(G, p, offset).group());
        bool found = false;
        for (auto const& g : Gs) {
          ElementSet conj;
          auto const gi = inverse(g);
          for (auto const& x : P0) {
            conj.insert(gi * x * g);
          }
          if (conj == Pk) {
            found = true;
            break;
          }
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("normalizer and centralizer examples", "[subgroups]") {
  auto const A5 = alternating(5);
  CHECK(normalizer(A5, sylow(A5, 5)).order() == 10);
  auto const S3 = symmetric(3);
  CHECK(normalizer(S3, sylow(S3, 3)).order() == 6);
  CHECK(same_group(normalizer(S3, PermGroup::trivial(3)).group(), S3));
  CHECK(centralizer(S3, sylow(S3, 3)).order() == 3);
  CHECK(center(S3).order() == 1);
  CHECK(same_group(center(cyclic(8)).group(), cyclic(8)));
  CHECK(center(dihedral(4)).order() == 2);
  CHECK_THROWS_AS(normalizer(S3, symmetric(4)), InvalidArgument);
}

TEST_CASE("normal closure examples", "[subgroups]") {
  std::vector<Permutation> s{P("(1,2,3)", 3)};
  CHECK(normal_closure(symmetric(3), s).order() == 3);
  std::vector<Permutation> v{P("(1,2)(3,4)", 4)};
  CHECK(normal_closure(symmetric(4), v).order() == 4);
  auto const A5 = alternating(5);
  for (auto const* x : {"(1,2,3)", "(1,2)(3,4)", "(1,2,3,4,5)"}) {
    std::vector<Permutation> w{P(x, 5)};
    CHECK(normal_closure(A5, w).order() == 60);
  }
  std::vector<Permutation> outside{P("(1,2)", 5)};
  CHECK_THROWS_AS(normal_closure(A5, outside), InvalidArgument);
}

TEST_CASE("normal closure against brute force", "[subgroups][oracle]") {
  std::mt19937 rng(4242);
  for (auto const& [name, G] : corpus_upto(1000)) {
    INFO(name);
    auto const Gs = set_of(G);
    auto const& els = G.elements();
    for (int i = 0; i < 4; ++i) {
      std::vector<Permutation> S{els[rng() % els.size()]};
      if (i % 2 == 1) {
        S.push_back(els[rng() % els.size()]);
      }
      auto const N = normal_closure(G, S);
      CHECK(element_set(N.group()) == brute_normal_closure(Gs, S, G.degree()));
    }
  }
}

TEST_CASE("derived series and solvability", "[subgroups]") {
  auto const series = derived_series(symmetric(4));
  std::vector<Order> orders;
  for (auto const& H : series) {
    orders.push_back(H.order());
  }
  CHECK(orders == std::vector<Order>{24, 12, 4, 1});
  CHECK(is_solvable(symmetric(4)));
  CHECK(perfect_core(symmetric(4)).order() == 1);
  CHECK(perfect_core(symmetric(5)).order() == 60);
  CHECK_FALSE(is_solvable(symmetric(5)));
  CHECK(is_perfect(alternating(5)));
  CHECK(is_nilpotent(cyclic(6)));
  CHECK_FALSE(is_nilpotent(symmetric(3)));
  CHECK(is_nilpotent(dihedral(4)));
  CHECK(is_solvable(frobenius21()));
}

TEST_CASE("derived subgroup and nilpotency against brute force", "[subgroups][oracle]") {
  for (auto const& [name, G] : corpus_upto(720)) {
    INFO(name);
    auto const Gs = set_of(G);
    CHECK(element_set(derived_subgroup(G).group()) == brute_derived(Gs, G.degree()));
    CHECK(is_nilpotent(G) == brute_nilpotent(Gs, G.degree()));
    CHECK(is_abelian(G) == (brute_centralizer(Gs, Gs) == Gs));
  }
}

TEST_CASE("perfect core contains every small perfect subgroup", "[subgroups][property]") {
  // Checked on 2-generated subgroups sampled with a fixed seed.
  std::mt19937 rng(31337);
  for (auto const& [name, G] : corpus_upto(1500)) {
    INFO(name);
    auto const core = perfect_core(G);
    CHECK(is_perfect(core.group()));
    CHECK(is_normal(G, core.group()));
    auto const& els = G.elements();
    for (int i = 0; i < 60; ++i) {
      auto const H = PermGroup::from_generators({els[rng() % els.size()], els[rng() % els.size()]});
      if (is_perfect(H)) {
        CHECK(is_subgroup(H, core.group()));
      }
    }
  }
}

TEST_CASE("quotients", "[subgroups][quotient]") {
  auto const S4 = symmetric(4);
  std::vector<Permutation> v{P("(1,2)(3,4)", 4)};
  auto const V = normal_closure(S4, v);
  auto const Q = quotient(S4, V);
  CHECK(Q.index() == 6);
  CHECK(Q.group().order() == 6);
  CHECK(quotient(S4, PermGroup::trivial(4)).index() == 24);
  auto const C6 = cyclic(6);
  std::vector<Permutation> sq{power(C6.generators().front(), 2)};
  CHECK(quotient(C6, normal_closure(C6, sq)).index() == 2);
  CHECK_THROWS_AS(quotient(S4, sylow(S4, 2)), NotNormal);

  Order const saved = quotient_cap();
  set_quotient_cap(5);
  CHECK_THROWS_AS(quotient(S4, V), QuotientCapExceeded);
  set_quotient_cap(saved);
}

TEST_CASE("quotient map is a homomorphism with kernel N", "[subgroups][quotient][property]") {
  std::mt19937 rng(2718);
  for (auto const& [name, G] : corpus_upto(1000)) {
    INFO(name);
    auto const series = chief_series(G);
    for (auto const& N : series.terms) {
      auto const Q = quotient(G, N);
      CHECK(Q.index() * N.order() == G.order());
      std::size_t kernel = 0;
      for (auto const& g : G.elements()) {
        bool const in_kernel = Q.project(g).is_identity();
        CHECK(in_kernel == N.contains(g));
        kernel += in_kernel;
      }
      CHECK(kernel == N.order());
      auto const& els = G.elements();
      for (int i = 0; i < 10; ++i) {
        auto const& a = els[rng() % els.size()];
        auto const& b = els[rng() % els.size()];
        CHECK(Q.project(a * b) == Q.project(a) * Q.project(b));
        CHECK((Q.coset_of(a) == Q.coset_of(b)) == N.contains(a * inverse(b)));
      }
    }
  }
}

TEST_CASE("chief series examples", "[subgroups][chief]") {
  auto orders = [](PermGroup const& G) {
    std::vector<Order> out;
    for (auto const& f : chief_series(G).factors) {
      out.push_back(f.order);
    }
    return out;
  };
  CHECK(orders(symmetric(4)) == std::vector<Order>{4, 3, 2});
  CHECK(orders(alternating(5)) == std::vector<Order>{60});
  auto c12 = orders(cyclic(12));
  std::sort(c12.begin(), c12.end());
  CHECK(c12 == std::vector<Order>{2, 2, 3});
  auto const A5 = chief_series(alternating(5));
  CHECK(A5.factors.front().kernel.order() == 1);
  CHECK(orders(PermGroup::trivial(3)).empty());
}

TEST_CASE("chief series against brute force", "[subgroups][chief][oracle]") {
  for (auto const& [name, G] : corpus_upto(720)) {
    INFO(name);
    auto const Gs = set_of(G);
    auto const series = chief_series(G);
    REQUIRE(series.terms.size() == series.factors.size() + 1);
    CHECK(series.terms.front().order() == 1);
    CHECK(series.terms.back().order() == G.order());
    Order product = 1;
    for (auto const& f : series.factors) {
      auto const Ks = element_set(f.lower);
      auto const Ms = element_set(f.upper);
      CHECK(brute_normal(Gs, Ms));
      CHECK(f.order == Ms.size() / Ks.size());
      CHECK(f.primes == prime_divisors(f.order));
      product *= f.order;
      // Minimality: every element of M outside K generates M modulo K as a
      // normal subgroup.
      ElementSet covered = Ks;
      auto const kgens = f.lower.generators();
      for (auto const& x : Ms) {
        if (covered.count(x)) {
          continue;
        }
        auto gens = kgens;
        gens.push_back(x);
        auto const closure_x = brute_normal_closure(Gs, gens, G.degree());
        CHECK(closure_x == Ms);
        for (auto const& g : Gs) {
          covered.insert(inverse(g) * x * g);
        }
      }
      // Kernel of the conjugation action on M/K.
      ElementSet kernel;
      for (auto const& g : Gs) {
        bool ok = true;
        for (auto const& m : Ms) {
          if (!Ks.count(commutator(g, m))) {
            ok = false;
            break;
          }
        }
        if (ok) {
          kernel.insert(g);
        }
      }
      CHECK(element_set(f.kernel) == kernel);
    }
    CHECK(product == G.order());
  }
}

TEST_CASE("chief factor orders do not depend on the sweep", "[subgroups][chief][property]") {
  for (auto const& [name, G] : corpus_upto(2000)) {
    INFO(name);
    std::multiset<Order> base;
    for (auto const& f : chief_series(G).factors) {
      base.insert(f.order);
    }
    for (std::size_t offset : {3u, 50u}) {
      std::multiset<Order> other;
      for (auto const& f : chief_series(G, offset).factors) {
        other.insert(f.order);
      }
      CHECK(other == base);
    }
  }
}

TEST_CASE("action kernel on a factor", "[subgroups][chief]") {
  auto const S4 = symmetric(4);
  auto const A4 = alternating(4);
  std::vector<Permutation> v{P("(1,2)(3,4)", 4)};
  auto const V = normal_closure(S4, v).group();
  auto const kernel = action_kernel_on_factor(S4, A4, V);
  // Frozen from the brute-force filter { g : [g, h] in V for all h in A4 }.
  ElementSet brute;
  auto const Vs = element_set(V);
  for (auto const& g : S4.elements()) {
    bool ok = true;
    for (auto const& h : A4.elements()) {
      ok = ok && Vs.count(commutator(g, h));
    }
    if (ok) {
      brute.insert(g);
    }
  }
  CHECK(brute.size() == 12);
  CHECK(kernel.order() == 12);
  CHECK(element_set(kernel.group()) == brute);

  CHECK(action_kernel_on_factor(S4, A4, A4).order() == 24);
  CHECK(action_kernel_on_factor(S4, V, PermGroup::trivial(4)).order() == 4);

  auto const D = sylow(S4, 2).group();
  CHECK_THROWS_AS(action_kernel_on_factor(S4, D, V), NotNormal);
  CHECK_THROWS_AS(action_kernel_on_factor(S4, A4, D), InvalidArgument);  // K not inside H
  CHECK_THROWS_AS(action_kernel_on_factor(S4, symmetric(5), V), InvalidArgument);
  CHECK_THROWS_AS(action_kernel_on_factor(S4, S4, D), NotNormal);
}
