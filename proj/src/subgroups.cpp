#include "sgraph/subgroups.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <string>

#include "sgraph/errors.hpp"

namespace sgraph {

Subgroup::Subgroup(PermGroup parent, PermGroup group)
    : parent_(std::move(parent)), group_(std::move(group)) {
  if (group_.degree() != parent_.degree() || !is_subgroup(group_, parent_)) {
    throw InvariantViolation("subgroup generators escape the parent group");
  }
  if (parent_.order() % group_.order() != 0) {
    throw InvariantViolation("subgroup order does not divide the parent order");
  }
}

namespace {

template <class Pred>
PermGroup filter_elements(PermGroup const& G, Pred keep) {
  std::vector<Permutation> kept;
  for (auto const& g : G.elements()) {
    if (keep(g)) {
      kept.push_back(g);
    }
  }
  return PermGroup::from_sorted_elements(G.degree(), std::move(kept));
}

bool commutes(Permutation const& a, Permutation const& b) {
  for (std::size_t x = 0; x < a.degree(); ++x) {
    auto const p = static_cast<Point>(x);
    if (b[a[p]] != a[b[p]]) {
      return false;
    }
  }
  return true;
}

void require_same_degree(PermGroup const& G, PermGroup const& H) {
  if (G.degree() != H.degree()) {
    throw InvalidArgument("groups act on different degrees");
  }
}

// [g, h] in K for every h in hs (with inverses supplied).
bool commutators_in(PermGroup const& K, Permutation const& g, Permutation const& g_inv,
                    std::vector<Permutation> const& hs, std::vector<Permutation> const& hs_inv) {
  for (std::size_t i = 0; i < hs.size(); ++i) {
    std::array<Permutation const*, 4> const word{&g_inv, &hs_inv[i], &g, &hs[i]};
    if (!K.chain().contains_product(word)) {
      return false;
    }
  }
  return true;
}

PermGroup kernel_on_factor(PermGroup const& G, PermGroup const& H, PermGroup const& K) {
  if (H.order() == K.order()) {
    return G;
  }
  std::vector<Permutation> hs;
  std::vector<Permutation> hs_inv;
  for (auto const& h : H.generators()) {
    if (!K.contains(h)) {
      hs.push_back(h);
      hs_inv.push_back(inverse(h));
    }
  }
  return filter_elements(G, [&](Permutation const& g) {
    return commutators_in(K, g, inverse(g), hs, hs_inv);
  });
}

}  // namespace

Subgroup normalizer(PermGroup const& G, PermGroup const& H) {
  require_same_degree(G, H);
  if (H.is_trivial() || H.order() == G.order()) {
    return Subgroup(G, G);
  }
  auto const& chain = H.chain();
  auto const& hs = H.generators();
  auto N = filter_elements(G, [&](Permutation const& g) {
    auto const g_inv = inverse(g);
    return std::all_of(hs.begin(), hs.end(), [&](Permutation const& h) {
      return chain.contains_conjugate(h, g, g_inv);
    });
  });
  return Subgroup(G, std::move(N));
}

Subgroup centralizer(PermGroup const& G, PermGroup const& H) {
  require_same_degree(G, H);
  if (H.is_trivial()) {
    return Subgroup(G, G);
  }
  auto const& hs = H.generators();
  auto C = filter_elements(G, [&](Permutation const& g) {
    return std::all_of(hs.begin(), hs.end(), [&](Permutation const& h) { return commutes(g, h); });
  });
  return Subgroup(G, std::move(C));
}

Subgroup center(PermGroup const& G) { return centralizer(G, G); }

Subgroup normal_closure(PermGroup const& G, std::span<Permutation const> S) {
  StabilizerChain chain(G.degree());
  std::vector<Permutation> gens;
  std::vector<Permutation> queue;
  for (auto const& s : S) {
    if (!G.contains(s)) {
      throw InvalidArgument("normal closure of elements outside the group");
    }
    if (!s.is_identity() && chain.add_generator(s)) {
      gens.push_back(s);
      queue.push_back(s);
    }
  }
  for (std::size_t i = 0; i < queue.size() && chain.order() < G.order(); ++i) {
    Permutation const x = queue[i];
    for (auto const& g : G.generators()) {
      auto y = conjugate(x, g);
      if (chain.add_generator(y)) {
        gens.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  if (gens.empty()) {
    return Subgroup(G, PermGroup::trivial(G.degree()));
  }
  return Subgroup(G, PermGroup::from_generators(std::move(gens), chain.order()));
}

bool is_normal(PermGroup const& G, PermGroup const& H) {
  require_same_degree(G, H);
  for (auto const& h : H.generators()) {
    for (auto const& g : G.generators()) {
      if (!H.contains(conjugate(h, g))) {
        return false;
      }
    }
  }
  return true;
}

bool is_abelian(PermGroup const& G) {
  auto const& gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (!commutes(gs[i], gs[j])) {
        return false;
      }
    }
  }
  return true;
}

Subgroup derived_subgroup(PermGroup const& G) {
  std::vector<Permutation> comms;
  auto const& gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      auto c = commutator(gs[i], gs[j]);
      if (!c.is_identity()) {
        comms.push_back(std::move(c));
      }
    }
  }
  return normal_closure(G, comms);
}

std::vector<PermGroup> derived_series(PermGroup const& G) {
  std::vector<PermGroup> series{G};
  while (!series.back().is_trivial()) {
    auto next = derived_subgroup(series.back()).group();
    if (next.order() == series.back().order()) {
      break;
    }
    series.push_back(std::move(next));
  }
  return series;
}

Subgroup perfect_core(PermGroup const& G) { return Subgroup(G, derived_series(G).back()); }

bool is_solvable(PermGroup const& G) { return derived_series(G).back().is_trivial(); }

bool is_perfect(PermGroup const& G) {
  return derived_subgroup(G).order() == G.order();
}

bool is_nilpotent(PermGroup const& G) {
  for (Prime p : prime_divisors(G.order())) {
    if (!is_normal(G, sylow(G, p).group())) {
      return false;
    }
  }
  return true;
}

Subgroup sylow(PermGroup const& G, Prime p, std::size_t seed_offset) {
  if (!is_prime(p) || G.order() % p != 0) {
    throw InvalidArgument(std::to_string(p) + " is not a prime divisor of the group order " +
                          std::to_string(G.order()));
  }
  Order const target = p_part(G.order(), p);
  auto const& els = G.elements();
  std::size_t const n = els.size();

  std::vector<Permutation> gens;
  for (std::size_t t = 0; t < n && gens.empty(); ++t) {
    auto y = p_part_element(els[(seed_offset + t) % n], p);
    if (!y.is_identity()) {
      gens.push_back(std::move(y));
    }
  }
  auto P = PermGroup::from_generators(gens);

  // A proper p-subgroup is proper in the p-part of its normalizer, so some
  // element of N(P) has a p-part outside P, and adjoining it keeps a p-group.
  while (P.order() < target) {
    auto const N = normalizer(G, P).group();
    auto const& nels = N.elements();
    bool grown = false;
    for (std::size_t t = 0; t < nels.size() && !grown; ++t) {
      auto const& x = nels[(seed_offset + t) % nels.size()];
      if (P.contains(x)) {
        continue;
      }
      auto y = p_part_element(x, p);
      if (!P.contains(y)) {
        gens.push_back(std::move(y));
        P = PermGroup::from_generators(gens);
        grown = true;
      }
    }
    if (!grown) {
      throw InvariantViolation("Sylow growth stalled at order " + std::to_string(P.order()));
    }
  }
  if (P.order() != target) {
    throw InvariantViolation("Sylow construction overshot the p-part");
  }
  return Subgroup(G, std::move(P));
}

Permutation Quotient::project(Permutation const& g) const {
  auto const& els = parent_.elements();
  std::vector<Point> images(representative_.size());
  for (std::size_t c = 0; c < representative_.size(); ++c) {
    images[c] = static_cast<Point>(coset_of(els[representative_[c]] * g));
  }
  return Permutation::from_images_unchecked(std::move(images));
}

std::uint32_t Quotient::coset_of(Permutation const& g) const {
  auto const i = parent_.index_of(g);
  if (i < 0) {
    throw InvalidArgument("element is not in the group being factored");
  }
  return coset_[static_cast<std::size_t>(i)];
}

Quotient quotient(PermGroup const& G, PermGroup const& N) {
  require_same_degree(G, N);
  if (!is_subgroup(N, G)) {
    throw InvalidArgument("quotient by a subset that is not a subgroup");
  }
  if (!is_normal(G, N)) {
    throw NotNormal("subgroup is not normal");
  }
  Order const index = G.order() / N.order();
  if (index > quotient_cap() || index > kMaxDegree) {
    throw QuotientCapExceeded(index, std::min<Order>(quotient_cap(), kMaxDegree));
  }
  Quotient q;
  q.parent_ = G;
  auto const& els = G.elements();
  auto const& nels = N.elements();
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  q.coset_.assign(els.size(), kUnset);
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (q.coset_[i] != kUnset) {
      continue;
    }
    auto const c = static_cast<std::uint32_t>(q.representative_.size());
    q.representative_.push_back(static_cast<std::uint32_t>(i));
    for (auto const& x : nels) {
      q.coset_[static_cast<std::size_t>(G.index_of(x * els[i]))] = c;
    }
  }
  if (index == 1) {
    q.group_ = PermGroup::trivial(1);
    return q;
  }
  std::vector<Permutation> gens;
  for (auto const& g : G.generators()) {
    gens.push_back(q.project(g));
  }
  q.group_ = PermGroup::from_generators(std::move(gens), index);
  return q;
}

Subgroup action_kernel_on_factor(PermGroup const& G, PermGroup const& H, PermGroup const& K) {
  require_same_degree(G, H);
  require_same_degree(G, K);
  if (!is_subgroup(H, G) || !is_subgroup(K, G)) {
    throw InvalidArgument("factor terms are not subgroups of the group");
  }
  if (!is_subgroup(K, H)) {
    throw InvalidArgument("lower factor term is not contained in the upper one");
  }
  if (!is_normal(G, K)) {
    throw NotNormal("lower factor term is not normal in the group");
  }
  if (!is_normal(G, H)) {
    throw NotNormal("upper factor term is not normal in the group");
  }
  return Subgroup(G, kernel_on_factor(G, H, K));
}

ChiefSeries chief_series(PermGroup const& G, std::size_t sweep_offset) {
  ChiefSeries out;
  auto const& els = G.elements();
  std::size_t const n = els.size();
  std::vector<Permutation> g_inv;
  for (auto const& g : G.generators()) {
    g_inv.push_back(inverse(g));
  }

  PermGroup K = PermGroup::trivial(G.degree());
  out.terms.push_back(K);
  while (K.order() < G.order()) {
    // Elements y in x^G K all give the same candidate as x; mark them so
    // each such class is tried once.
    std::vector<char> covered(n, 0);
    std::vector<std::size_t> stack;
    auto cover_class = [&](std::size_t start) {
      covered[start] = 1;
      stack.assign(1, start);
      while (!stack.empty()) {
        Permutation const y = els[stack.back()];
        stack.pop_back();
        auto visit = [&](Permutation const& z) {
          auto const j = static_cast<std::size_t>(G.index_of(z));
          if (!covered[j]) {
            covered[j] = 1;
            stack.push_back(j);
          }
        };
        for (std::size_t i = 0; i < g_inv.size(); ++i) {
          visit(g_inv[i] * y * G.generators()[i]);
        }
        for (auto const& k : K.generators()) {
          visit(y * k);
        }
      }
    };
    cover_class(static_cast<std::size_t>(G.index_of(Permutation(G.degree()))));

    Order const floor = prime_divisors(G.order() / K.order()).front();
    std::optional<PermGroup> best;
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t const i = (sweep_offset + t) % n;
      if (covered[i]) {
        continue;
      }
      cover_class(i);
      std::vector<Permutation> seeds = K.generators();
      seeds.push_back(els[i]);
      auto M = normal_closure(G, seeds).group();
      if (!best || M.order() < best->order()) {
        best = std::move(M);
        if (best->order() / K.order() == floor) {
          break;
        }
      }
    }

    ChiefFactor factor{K, *best, kernel_on_factor(G, *best, K), best->order() / K.order(), {}};
    factor.primes = prime_divisors(factor.order);
    out.factors.push_back(std::move(factor));
    K = *best;
    out.terms.push_back(K);
  }
  return out;
}

}  // namespace sgraph
