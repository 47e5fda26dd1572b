#include "sgraph/perm_group.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>

#include "sgraph/errors.hpp"

namespace sgraph {

namespace {

std::atomic<Order> g_exhaustive_cap{kDefaultExhaustiveCap};
std::atomic<Order> g_quotient_cap{kDefaultQuotientCap};

// Orbits with orbit_size * degree above this keep only a Schreier vector.
constexpr std::size_t kExplicitTransversalLimit = std::size_t{1} << 22;

}  // namespace

Order exhaustive_cap() noexcept { return g_exhaustive_cap.load(); }

void set_exhaustive_cap(Order cap) {
  if (cap == 0) {
    throw InvalidArgument("exhaustive cap must be positive");
  }
  g_exhaustive_cap.store(cap);
}

Order quotient_cap() noexcept { return g_quotient_cap.load(); }

void set_quotient_cap(Order cap) {
  if (cap == 0) {
    throw InvalidArgument("quotient cap must be positive");
  }
  g_quotient_cap.store(cap);
}

////////////////////////////////////////////////////////////////////////////////
// StabilizerChain
////////////////////////////////////////////////////////////////////////////////

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

StabilizerChain StabilizerChain::build(std::span<Permutation const> gens,
                                       std::optional<Order> known_order) {
  if (gens.empty()) {
    throw InvalidArgument("a group needs at least one generator");
  }
  StabilizerChain chain(gens.front().degree());
  for (auto const& g : gens) {
    if (g.degree() != chain.degree_) {
      throw InvalidArgument("generators have different degrees");
    }
    std::size_t deepest = 0;
    chain.place(g, deepest);
  }
  if (!chain.levels_.empty()) {
    chain.schreier_sims(chain.levels_.size() - 1, known_order);
  }
  return chain;
}

bool StabilizerChain::add_generator(Permutation const& g) {
  if (g.degree() != degree_) {
    throw InvalidArgument("degree mismatch adding a generator");
  }
  if (contains(g)) {
    return false;
  }
  std::size_t deepest = 0;
  place(g, deepest);
  schreier_sims(deepest, std::nullopt);
  return true;
}

void StabilizerChain::add_level(Point base) {
  Level level;
  level.base = base;
  level.position.assign(degree_, -1);
  levels_.push_back(std::move(level));
  rebuild_orbit(levels_.back());
}

void StabilizerChain::place(Permutation const& g, std::size_t& deepest) {
  if (g.is_identity()) {
    deepest = 0;
    return;
  }
  std::size_t j = 0;
  while (j < levels_.size() && g[levels_[j].base] == levels_[j].base) {
    ++j;
  }
  if (j == levels_.size()) {
    add_level(static_cast<Point>(g.first_moved_point()));
  }
  Permutation const g_inv = inverse(g);
  for (std::size_t i = 0; i <= j; ++i) {
    levels_[i].generators.push_back(g);
    levels_[i].inverse_generators.push_back(g_inv);
    rebuild_orbit(levels_[i]);
  }
  deepest = j;
}

void StabilizerChain::rebuild_orbit(Level& level) {
  level.orbit.clear();
  level.label.clear();
  level.parent.clear();
  level.reps.clear();
  level.inverse_reps.clear();
  std::fill(level.position.begin(), level.position.end(), -1);

  level.orbit.push_back(level.base);
  level.label.push_back(-1);
  level.parent.push_back(level.base);
  level.position[level.base] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point const b = level.orbit[i];
    for (std::size_t s = 0; s < level.generators.size(); ++s) {
      Point const c = level.generators[s][b];
      if (level.position[c] < 0) {
        level.position[c] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(c);
        level.label.push_back(static_cast<std::int32_t>(s));
        level.parent.push_back(b);
      }
    }
  }

  level.explicit_reps = level.orbit.size() * degree_ <= kExplicitTransversalLimit;
  if (level.explicit_reps) {
    level.reps.reserve(level.orbit.size());
    level.reps.push_back(Permutation(degree_));
    for (std::size_t i = 1; i < level.orbit.size(); ++i) {
      auto const& parent_rep = level.reps[static_cast<std::size_t>(level.position[level.parent[i]])];
      level.reps.push_back(parent_rep * level.generators[static_cast<std::size_t>(level.label[i])]);
    }
    level.inverse_reps.reserve(level.reps.size());
    for (auto const& r : level.reps) {
      level.inverse_reps.push_back(inverse(r));
    }
  }
}

Permutation StabilizerChain::times_inverse_rep(Permutation const& x,
                                               Level const& level,
                                               std::int32_t index) const {
  if (level.explicit_reps) {
    return x * level.inverse_reps[static_cast<std::size_t>(index)];
  }
  // u_b = u_parent * s, so x * u_b^-1 = (x * s^-1) * u_parent^-1.
  Permutation y = x;
  std::int32_t cur = index;
  while (level.label[static_cast<std::size_t>(cur)] >= 0) {
    y = y * level.inverse_generators[static_cast<std::size_t>(level.label[static_cast<std::size_t>(cur)])];
    cur = level.position[level.parent[static_cast<std::size_t>(cur)]];
  }
  return y;
}

Permutation StabilizerChain::representative(std::size_t level_index, Point b) const {
  Level const& level = levels_[level_index];
  std::int32_t const index = level.position[b];
  if (index < 0) {
    throw InvalidArgument("point is not in the basic orbit");
  }
  if (level.explicit_reps) {
    return level.reps[static_cast<std::size_t>(index)];
  }
  std::vector<std::size_t> path;
  for (std::int32_t cur = index; level.label[static_cast<std::size_t>(cur)] >= 0;
       cur = level.position[level.parent[static_cast<std::size_t>(cur)]]) {
    path.push_back(static_cast<std::size_t>(level.label[static_cast<std::size_t>(cur)]));
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    u = u * level.generators[*it];
  }
  return u;
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g,
                                                           std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    Level const& level = levels_[l];
    std::int32_t const index = level.position[g[level.base]];
    if (index < 0) {
      return {std::move(g), l};
    }
    g = times_inverse_rep(g, level, index);
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::schreier_sims(std::size_t start, std::optional<Order> target) {
  std::size_t i = start;
  while (true) {
    if (target && order() == *target) {
      return;
    }
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !restarted; ++oi) {
      for (std::size_t si = 0; si < levels_[i].generators.size(); ++si) {
        Level const& level = levels_[i];
        Point const b = level.orbit[oi];
        Permutation const& s = level.generators[si];
        Point const a = s[b];
        Permutation x = level.explicit_reps ? level.reps[oi] * s : representative(i, b) * s;
        x = times_inverse_rep(x, level, level.position[a]);
        if (x.is_identity()) {
          continue;
        }
        auto [h, j] = strip(std::move(x), i + 1);
        if (j == levels_.size()) {
          if (h.is_identity()) {
            continue;
          }
          add_level(static_cast<Point>(h.first_moved_point()));
        }
        Permutation const h_inv = inverse(h);
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].generators.push_back(h);
          levels_[l].inverse_generators.push_back(h_inv);
          rebuild_orbit(levels_[l]);
        }
        i = j;
        restarted = true;
        break;
      }
    }
    if (restarted) {
      continue;
    }
    if (i == 0) {
      return;
    }
    --i;
  }
}

Order StabilizerChain::order() const {
  Order result = 1;
  for (auto const& level : levels_) {
    result = checked_mul(result, level.orbit.size());
  }
  return result;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (auto const& level : levels_) {
    out.push_back(level.base);
  }
  return out;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (auto const& level : levels_) {
    for (auto const& g : level.generators) {
      if (std::find(out.begin(), out.end(), g) == out.end()) {
        out.push_back(g);
      }
    }
  }
  return out;
}

bool StabilizerChain::contains(Permutation const& g) const {
  if (g.degree() != degree_) {
    throw InvalidArgument("degree mismatch in membership test");
  }
  auto [residue, level] = strip(g, 0);
  return level == levels_.size() && residue.is_identity();
}

bool StabilizerChain::contains_product(std::span<Permutation const* const> word) const {
  std::vector<Point const*> factors;
  factors.reserve(word.size() + levels_.size());
  for (auto const* w : word) {
    if (w->degree() != degree_) {
      throw InvalidArgument("degree mismatch in membership test");
    }
    factors.push_back(w->images().data());
  }
  auto image = [&factors](Point x) {
    for (auto const* f : factors) {
      x = f[x];
    }
    return x;
  };
  auto materialize = [&] {
    std::vector<Point> images(degree_);
    for (std::size_t x = 0; x < degree_; ++x) {
      images[x] = image(static_cast<Point>(x));
    }
    return Permutation::from_images_unchecked(std::move(images));
  };

  for (std::size_t l = 0; l < levels_.size(); ++l) {
    Level const& level = levels_[l];
    if (!level.explicit_reps) {
      auto [residue, stop] = strip(materialize(), l);
      return stop == levels_.size() && residue.is_identity();
    }
    std::int32_t const index = level.position[image(level.base)];
    if (index < 0) {
      return false;
    }
    factors.push_back(level.inverse_reps[static_cast<std::size_t>(index)].images().data());
  }
  for (std::size_t x = 0; x < degree_; ++x) {
    if (image(static_cast<Point>(x)) != x) {
      return false;
    }
  }
  return true;
}

bool StabilizerChain::contains_conjugate(Permutation const& h, Permutation const& g,
                                         Permutation const& g_inverse) const {
  std::array<Permutation const*, 3> const word{&g_inverse, &h, &g};
  return contains_product(word);
}

std::vector<Permutation> StabilizerChain::enumerate() const {
  std::vector<Permutation> current{Permutation(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> reps;
    reps.reserve(levels_[l].orbit.size());
    for (Point b : levels_[l].orbit) {
      reps.push_back(representative(l, b));
    }
    std::vector<Permutation> next;
    next.reserve(current.size() * reps.size());
    for (auto const& y : current) {
      for (auto const& u : reps) {
        next.push_back(y * u);
      }
    }
    current = std::move(next);
  }
  return current;
}

////////////////////////////////////////////////////////////////////////////////
// PermGroup
////////////////////////////////////////////////////////////////////////////////

struct PermGroup::State {
  State(std::size_t d, std::vector<Permutation> gens, StabilizerChain c)
      : degree(d), generators(std::move(gens)), chain(std::move(c)), order(chain.order()) {}

  std::size_t degree;
  std::vector<Permutation> generators;
  StabilizerChain chain;
  Order order;
  mutable std::once_flag elements_once;
  mutable std::vector<Permutation> elements;
};

PermGroup::PermGroup() : PermGroup(trivial(1)) {}

PermGroup::PermGroup(std::shared_ptr<State const> state) : state_(std::move(state)) {}

PermGroup PermGroup::from_generators(std::vector<Permutation> gens,
                                     std::optional<Order> known_order) {
  if (gens.empty()) {
    throw InvalidArgument("a group needs at least one generator");
  }
  std::size_t const degree = gens.front().degree();
  if (degree == 0) {
    throw InvalidArgument("degree must be positive");
  }
  std::vector<Permutation> kept;
  for (auto& g : gens) {
    if (g.degree() != degree) {
      throw InvalidArgument("generators have different degrees");
    }
    if (!g.is_identity() && std::find(kept.begin(), kept.end(), g) == kept.end()) {
      kept.push_back(std::move(g));
    }
  }
  if (kept.empty()) {
    kept.push_back(Permutation(degree));
  }
  auto chain = StabilizerChain::build(kept, known_order);
  if (known_order && chain.order() != *known_order) {
    throw InvariantViolation("generators do not produce the stated order " +
                             std::to_string(*known_order));
  }
  return PermGroup(std::make_shared<State>(degree, std::move(kept), std::move(chain)));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return from_generators({Permutation(degree)});
}

PermGroup PermGroup::from_sorted_elements(std::size_t degree,
                                          std::vector<Permutation> elements) {
  StabilizerChain chain(degree);
  std::vector<Permutation> gens;
  for (auto const& x : elements) {
    if (chain.order() == elements.size()) {
      break;
    }
    if (chain.add_generator(x)) {
      gens.push_back(x);
    }
  }
  if (chain.order() != elements.size()) {
    throw InvariantViolation("element set is not a subgroup");
  }
  if (gens.empty()) {
    gens.push_back(Permutation(degree));
  }
  auto state = std::make_shared<State>(degree, std::move(gens), std::move(chain));
  std::call_once(state->elements_once,
                 [&] { state->elements = std::move(elements); });
  return PermGroup(std::move(state));
}

std::size_t PermGroup::degree() const noexcept { return state_->degree; }

std::vector<Permutation> const& PermGroup::generators() const noexcept {
  return state_->generators;
}

StabilizerChain const& PermGroup::chain() const noexcept { return state_->chain; }

Order PermGroup::order() const noexcept { return state_->order; }

bool PermGroup::contains(Permutation const& g) const {
  if (g.degree() != degree()) {
    throw InvalidArgument("degree mismatch: element of degree " +
                          std::to_string(g.degree()) + ", group of degree " +
                          std::to_string(degree()));
  }
  return state_->chain.contains(g);
}

std::vector<Permutation> const& PermGroup::elements() const {
  return elements(exhaustive_cap());
}

std::vector<Permutation> const& PermGroup::elements(Order cap) const {
  State const& s = *state_;
  if (s.order > cap) {
    throw CapExceeded(s.order, cap);
  }
  std::call_once(s.elements_once, [&s] {
    auto all = s.chain.enumerate();
    std::sort(all.begin(), all.end());
    s.elements = std::move(all);
  });
  return s.elements;
}

std::ptrdiff_t PermGroup::index_of(Permutation const& g) const {
  auto const& els = elements();
  auto it = std::lower_bound(els.begin(), els.end(), g);
  if (it == els.end() || *it != g) {
    return -1;
  }
  return it - els.begin();
}

bool is_subgroup(PermGroup const& sub, PermGroup const& group) {
  if (sub.degree() != group.degree()) {
    return false;
  }
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](Permutation const& g) { return group.contains(g); });
}

bool same_group(PermGroup const& a, PermGroup const& b) {
  return a.order() == b.order() && is_subgroup(a, b);
}

////////////////////////////////////////////////////////////////////////////////
// Generator files
////////////////////////////////////////////////////////////////////////////////

PermGroup parse_generator_text(std::string_view text, std::optional<Order> known_order) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto const first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (!degree) {
      std::istringstream header(line);
      std::string word;
      std::size_t n = 0;
      if (!(header >> word >> n) || word != "degree" || n == 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header 'degree N'");
      }
      std::string rest;
      if (header >> rest) {
        throw ParseError("line " + std::to_string(line_no) + ": trailing text after degree");
      }
      degree = n;
      continue;
    }
    try {
      gens.push_back(parse_permutation(line, *degree));
    } catch (ParseError const& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!degree) {
    throw ParseError("generator file has no 'degree N' header");
  }
  if (gens.empty()) {
    gens.push_back(Permutation(*degree));
  }
  return PermGroup::from_generators(std::move(gens), known_order);
}

PermGroup read_generator_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidArgument("cannot open generator file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_generator_text(buffer.str());
}

std::string format_generator_text(PermGroup const& group) {
  std::string out = "degree " + std::to_string(group.degree()) + "\n";
  for (auto const& g : group.generators()) {
    out += g.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace sgraph
