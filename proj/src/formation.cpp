#include "sgraph/formation.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sgraph/errors.hpp"
#include "sgraph/subgroups.hpp"

namespace sgraph {

PrimeSet normalized(PrimeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool is_subset(PrimeSet const& a, PrimeSet const& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

std::string join(std::vector<Prime> const& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << (i ? "," : "") << xs[i];
  }
  return out.str();
}

}  // namespace

SymmetryReport validate_symmetric(Covering const& c) {
  SymmetryReport report;
  auto fail = [&report](int condition, std::vector<Prime> primes, std::string message) {
    report.symmetric = false;
    report.violations.push_back({condition, std::move(primes), std::move(message)});
  };
  PrimeSet const pi = normalized(c.pi);

  // (i) union of the blocks is pi.
  std::set<Prime> uni;
  std::vector<Prime> stray_keys;
  for (auto const& [p, block] : c.blocks) {
    if (!std::binary_search(pi.begin(), pi.end(), p)) {
      stray_keys.push_back(p);
    }
    uni.insert(block.begin(), block.end());
  }
  std::vector<Prime> outside;
  std::vector<Prime> uncovered;
  for (Prime q : uni) {
    if (!std::binary_search(pi.begin(), pi.end(), q)) {
      outside.push_back(q);
    }
  }
  for (Prime p : pi) {
    if (!uni.count(p)) {
      uncovered.push_back(p);
    }
  }
  if (!stray_keys.empty()) {
    fail(1, stray_keys, "blocks given for primes outside pi: " + join(stray_keys));
  }
  if (!outside.empty()) {
    fail(1, outside, "blocks contain primes outside pi: " + join(outside));
  }
  if (!uncovered.empty()) {
    fail(1, uncovered, "primes of pi not covered by any block: " + join(uncovered));
  }

  // (ii) p in pi(p).
  for (Prime p : pi) {
    auto it = c.blocks.find(p);
    if (it == c.blocks.end()) {
      fail(2, {p}, "no block for " + std::to_string(p));
    } else if (std::find(it->second.begin(), it->second.end(), p) == it->second.end()) {
      fail(2, {p}, std::to_string(p) + " is not in its own block");
    }
  }

  // (iii) q in pi(p) implies p in pi(q).
  for (auto const& [p, block] : c.blocks) {
    for (Prime q : normalized(block)) {
      if (q == p) {
        continue;
      }
      auto it = c.blocks.find(q);
      bool const back = it != c.blocks.end() &&
                        std::find(it->second.begin(), it->second.end(), p) != it->second.end();
      if (!back) {
        fail(3, {p, q},
             std::to_string(q) + " is in the block of " + std::to_string(p) + " but " +
                 std::to_string(p) + " is not in the block of " + std::to_string(q));
      }
    }
  }
  return report;
}

bool is_partition(Covering const& c) {
  if (!validate_symmetric(c).symmetric) {
    throw InvalidArgument("covering is not symmetric");
  }
  std::vector<PrimeSet> blocks;
  for (auto const& [p, block] : c.blocks) {
    blocks.push_back(normalized(block));
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks[i] == blocks[j]) {
        continue;
      }
      PrimeSet common;
      std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        return false;
      }
    }
  }
  return true;
}

ClassSpec ClassSpec::all_pi(PrimeSet s) {
  if (s.empty()) {
    throw InvalidArgument("all_pi needs a nonempty prime set");
  }
  return {Kind::AllPi, normalized(std::move(s))};
}

ClassSpec ClassSpec::solvable_pi(PrimeSet s) {
  if (s.empty()) {
    throw InvalidArgument("solvable_pi needs a nonempty prime set");
  }
  return {Kind::SolvablePi, normalized(std::move(s))};
}

std::string ClassSpec::to_string() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::AllPi: return "all_pi{" + join(primes) + "}";
    case Kind::SolvablePi: return "solvable_pi{" + join(primes) + "}";
  }
  return {};
}

ClassSpec const& LocalDefinition::at(Prime q) const {
  auto it = map.find(q);
  return it == map.end() ? fallback : it->second;
}

LocalDefinition local_definition_from_covering(Covering const& c) {
  auto const report = validate_symmetric(c);
  if (!report.symmetric) {
    throw InvalidArgument("covering is not symmetric: " + report.violations.front().message);
  }
  LocalDefinition f;
  for (auto const& [p, block] : c.blocks) {
    f.map[p] = ClassSpec::all_pi(block);
  }
  return f;
}

LocalDefinition with_solvable_intersection(LocalDefinition f) {
  auto restrict = [](ClassSpec& s) {
    if (s.kind == ClassSpec::Kind::AllPi) {
      s.kind = ClassSpec::Kind::SolvablePi;
    }
  };
  restrict(f.fallback);
  for (auto& [q, s] : f.map) {
    restrict(s);
  }
  return f;
}

LocalDefinition fundamental_definition(PrimeSet pi, Prime p) {
  pi = normalized(std::move(pi));
  if (!std::binary_search(pi.begin(), pi.end(), p)) {
    throw InvalidArgument(std::to_string(p) + " is not in pi");
  }
  LocalDefinition f;
  for (Prime q : pi) {
    f.map[q] = q == p ? ClassSpec::solvable_pi(pi) : ClassSpec::all_pi(pi);
  }
  return f;
}

LocalDefinition odd_order_definition(PrimeSet window) {
  window = normalized(std::move(window));
  PrimeSet odd;
  std::copy_if(window.begin(), window.end(), std::back_inserter(odd),
               [](Prime q) { return q != 2; });
  LocalDefinition f;
  for (Prime q : odd) {
    f.map[q] = ClassSpec::solvable_pi(odd);
  }
  return f;
}

bool class_membership(ClassSpec const& spec, PermGroup const& G) {
  switch (spec.kind) {
    case ClassSpec::Kind::Empty: return G.is_trivial();
    case ClassSpec::Kind::AllPi: return is_subset(prime_divisors(G.order()), spec.primes);
    case ClassSpec::Kind::SolvablePi:
      return is_subset(prime_divisors(G.order()), spec.primes) && is_solvable(G);
  }
  return false;
}

LfResult lf_membership(LocalDefinition const& f, PermGroup const& G, LfOptions const& options) {
  LfResult result;
  auto const series = chief_series(G, options.sweep_offset);
  std::optional<PermGroup> core;
  for (std::size_t i = 0; i < series.factors.size(); ++i) {
    auto const& factor = series.factors[i];
    for (Prime q : factor.primes) {
      FactorCheck check;
      check.factor = i;
      check.factor_order = factor.order;
      check.q = q;
      check.quotient_order = G.order() / factor.kernel.order();
      check.spec = f.at(q);
      if (check.spec.kind == ClassSpec::Kind::Empty) {
        check.verdict = false;
      } else if (options.materialize_quotients) {
        check.verdict = class_membership(check.spec, quotient(G, factor.kernel).group());
      } else {
        // pi(G/C) comes from the index; G/C is solvable iff G^inf <= C.
        check.verdict = is_subset(prime_divisors(check.quotient_order), check.spec.primes);
        if (check.verdict && check.spec.kind == ClassSpec::Kind::SolvablePi) {
          if (!core) {
            core = perfect_core(G).group();
          }
          check.verdict = is_subgroup(*core, factor.kernel);
        }
      }
      result.member = result.member && check.verdict;
      result.trace.push_back(std::move(check));
    }
  }
  return result;
}

bool lemma1_membership(PrimeSet const& pi, Prime p, PermGroup const& G) {
  if (!is_subset(prime_divisors(G.order()), normalized(pi))) {
    return false;
  }
  return perfect_core(G).order() % p != 0;
}

NClosureResult n_closure_test(GroupPredicate const& member, PermGroup const& G) {
  NClosureResult result;
  for (Prime p : prime_divisors(G.order())) {
    auto const N = normalizer(G, sylow(G, p).group()).group();
    NClosureRow row{p, N.order(), member(N)};
    result.holds = result.holds && row.verdict;
    result.trace.push_back(row);
  }
  return result;
}

bool lattice_formation_membership(Covering const& partition, PermGroup const& G) {
  if (!is_partition(partition)) {
    throw InvalidArgument("covering is not a partition");
  }
  auto const primes = prime_divisors(G.order());
  if (!is_subset(primes, normalized(partition.pi))) {
    return false;
  }
  std::set<PrimeSet> blocks;
  for (auto const& [p, block] : partition.blocks) {
    blocks.insert(normalized(block));
  }

  // H_i = elements whose order involves only primes of block i.
  std::vector<PermGroup> parts;
  Order product = 1;
  for (auto const& block : blocks) {
    if (std::none_of(primes.begin(), primes.end(),
                     [&](Prime q) { return std::binary_search(block.begin(), block.end(), q); })) {
      continue;
    }
    std::vector<Permutation> members;
    for (auto const& g : G.elements()) {
      if (is_subset(prime_divisors(element_order(g)), block)) {
        members.push_back(g);
      }
    }
    StabilizerChain chain(G.degree());
    std::vector<Permutation> gens;
    for (auto const& g : members) {
      if (chain.order() > members.size()) {
        break;
      }
      if (chain.add_generator(g)) {
        gens.push_back(g);
      }
    }
    if (chain.order() != members.size()) {
      return false;  // not closed under products
    }
    parts.push_back(gens.empty() ? PermGroup::trivial(G.degree())
                                 : PermGroup::from_generators(std::move(gens), chain.order()));
    product = checked_mul(product, chain.order());
  }
  if (product != G.order()) {
    return false;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (auto const& a : parts[i].generators()) {
        for (auto const& b : parts[j].generators()) {
          if (a * b != b * a) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

using nlohmann::json;

Prime parse_prime(json const& v, std::string const& where) {
  Order n = 0;
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() > 0)) {
    n = v.get<Order>();
  } else if (v.is_string()) {
    auto const s = v.get<std::string>();
    std::size_t used = 0;
    try {
      n = std::stoull(s, &used);
    } catch (std::exception const&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw ParseError(where + ": '" + s + "' is not a number");
    }
  } else {
    throw ParseError(where + ": expected a prime, got " + v.dump());
  }
  if (!is_prime(n)) {
    throw ParseError(where + ": " + std::to_string(n) + " is not prime");
  }
  return n;
}

PrimeSet parse_prime_list(json const& v, std::string const& where) {
  if (!v.is_array()) {
    throw ParseError(where + ": expected a list of primes");
  }
  PrimeSet out;
  for (auto const& x : v) {
    out.push_back(parse_prime(x, where));
  }
  return normalized(out);
}

json parse_document(std::string_view text) {
  try {
    auto doc = json::parse(text);
    if (!doc.is_object()) {
      throw ParseError("spec must be a JSON object");
    }
    return doc;
  } catch (json::parse_error const& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

ClassSpec parse_class(json const& v, std::string const& where) {
  std::string kind;
  if (v.is_string()) {
    kind = v.get<std::string>();
  } else if (v.is_object() && v.contains("kind") && v["kind"].is_string()) {
    kind = v["kind"].get<std::string>();
  } else {
    throw ParseError(where + ": expected a class (\"empty\" or an object with \"kind\")");
  }
  if (kind == "empty") {
    return ClassSpec::empty();
  }
  if (kind != "all_pi" && kind != "solvable_pi") {
    throw ParseError(where + ": unknown class kind '" + kind + "'");
  }
  if (!v.is_object() || !v.contains("pi")) {
    throw ParseError(where + ": class '" + kind + "' needs \"pi\"");
  }
  auto primes = parse_prime_list(v["pi"], where);
  if (primes.empty()) {
    throw ParseError(where + ": class '" + kind + "' needs a nonempty \"pi\"");
  }
  return kind == "all_pi" ? ClassSpec::all_pi(primes) : ClassSpec::solvable_pi(primes);
}

Covering covering_from(json const& doc) {
  if (!doc.contains("pi") || !doc.contains("blocks") || !doc["blocks"].is_object()) {
    throw ParseError("covering needs \"pi\" and an object \"blocks\"");
  }
  Covering c;
  c.pi = parse_prime_list(doc["pi"], "pi");
  for (auto const& [key, value] : doc["blocks"].items()) {
    Prime const p = parse_prime(json(key), "blocks key");
    c.blocks[p] = parse_prime_list(value, "block " + key);
  }
  return c;
}

LocalDefinition definition_from(json const& doc) {
  LocalDefinition f;
  if (doc.contains("default")) {
    f.fallback = parse_class(doc["default"], "default");
  }
  if (doc.contains("map")) {
    if (!doc["map"].is_object()) {
      throw ParseError("\"map\" must be an object");
    }
    for (auto const& [key, value] : doc["map"].items()) {
      f.map[parse_prime(json(key), "map key")] = parse_class(value, "map entry " + key);
    }
  }
  return f;
}

}  // namespace

Covering parse_covering_json(std::string_view text) { return covering_from(parse_document(text)); }

LocalDefinition parse_local_definition_json(std::string_view text) {
  auto const doc = parse_document(text);
  if (!doc.contains("map") && !doc.contains("default")) {
    throw ParseError("local definition needs \"map\" or \"default\"");
  }
  return definition_from(doc);
}

LocalDefinition parse_formation_spec_json(std::string_view text) {
  auto const doc = parse_document(text);
  if (doc.contains("blocks")) {
    auto const c = covering_from(doc);
    auto const report = validate_symmetric(c);
    if (!report.symmetric) {
      throw ParseError("covering is not symmetric: " + report.violations.front().message);
    }
    return local_definition_from_covering(c);
  }
  if (doc.contains("map") || doc.contains("default")) {
    return definition_from(doc);
  }
  throw ParseError("spec is neither a covering nor a local definition");
}

}  // namespace sgraph
