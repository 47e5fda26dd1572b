#include "sgraph/constructors.hpp"

#include <numeric>
#include <string>

#include "sgraph/errors.hpp"

namespace sgraph {

namespace {

constexpr std::size_t kMaxSymmetricDegree = 20;

Order factorial(std::size_t n) {
  Order r = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    r = checked_mul(r, i);
  }
  return r;
}

// Cycle over the given 0-based points.
Permutation cycle_of(std::size_t degree, std::vector<Point> const& points) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < points.size(); ++i) {
    images[points[i]] = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(images));
}

std::vector<Point> range_points(std::size_t from, std::size_t to) {
  std::vector<Point> out;
  for (std::size_t i = from; i < to; ++i) {
    out.push_back(static_cast<Point>(i));
  }
  return out;
}

PermGroup checked(PermGroup group, Order expected, std::string const& name) {
  if (group.order() != expected) {
    throw InvariantViolation(name + " has order " + std::to_string(group.order()) +
                             ", expected " + std::to_string(expected));
  }
  return group;
}

}  // namespace

PermGroup symmetric(std::size_t n) {
  if (n < 1 || n > kMaxSymmetricDegree) {
    throw InvalidArgument("Sym(n) needs 1 <= n <= 20, got " + std::to_string(n));
  }
  if (n == 1) {
    return PermGroup::trivial(1);
  }
  std::vector<Permutation> gens{cycle_of(n, range_points(0, n)), cycle_of(n, {0, 1})};
  return checked(PermGroup::from_generators(std::move(gens)), factorial(n), "Sym");
}

PermGroup alternating(std::size_t n) {
  if (n < 1 || n > kMaxSymmetricDegree) {
    throw InvalidArgument("Alt(n) needs 1 <= n <= 20, got " + std::to_string(n));
  }
  if (n < 3) {
    return PermGroup::trivial(n);
  }
  // An odd-length cycle together with (1,2,3).
  auto long_cycle = n % 2 == 1 ? cycle_of(n, range_points(0, n)) : cycle_of(n, range_points(1, n));
  std::vector<Permutation> gens{long_cycle, cycle_of(n, {0, 1, 2})};
  return checked(PermGroup::from_generators(std::move(gens)), factorial(n) / 2, "Alt");
}

PermGroup cyclic(std::size_t n) {
  if (n < 1) {
    throw InvalidArgument("Cyc(n) needs n >= 1");
  }
  if (n == 1) {
    return PermGroup::trivial(1);
  }
  return checked(PermGroup::from_generators({cycle_of(n, range_points(0, n))}), n, "Cyc");
}

PermGroup dihedral(std::size_t n) {
  if (n < 3) {
    throw InvalidArgument("Dih(n) needs n >= 3, got " + std::to_string(n));
  }
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) {
    reflection[i] = static_cast<Point>((n - i) % n);
  }
  std::vector<Permutation> gens{cycle_of(n, range_points(0, n)), Permutation(std::move(reflection))};
  return checked(PermGroup::from_generators(std::move(gens)), 2 * n, "Dih");
}

Permutation ProjectiveLine::moebius(FieldGF::Element a, FieldGF::Element b, FieldGF::Element c,
                                    FieldGF::Element d) const {
  auto const& F = field_;
  if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) {
    throw InvalidArgument("singular matrix");
  }
  std::vector<Point> images(size());
  images[kInfinity] = c == 0 ? kInfinity : point_of(F.mul(a, F.inv(c)));
  for (FieldGF::Element z = 0; z < F.size(); ++z) {
    auto const den = F.add(F.mul(c, z), d);
    auto const num = F.add(F.mul(a, z), b);
    images[point_of(z)] = den == 0 ? kInfinity : point_of(F.mul(num, F.inv(den)));
  }
  return Permutation(std::move(images));
}

Permutation ProjectiveLine::frobenius(unsigned e) const {
  std::vector<Point> images(size());
  images[kInfinity] = kInfinity;
  for (FieldGF::Element z = 0; z < field_.size(); ++z) {
    images[point_of(z)] = point_of(field_.frobenius(z, e));
  }
  return Permutation(std::move(images));
}

Order psl2_order(Order q) {
  return q * (q * q - 1) / std::gcd(Order{2}, q - 1);
}

namespace {

ProjectiveLine line_for(Order q, Prime& p, unsigned& k) {
  if (q < 4 || !prime_power(q, p, k)) {
    throw InvalidArgument("PSL2(q) needs a prime power q >= 4, got " + std::to_string(q));
  }
  return ProjectiveLine(FieldGF(p, k));
}

std::vector<Permutation> psl2_generators(ProjectiveLine const& line) {
  auto const& F = line.field();
  std::vector<Permutation> gens{line.moebius(1, 1, 0, 1)};
  if (F.extension_degree() > 1) {
    gens.push_back(line.moebius(1, F.primitive_element(), 0, 1));
  }
  gens.push_back(line.moebius(0, 1, F.neg(1), 0));
  return gens;
}

}  // namespace

PermGroup psl2(Order q) {
  Prime p = 0;
  unsigned k = 0;
  auto const line = line_for(q, p, k);
  return checked(PermGroup::from_generators(psl2_generators(line)), psl2_order(q),
                 "PSL2(" + std::to_string(q) + ")");
}

PermGroup psl2_frobenius_extension(Order q, unsigned e) {
  Prime p = 0;
  unsigned k = 0;
  auto const line = line_for(q, p, k);
  if (e < 1 || e >= k || k % e != 0) {
    throw InvalidArgument("PSL2(" + std::to_string(q) + "):" + std::to_string(e) +
                          " needs 1 <= e < " + std::to_string(k) + " with e dividing " +
                          std::to_string(k));
  }
  auto gens = psl2_generators(line);
  gens.push_back(line.frobenius(e));
  return checked(PermGroup::from_generators(std::move(gens)), psl2_order(q) * (k / e),
                 "PSL2(" + std::to_string(q) + "):" + std::to_string(e));
}

PermGroup mathieu(unsigned n) {
  Order expected = 0;
  switch (n) {
    case 11: expected = 7920; break;
    case 12: expected = 95040; break;
    case 22: expected = 443520; break;
    default: throw InvalidArgument("unsupported Mathieu group M" + std::to_string(n));
  }
  auto const name = "m" + std::to_string(n);
  return checked(parse_generator_text(detail::resource_text(name)), expected,
                 "M" + std::to_string(n) + " resource");
}

PermGroup janko(unsigned n) {
  Order expected = 0;
  switch (n) {
    case 1: expected = 175560; break;
    case 2: expected = 604800; break;
    default: throw InvalidArgument("unsupported Janko group J" + std::to_string(n));
  }
  auto const name = "j" + std::to_string(n);
  return checked(parse_generator_text(detail::resource_text(name)), expected,
                 "J" + std::to_string(n) + " resource");
}

PermGroup direct_product(PermGroup const& a, PermGroup const& b) {
  std::size_t const na = a.degree();
  std::size_t const degree = na + b.degree();
  std::vector<Permutation> gens;
  for (auto const& g : a.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < na; ++i) {
      images[i] = g[static_cast<Point>(i)];
    }
    gens.emplace_back(std::move(images));
  }
  for (auto const& g : b.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < b.degree(); ++i) {
      images[na + i] = static_cast<Point>(na + g[static_cast<Point>(i)]);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup::from_generators(std::move(gens), checked_mul(a.order(), b.order()));
}

}  // namespace sgraph
