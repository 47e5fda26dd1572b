#include "sgraph/permutation.hpp"

#include <cctype>
#include <numeric>
#include <utility>

#include "sgraph/errors.hpp"

namespace sgraph {

namespace {

void check_degree(std::size_t degree) {
  if (degree > kMaxDegree) {
    throw InvalidArgument("degree " + std::to_string(degree) +
                          " exceeds the supported maximum " +
                          std::to_string(kMaxDegree));
  }
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  check_degree(degree);
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  check_degree(images_.size());
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InvalidArgument("image table is not a bijection");
    }
    seen[x] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  return first_moved_point() == images_.size();
}

std::size_t Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return i;
    }
  }
  return images_.size();
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      continue;
    }
    out += '(';
    std::size_t x = i;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(x + 1);
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) {
    throw InvalidArgument("degree mismatch: " + std::to_string(a.degree()) +
                          " vs " + std::to_string(b.degree()));
  }
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = b[a[static_cast<Point>(i)]];
  }
  return Permutation::from_images_unchecked(std::move(out));
}

Permutation inverse(Permutation const& a) {
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[a[static_cast<Point>(i)]] = static_cast<Point>(i);
  }
  return Permutation::from_images_unchecked(std::move(out));
}

Permutation power(Permutation const& a, Order k) {
  Permutation result(a.degree());
  Permutation base = a;
  while (k > 0) {
    if (k & 1U) {
      result = result * base;
    }
    k >>= 1U;
    if (k > 0) {
      base = base * base;
    }
  }
  return result;
}

Permutation conjugate(Permutation const& h, Permutation const& g) {
  return inverse(g) * h * g;
}

Permutation commutator(Permutation const& a, Permutation const& b) {
  return inverse(a) * inverse(b) * a * b;
}

Order element_order(Permutation const& a) {
  Order result = 1;
  std::vector<bool> seen(a.degree(), false);
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (seen[i]) {
      continue;
    }
    Order length = 0;
    for (std::size_t x = i; !seen[x]; x = a[static_cast<Point>(x)]) {
      seen[x] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

Permutation p_part_element(Permutation const& a, Prime p) {
  Order const o = element_order(a);
  Order const pk = p_part(o, p);
  Order const m = o / pk;
  if (pk == 1) {
    return Permutation(a.degree());
  }
  // a^e with e = 1 mod p^k and e = 0 mod m, i.e. e = m * (m^-1 mod p^k).
  std::int64_t r0 = static_cast<std::int64_t>(pk), r1 = static_cast<std::int64_t>(m % pk);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t const q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  Order const inv = static_cast<Order>((t0 % static_cast<std::int64_t>(pk) + pk) % pk);
  return power(a, (m * inv) % o);
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  check_degree(degree);
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  };
  auto read_point = [&]() -> Point {
    skip_ws();
    std::size_t const start = pos;
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (value > kMaxDegree + 1) {
        throw ParseError("point out of range", start);
      }
      ++pos;
    }
    if (pos == start) {
      throw ParseError("expected a point", start);
    }
    if (value < 1 || value > degree) {
      throw ParseError("point " + std::to_string(value) + " out of range 1.." +
                           std::to_string(degree),
                       start);
    }
    if (used[value - 1]) {
      throw ParseError("point " + std::to_string(value) + " repeated", start);
    }
    used[value - 1] = true;
    return static_cast<Point>(value - 1);
  };

  skip_ws();
  if (pos == text.size()) {
    throw ParseError("empty permutation", pos);
  }
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      break;
    }
    expect('(');
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;  // "()" is the identity
      continue;
    }
    std::vector<Point> cycle{read_point()};
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        cycle.push_back(read_point());
      } else {
        expect(')');
        break;
      }
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  std::size_t h = 14695981039346656037ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sgraph
