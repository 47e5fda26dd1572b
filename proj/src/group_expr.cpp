#include "sgraph/group_expr.hpp"

#include <algorithm>
#include <cctype>

#include "sgraph/constructors.hpp"
#include "sgraph/errors.hpp"

namespace sgraph {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    auto expr = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return expr;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_product_operator() {
    skip_ws();
    if (pos_ >= text_.size() || (text_[pos_] != 'x' && text_[pos_] != 'X')) {
      return false;
    }
    std::size_t const next = pos_ + 1;
    return next == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[next]));
  }

  GroupExpr parse_expr() {
    GroupExpr left = parse_term();
    while (at_product_operator()) {
      ++pos_;
      GroupExpr right = parse_term();
      GroupExpr product;
      product.kind = GroupExpr::Kind::Product;
      product.operands.push_back(std::move(left));
      product.operands.push_back(std::move(right));
      left = std::move(product);
    }
    return left;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::uint64_t parse_number() {
    skip_ws();
    std::size_t const start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > 100'000'000) {
        throw ParseError("number too large", start);
      }
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError("expected a number", start);
    }
    return value;
  }

  std::uint64_t parenthesised_number() {
    expect('(');
    auto const n = parse_number();
    expect(')');
    return n;
  }

  GroupExpr parse_term() {
    skip_ws();
    std::size_t const start = pos_;
    if (pos_ >= text_.size()) {
      throw ParseError("expected a group", pos_);
    }
    if (text_[pos_] == '(') {
      ++pos_;
      auto inner = parse_expr();
      expect(')');
      return inner;
    }
    if (lower(text_.substr(pos_, 5)) == "file:") {
      pos_ += 5;
      std::size_t const path_start = pos_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (pos_ == path_start) {
        throw ParseError("empty file path", path_start);
      }
      GroupExpr e;
      e.kind = GroupExpr::Kind::File;
      e.path = std::string(text_.substr(path_start, pos_ - path_start));
      return e;
    }
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError("expected a group constructor", start);
    }
    auto const name = lower(text_.substr(start, pos_ - start));
    GroupExpr e;
    if (name == "sym" || name == "alt" || name == "cyc" || name == "dih") {
      e.kind = name == "sym"   ? GroupExpr::Kind::Sym
               : name == "alt" ? GroupExpr::Kind::Alt
               : name == "cyc" ? GroupExpr::Kind::Cyc
                               : GroupExpr::Kind::Dih;
      e.n = parenthesised_number();
    } else if (name == "psl2") {
      e.kind = GroupExpr::Kind::Psl2;
      e.n = parenthesised_number();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ':') {
        ++pos_;
        e.kind = GroupExpr::Kind::Psl2Frobenius;
        auto const exponent = parse_number();
        if (exponent == 0 || exponent > 64) {
          throw ParseError("Frobenius exponent out of range", pos_);
        }
        e.e = static_cast<unsigned>(exponent);
      }
    } else if (name == "m11" || name == "m12" || name == "m22") {
      e.kind = GroupExpr::Kind::Mathieu;
      e.n = std::stoull(name.substr(1));
    } else if (name == "j1" || name == "j2") {
      e.kind = GroupExpr::Kind::Janko;
      e.n = std::stoull(name.substr(1));
    } else if (name == "a5") {
      e.kind = GroupExpr::Kind::Alt;
      e.n = 5;
    } else {
      throw ParseError("unsupported constructor '" + std::string(text_.substr(start, pos_ - start)) + "'",
                       start);
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string GroupExpr::to_string() const {
  auto call = [this](char const* name) { return std::string(name) + "(" + std::to_string(n) + ")"; };
  switch (kind) {
    case Kind::Sym: return call("Sym");
    case Kind::Alt: return call("Alt");
    case Kind::Cyc: return call("Cyc");
    case Kind::Dih: return call("Dih");
    case Kind::Psl2: return call("PSL2");
    case Kind::Psl2Frobenius: return call("PSL2") + ":" + std::to_string(e);
    case Kind::Mathieu: return "M" + std::to_string(n);
    case Kind::Janko: return "J" + std::to_string(n);
    case Kind::File: return "file:" + path;
    case Kind::Product:
      return "(" + operands[0].to_string() + " x " + operands[1].to_string() + ")";
  }
  return {};
}

PermGroup realize(GroupExpr const& expr) {
  switch (expr.kind) {
    case GroupExpr::Kind::Sym: return symmetric(expr.n);
    case GroupExpr::Kind::Alt: return alternating(expr.n);
    case GroupExpr::Kind::Cyc: return cyclic(expr.n);
    case GroupExpr::Kind::Dih: return dihedral(expr.n);
    case GroupExpr::Kind::Psl2: return psl2(expr.n);
    case GroupExpr::Kind::Psl2Frobenius: return psl2_frobenius_extension(expr.n, expr.e);
    case GroupExpr::Kind::Mathieu: return mathieu(static_cast<unsigned>(expr.n));
    case GroupExpr::Kind::Janko: return janko(static_cast<unsigned>(expr.n));
    case GroupExpr::Kind::File: return read_generator_file(expr.path);
    case GroupExpr::Kind::Product:
      return direct_product(realize(expr.operands[0]), realize(expr.operands[1]));
  }
  throw InvalidArgument("unknown group expression");
}

}  // namespace sgraph
