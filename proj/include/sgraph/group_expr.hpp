#ifndef SGRAPH_GROUP_EXPR_HPP
#define SGRAPH_GROUP_EXPR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgraph/perm_group.hpp"

namespace sgraph {

/// Syntax tree of the group expression language:
///
///   expr := term ('x' term)*            left-associative direct product
///   term := Sym(n) | Alt(n) | Cyc(n) | Dih(n) | PSL2(q) | PSL2(q):e
///         | M11 | M12 | M22 | J1 | J2 | A5 | file:<path> | '(' expr ')'
///
/// Constructor names are case-insensitive; a file path runs to the next
/// whitespace.
struct GroupExpr {
  enum class Kind { Sym, Alt, Cyc, Dih, Psl2, Psl2Frobenius, Mathieu, Janko, Product, File };

  Kind kind = Kind::Cyc;
  std::uint64_t n = 1;  // degree, q, or the sporadic index (11, 12, 22 / 1, 2)
  unsigned e = 0;       // Frobenius exponent
  std::string path;
  std::vector<GroupExpr> operands;  // two, for Product

  /// Canonical spelling, e.g. "(Sym(4) x Cyc(3))".
  std::string to_string() const;
};

/// Throws ParseError (with the offending position) on malformed input or an
/// unknown constructor.
GroupExpr parse_group_expr(std::string_view text);

/// Builds the group; errors from the constructors propagate (InvalidArgument
/// for out-of-range parameters and unreadable files).
PermGroup realize(GroupExpr const& expr);

inline PermGroup group_from_expr(std::string_view text) {
  return realize(parse_group_expr(text));
}

}  // namespace sgraph

#endif  // SGRAPH_GROUP_EXPR_HPP
