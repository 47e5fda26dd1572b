#ifndef SGRAPH_APPENDIX_HPP
#define SGRAPH_APPENDIX_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgraph/perm_group.hpp"

namespace sgraph {

/// "divisor divides |N_G(G_at) : C_G(G_at)|".
struct DivisibilityClaim {
  Prime divisor = 0;
  Prime at = 0;
};

/// One item of the sporadic-group table, stored as printed: the name, the
/// listed prime set and the listed divisibilities. Some printed items are
/// internally inconsistent (a claim at a prime missing from the listed
/// set); `inconsistencies()` reports those without correcting them.
struct AppendixItem {
  int number = 0;
  std::string name;        // canonical name, e.g. "M11", "HS", "O'N"
  std::string printed;     // the name as it appears in the table
  std::vector<Prime> pi;
  std::vector<DivisibilityClaim> claims;
  bool computable = false;  // has a shipped constructor within the default cap

  std::vector<std::string> inconsistencies() const;
};

std::vector<AppendixItem> const& appendix_items();

/// By canonical or printed name (case-insensitive) or by item number.
std::optional<AppendixItem> find_appendix_item(std::string_view name);

/// Builds the group of a computable item (M11, M12, J1, M22, J2).
PermGroup appendix_group(AppendixItem const& item);

struct ClaimCheck {
  DivisibilityClaim claim;
  Order nc_index = 0;
  bool holds = false;
};

struct AppendixCheck {
  AppendixItem item;
  Order order = 0;
  std::vector<Prime> computed_pi;
  bool pi_matches = false;
  std::vector<ClaimCheck> claims;
  bool gamma_connected = false;
  bool all_match = false;
};

/// Recomputes every claim of a computable item. Throws InvalidArgument for
/// reference-only items.
AppendixCheck verify_appendix_item(AppendixItem const& item);

}  // namespace sgraph

#endif  // SGRAPH_APPENDIX_HPP
