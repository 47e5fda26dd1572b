#include "sgraph/appendix.hpp"

#include <algorithm>
#include <cctype>

#include "sgraph/constructors.hpp"
#include "sgraph/errors.hpp"
#include "sgraph/sylow_graph.hpp"

namespace sgraph {

namespace {

using C = DivisibilityClaim;

std::vector<AppendixItem> build_items() {
  // Transcribed as printed; inconsistencies() lists the known slips.
  std::vector<AppendixItem> items{
      {1, "M11", "M11", {2, 3, 5, 11}, {C{2, 3}, C{2, 5}, C{2, 11}, C{5, 11}}, true},
      {2, "M12", "M12", {2, 3, 5, 11}, {C{2, 3}, C{2, 5}, C{2, 11}, C{5, 11}}, true},
      {3, "J1", "J1", {2, 3, 5, 7, 11, 19}, {C{2, 3}, C{2, 5}, C{3, 7}, C{3, 19}, C{5, 11}}, true},
      {4, "M22", "M22", {2, 3, 5, 7, 11}, {C{2, 3}, C{2, 5}, C{3, 7}, C{5, 11}}, true},
      {5, "J2", "J2", {2, 3, 5, 7}, {C{2, 3}, C{2, 5}, C{3, 7}}, true},
      {6, "M23", "M23", {2, 3, 5, 7, 11, 23}, {C{2, 3}, C{2, 5}, C{3, 7}, C{5, 11}, C{11, 23}}},
      {7, "HS", "H_5", {2, 3, 5, 7, 11}, {C{2, 3}, C{2, 5}, C{3, 7}, C{5, 11}}},
      {8, "J3", "J3", {2, 3, 5, 17, 19}, {C{2, 3}, C{2, 5}, C{2, 7}, C{3, 19}}},
      {9, "M24", "M24", {2, 3, 5, 17, 19}, {C{2, 3}, C{2, 5}, C{2, 7}, C{3, 19}}},
      {10, "McL", "McL", {2, 3, 5, 7, 11}, {C{2, 3}, C{2, 5}, C{3, 7}, C{5, 11}}},
      {11, "He", "He", {2, 3, 5, 7, 17}, {C{2, 3}, C{2, 5}, C{2, 17}, C{3, 7}}},
      {12, "Ru", "Ru", {2, 3, 5, 7, 13, 29}, {C{2, 3}, C{2, 5}, C{3, 7}, C{3, 13}, C{7, 29}}},
      {13, "Suz", "Suz", {2, 3, 5, 7, 11, 13},
       {C{2, 3}, C{2, 5}, C{3, 7}, C{3, 13}, C{5, 11}}},
      {14, "O'N", "O'N", {2, 3, 5, 7, 11, 19, 31},
       {C{2, 3}, C{2, 5}, C{3, 7}, C{3, 19}, C{5, 11}, C{5, 31}}},
      {15, "Co3", "Co3", {2, 3, 5, 7, 11, 23}, {C{2, 3}, C{2, 5}, C{3, 7}, C{5, 11}, C{11, 23}}},
      {16, "Co2", "Co2", {2, 3, 5, 7, 11, 23}, {C{2, 3}, C{2, 5}, C{3, 7}, C{5, 11}, C{11, 23}}},
      {17, "Co1", "Co1", {2, 3, 5, 7, 11, 13, 23},
       {C{2, 3}, C{2, 5}, C{3, 7}, C{3, 13}, C{5, 11}, C{11, 23}}},
      {18, "Fi22", "Fi22", {2, 3, 5, 7, 11, 13},
       {C{2, 3}, C{2, 5}, C{3, 7}, C{3, 13}, C{5, 11}}},
      {19, "Fi24", "Fi24", {2, 3, 5, 7, 11, 13, 17, 23, 29},
       {C{2, 3}, C{2, 5}, C{2, 17}, C{3, 7}, C{3, 13}, C{5, 11}, C{7, 29}, C{11, 23}}},
      {20, "HN", "HN", {2, 3, 5, 7, 11, 19}, {C{2, 3}, C{2, 5}, C{3, 7}, C{3, 19}, C{5, 11}}},
      {21, "Ly", "Ly", {2, 3, 5, 7, 11, 31, 37, 67},
       {C{2, 3}, C{2, 5}, C{3, 7}, C{3, 37}, C{5, 11}, C{5, 31}, C{11, 37}}},
      {22, "Fi23", "Fi23", {2, 3, 5, 7, 11, 13, 17, 23},
       {C{2, 3}, C{2, 5}, C{2, 17}, C{3, 7}, C{3, 13}, C{5, 11}, C{11, 23}}},
      {23, "Th", "Th", {2, 3, 5, 7, 11, 13, 19, 31},
       {C{2, 3}, C{2, 5}, C{3, 7}, C{3, 13}, C{3, 19}, C{5, 31}}},
      {24, "J4", "J4", {2, 3, 5, 7, 11, 23, 29, 31, 37, 43},
       {C{2, 3}, C{2, 5}, C{3, 7}, C{3, 23}, C{3, 37}, C{5, 11}, C{5, 31}, C{7, 29}, C{7, 43}}},
      {25, "B", "B", {2, 3, 5, 7, 11, 13, 17, 19, 23, 31, 47},
       {C{2, 3}, C{2, 5}, C{2, 17}, C{3, 7}, C{3, 13}, C{3, 19}, C{3, 37}, C{5, 11}, C{5, 23},
        C{5, 31}, C{23, 47}}},
      {26, "M", "M", {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71},
       {C{2, 3}, C{2, 5}, C{2, 17}, C{3, 7}, C{3, 13}, C{3, 19}, C{3, 37}, C{5, 11}, C{5, 23},
        C{5, 31}, C{5, 41}, C{7, 71}, C{23, 47}, C{29, 59}}},
  };
  return items;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

std::vector<std::string> AppendixItem::inconsistencies() const {
  std::vector<std::string> out;
  auto in_pi = [this](Prime q) { return std::binary_search(pi.begin(), pi.end(), q); };
  for (auto const& c : claims) {
    if (!in_pi(c.at)) {
      out.push_back("claim " + std::to_string(c.divisor) + " | nc_index(" + std::to_string(c.at) +
                    ") refers to " + std::to_string(c.at) + ", which is not in the listed pi");
    }
    if (!in_pi(c.divisor)) {
      out.push_back("claim divisor " + std::to_string(c.divisor) + " is not in the listed pi");
    }
  }
  if (number == 7) {
    out.push_back("the table names this group H_5; the listed data are those of HS");
  }
  if (number == 9) {
    out.push_back("listed pi and claims repeat item 8 verbatim");
  }
  if (number == 22) {
    out.push_back("the prime set is labelled pi(Fi24) in the table");
  }
  return out;
}

std::vector<AppendixItem> const& appendix_items() {
  static std::vector<AppendixItem> const items = build_items();
  return items;
}

std::optional<AppendixItem> find_appendix_item(std::string_view name) {
  auto const key = lower(name);
  for (auto const& item : appendix_items()) {
    if (key == lower(item.name) || key == lower(item.printed) ||
        key == std::to_string(item.number) || (item.name == "O'N" && key == "on")) {
      return item;
    }
  }
  return std::nullopt;
}

PermGroup appendix_group(AppendixItem const& item) {
  if (item.name == "M11") return mathieu(11);
  if (item.name == "M12") return mathieu(12);
  if (item.name == "M22") return mathieu(22);
  if (item.name == "J1") return janko(1);
  if (item.name == "J2") return janko(2);
  throw InvalidArgument(item.name + " is reference data only; no constructor is shipped");
}

AppendixCheck verify_appendix_item(AppendixItem const& item) {
  AppendixCheck check;
  check.item = item;
  auto const G = appendix_group(item);
  check.order = G.order();
  auto const graph = sylow_graph(G);
  check.computed_pi = graph.vertices();
  check.pi_matches = check.computed_pi == item.pi;
  check.all_match = check.pi_matches;
  for (auto const& claim : item.claims) {
    ClaimCheck c{claim, 0, false};
    if (std::binary_search(check.computed_pi.begin(), check.computed_pi.end(), claim.at)) {
      c.nc_index = graph.at(claim.at).nc_index;
      c.holds = c.nc_index % claim.divisor == 0;
    }
    check.all_match = check.all_match && c.holds;
    check.claims.push_back(c);
  }
  check.gamma_connected = graph.is_connected(GraphVariant::Gamma);
  check.all_match = check.all_match && check.gamma_connected;
  return check;
}

}  // namespace sgraph
