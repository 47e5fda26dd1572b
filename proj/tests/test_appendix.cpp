#include <catch2/catch_amalgamated.hpp>

#include "sgraph/appendix.hpp"
#include "sgraph/arith.hpp"
#include "sgraph/errors.hpp"
#include "sgraph/sylow_graph.hpp"

using namespace sgraph;

namespace {

// Number of Sylow p-subgroups of a group with cyclic Sylow p-subgroup of
// order p, counted from elements of order p (each subgroup holds p - 1).
Order count_sylow_of_prime_order(PermGroup const& G, Prime p) {
  Order n = 0;
  for (auto const& g : G.elements()) {
    n += element_order(g) == p;
  }
  return n / (p - 1);
}

}  // namespace

TEST_CASE("appendix table shape", "[appendix]") {
  auto const& items = appendix_items();
  REQUIRE(items.size() == 26);
  for (std::size_t i = 0; i < items.size(); ++i) {
    CHECK(items[i].number == static_cast<int>(i + 1));
    CHECK(std::is_sorted(items[i].pi.begin(), items[i].pi.end()));
    CHECK(items[i].computable == (i < 5));
  }
  CHECK(items[0].name == "M11");
  CHECK(items[25].name == "M");
}

TEST_CASE("appendix lookup", "[appendix]") {
  CHECK(find_appendix_item("m11")->number == 1);
  CHECK(find_appendix_item("J2")->number == 5);
  CHECK(find_appendix_item("26")->name == "M");
  CHECK(find_appendix_item("M")->number == 26);
  CHECK(find_appendix_item("H_5")->name == "HS");
  CHECK(find_appendix_item("HS")->number == 7);
  CHECK(find_appendix_item("on")->name == "O'N");
  CHECK_FALSE(find_appendix_item("Fi25").has_value());
  CHECK_FALSE(find_appendix_item("0").has_value());
}

TEST_CASE("printed inconsistencies are reported, not corrected", "[appendix]") {
  CHECK(find_appendix_item("M11")->inconsistencies().empty());
  CHECK(find_appendix_item("J2")->inconsistencies().empty());
  auto const j3 = *find_appendix_item("J3");
  CHECK(std::find_if(j3.claims.begin(), j3.claims.end(),
                     [](DivisibilityClaim c) { return c.divisor == 2 && c.at == 7; }) != j3.claims.end());
  CHECK_FALSE(j3.inconsistencies().empty());
  CHECK_FALSE(find_appendix_item("B")->inconsistencies().empty());
  CHECK_FALSE(find_appendix_item("M")->inconsistencies().empty());
  CHECK_FALSE(find_appendix_item("HS")->inconsistencies().empty());
}

// The listed claim "2 | nc_index(11)" fails in both M11 and M12: the Sylow
// 11-normalizer is 11:5 in each, so nc_index(11) = 5. The element count
// below confirms |N| = 55 without any subgroup machinery.
TEST_CASE("M11 item recomputed", "[appendix][sporadic]") {
  auto const check = verify_appendix_item(*find_appendix_item("M11"));
  CHECK(check.order == 7920);
  CHECK(check.pi_matches);
  CHECK(check.gamma_connected);
  REQUIRE(check.claims.size() == 4);
  std::vector<bool> holds;
  for (auto const& c : check.claims) {
    holds.push_back(c.holds);
    CHECK(c.holds == (c.nc_index % c.claim.divisor == 0));
  }
  CHECK(holds == std::vector<bool>{true, true, false, true});
  CHECK(check.claims[2].nc_index == 5);
  CHECK_FALSE(check.all_match);

  auto const G = appendix_group(*find_appendix_item("M11"));
  CHECK(count_sylow_of_prime_order(G, 11) == 144);  // |N| = 7920 / 144 = 55
}

TEST_CASE("M12 item recomputed", "[appendix][sporadic]") {
  auto const check = verify_appendix_item(*find_appendix_item("M12"));
  CHECK(check.order == 95040);
  REQUIRE(check.claims.size() == 4);
  CHECK(check.claims[0].holds);
  CHECK(check.claims[1].holds);
  CHECK_FALSE(check.claims[2].holds);
  CHECK(check.claims[2].nc_index == 5);
  CHECK(check.claims[3].holds);
  CHECK(check.gamma_connected);
  auto const G = appendix_group(*find_appendix_item("M12"));
  CHECK(count_sylow_of_prime_order(G, 11) == 1728);  // |N| = 95040 / 1728 = 55
}

TEST_CASE("reference-only items are not computed", "[appendix]") {
  CHECK_THROWS_AS(verify_appendix_item(*find_appendix_item("M")), InvalidArgument);
  CHECK_THROWS_AS(appendix_group(*find_appendix_item("Co1")), InvalidArgument);
  CHECK(appendix_group(*find_appendix_item("J1")).order() == 175560);
}
