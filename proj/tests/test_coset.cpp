#include <doctest.h>

#include <set>

#include "luttinger/coset_enum.hpp"
#include "luttinger/text_format.hpp"

using namespace luttinger;

namespace {

// brute-force Cayley oracle: size of the permutation group generated by the
// coset action, computed by plain orbit closure over composition
std::uint64_t permutation_group_order(const std::vector<std::vector<std::uint32_t>>& gens) {
  std::set<std::vector<std::uint32_t>> elements;
  if (gens.empty()) return 1;
  std::vector<std::uint32_t> id(gens[0].size());
  for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
  std::vector<std::vector<std::uint32_t>> frontier = {id};
  elements.insert(id);
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        std::vector<std::uint32_t> q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = g[p[i]];
        if (elements.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return elements.size();
}

void check_against_oracle(const std::string& pres, std::uint64_t expected_order) {
  CAPTURE(pres);
  Presentation p = parse_presentation(pres);
  EnumerationResult r = todd_coxeter(p);
  REQUIRE(r.is_finite());
  CHECK(r.order == expected_order);
  // the regular action is faithful: its closure has exactly `order` elements
  CHECK(permutation_group_order(coset_action(p)) == expected_order);
}

}  // namespace

TEST_CASE("cyclic group of order five") {
  EnumerationResult r = todd_coxeter(parse_presentation("< a | a^5 >"), 100);
  REQUIRE(r.is_finite());
  CHECK(r.order == 5);
}

TEST_CASE("symmetric group S3 from the Coxeter presentation") {
  EnumerationResult r = todd_coxeter(parse_presentation("< a, b | a^2, b^2, (a*b)^3 >"));
  REQUIRE(r.is_finite());
  CHECK(r.order == 6);
}

TEST_CASE("infinite groups exhaust the cap") {
  EnumerationResult r = todd_coxeter(parse_presentation("< a | >"), 500);
  CHECK(!r.is_finite());
  CHECK(r.cap == 500);

  r = todd_coxeter(parse_presentation("< a, b | [a,b] >"), 500);
  CHECK(!r.is_finite());
}

TEST_CASE("result does not depend on the cap once the table closes") {
  Presentation p = parse_presentation("< a, b | a^2, b^2, (a*b)^3 >");
  EnumerationResult small = todd_coxeter(p, 1'000);
  EnumerationResult large = todd_coxeter(p, 50'000);
  REQUIRE(small.is_finite());
  REQUIRE(large.is_finite());
  CHECK(small.order == large.order);
}

TEST_CASE("corpus of twenty known group orders against the Cayley oracle") {
  // cyclic
  check_against_oracle("< a | a >", 1);
  check_against_oracle("< a | a^2 >", 2);
  check_against_oracle("< a | a^3 >", 3);
  check_against_oracle("< a | a^4 >", 4);
  check_against_oracle("< a | a^5 >", 5);
  check_against_oracle("< a | a^7 >", 7);
  check_against_oracle("< a | a^8 >", 8);
  check_against_oracle("< a | a^24 >", 24);
  // dihedral D_n of order 2n
  check_against_oracle("< a, b | a^3, b^2, (a*b)^2 >", 6);
  check_against_oracle("< a, b | a^4, b^2, (a*b)^2 >", 8);
  check_against_oracle("< a, b | a^5, b^2, (a*b)^2 >", 10);
  check_against_oracle("< a, b | a^6, b^2, (a*b)^2 >", 12);
  // symmetric groups as Coxeter quotients
  check_against_oracle("< a, b | a^2, b^2, (a*b)^3 >", 6);
  check_against_oracle("< a, b | a^2, b^3, (a*b)^4 >", 24);
  // direct sums Z/a + Z/b
  check_against_oracle("< a, b | a^2, b^2, [a,b] >", 4);
  check_against_oracle("< a, b | a^2, b^3, [a,b] >", 6);
  check_against_oracle("< a, b | a^2, b^4, [a,b] >", 8);
  check_against_oracle("< a, b | a^3, b^3, [a,b] >", 9);
  check_against_oracle("< a, b | a^3, b^4, [a,b] >", 12);
  // quaternion group
  check_against_oracle("< a, b | a^4, a^2*b^-2, b^-1*a*b*a >", 8);
}

TEST_CASE("work and live coset accounting") {
  EnumerationResult r = todd_coxeter(parse_presentation("< a | a^5 >"), 100);
  CHECK(r.live_cosets == 5);
  CHECK(r.work >= 5);
}
