#include <doctest.h>

#include <array>

#include "luttinger/abelian.hpp"
#include "luttinger/blocks.hpp"
#include "luttinger/coset_enum.hpp"
#include "luttinger/homcount.hpp"
#include "luttinger/json_io.hpp"
#include "luttinger/text_format.hpp"

using namespace luttinger;

TEST_CASE("catalog contents and recorded invariants") {
  auto names = builtin_names();
  CHECK(names.size() == 5);
  ManifoldBlock w = builtin("matsumoto_W");
  CHECK(w.euler == 4);
  CHECK(w.signature == -4);
  CHECK(w.find_marked("F").genus == 2);
  CHECK(w.flags.count("symplectic") == 1);

  ManifoldBlock wp = builtin("W_prime");
  CHECK(wp.euler == 10);
  CHECK(wp.signature == -6);
  CHECK(wp.flags.count("minimal") == 1);

  CHECK(builtin("block_C").euler == 0);
  CHECK(builtin("block_B").find_marked("G").genus == 2);
  CHECK(builtin("torus_T4").find_marked("T").genus == 1);
  for (const auto& n : names) CHECK_NOTHROW(builtin(n).validate());
}

TEST_CASE("unknown names list the catalog") {
  try {
    builtin("no_such_block");
    FAIL("expected an exception");
  } catch (const std::exception& e) {
    std::string msg = e.what();
    CHECK(msg.find("matsumoto_W") != std::string::npos);
    CHECK(msg.find("torus_T4") != std::string::npos);
  }
  CHECK_THROWS(builtin_presentation("no_such_presentation"));
}

TEST_CASE("blocks round-trip through JSON") {
  for (const auto& name : builtin_names()) {
    ManifoldBlock b = builtin(name);
    ManifoldBlock back = block_from_json(block_to_json(b));
    CHECK(back.name == b.name);
    CHECK(back.euler == b.euler);
    CHECK(back.signature == b.signature);
    CHECK(back.complement.same_presentation(b.complement));
    CHECK(back.marked == b.marked);
    CHECK(back.flags == b.flags);
    CHECK(back.notes == b.notes);
  }
}

TEST_CASE("4-torus fundamental group against a brute-force oracle") {
  Presentation z4 = closed_pi1(builtin("torus_T4"));
  auto counted = count_homomorphisms(z4, FiniteTarget::symmetric(3));
  REQUIRE(counted.has_value());

  // independent count of 4-tuples of pairwise commuting permutations in S3
  std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                              {0, 2, 1},
                                              {1, 0, 2},
                                              {1, 2, 0},
                                              {2, 0, 1},
                                              {2, 1, 0}}};
  auto commute = [&](int a, int b) {
    for (int i = 0; i < 3; ++i) {
      if (perms[a][perms[b][i]] != perms[b][perms[a][i]]) return false;
    }
    return true;
  };
  std::uint64_t oracle = 0;
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      for (int c = 0; c < 6; ++c) {
        for (int d = 0; d < 6; ++d) {
          if (commute(a, b) && commute(a, c) && commute(a, d) && commute(b, c) &&
              commute(b, d) && commute(c, d)) {
            ++oracle;
          }
        }
      }
    }
  }
  CHECK(*counted == oracle);
}

TEST_CASE("reference presentations abelianize as expected") {
  CHECK(abelianization(builtin_presentation("pi1_C")).to_string() == "Z^3");
  CHECK(abelianization(builtin_presentation("pi1_C_minus_T1")).to_string() == "Z^3");
  CHECK(abelianization(builtin_presentation("pi1_C_minus_T2")).to_string() == "Z^3");
  CHECK(abelianization(builtin_presentation("pi1_B")).to_string() == "Z^4");
}

TEST_CASE("assembled constructions") {
  ManifoldBlock r = construct_R();
  CHECK(r.euler == 8);
  CHECK(r.signature == -4);
  CHECK(abelianization(closed_pi1(r)).to_string() == "Z^2");

  ManifoldBlock p = construct_P();
  CHECK(abelianization(closed_pi1(p)).to_string() == "Z");

  EnumerationResult q = todd_coxeter(closed_pi1(construct_Q(2, 3, 1)));
  REQUIRE(q.is_finite());
  CHECK(q.order == 6);

  CHECK(standard_genus2_match(builtin("matsumoto_W"), builtin("block_B")).pairs.size() == 4);
}
