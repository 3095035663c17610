#include <doctest.h>

#include "latnet/errors.hpp"
#include "support/support.hpp"

using namespace latnet;

namespace {

// Two-element chains on both sides with incidence {(lo,m0)} closed upward:
// lo <= hi among objects, m0 <= m1 among attributes.
FormalContext chain_context() {
  return make_context(Poset::from_pairs({"lo", "hi"}, {{0, 1}}),
                      Poset::from_pairs({"m0", "m1"}, {{0, 1}}),
                      {{0, 0}, {0, 1}, {1, 1}});
}

}  // namespace

TEST_CASE("make_context rejects out-of-range incidence") {
  CHECK_THROWS_AS(
      make_context(Poset::discrete({"g"}), Poset::discrete({"m"}), {{0, 1}}),
      InputError);
}

TEST_CASE("a closed ordered context validates cleanly") {
  CHECK(validate_context(chain_context()).empty());
}

TEST_CASE("validation reports the missing cells of an unclosed context") {
  // hi has m0 but the smaller object lo misses it.
  const FormalContext ctx =
      make_context(Poset::from_pairs({"lo", "hi"}, {{0, 1}}),
                   Poset::discrete({"m0"}), {{1, 0}});
  const ValidationReport report = validate_context(ctx);
  REQUIRE(report.size() == 1);
  CHECK(report[0] == "incidence not order-closed: expected (lo, m0)");
}

TEST_CASE("validation reports attribute-side closure breaches") {
  const FormalContext ctx =
      make_context(Poset::discrete({"g"}),
                   Poset::from_pairs({"m0", "m1"}, {{0, 1}}), {{0, 0}});
  const ValidationReport report = validate_context(ctx);
  REQUIRE(report.size() == 1);
  CHECK(report[0] == "incidence not order-closed: expected (g, m1)");
}

TEST_CASE("claimed antisymmetry is checked on both orders") {
  const Poset loop = Poset::from_pairs({"x", "y"}, {{0, 1}, {1, 0}});
  const FormalContext ctx = make_context(loop, Poset::discrete({"m"}), {});
  const ValidationReport report = validate_context(ctx);
  REQUIRE(report.size() == 1);
  CHECK(report[0].find("antisymmetry") != std::string::npos);
}

TEST_CASE("derivation on the running example meets expectations") {
  const FormalContext ctx = parse_context(support::fixture("table2.cxt"));
  const Bits sols = object_set(ctx, {"(f,f,t,t,f)", "(f,t,t,t,f)"});
  CHECK(derive_intent(ctx, sols) == full_bits(5));
  CHECK(derive_extent(ctx, full_bits(5)) == sols);
}

TEST_CASE("derivations form a Galois connection on a fixed context") {
  const FormalContext ctx = chain_context();
  for (unsigned gs = 0; gs < 4; ++gs)
    for (unsigned ms = 0; ms < 4; ++ms) {
      Bits phi(2, gs), psi(2, ms);
      const bool left = psi.is_subset_of(derive_intent(ctx, phi));
      const bool right = phi.is_subset_of(derive_extent(ctx, psi));
      CHECK(left == right);
    }
}

TEST_CASE("closures are idempotent and extensive") {
  const FormalContext ctx = chain_context();
  for (unsigned s = 0; s < 4; ++s) {
    const Bits phi(2, s);
    const Bits once = extent_closure(ctx, phi);
    CHECK(phi.is_subset_of(once));
    CHECK(extent_closure(ctx, once) == once);
    const Bits hull = intent_hull(ctx, phi);
    CHECK(phi.is_subset_of(hull));
    CHECK(intent_hull(ctx, hull) == hull);
  }
}

TEST_CASE("name lookups reject unknown names") {
  const FormalContext ctx = chain_context();
  CHECK_THROWS_AS(object_set(ctx, {"nope"}), InputError);
  CHECK_THROWS_AS(attribute_set(ctx, {"nope"}), InputError);
}

TEST_CASE("context images move incidence along an object map") {
  // Collapse both objects of the chain onto one.
  const FormalContext ctx = chain_context();
  const Poset one = Poset::discrete({"o"});
  const FormalContext direct = context_direct_image({0, 0}, one, ctx);
  CHECK(direct.objects.size() == 1);
  CHECK(direct.incident(0, 0));
  CHECK(direct.incident(0, 1));

  const FormalContext back = context_inverse_image({0, 0}, ctx.objects, direct);
  CHECK(back.objects == ctx.objects);
  // The round trip can only grow incidence.
  for (int g = 0; g < 2; ++g)
    CHECK(ctx.rows[g].is_subset_of(back.rows[g]));
}

TEST_CASE("non-monotone object maps are rejected") {
  const FormalContext ctx = chain_context();
  const Poset target = Poset::from_pairs({"p", "q"}, {{0, 1}});
  // lo <= hi but the map sends lo above hi.
  CHECK_THROWS_AS(context_direct_image({1, 0}, target, ctx), InputError);
  CHECK_THROWS_AS(context_inverse_image({1, 0}, target, ctx), InputError);
}
