#include <doctest.h>

#include <algorithm>

#include "latnet/errors.hpp"
#include "support/support.hpp"

using namespace latnet;

TEST_CASE("the running example is a valid network") {
  CHECK(validate_network(support::example_network()).empty());
}

TEST_CASE("declaring e2 <= e1 on the example breaks validation") {
  DistributedRelation net = support::example_network();
  net.signature.preorder = Poset::from_pairs(net.signature.names, {{1, 0}}, false);
  const ValidationReport report = validate_network(net);
  REQUIRE(report.size() == 1);
  CHECK(report[0].find("e2 <= e1") != std::string::npos);
  CHECK(report[0].find("not contained") != std::string::npos);
}

TEST_CASE("scheme shape violations are reported per constraint") {
  DistributedRelation net = support::example_network();
  net.rels[0] = make_relation({0, 1}, {{0, 0}});
  const ValidationReport report = validate_network(net);
  REQUIRE(report.size() == 1);
  CHECK(report[0] == "constraint 'e1': relation arity differs from scheme");
}

TEST_CASE("a preorder pair needs the larger scheme inside the smaller one") {
  DistributedRelation net = support::example_network();
  // e4 <= e2 is scheme-incompatible: tau(e2) = {a1,a2,a3} not inside {a2,a5}.
  net.signature.preorder = Poset::from_pairs(net.signature.names, {{3, 1}}, false);
  const ValidationReport report = validate_network(net);
  REQUIRE(report.size() == 1);
  CHECK(report[0].find("e4 <= e2") != std::string::npos);
  CHECK(report[0].find("scheme") != std::string::npos);
}

TEST_CASE("relations over ordered values must be closed below") {
  DistributedRelation net;
  net.domain.sorts = {"x"};
  net.domain.values = {Poset::from_pairs({"lo", "hi"}, {{0, 1}})};
  net.signature.names = {"e"};
  net.signature.preorder = Poset::discrete({"e"}, false);
  net.signature.tau = {{0}};
  net.rels = {make_relation({0}, {{1}})};
  const ValidationReport report = validate_network(net);
  REQUIRE(report.size() == 1);
  CHECK(report[0].find("closed below") != std::string::npos);
  net.rels[0] = complete_down(net.domain, net.rels[0]);
  CHECK(validate_network(net).empty());
}

TEST_CASE("satisfaction checks scheme coverage and projection membership") {
  const DistributedRelation net = support::example_network();
  const Tuple sol{{0, 1, 2, 3, 4}, {0, 0, 1, 1, 0}};  // (f,f,t,t,f)
  for (int e = 0; e < 5; ++e) CHECK(satisfies(net, sol, e));
  const Tuple bad{{0, 1, 2, 3, 4}, {1, 0, 0, 0, 0}};  // (t,f,f,f,f) fails e1
  CHECK_FALSE(satisfies(net, bad, 0));
  CHECK(satisfies(net, bad, 1));
  const Tuple partial{{0}, {0}};  // covers only a1
  CHECK(satisfies(net, partial, 0));
  CHECK_FALSE(satisfies(net, partial, 1));  // scheme not covered
  CHECK_THROWS_AS(satisfies(net, sol, 5), InputError);
}

TEST_CASE("the full-tuple satisfaction context reproduces the fixture") {
  const FormalContext ctx =
      satisfaction_context(support::example_network(), TupleUniverse::Full);
  const FormalContext fixture = parse_context(support::fixture("table2.cxt"));
  CHECK(context_equal(ctx, fixture));
  int crosses = 0;
  for (const auto& row : ctx.rows) crosses += static_cast<int>(row.count());
  CHECK(crosses == 92);
}

TEST_CASE("the all-tuples context ranges over every sub-arity") {
  const FormalContext ctx =
      satisfaction_context(support::example_network(), TupleUniverse::All);
  CHECK(ctx.objects.size() == 243);  // product of (2+1) over five sorts
  CHECK(validate_context(ctx).empty());
  // The empty tuple is the top object and satisfies nothing.
  const int top = ctx.objects.index_of("():{}");
  REQUIRE(top >= 0);
  CHECK(ctx.rows[top].none());
  for (int g = 0; g < 243; ++g) CHECK(ctx.objects.leq(g, top));
}

TEST_CASE("the all-tuples universe respects the cap") {
  CHECK_THROWS_AS(
      satisfaction_context(support::example_network(), TupleUniverse::All, 100),
      CapacityError);
}

TEST_CASE("contexts and single-sorted networks encode each other") {
  const FormalContext ctx = parse_context(support::fixture("table2.cxt"));
  const DistributedRelation net = as_single_sorted(ctx);
  CHECK(net.domain.sorts == std::vector<std::string>{"g"});
  CHECK(validate_network(net).empty());
  CHECK(context_equal(to_context(net), ctx));
}

TEST_CASE("to_context rejects networks that are not single-sorted encodings") {
  CHECK_THROWS_AS(to_context(support::example_network()), InputError);
}

TEST_CASE("satisfaction respects meronymy and the constraint preorder") {
  support::Rng rng(4242);
  for (int it = 0; it < 50; ++it) {
    const DistributedRelation net = support::random_network(rng, 3, 3, 4, false, true);
    const Relation full = power(net.domain, full_arity(net.domain));
    for (const auto& values : full.tuples) {
      const Tuple y{full.arity, values};
      for (std::size_t d = 0; d < net.rels.size(); ++d)
        for (std::size_t e = 0; e < net.rels.size(); ++e)
          if (net.signature.preorder.leq(static_cast<int>(d), static_cast<int>(e)) &&
              satisfies(net, y, static_cast<int>(d)))
            CHECK(satisfies(net, y, static_cast<int>(e)));
    }
  }
}
