#include <doctest.h>

#include "latnet/errors.hpp"
#include "support/support.hpp"

using namespace latnet;

namespace {

const ConceptLattice& example_lattice() {
  static const ConceptLattice lat =
      enumerate_concepts(parse_context(support::fixture("table2.cxt")));
  return lat;
}

}  // namespace

TEST_CASE("the running example has exactly 23 concepts in lectic order") {
  const ConceptLattice& lat = example_lattice();
  REQUIRE(lat.concepts.size() == 23);
  for (std::size_t i = 0; i + 1 < lat.concepts.size(); ++i)
    CHECK(lectic_less(lat.concepts[i].intent, lat.concepts[i + 1].intent));
  // Top first, bottom last.
  CHECK(lat.concepts.front().extent == full_bits(32));
  CHECK(lat.concepts.back().intent == full_bits(5));
}

TEST_CASE("every enumerated pair is a closed concept") {
  const ConceptLattice& lat = example_lattice();
  for (const Concept& c : lat.concepts) {
    CHECK(derive_intent(lat.context, c.extent) == c.intent);
    CHECK(derive_extent(lat.context, c.intent) == c.extent);
  }
}

TEST_CASE("the lectic indexing makes the order matrix lower triangular") {
  const ConceptLattice& lat = example_lattice();
  for (int i = 0; i < 23; ++i)
    for (int j = 0; j < 23; ++j)
      if (lat.leq(i, j)) CHECK(i >= j);
}

TEST_CASE("concept 10 is the join of constraints e2 and e5") {
  const ConceptLattice& lat = example_lattice();
  const Concept& c10 = lat.concepts[9];
  CHECK(bit_members(c10.intent) == std::vector<int>{1, 4});
  const Bits expected = object_set(lat.context, {"(t,f,f,f,f)", "(t,f,f,t,t)",
                                                 "(f,f,t,t,f)", "(f,t,t,t,f)",
                                                 "(t,t,t,t,f)"});
  CHECK(c10.extent == expected);
}

TEST_CASE("meets and joins land on the expected concepts") {
  const ConceptLattice& lat = example_lattice();
  CHECK(concept_meet(lat, {5, 8}) == 13);   // C_6 meet C_9 = C_14
  CHECK(concept_join(lat, {15, 19}) == 7);  // C_16 join C_20 = C_8
  // Meet and join of a single concept is itself.
  for (int i = 0; i < 23; ++i) {
    CHECK(concept_meet(lat, {i}) == i);
    CHECK(concept_join(lat, {i}) == i);
  }
  CHECK_THROWS_AS(concept_meet(lat, {}), InputError);
  CHECK_THROWS_AS(concept_join(lat, {23}), InputError);
}

TEST_CASE("meet and join satisfy the lattice laws on the example") {
  const ConceptLattice& lat = example_lattice();
  for (int i = 0; i < 23; i += 3)
    for (int j = 0; j < 23; j += 4) {
      const int m = concept_meet(lat, {i, j});
      CHECK(lat.leq(m, i));
      CHECK(lat.leq(m, j));
      const int v = concept_join(lat, {i, j});
      CHECK(lat.leq(i, v));
      CHECK(lat.leq(j, v));
    }
}

TEST_CASE("constraint generators sit at the attribute concepts") {
  const auto gens = attribute_generators(example_lattice());
  CHECK(gens[1] == std::vector<int>{4});   // C_2 generated by e5
  CHECK(gens[2] == std::vector<int>{3});   // C_3 generated by e4
  CHECK(gens[4] == std::vector<int>{2});   // C_5 generated by e3
  CHECK(gens[8] == std::vector<int>{1});   // C_9 generated by e2
  CHECK(gens[16] == std::vector<int>{0});  // C_17 generated by e1
  int total = 0;
  for (const auto& g : gens) total += static_cast<int>(g.size());
  CHECK(total == 5);
}

TEST_CASE("tuple generators partition the objects") {
  const ConceptLattice& lat = example_lattice();
  const auto gens = object_generators(lat);
  int total = 0;
  for (const auto& g : gens) total += static_cast<int>(g.size());
  CHECK(total == 32);
  // Spot checks including the concepts where a naive reading goes wrong.
  const auto names = [&](int c) {
    std::vector<std::string> out;
    for (int g : gens[c]) out.push_back(lat.context.objects.name(g));
    return out;
  };
  CHECK(names(0) == std::vector<std::string>{"(t,f,t,f,t)"});
  CHECK(names(18) == std::vector<std::string>{"(f,f,f,t,f)", "(f,t,f,f,t)",
                                              "(f,t,f,t,f)"});
  CHECK(names(19) == std::vector<std::string>{"(f,f,f,f,f)", "(f,t,f,f,f)",
                                              "(f,t,f,t,t)"});
  CHECK(names(20) == std::vector<std::string>{"(f,f,t,f,t)", "(f,f,t,t,t)"});
}

TEST_CASE("covers form the transitive reduction with 48 edges") {
  const ConceptLattice& lat = example_lattice();
  int edges = 0;
  for (const auto& c : lat.covers) edges += static_cast<int>(c.size());
  CHECK(edges == 48);
  // C_8 covers C_4, C_6, C_7 (successor sense: covered concepts above).
  CHECK(lat.covers[7] == std::vector<int>{3, 5, 6});
  // A cover pair is strictly below with nothing in between.
  for (int i = 0; i < 23; ++i)
    for (int j : lat.covers[i]) {
      CHECK(lat.leq(i, j));
      CHECK(i != j);
      for (int k = 0; k < 23; ++k)
        if (k != i && k != j) {
          const bool between = lat.leq(i, k) && lat.leq(k, j);
          CHECK_FALSE(between);
        }
    }
}

TEST_CASE("concept_of_objects closes a set of tuples") {
  const ConceptLattice& lat = example_lattice();
  const Bits sols = object_set(lat.context, {"(f,f,t,t,f)", "(f,t,t,t,f)"});
  const Concept c = concept_of_objects(lat.context, sols);
  CHECK(c.extent == sols);
  CHECK(c.intent == full_bits(5));
  CHECK(lat.index_of_intent(c.intent) == 22);
  // {e2,e3} is the closed intent of C_13; {e1} alone is not closed because
  // every tuple with the e1 attribute also carries e3.
  Bits e2e3(5);
  e2e3.set(1).set(2);
  CHECK(lat.index_of_intent(e2e3) == 12);
  Bits e1(5);
  e1.set(0);
  CHECK(lat.index_of_intent(e1) == -1);
}

TEST_CASE("degenerate contexts have a single concept") {
  const FormalContext empty = make_context(Poset::discrete({}), Poset::discrete({}), {});
  const ConceptLattice lat = enumerate_concepts(empty);
  REQUIRE(lat.concepts.size() == 1);
  CHECK(lat.covers[0].empty());

  const FormalContext one =
      make_context(Poset::discrete({"g"}), Poset::discrete({"m"}), {{0, 0}});
  const ConceptLattice single = enumerate_concepts(one);
  REQUIRE(single.concepts.size() == 1);
  CHECK(single.leq(0, 0));
}
