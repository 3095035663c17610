#pragma once

#include <random>
#include <string>
#include <vector>

#include "latnet/interior.hpp"
#include "latnet/io.hpp"
#include "latnet/morphism.hpp"
#include "latnet/participation.hpp"

namespace latnet::support {

std::string fixture_path(const std::string& name);
std::string fixture(const std::string& name);

// The running example: five boolean sorts a1..a5, constraints e1..e5 over
// {a1}, {a1,a2,a3}, {a1,a4}, {a2,a5}, {a3,a4,a5}, discrete preorder.
DistributedRelation example_network();

// Deterministic random structures for the property suites. Everything is
// driven by an explicitly seeded engine so failures replay exactly.
using Rng = std::mt19937_64;

Poset random_poset(Rng&, int max_size, bool discrete);
FormalContext random_context(Rng&, int max_objects, int max_attributes);
SortedDomain random_domain(Rng&, int max_sorts, int max_values, bool discrete);
Relation random_relation(Rng&, const SortedDomain&, const Arity&);
Arity random_arity(Rng&, const SortedDomain&);

// Always passes validate_network. Preorder pairs, when requested, are made
// lawful by widening schemes and patching relations rather than by rejection.
DistributedRelation random_network(Rng&, int max_sorts, int max_values,
                                   int max_constraints, bool discrete,
                                   bool with_preorder);

// Brute-force solution set: loops the full tuple space and re-checks every
// constraint by hand, sharing no code with the library's derivations.
std::vector<std::vector<int>> brute_solutions(const DistributedRelation&);

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout with stderr folded in
};
CliResult run_cli(const std::string& args);

}  // namespace latnet::support
