#pragma once

#include <cstddef>
#include <vector>

#include "latnet/network.hpp"

namespace latnet {

// Full tuples satisfying every constraint. Deliberately the naive enumerate
// and filter, so it doubles as the oracle the interior is tested against.
Relation solution_set(const DistributedRelation&, std::size_t cap = kDefaultCap);

// Distribute a full-arity relation over a signature by projecting it onto
// each scheme.
DistributedRelation project_solution(const SortedDomain&, const Signature&,
                                     const Relation& full);

// Projections of the solution set: the largest network below the input with
// the same solutions, and the least one equivalent to it.
DistributedRelation interior(const DistributedRelation&, std::size_t cap = kDefaultCap);

// Same solutions over the same shape. Differing domains or signatures are an
// input error, not inequivalence.
bool equivalent(const DistributedRelation&, const DistributedRelation&,
                std::size_t cap = kDefaultCap);

// Per constraint, the tuples of the given relation that no solution projects
// onto. These are exactly what the interior removes.
std::vector<Relation> isolated_tuples(const DistributedRelation&,
                                      std::size_t cap = kDefaultCap);

}  // namespace latnet
