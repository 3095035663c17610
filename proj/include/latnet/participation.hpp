#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latnet/lattice.hpp"
#include "latnet/network.hpp"

namespace latnet {

// A member set whose inclusion into the lattice has a coadjoint: every
// concept d owns a greatest member below it, coadjoint[d]. Member sets
// without that property are rejected at construction, not repaired.
struct SubLattice {
  std::vector<int> members;    // ascending concept indices
  std::vector<int> coadjoint;  // per concept, the greatest member below it
};

SubLattice make_sublattice(const ConceptLattice&, std::vector<int> members);
SubLattice principal_ideal(const ConceptLattice&, int c);

// gamma and mu: the concept generated by one object, and the concept an
// attribute pins from above.
int object_concept(const ConceptLattice&, int g);
int attribute_concept(const ConceptLattice&, int m);

// Incidence filtered through a sublattice: g relates to m when some member p
// sits between the object concept of g and the attribute concept of m.
// Taking every concept as member reproduces the original incidence; taking
// the bottom's principal ideal keeps only rows that generate the bottom.
FormalContext participation_context(const FormalContext&, const ConceptLattice&,
                                    const SubLattice&);

// The context relating every full tuple to every constraint name exactly when
// the tuple is a solution. This is what the bottom-ideal participation
// context of a satisfaction lattice collapses to.
FormalContext solution_indicator_context(const SortedDomain&, const Relation& solutions,
                                         const std::vector<std::string>& constraint_names,
                                         std::size_t cap = kDefaultCap);

}  // namespace latnet
