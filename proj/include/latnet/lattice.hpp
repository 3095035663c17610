#pragma once

#include <map>
#include <vector>

#include "latnet/context.hpp"

namespace latnet {

struct Concept {
  Bits extent;
  Bits intent;
};

// Concepts listed in lectic order of their intents, attribute 0 taken as the
// most significant digit. That makes the list index (plus one) the C_k
// numbering used by the table emitters. The top concept comes first, the
// bottom concept last.
struct ConceptLattice {
  FormalContext context;
  std::vector<Concept> concepts;
  std::vector<Bits> order;               // order[i].test(j) iff i <= j
  std::vector<std::vector<int>> covers;  // immediate successors, ascending

  bool leq(int i, int j) const { return order[i].test(j); }
  int index_of_intent(const Bits& intent) const;  // -1 when absent

  std::map<Bits, int> by_intent;
};

ConceptLattice enumerate_concepts(const FormalContext&);

// The concept generated by a set of objects: close the extent, derive the
// intent. Works on the bare context, no enumeration needed.
Concept concept_of_objects(const FormalContext&, const Bits& objects);

// Meet and join of a nonempty selection, returned as lattice indices.
// Meets intersect extents and hull the united intents; joins dually.
int concept_meet(const ConceptLattice&, const std::vector<int>& concepts);
int concept_join(const ConceptLattice&, const std::vector<int>& concepts);

// For each concept, the objects (resp. attributes) whose generated concept is
// exactly it. These are the two generator columns of the reporting tables.
std::vector<std::vector<int>> object_generators(const ConceptLattice&);
std::vector<std::vector<int>> attribute_generators(const ConceptLattice&);

}  // namespace latnet
