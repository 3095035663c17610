#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latnet/context.hpp"
#include "latnet/relation.hpp"

namespace latnet {

// Constraint names with a preorder and a scheme map. The scheme map must be
// antitone: a smaller constraint covers at least the sorts of a bigger one.
struct Signature {
  std::vector<std::string> names;
  Poset preorder;          // over the constraint names, antisymmetry not claimed
  std::vector<Arity> tau;  // scheme per constraint

  int index_of(const std::string& name) const;  // -1 when absent
};

bool signature_equal(const Signature&, const Signature&);

// A distributed relation: one relation per constraint, each over its scheme.
// Networks of constraints are the discrete-preorder special case.
struct DistributedRelation {
  SortedDomain domain;
  Signature signature;
  std::vector<Relation> rels;
};

// Reports scheme mismatches, value range breaches, relations not closed
// below, and preorder pairs whose antitone-scheme or projective-containment
// requirement fails. Empty report means the network is a valid diagram.
ValidationReport validate_network(const DistributedRelation&);

// x satisfies e when x covers the scheme of e and projects into its relation.
bool satisfies(const DistributedRelation&, const Tuple& x, int e);

enum class TupleUniverse {
  Full,  // tuples over the whole sort set, discrete object order
  All    // tuples over every sub-arity, ordered by meronymy; the empty tuple is top
};

FormalContext satisfaction_context(const DistributedRelation&, TupleUniverse,
                                   std::size_t cap = kDefaultCap);

// A context is the same thing as a single-sorted network whose constraints
// all cover the one sort: attributes become unary relations over the object
// poset. to_context inverts that encoding.
DistributedRelation as_single_sorted(const FormalContext&);
FormalContext to_context(const DistributedRelation&);

}  // namespace latnet
