#pragma once

#include <cstddef>
#include <vector>

#include "latnet/domain.hpp"

namespace latnet {

inline constexpr std::size_t kDefaultCap = 1000000;

// Finite relation over an arity. Tuples are value-index vectors, kept sorted
// lexicographically and deduplicated, which makes containment a binary search
// and equality plain vector equality.
struct Relation {
  Arity arity;
  std::vector<std::vector<int>> tuples;
};

Relation make_relation(Arity arity, std::vector<std::vector<int>> tuples);
bool relation_contains(const Relation&, const std::vector<int>& values);
bool relation_equal(const Relation&, const Relation&);

// Full tuple space over an arity, enumerated lexicographically (last position
// fastest). Throws CapacityError when the count would exceed cap.
std::size_t power_size(const SortedDomain&, const Arity&, std::size_t cap);
Relation power(const SortedDomain&, const Arity&, std::size_t cap = kDefaultCap);

std::vector<int> project_values(const Arity& from, const std::vector<int>& values,
                                const Arity& onto);
Tuple project_tuple(const Tuple&, const Arity& onto);

// Meronymy order on tuples: x is a part of y when y covers at least the arity
// of x and the projection of y lies below x componentwise.
bool tuple_leq(const SortedDomain&, const Tuple& y, const Tuple& x);

// Projective containment of relations: s, over the wider arity, projects into
// r. This is the hom order distributed relations live in.
bool projective_containment(const Relation& s, const Relation& r);

// Infimum under projective containment: tuples over the united arity whose
// every projection hits the corresponding relation.
Relation natural_join(const SortedDomain&, const std::vector<Relation>&,
                      std::size_t cap = kDefaultCap);

Relation complete_down(const SortedDomain&, const Relation&);
bool closed_below(const SortedDomain&, const Relation&);

}  // namespace latnet
