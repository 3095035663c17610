#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "latnet/network.hpp"

namespace latnet {

// A translation between sorted domains: a sort map f running source to
// target, with a value translation family running the opposite way. For a
// source arity U, the member phi_U turns a target tuple over f(U) into a
// source tuple over U, and the family must commute with projections.
struct DomainMorphism {
  enum class Family {
    Componentwise,  // induced by one value map per source sort
    Tabular,        // explicit total tables for declared arities only
    Projection      // target values decode to full source tuples
  };

  SortedDomain source;
  SortedDomain target;
  std::vector<int> sort_map;  // source sort index -> target sort index

  Family family = Family::Componentwise;

  // Componentwise: value_maps[a][w] is the source value at sort a when the
  // target tuple carries value w at sort f(a).
  std::vector<std::vector<int>> value_maps;

  // Tabular: per declared arity, a table keyed by target tuples over f(U).
  std::vector<std::pair<Arity, std::map<std::vector<int>, std::vector<int>>>> tables;

  // Projection: value v of the single target sort decodes to decode[v].
  std::vector<std::vector<int>> decode;

  Arity image_arity(const Arity& u) const;
  bool has_map(const Arity& u) const;
  std::vector<int> apply(const Arity& u, const std::vector<int>& target_values) const;
};

DomainMorphism componentwise_morphism(SortedDomain source, SortedDomain target,
                                      std::vector<int> sort_map,
                                      std::vector<std::vector<int>> value_maps);
DomainMorphism tabular_morphism(
    SortedDomain source, SortedDomain target, std::vector<int> sort_map,
    std::vector<std::pair<Arity, std::map<std::vector<int>, std::vector<int>>>> tables);

// The canonical morphism from a domain onto the single-sorted domain whose
// values are its full tuples; each phi_U is projection of the decoded tuple.
DomainMorphism projection_morphism(const SortedDomain&, std::size_t cap = kDefaultCap);

// Checks totality of tabular maps, monotonicity of every declared value
// translation, and commutation of the naturality squares, pointwise over
// enumerated target tuples. Empty report means the morphism is lawful.
ValidationReport validate_morphism(const DomainMorphism&, std::size_t cap = kDefaultCap);

// Moves a relation over the target domain back along the morphism. Each
// constraint e spawns one constraint (e, U) per source arity U whose image is
// exactly the scheme of e; its relation is the downward closure of the
// pointwise phi_U image (the closure is a no-op on discrete domains).
DistributedRelation direct_image(const DomainMorphism&, const DistributedRelation& over_target,
                                 std::size_t cap = kDefaultCap);

// Moves a relation over the source domain forward: same constraints, schemes
// pushed through f, relations replaced by phi preimages.
DistributedRelation inverse_image(const DomainMorphism&, const DistributedRelation& over_source,
                                  std::size_t cap = kDefaultCap);

}  // namespace latnet
