#pragma once

#include <cstddef>
#include <string>

#include "latnet/lattice.hpp"
#include "latnet/morphism.hpp"

namespace latnet {

// JSON network documents. Parsing is tolerant of scheme column order but the
// emitter always writes the canonical form: sorted keys, schemes in domain
// order, tuples ascending, order pairs as the non-reflexive closure. Emitting
// a parsed canonical document reproduces it byte for byte.
DistributedRelation parse_network(const std::string& text);
std::string emit_network(const DistributedRelation&);

// Plain-text context files: "B", a blank line, the two counts, a blank line,
// object names, attribute names, then one .X row per object.
FormalContext parse_context(const std::string& text);
std::string emit_context(const FormalContext&);

DomainMorphism parse_morphism(const std::string& text);
std::string emit_morphism(const DomainMorphism&);

struct LatticeTables {
  std::string generators;  // concept, tuple generators, constraint generators
  std::string successors;  // concept, immediate successors
  std::string order;       // full leq matrix, X and . cells
};
LatticeTables emit_lattice_tables(const ConceptLattice&);

std::string emit_dot(const ConceptLattice&);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Parse, optionally complete every relation downward, then validate; a
// non-empty report is thrown as ValidationError.
DistributedRelation load_network(const std::string& path, bool complete_down_first,
                                 std::size_t cap = kDefaultCap);

}  // namespace latnet
