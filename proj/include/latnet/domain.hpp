#pragma once

#include <string>
#include <vector>

#include "latnet/poset.hpp"

namespace latnet {

// A family of value posets indexed by sort. Tuples carry value indices into
// these posets, never value names; names appear only at the I/O boundary.
struct SortedDomain {
  std::vector<std::string> sorts;
  std::vector<Poset> values;

  int sort_index(const std::string& name) const;  // -1 when absent
};

bool domain_equal(const SortedDomain&, const SortedDomain&);
bool domain_discrete(const SortedDomain&);

// An arity is a strictly increasing list of sort indices, so sub-arity tests
// and unions are ordinary sorted-range operations.
using Arity = std::vector<int>;

Arity arity_of_names(const SortedDomain&, const std::vector<std::string>& names);
bool arity_subset(const Arity& u, const Arity& v);  // u inside v
Arity arity_union(const Arity& u, const Arity& v);
Arity full_arity(const SortedDomain&);

struct Tuple {
  Arity arity;
  std::vector<int> values;
};

std::string render_values(const SortedDomain&, const Arity&, const std::vector<int>& values);
std::string render_arity(const SortedDomain&, const Arity&);

}  // namespace latnet
