#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latnet/poset.hpp"

namespace latnet {

using ValidationReport = std::vector<std::string>;

// Incidence between two ordered sets. A valid context is closed downward in
// objects and upward in attributes: g' <= g with g I m forces g' I m, and
// m <= m' with g I m forces g I m'. validate_context reports breaches.
struct FormalContext {
  Poset objects;
  Poset attributes;
  std::vector<Bits> rows;  // per object, its attribute set
  std::vector<Bits> cols;  // per attribute, its object set

  bool incident(int g, int m) const { return rows[g].test(m); }
};

FormalContext make_context(Poset objects, Poset attributes,
                           const std::vector<std::pair<int, int>>& incidence);
bool context_equal(const FormalContext&, const FormalContext&);
ValidationReport validate_context(const FormalContext&);

// Name lookup helpers; unknown names are input errors.
Bits object_set(const FormalContext&, const std::vector<std::string>& names);
Bits attribute_set(const FormalContext&, const std::vector<std::string>& names);

Bits derive_intent(const FormalContext&, const Bits& objects);
Bits derive_extent(const FormalContext&, const Bits& attributes);
Bits extent_closure(const FormalContext&, const Bits& objects);
Bits intent_hull(const FormalContext&, const Bits& attributes);

// Images of a context along a map of objects. phi lists one image index per
// object of the context being moved; non-monotone maps are rejected.
// The direct image relocates incidence pairs to (phi(g), m); the inverse
// image pulls incidence back to (g, m) iff (phi(g), m) holds.
FormalContext context_direct_image(const std::vector<int>& phi, const Poset& onto,
                                   const FormalContext& ctx);
FormalContext context_inverse_image(const std::vector<int>& phi, const Poset& from,
                                    const FormalContext& ctx);

}  // namespace latnet
