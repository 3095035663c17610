#include "latnet/lattice.hpp"

#include "latnet/errors.hpp"

namespace latnet {

int ConceptLattice::index_of_intent(const Bits& intent) const {
  const auto it = by_intent.find(intent);
  return it == by_intent.end() ? -1 : it->second;
}

// Ganter's next-closure walk over intents. Attribute 0 is the most
// significant lectic digit, so the walk emits intents in ascending numeric
// order of their bit encoding; the full attribute set is always last.
ConceptLattice enumerate_concepts(const FormalContext& ctx) {
  const std::size_t m = ctx.attributes.size();

  std::vector<Bits> intents;
  intents.push_back(intent_hull(ctx, Bits(m)));
  while (intents.back().count() < m) {
    Bits prefix = intents.back();
    bool advanced = false;
    for (int i = static_cast<int>(m) - 1; i >= 0; --i) {
      if (prefix.test(i)) {
        prefix.reset(i);
        continue;
      }
      Bits candidate = prefix;
      candidate.set(i);
      const Bits closed = intent_hull(ctx, candidate);
      // Canonical step: the closure may not add an attribute before i.
      const auto extra = (closed & ~candidate).find_first();
      if (extra == Bits::npos || extra > static_cast<std::size_t>(i)) {
        intents.push_back(closed);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;  // unreachable, the walk always ends at the full set
  }

  ConceptLattice lat;
  lat.context = ctx;
  const std::size_t n = intents.size();
  lat.concepts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    lat.concepts.push_back({derive_extent(ctx, intents[i]), intents[i]});
    lat.by_intent.emplace(intents[i], static_cast<int>(i));
  }

  lat.order.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (intents[j].is_subset_of(intents[i])) lat.order[i].set(j);

  lat.covers.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !lat.order[i].test(j)) continue;
      bool immediate = true;
      for (std::size_t k = 0; k < n && immediate; ++k)
        if (k != i && k != j && lat.order[i].test(k) && lat.order[k].test(j))
          immediate = false;
      if (immediate) lat.covers[i].push_back(static_cast<int>(j));
    }
  return lat;
}

Concept concept_of_objects(const FormalContext& ctx, const Bits& objects) {
  const Bits intent = derive_intent(ctx, objects);
  return {derive_extent(ctx, intent), intent};
}

static void check_selection(const ConceptLattice& lat, const std::vector<int>& cs) {
  if (cs.empty()) throw InputError("meet or join of nothing");
  for (int c : cs)
    if (c < 0 || static_cast<std::size_t>(c) >= lat.concepts.size())
      throw InputError("concept index out of range");
}

int concept_meet(const ConceptLattice& lat, const std::vector<int>& cs) {
  check_selection(lat, cs);
  Bits intent(lat.context.attributes.size());
  for (int c : cs) intent |= lat.concepts[c].intent;
  return lat.index_of_intent(intent_hull(lat.context, intent));
}

int concept_join(const ConceptLattice& lat, const std::vector<int>& cs) {
  check_selection(lat, cs);
  Bits intent = full_bits(lat.context.attributes.size());
  for (int c : cs) intent &= lat.concepts[c].intent;
  // An intersection of intents is itself an intent, so the lookup cannot miss.
  return lat.index_of_intent(intent);
}

std::vector<std::vector<int>> object_generators(const ConceptLattice& lat) {
  std::vector<std::vector<int>> out(lat.concepts.size());
  for (std::size_t g = 0; g < lat.context.objects.size(); ++g) {
    const int c = lat.index_of_intent(lat.context.rows[g]);
    out.at(c).push_back(static_cast<int>(g));
  }
  return out;
}

std::vector<std::vector<int>> attribute_generators(const ConceptLattice& lat) {
  std::vector<std::vector<int>> out(lat.concepts.size());
  for (std::size_t m = 0; m < lat.context.attributes.size(); ++m) {
    Bits single(lat.context.attributes.size());
    single.set(m);
    const int c = lat.index_of_intent(intent_hull(lat.context, single));
    out.at(c).push_back(static_cast<int>(m));
  }
  return out;
}

}  // namespace latnet
