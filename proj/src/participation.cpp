#include "latnet/participation.hpp"

#include <algorithm>

#include "latnet/errors.hpp"

namespace latnet {

int object_concept(const ConceptLattice& lat, int g) {
  if (g < 0 || static_cast<std::size_t>(g) >= lat.context.objects.size())
    throw InputError("object index out of range");
  return lat.index_of_intent(lat.context.rows[g]);
}

int attribute_concept(const ConceptLattice& lat, int m) {
  if (m < 0 || static_cast<std::size_t>(m) >= lat.context.attributes.size())
    throw InputError("attribute index out of range");
  Bits single(lat.context.attributes.size());
  single.set(m);
  return lat.index_of_intent(intent_hull(lat.context, single));
}

SubLattice make_sublattice(const ConceptLattice& lat, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw InputError("member set is empty, no coadjoint exists");
  for (int p : members)
    if (p < 0 || static_cast<std::size_t>(p) >= lat.concepts.size())
      throw InputError("concept index out of range");

  const std::size_t n = lat.concepts.size();
  SubLattice sub;
  sub.members = std::move(members);
  sub.coadjoint.assign(n, -1);
  for (std::size_t d = 0; d < n; ++d) {
    int best = -1;
    for (int p : sub.members) {
      if (!lat.leq(p, static_cast<int>(d))) continue;
      if (best < 0 || lat.leq(best, p)) best = p;
    }
    if (best < 0)
      throw InputError("no member lies below concept C_" + std::to_string(d + 1));
    // best must dominate every member below d, otherwise there is no greatest
    for (int p : sub.members)
      if (lat.leq(p, static_cast<int>(d)) && !lat.leq(p, best))
        throw InputError("members below concept C_" + std::to_string(d + 1) +
                         " have no greatest element");
    sub.coadjoint[d] = best;
  }

  // The adjunction law itself, checked rather than trusted.
  for (int p : sub.members)
    for (std::size_t d = 0; d < n; ++d)
      if (lat.leq(p, static_cast<int>(d)) != lat.leq(p, sub.coadjoint[d]))
        throw InputError("adjunction law fails at member C_" + std::to_string(p + 1));
  return sub;
}

SubLattice principal_ideal(const ConceptLattice& lat, int c) {
  if (c < 0 || static_cast<std::size_t>(c) >= lat.concepts.size())
    throw InputError("concept index out of range");
  std::vector<int> members;
  for (std::size_t j = 0; j < lat.concepts.size(); ++j)
    if (lat.leq(static_cast<int>(j), c)) members.push_back(static_cast<int>(j));
  return make_sublattice(lat, std::move(members));
}

FormalContext participation_context(const FormalContext& ctx, const ConceptLattice& lat,
                                    const SubLattice& sub) {
  if (!context_equal(ctx, lat.context))
    throw InputError("lattice was not built from this context");

  std::vector<int> gamma(ctx.objects.size()), mu(ctx.attributes.size());
  for (std::size_t g = 0; g < ctx.objects.size(); ++g)
    gamma[g] = object_concept(lat, static_cast<int>(g));
  for (std::size_t m = 0; m < ctx.attributes.size(); ++m)
    mu[m] = attribute_concept(lat, static_cast<int>(m));

  std::vector<std::pair<int, int>> incidence;
  for (std::size_t g = 0; g < ctx.objects.size(); ++g)
    for (std::size_t m = 0; m < ctx.attributes.size(); ++m)
      for (int p : sub.members)
        if (lat.leq(gamma[g], p) && lat.leq(p, mu[m])) {
          incidence.emplace_back(static_cast<int>(g), static_cast<int>(m));
          break;
        }
  return make_context(ctx.objects, ctx.attributes, incidence);
}

FormalContext solution_indicator_context(const SortedDomain& dom, const Relation& solutions,
                                         const std::vector<std::string>& constraint_names,
                                         std::size_t cap) {
  if (solutions.arity != full_arity(dom))
    throw InputError("solution relation must cover every sort");
  const Relation base = power(dom, solutions.arity, cap);
  std::vector<std::string> names;
  names.reserve(base.tuples.size());
  for (const auto& t : base.tuples) names.push_back(render_values(dom, base.arity, t));

  std::vector<std::pair<int, int>> incidence;
  for (std::size_t i = 0; i < base.tuples.size(); ++i)
    if (relation_contains(solutions, base.tuples[i]))
      for (std::size_t e = 0; e < constraint_names.size(); ++e)
        incidence.emplace_back(static_cast<int>(i), static_cast<int>(e));

  return make_context(Poset::discrete(names), Poset::discrete(constraint_names),
                      incidence);
}

}  // namespace latnet
