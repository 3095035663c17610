#include "latnet/interior.hpp"

#include "latnet/errors.hpp"

namespace latnet {

Relation solution_set(const DistributedRelation& net, std::size_t cap) {
  const Arity whole = full_arity(net.domain);
  const Relation base = power(net.domain, whole, cap);
  Relation out;
  out.arity = whole;
  for (const auto& t : base.tuples) {
    bool keep = true;
    for (std::size_t e = 0; e < net.signature.names.size() && keep; ++e)
      keep = satisfies(net, {whole, t}, static_cast<int>(e));
    if (keep) out.tuples.push_back(t);
  }
  return out;
}

DistributedRelation project_solution(const SortedDomain& dom, const Signature& sig,
                                     const Relation& full) {
  if (full.arity != full_arity(dom))
    throw InputError("solution relation must cover every sort");
  DistributedRelation out;
  out.domain = dom;
  out.signature = sig;
  for (const auto& scheme : sig.tau) {
    std::vector<std::vector<int>> proj;
    proj.reserve(full.tuples.size());
    for (const auto& t : full.tuples)
      proj.push_back(project_values(full.arity, t, scheme));
    out.rels.push_back(make_relation(scheme, std::move(proj)));
  }
  return out;
}

DistributedRelation interior(const DistributedRelation& net, std::size_t cap) {
  return project_solution(net.domain, net.signature, solution_set(net, cap));
}

bool equivalent(const DistributedRelation& a, const DistributedRelation& b,
                std::size_t cap) {
  if (!domain_equal(a.domain, b.domain) || !signature_equal(a.signature, b.signature))
    throw InputError("networks with different shapes cannot be compared");
  return relation_equal(solution_set(a, cap), solution_set(b, cap));
}

std::vector<Relation> isolated_tuples(const DistributedRelation& net, std::size_t cap) {
  const DistributedRelation inner = interior(net, cap);
  std::vector<Relation> out;
  for (std::size_t e = 0; e < net.rels.size(); ++e) {
    std::vector<std::vector<int>> orphans;
    for (const auto& t : net.rels[e].tuples)
      if (!relation_contains(inner.rels[e], t)) orphans.push_back(t);
    out.push_back(Relation{net.rels[e].arity, std::move(orphans)});
  }
  return out;
}

}  // namespace latnet
