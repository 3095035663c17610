#include "latnet/network.hpp"

#include "latnet/errors.hpp"

namespace latnet {

int Signature::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

bool signature_equal(const Signature& x, const Signature& y) {
  return x.names == y.names && x.preorder == y.preorder && x.tau == y.tau;
}

ValidationReport validate_network(const DistributedRelation& net) {
  ValidationReport report;
  const auto& sig = net.signature;
  if (net.rels.size() != sig.names.size()) {
    report.push_back("relation count differs from constraint count");
    return report;
  }

  for (std::size_t e = 0; e < sig.names.size(); ++e) {
    const auto& name = sig.names[e];
    if (net.rels[e].arity != sig.tau[e]) {
      report.push_back("constraint '" + name + "': relation arity differs from scheme");
      continue;
    }
    bool in_range = true;
    for (const auto& t : net.rels[e].tuples)
      for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k] < 0 ||
            static_cast<std::size_t>(t[k]) >= net.domain.values.at(sig.tau[e][k]).size())
          in_range = false;
    if (!in_range) {
      report.push_back("constraint '" + name + "': tuple value out of range");
      continue;
    }
    if (!closed_below(net.domain, net.rels[e]))
      report.push_back("constraint '" + name + "': relation is not closed below");
  }
  if (!report.empty()) return report;

  for (std::size_t d = 0; d < sig.names.size(); ++d)
    for (std::size_t e = 0; e < sig.names.size(); ++e) {
      if (d == e || !sig.preorder.leq(static_cast<int>(d), static_cast<int>(e))) continue;
      const std::string pair = sig.names[d] + " <= " + sig.names[e];
      if (!arity_subset(sig.tau[e], sig.tau[d])) {
        report.push_back("preorder pair " + pair + ": scheme of the larger constraint " +
                         "is not inside the smaller one");
        continue;
      }
      if (!projective_containment(net.rels[d], net.rels[e]))
        report.push_back("preorder pair " + pair + ": projection is not contained");
    }
  return report;
}

bool satisfies(const DistributedRelation& net, const Tuple& x, int e) {
  if (e < 0 || static_cast<std::size_t>(e) >= net.signature.names.size())
    throw InputError("constraint index out of range");
  const Arity& scheme = net.signature.tau[e];
  if (!arity_subset(scheme, x.arity)) return false;
  return relation_contains(net.rels[e], project_values(x.arity, x.values, scheme));
}

FormalContext satisfaction_context(const DistributedRelation& net, TupleUniverse universe,
                                   std::size_t cap) {
  const SortedDomain& dom = net.domain;
  const std::size_t n = dom.sorts.size();

  std::vector<Tuple> objects;
  if (universe == TupleUniverse::Full) {
    const Relation base = power(dom, full_arity(dom), cap);
    for (const auto& t : base.tuples) objects.push_back({base.arity, t});
  } else {
    std::size_t total = 1;
    for (const auto& p : dom.values) {
      if (total > cap / (p.size() + 1))
        throw CapacityError("tuple universe exceeds the cap of " + std::to_string(cap));
      total *= p.size() + 1;
    }
    if (n > 62) throw CapacityError("too many sorts for sub-arity enumeration");
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      Arity u;
      for (std::size_t a = 0; a < n; ++a)
        if (mask & (std::size_t(1) << a)) u.push_back(static_cast<int>(a));
      const Relation base = power(dom, u, cap);
      for (const auto& t : base.tuples) objects.push_back({u, t});
    }
  }

  std::vector<std::string> names;
  names.reserve(objects.size());
  for (const auto& x : objects) {
    std::string label = render_values(dom, x.arity, x.values);
    if (universe == TupleUniverse::All) label += ":" + render_arity(dom, x.arity);
    names.push_back(std::move(label));
  }

  bool antisym = true;
  for (const auto& p : dom.values) antisym = antisym && p.claims_antisymmetry();

  // Full mode keeps the discrete order; all mode orders objects by meronymy,
  // a quadratic sweep that the universe cap keeps at desk scale.
  std::vector<std::pair<int, int>> pairs;
  if (universe == TupleUniverse::All)
    for (std::size_t i = 0; i < objects.size(); ++i)
      for (std::size_t j = 0; j < objects.size(); ++j)
        if (i != j && tuple_leq(dom, objects[i], objects[j]))
          pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  Poset object_order = Poset::from_pairs(names, pairs, antisym);

  std::vector<std::pair<int, int>> incidence;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t e = 0; e < net.signature.names.size(); ++e)
      if (satisfies(net, objects[i], static_cast<int>(e)))
        incidence.emplace_back(static_cast<int>(i), static_cast<int>(e));

  return make_context(std::move(object_order), net.signature.preorder, incidence);
}

DistributedRelation as_single_sorted(const FormalContext& ctx) {
  DistributedRelation net;
  net.domain.sorts = {"g"};
  net.domain.values = {ctx.objects};
  net.signature.names = ctx.attributes.names();
  net.signature.preorder = ctx.attributes;
  net.signature.tau.assign(ctx.attributes.size(), Arity{0});
  for (std::size_t m = 0; m < ctx.attributes.size(); ++m) {
    std::vector<std::vector<int>> tuples;
    for (auto g = ctx.cols[m].find_first(); g != Bits::npos; g = ctx.cols[m].find_next(g))
      tuples.push_back({static_cast<int>(g)});
    net.rels.push_back(make_relation({0}, std::move(tuples)));
  }
  return net;
}

FormalContext to_context(const DistributedRelation& net) {
  if (net.domain.sorts.size() != 1)
    throw InputError("only single-sorted networks read back as contexts");
  for (std::size_t e = 0; e < net.signature.names.size(); ++e)
    if (net.signature.tau[e] != Arity{0})
      throw InputError("constraint '" + net.signature.names[e] +
                       "' does not cover the single sort");
  std::vector<std::pair<int, int>> incidence;
  for (std::size_t e = 0; e < net.rels.size(); ++e)
    for (const auto& t : net.rels[e].tuples)
      incidence.emplace_back(t[0], static_cast<int>(e));
  return make_context(net.domain.values[0], net.signature.preorder, incidence);
}

}  // namespace latnet
