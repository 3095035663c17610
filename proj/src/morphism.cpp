#include "latnet/morphism.hpp"

#include <algorithm>
#include <set>

#include "latnet/errors.hpp"

namespace latnet {

Arity DomainMorphism::image_arity(const Arity& u) const {
  std::set<int> img;
  for (int a : u) img.insert(sort_map.at(a));
  return Arity(img.begin(), img.end());
}

bool DomainMorphism::has_map(const Arity& u) const {
  switch (family) {
    case Family::Componentwise:
    case Family::Projection:
      return true;
    case Family::Tabular:
      for (const auto& [arity, table] : tables)
        if (arity == u) return true;
      return false;
  }
  return false;
}

std::vector<int> DomainMorphism::apply(const Arity& u,
                                       const std::vector<int>& target_values) const {
  const Arity fu = image_arity(u);
  if (target_values.size() != fu.size())
    throw InputError("tuple width does not match the image arity");

  switch (family) {
    case Family::Componentwise: {
      std::vector<int> out;
      out.reserve(u.size());
      for (int a : u) {
        const auto pos = std::lower_bound(fu.begin(), fu.end(), sort_map[a]) - fu.begin();
        out.push_back(value_maps.at(a).at(target_values[pos]));
      }
      return out;
    }
    case Family::Tabular: {
      for (const auto& [arity, table] : tables)
        if (arity == u) {
          const auto it = table.find(target_values);
          if (it == table.end())
            throw InputError("value translation undefined at " +
                             render_values(target, fu, target_values));
          return it->second;
        }
      throw InputError("no value translation declared for arity " +
                       render_arity(source, u));
    }
    case Family::Projection: {
      if (u.empty()) return {};
      const auto& full = decode.at(target_values[0]);
      std::vector<int> out;
      out.reserve(u.size());
      // A full arity lists every sort, so the position of sort a is a itself.
      for (int a : u) out.push_back(full.at(a));
      return out;
    }
  }
  throw InputError("unknown morphism family");
}

DomainMorphism componentwise_morphism(SortedDomain source, SortedDomain target,
                                      std::vector<int> sort_map,
                                      std::vector<std::vector<int>> value_maps) {
  if (sort_map.size() != source.sorts.size())
    throw InputError("sort map must cover every source sort");
  for (int t : sort_map)
    if (t < 0 || static_cast<std::size_t>(t) >= target.sorts.size())
      throw InputError("sort map value out of range");
  if (value_maps.size() != source.sorts.size())
    throw InputError("one value map per source sort required");
  for (std::size_t a = 0; a < value_maps.size(); ++a) {
    if (value_maps[a].size() != target.values[sort_map[a]].size())
      throw InputError("value map at sort '" + source.sorts[a] +
                       "' is not total over the target values");
    for (int v : value_maps[a])
      if (v < 0 || static_cast<std::size_t>(v) >= source.values[a].size())
        throw InputError("value map at sort '" + source.sorts[a] + "' is out of range");
  }
  DomainMorphism m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.sort_map = std::move(sort_map);
  m.family = DomainMorphism::Family::Componentwise;
  m.value_maps = std::move(value_maps);
  return m;
}

DomainMorphism tabular_morphism(
    SortedDomain source, SortedDomain target, std::vector<int> sort_map,
    std::vector<std::pair<Arity, std::map<std::vector<int>, std::vector<int>>>> tables) {
  if (sort_map.size() != source.sorts.size())
    throw InputError("sort map must cover every source sort");
  for (int t : sort_map)
    if (t < 0 || static_cast<std::size_t>(t) >= target.sorts.size())
      throw InputError("sort map value out of range");

  DomainMorphism m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.sort_map = std::move(sort_map);
  m.family = DomainMorphism::Family::Tabular;

  std::set<Arity> seen;
  for (auto& [arity, table] : tables) {
    for (std::size_t k = 0; k + 1 < arity.size(); ++k)
      if (arity[k] >= arity[k + 1]) throw InputError("table arity is not canonical");
    for (int a : arity)
      if (a < 0 || static_cast<std::size_t>(a) >= m.source.sorts.size())
        throw InputError("table arity out of range");
    if (!seen.insert(arity).second)
      throw InputError("duplicate table for arity " + render_arity(m.source, arity));
    const Arity fu = m.image_arity(arity);
    for (const auto& [from, to] : table) {
      if (from.size() != fu.size() || to.size() != arity.size())
        throw InputError("table entry width mismatch for arity " +
                         render_arity(m.source, arity));
      for (std::size_t k = 0; k < from.size(); ++k)
        if (from[k] < 0 ||
            static_cast<std::size_t>(from[k]) >= m.target.values[fu[k]].size())
          throw InputError("table key value out of range");
      for (std::size_t k = 0; k < to.size(); ++k)
        if (to[k] < 0 ||
            static_cast<std::size_t>(to[k]) >= m.source.values[arity[k]].size())
          throw InputError("table result value out of range");
    }
  }
  m.tables = std::move(tables);
  return m;
}

DomainMorphism projection_morphism(const SortedDomain& dom, std::size_t cap) {
  const Relation full = power(dom, full_arity(dom), cap);
  std::vector<std::string> names;
  names.reserve(full.tuples.size());
  for (const auto& t : full.tuples) names.push_back(render_values(dom, full.arity, t));

  bool antisym = true;
  for (const auto& p : dom.values) antisym = antisym && p.claims_antisymmetry();

  std::vector<std::pair<int, int>> pairs;
  if (!domain_discrete(dom)) {
    // Componentwise order on full tuples; discrete domains shortcut it.
    for (std::size_t i = 0; i < full.tuples.size(); ++i)
      for (std::size_t j = 0; j < full.tuples.size(); ++j) {
        if (i == j) continue;
        bool below = true;
        for (std::size_t k = 0; k < full.arity.size(); ++k)
          if (!dom.values[k].leq(full.tuples[i][k], full.tuples[j][k])) {
            below = false;
            break;
          }
        if (below) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
  }

  DomainMorphism m;
  m.source = dom;
  m.target.sorts = {"tuples"};
  m.target.values = {Poset::from_pairs(names, pairs, antisym)};
  m.sort_map.assign(dom.sorts.size(), 0);
  m.family = DomainMorphism::Family::Projection;
  m.decode = full.tuples;
  return m;
}

// Arity pairs (V, U inside V) whose naturality square gets checked. Tabular
// families check their declared arities; the other families are lawful by
// construction, so a full sweep over small sort sets is a sanity audit.
static std::vector<std::pair<Arity, Arity>> square_plan(const DomainMorphism& m) {
  std::vector<Arity> arities;
  if (m.family == DomainMorphism::Family::Tabular) {
    for (const auto& [arity, table] : m.tables) arities.push_back(arity);
  } else {
    const std::size_t n = m.source.sorts.size();
    if (n <= 6) {
      for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        Arity u;
        for (std::size_t a = 0; a < n; ++a)
          if (mask & (std::size_t(1) << a)) u.push_back(static_cast<int>(a));
        arities.push_back(u);
      }
    } else {
      arities.push_back(full_arity(m.source));
      for (std::size_t a = 0; a < n; ++a) arities.push_back({static_cast<int>(a)});
      arities.push_back({});
    }
  }
  std::vector<std::pair<Arity, Arity>> plan;
  for (const auto& v : arities)
    for (const auto& u : arities)
      if (u != v && arity_subset(u, v)) plan.emplace_back(v, u);
  return plan;
}

ValidationReport validate_morphism(const DomainMorphism& m, std::size_t cap) {
  ValidationReport report;

  if (m.family == DomainMorphism::Family::Componentwise) {
    for (std::size_t a = 0; a < m.value_maps.size(); ++a) {
      const Poset& from = m.target.values[m.sort_map[a]];
      const Poset& onto = m.source.values[a];
      for (std::size_t v = 0; v < from.size(); ++v)
        for (std::size_t w = 0; w < from.size(); ++w)
          if (from.leq(static_cast<int>(v), static_cast<int>(w)) &&
              !onto.leq(m.value_maps[a][v], m.value_maps[a][w])) {
            report.push_back("value map at sort '" + m.source.sorts[a] +
                             "' is not monotone");
            v = from.size();
            break;
          }
    }
  }

  if (m.family == DomainMorphism::Family::Tabular) {
    for (const auto& [arity, table] : m.tables) {
      const Arity fu = m.image_arity(arity);
      const Relation base = power(m.target, fu, cap);
      for (const auto& y : base.tuples)
        if (table.find(y) == table.end()) {
          report.push_back("table for " + render_arity(m.source, arity) +
                           " is missing entry " + render_values(m.target, fu, y));
          break;
        }
      if (table.size() > base.tuples.size())
        report.push_back("table for " + render_arity(m.source, arity) +
                         " has foreign entries");
      // Monotonicity of the table as a map of tuple posets.
      bool monotone = true;
      for (const auto& [y1, x1] : table) {
        for (const auto& [y2, x2] : table) {
          bool below = true;
          for (std::size_t k = 0; k < fu.size() && below; ++k)
            below = m.target.values[fu[k]].leq(y1[k], y2[k]);
          if (!below) continue;
          for (std::size_t k = 0; k < arity.size(); ++k)
            if (!m.source.values[arity[k]].leq(x1[k], x2[k])) {
              monotone = false;
              break;
            }
          if (!monotone) break;
        }
        if (!monotone) break;
      }
      if (!monotone)
        report.push_back("table for " + render_arity(m.source, arity) +
                         " is not monotone");
    }
  }

  for (const auto& [v, u] : square_plan(m)) {
    if (!m.has_map(v) || !m.has_map(u)) continue;
    const Arity fv = m.image_arity(v), fu = m.image_arity(u);
    const Relation base = power(m.target, fv, cap);
    for (const auto& y : base.tuples) {
      const std::vector<int> via_v = project_values(v, m.apply(v, y), u);
      const std::vector<int> via_u = m.apply(u, project_values(fv, y, fu));
      if (via_v != via_u) {
        report.push_back("naturality square " + render_arity(m.source, v) + " -> " +
                         render_arity(m.source, u) + " fails at " +
                         render_values(m.target, fv, y));
        break;
      }
    }
  }
  return report;
}

DistributedRelation direct_image(const DomainMorphism& m,
                                 const DistributedRelation& over_target,
                                 std::size_t cap) {
  if (!domain_equal(over_target.domain, m.target))
    throw InputError("relation is not over the morphism target");

  DistributedRelation out;
  out.domain = m.source;

  struct Entry {
    int e;
    Arity u;
  };
  std::vector<Entry> entries;
  const auto& sig = over_target.signature;
  for (std::size_t e = 0; e < sig.names.size(); ++e) {
    std::vector<int> pre;
    for (std::size_t a = 0; a < m.source.sorts.size(); ++a)
      if (std::binary_search(sig.tau[e].begin(), sig.tau[e].end(), m.sort_map[a]))
        pre.push_back(static_cast<int>(a));
    if (pre.size() > 20)
      throw CapacityError("scheme preimage of constraint '" + sig.names[e] +
                          "' is too large to enumerate");
    std::vector<Arity> choices;
    for (std::size_t mask = 0; mask < (std::size_t(1) << pre.size()); ++mask) {
      Arity u;
      for (std::size_t k = 0; k < pre.size(); ++k)
        if (mask & (std::size_t(1) << k)) u.push_back(pre[k]);
      if (m.image_arity(u) == sig.tau[e]) choices.push_back(u);
    }
    std::sort(choices.begin(), choices.end());
    for (auto& u : choices) entries.push_back({static_cast<int>(e), std::move(u)});
  }

  std::vector<std::string> names;
  for (const auto& [e, u] : entries)
    names.push_back("(" + sig.names[e] + "," + render_arity(m.source, u) + ")");

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j)
      if (i != j && sig.preorder.leq(entries[i].e, entries[j].e) &&
          arity_subset(entries[j].u, entries[i].u))
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

  out.signature.names = names;
  out.signature.preorder = Poset::from_pairs(names, pairs, false);
  for (const auto& [e, u] : entries) {
    out.signature.tau.push_back(u);
    if (!m.has_map(u))
      throw InputError("no value translation declared for arity " +
                       render_arity(m.source, u));
    std::vector<std::vector<int>> image;
    for (const auto& y : over_target.rels[e].tuples) image.push_back(m.apply(u, y));
    out.rels.push_back(complete_down(m.source, make_relation(u, std::move(image))));
  }
  (void)cap;
  return out;
}

DistributedRelation inverse_image(const DomainMorphism& m,
                                  const DistributedRelation& over_source,
                                  std::size_t cap) {
  if (!domain_equal(over_source.domain, m.source))
    throw InputError("relation is not over the morphism source");

  DistributedRelation out;
  out.domain = m.target;
  out.signature.names = over_source.signature.names;
  out.signature.preorder = over_source.signature.preorder;

  for (std::size_t e = 0; e < over_source.signature.names.size(); ++e) {
    const Arity& u = over_source.signature.tau[e];
    if (!m.has_map(u))
      throw InputError("no value translation declared for arity " +
                       render_arity(m.source, u));
    const Arity fu = m.image_arity(u);
    out.signature.tau.push_back(fu);
    const Relation base = power(m.target, fu, cap);
    std::vector<std::vector<int>> kept;
    for (const auto& y : base.tuples)
      if (relation_contains(over_source.rels[e], m.apply(u, y))) kept.push_back(y);
    out.rels.push_back(Relation{fu, std::move(kept)});
  }
  return out;
}

}  // namespace latnet
