#include "latnet/relation.hpp"

#include <algorithm>
#include <functional>

#include "latnet/errors.hpp"

namespace latnet {

Relation make_relation(Arity arity, std::vector<std::vector<int>> tuples) {
  for (const auto& t : tuples)
    if (t.size() != arity.size()) throw InputError("tuple width does not match arity");
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  return {std::move(arity), std::move(tuples)};
}

bool relation_contains(const Relation& r, const std::vector<int>& values) {
  return std::binary_search(r.tuples.begin(), r.tuples.end(), values);
}

bool relation_equal(const Relation& a, const Relation& b) {
  return a.arity == b.arity && a.tuples == b.tuples;
}

std::size_t power_size(const SortedDomain& dom, const Arity& arity, std::size_t cap) {
  std::size_t total = 1;
  for (int a : arity) {
    const std::size_t v = dom.values.at(a).size();
    if (v == 0) return 0;
    if (total > cap / v)
      throw CapacityError("tuple enumeration over " + render_arity(dom, arity) +
                          " exceeds the cap of " + std::to_string(cap));
    total *= v;
  }
  if (total > cap)
    throw CapacityError("tuple enumeration over " + render_arity(dom, arity) +
                        " exceeds the cap of " + std::to_string(cap));
  return total;
}

Relation power(const SortedDomain& dom, const Arity& arity, std::size_t cap) {
  const std::size_t total = power_size(dom, arity, cap);
  Relation out;
  out.arity = arity;
  if (total == 0) return out;
  out.tuples.reserve(total);
  std::vector<int> cur(arity.size(), 0);
  // Odometer with the last position fastest: lexicographic by value index.
  while (true) {
    out.tuples.push_back(cur);
    std::size_t k = arity.size();
    while (k > 0) {
      --k;
      if (static_cast<std::size_t>(++cur[k]) < dom.values[arity[k]].size()) break;
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (arity.empty()) return out;
  }
}

std::vector<int> project_values(const Arity& from, const std::vector<int>& values,
                                const Arity& onto) {
  if (values.size() != from.size()) throw InputError("tuple width does not match arity");
  std::vector<int> out;
  out.reserve(onto.size());
  std::size_t pos = 0;
  for (int s : onto) {
    while (pos < from.size() && from[pos] < s) ++pos;
    if (pos >= from.size() || from[pos] != s)
      throw InputError("projection target is not a sub-arity");
    out.push_back(values[pos]);
  }
  return out;
}

Tuple project_tuple(const Tuple& x, const Arity& onto) {
  return {onto, project_values(x.arity, x.values, onto)};
}

bool tuple_leq(const SortedDomain& dom, const Tuple& y, const Tuple& x) {
  if (!arity_subset(x.arity, y.arity)) return false;
  const std::vector<int> proj = project_values(y.arity, y.values, x.arity);
  for (std::size_t k = 0; k < x.arity.size(); ++k)
    if (!dom.values[x.arity[k]].leq(proj[k], x.values[k])) return false;
  return true;
}

bool projective_containment(const Relation& s, const Relation& r) {
  if (!arity_subset(r.arity, s.arity)) return false;
  for (const auto& t : s.tuples)
    if (!relation_contains(r, project_values(s.arity, t, r.arity))) return false;
  return true;
}

Relation natural_join(const SortedDomain& dom, const std::vector<Relation>& rels,
                      std::size_t cap) {
  Arity w;
  for (const auto& r : rels) w = arity_union(w, r.arity);
  const Relation base = power(dom, w, cap);
  Relation out;
  out.arity = w;
  for (const auto& t : base.tuples) {
    bool keep = true;
    for (const auto& r : rels)
      if (!relation_contains(r, project_values(w, t, r.arity))) {
        keep = false;
        break;
      }
    if (keep) out.tuples.push_back(t);
  }
  return out;
}

// All tuples componentwise below x, by odometer over per-position downsets.
static void each_below(const SortedDomain& dom, const Arity& arity,
                       const std::vector<int>& x,
                       const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<std::vector<int>> down(arity.size());
  for (std::size_t k = 0; k < arity.size(); ++k)
    down[k] = dom.values[arity[k]].downset(x[k]);
  std::vector<std::size_t> at(arity.size(), 0);
  std::vector<int> cur(arity.size());
  while (true) {
    for (std::size_t k = 0; k < arity.size(); ++k) cur[k] = down[k][at[k]];
    fn(cur);
    std::size_t k = arity.size();
    while (k > 0) {
      --k;
      if (++at[k] < down[k].size()) break;
      at[k] = 0;
      if (k == 0) return;
    }
    if (arity.empty()) return;
  }
}

Relation complete_down(const SortedDomain& dom, const Relation& r) {
  std::vector<std::vector<int>> grown;
  for (const auto& t : r.tuples)
    each_below(dom, r.arity, t, [&](const std::vector<int>& y) { grown.push_back(y); });
  return make_relation(r.arity, std::move(grown));
}

bool closed_below(const SortedDomain& dom, const Relation& r) {
  bool ok = true;
  for (const auto& t : r.tuples) {
    each_below(dom, r.arity, t, [&](const std::vector<int>& y) {
      if (!relation_contains(r, y)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace latnet
