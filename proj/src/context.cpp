#include "latnet/context.hpp"

#include <set>

#include "latnet/errors.hpp"

namespace latnet {

FormalContext make_context(Poset objects, Poset attributes,
                           const std::vector<std::pair<int, int>>& incidence) {
  FormalContext ctx;
  const std::size_t g = objects.size(), m = attributes.size();
  ctx.rows.assign(g, Bits(m));
  ctx.cols.assign(m, Bits(g));
  for (const auto& [i, j] : incidence) {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= g ||
        static_cast<std::size_t>(j) >= m)
      throw InputError("incidence pair out of range");
    ctx.rows[i].set(j);
    ctx.cols[j].set(i);
  }
  ctx.objects = std::move(objects);
  ctx.attributes = std::move(attributes);
  return ctx;
}

bool context_equal(const FormalContext& x, const FormalContext& y) {
  return x.objects == y.objects && x.attributes == y.attributes && x.rows == y.rows;
}

ValidationReport validate_context(const FormalContext& ctx) {
  ValidationReport report;
  if (ctx.objects.claims_antisymmetry() && !ctx.objects.is_antisymmetric())
    report.push_back("object order claims antisymmetry but has a cycle");
  if (ctx.attributes.claims_antisymmetry() && !ctx.attributes.is_antisymmetric())
    report.push_back("attribute order claims antisymmetry but has a cycle");

  // Collect missing cells as a set first: one breach can have many witnesses.
  std::set<std::pair<int, int>> missing;
  const std::size_t g = ctx.objects.size(), m = ctx.attributes.size();
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b) {
      if (a == b || !ctx.objects.leq(static_cast<int>(a), static_cast<int>(b))) continue;
      // a <= b: everything b carries, a must carry too
      const Bits lost = ctx.rows[b] & ~ctx.rows[a];
      for (auto j = lost.find_first(); j != Bits::npos; j = lost.find_next(j))
        missing.insert({static_cast<int>(a), static_cast<int>(j)});
    }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      if (u == v || !ctx.attributes.leq(static_cast<int>(u), static_cast<int>(v))) continue;
      // u <= v: everything carrying u must carry v
      const Bits lost = ctx.cols[u] & ~ctx.cols[v];
      for (auto i = lost.find_first(); i != Bits::npos; i = lost.find_next(i))
        missing.insert({static_cast<int>(i), static_cast<int>(v)});
    }
  for (const auto& [i, j] : missing)
    report.push_back("incidence not order-closed: expected (" + ctx.objects.name(i) +
                     ", " + ctx.attributes.name(j) + ")");
  return report;
}

static Bits lookup(const Poset& p, const std::vector<std::string>& names,
                   const char* kind) {
  Bits out(p.size());
  for (const auto& n : names) {
    const int i = p.index_of(n);
    if (i < 0) throw InputError(std::string("unknown ") + kind + " name: " + n);
    out.set(i);
  }
  return out;
}

Bits object_set(const FormalContext& ctx, const std::vector<std::string>& names) {
  return lookup(ctx.objects, names, "object");
}

Bits attribute_set(const FormalContext& ctx, const std::vector<std::string>& names) {
  return lookup(ctx.attributes, names, "attribute");
}

Bits derive_intent(const FormalContext& ctx, const Bits& objects) {
  if (objects.size() != ctx.objects.size()) throw InputError("object set has wrong width");
  Bits out = full_bits(ctx.attributes.size());
  for (auto g = objects.find_first(); g != Bits::npos; g = objects.find_next(g))
    out &= ctx.rows[g];
  return out;
}

Bits derive_extent(const FormalContext& ctx, const Bits& attributes) {
  if (attributes.size() != ctx.attributes.size())
    throw InputError("attribute set has wrong width");
  Bits out = full_bits(ctx.objects.size());
  for (auto m = attributes.find_first(); m != Bits::npos; m = attributes.find_next(m))
    out &= ctx.cols[m];
  return out;
}

Bits extent_closure(const FormalContext& ctx, const Bits& objects) {
  return derive_extent(ctx, derive_intent(ctx, objects));
}

Bits intent_hull(const FormalContext& ctx, const Bits& attributes) {
  return derive_intent(ctx, derive_extent(ctx, attributes));
}

static void check_monotone(const std::vector<int>& phi, const Poset& from,
                           const Poset& onto) {
  if (phi.size() != from.size()) throw InputError("object map has wrong width");
  for (int v : phi)
    if (v < 0 || static_cast<std::size_t>(v) >= onto.size())
      throw InputError("object map value out of range");
  for (std::size_t a = 0; a < from.size(); ++a)
    for (std::size_t b = 0; b < from.size(); ++b)
      if (from.leq(static_cast<int>(a), static_cast<int>(b)) &&
          !onto.leq(phi[a], phi[b]))
        throw InputError("object map is not monotone at " + from.name(static_cast<int>(a)) +
                         " <= " + from.name(static_cast<int>(b)));
}

FormalContext context_direct_image(const std::vector<int>& phi, const Poset& onto,
                                   const FormalContext& ctx) {
  check_monotone(phi, ctx.objects, onto);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t g = 0; g < ctx.objects.size(); ++g)
    for (auto m = ctx.rows[g].find_first(); m != Bits::npos; m = ctx.rows[g].find_next(m))
      pairs.emplace_back(phi[g], static_cast<int>(m));
  return make_context(onto, ctx.attributes, pairs);
}

FormalContext context_inverse_image(const std::vector<int>& phi, const Poset& from,
                                    const FormalContext& ctx) {
  check_monotone(phi, from, ctx.objects);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t g = 0; g < from.size(); ++g)
    for (auto m = ctx.rows[phi[g]].find_first(); m != Bits::npos;
         m = ctx.rows[phi[g]].find_next(m))
      pairs.emplace_back(static_cast<int>(g), static_cast<int>(m));
  return make_context(from, ctx.attributes, pairs);
}

}  // namespace latnet
