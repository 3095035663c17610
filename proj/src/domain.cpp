#include "latnet/domain.hpp"

#include <algorithm>
#include <set>

#include "latnet/errors.hpp"

namespace latnet {

int SortedDomain::sort_index(const std::string& name) const {
  for (std::size_t i = 0; i < sorts.size(); ++i)
    if (sorts[i] == name) return static_cast<int>(i);
  return -1;
}

bool domain_equal(const SortedDomain& x, const SortedDomain& y) {
  return x.sorts == y.sorts && x.values == y.values;
}

bool domain_discrete(const SortedDomain& dom) {
  for (const auto& p : dom.values)
    if (!p.strict_pairs().empty()) return false;
  return true;
}

Arity arity_of_names(const SortedDomain& dom, const std::vector<std::string>& names) {
  Arity out;
  out.reserve(names.size());
  for (const auto& n : names) {
    const int i = dom.sort_index(n);
    if (i < 0) throw InputError("unknown sort: " + n);
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InputError("duplicate sort in scheme");
  return out;
}

bool arity_subset(const Arity& u, const Arity& v) {
  return std::includes(v.begin(), v.end(), u.begin(), u.end());
}

Arity arity_union(const Arity& u, const Arity& v) {
  Arity out;
  std::set_union(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(out));
  return out;
}

Arity full_arity(const SortedDomain& dom) {
  Arity out(dom.sorts.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
  return out;
}

std::string render_values(const SortedDomain& dom, const Arity& arity,
                          const std::vector<int>& values) {
  if (arity.size() != values.size()) throw InputError("tuple width does not match arity");
  std::string out = "(";
  for (std::size_t k = 0; k < arity.size(); ++k) {
    if (k) out += ',';
    out += dom.values.at(arity[k]).name(values[k]);
  }
  return out + ")";
}

std::string render_arity(const SortedDomain& dom, const Arity& arity) {
  std::string out = "{";
  for (std::size_t k = 0; k < arity.size(); ++k) {
    if (k) out += ',';
    out += dom.sorts.at(arity[k]);
  }
  return out + "}";
}

}  // namespace latnet
