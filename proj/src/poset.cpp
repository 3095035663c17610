#include "latnet/poset.hpp"

#include <set>

#include "latnet/errors.hpp"

namespace latnet {

Poset Poset::discrete(std::vector<std::string> names, bool antisymmetric) {
  return from_pairs(std::move(names), {}, antisymmetric);
}

Poset Poset::from_pairs(std::vector<std::string> names,
                        const std::vector<std::pair<int, int>>& leq_pairs,
                        bool antisymmetric) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw InputError("duplicate element name: " + n);

  Poset p;
  p.antisym_ = antisymmetric;
  const std::size_t n = names.size();
  p.names_ = std::move(names);
  p.above_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) p.above_[i].set(i);
  for (const auto& [a, b] : leq_pairs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
        static_cast<std::size_t>(b) >= n)
      throw InputError("order pair out of range");
    p.above_[a].set(b);
  }
  // Warshall closure over the bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.above_[i].test(k)) p.above_[i] |= p.above_[k];
  return p;
}

int Poset::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> Poset::downset(int a) const {
  std::vector<int> out;
  for (std::size_t b = 0; b < size(); ++b)
    if (leq(static_cast<int>(b), a)) out.push_back(static_cast<int>(b));
  return out;
}

bool Poset::is_antisymmetric() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (above_[a].test(b) && above_[b].test(a)) return false;
  return true;
}

std::vector<std::pair<int, int>> Poset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (a != b && above_[a].test(b))
        out.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return out;
}

}  // namespace latnet
