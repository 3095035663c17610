#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latnet/bits.hpp"

namespace latnet {

// Finite set with a reflexive-transitive leq. The closure of the given pairs
// is computed at construction, so leq() always behaves as a preorder.
// Antisymmetry is a claim carried by the value and checked by validators,
// letting callers build a deliberately broken "poset" and have the breakage
// reported instead of thrown.
class Poset {
 public:
  Poset() = default;

  static Poset discrete(std::vector<std::string> names, bool antisymmetric = true);
  static Poset from_pairs(std::vector<std::string> names,
                          const std::vector<std::pair<int, int>>& leq_pairs,
                          bool antisymmetric = true);

  std::size_t size() const { return names_.size(); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 when absent

  bool leq(int a, int b) const { return above_.at(a).test(b); }
  const Bits& upset(int a) const { return above_.at(a); }
  std::vector<int> downset(int a) const;

  bool claims_antisymmetry() const { return antisym_; }
  bool is_antisymmetric() const;

  // Non-reflexive pairs of the closed relation, ascending. This is the
  // canonical serialization of the order.
  std::vector<std::pair<int, int>> strict_pairs() const;

  // Structural identity of carrier and order; the antisymmetry claim is
  // metadata and deliberately not part of it.
  friend bool operator==(const Poset& x, const Poset& y) {
    return x.names_ == y.names_ && x.above_ == y.above_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Bits> above_;  // above_[a].test(b) iff a <= b
  bool antisym_ = true;
};

}  // namespace latnet
