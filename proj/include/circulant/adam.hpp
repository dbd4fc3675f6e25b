#pragma once

#include "circulant/connection_set.hpp"

#include <map>
#include <optional>
#include <vector>

namespace circulant {

/// reduce(x * R) for a unit x of Z_n. Throws std::invalid_argument when x is
/// not a unit.
ConnectionSet multiply_set(const ConnectionSet& c, std::int64_t x);

/// Ad_n(C_n(R)): every connection set reachable from R by a unit multiplier.
struct AdamOrbit {
  int n = 0;
  /// Ascending; front() is the canonical representative.
  std::vector<ConnectionSet> members;
  /// Smallest unit x with member == reduce(x * base).
  std::map<ConnectionSet, int> witness;

  const ConnectionSet& representative() const { return members.front(); }
  bool contains(const ConnectionSet& c) const;
  /// Unit witnessing membership of c, if any.
  std::optional<int> witness_for(const ConnectionSet& c) const;
};

AdamOrbit adam_orbit(const ConnectionSet& c);

/// True iff b = reduce(x * a) for some unit x. Throws on order mismatch.
bool same_adam_orbit(const ConnectionSet& a, const ConnectionSet& b);

/// The smallest unit x with b = reduce(x * a), if one exists.
std::optional<int> adam_witness(const ConnectionSet& a, const ConnectionSet& b);

}  // namespace circulant
