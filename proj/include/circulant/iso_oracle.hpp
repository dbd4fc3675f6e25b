#pragma once

// Exact graph isomorphism for small orders, independent of the theta
// machinery: joint colour refinement plus individualization backtracking.

#include "circulant/graph.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace circulant {

/// Isomorphism-invariant summary of a graph (necessary condition only).
struct InvariantVector {
  int order = 0;
  std::size_t edge_count = 0;
  std::vector<int> degrees;                            // sorted
  std::vector<std::vector<int>> neighbor_degrees;      // per vertex sorted, then sorted
  std::vector<int> triangles;                          // per vertex, sorted
  std::optional<std::vector<int>> gcd_signature;       // only when the graph is circulant

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

InvariantVector refine_invariants(const EdgeSet& g);

/// Equality of the structural parts; gcd signatures are compared only when
/// both graphs carry one.
bool invariants_compatible(const InvariantVector& a, const InvariantVector& b);

/// Thrown when a graph exceeds the configured order cap.
class OracleRefusal : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  /// Largest order the oracle will decide; at most kMaxOracleOrder.
  int order_cap = 32;
};

inline constexpr int kMaxOracleOrder = 64;

/// Exact decision. Throws OracleRefusal when either order exceeds the cap.
bool are_isomorphic(const EdgeSet& g1, const EdgeSet& g2, const OracleOptions& options = {});

/// Same decision, returning a vertex map g1 -> g2 when one exists.
std::optional<std::vector<int>> find_isomorphism(const EdgeSet& g1, const EdgeSet& g2,
                                                 const OracleOptions& options = {});

}  // namespace circulant
