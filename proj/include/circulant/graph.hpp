#pragma once

#include "circulant/connection_set.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace circulant {

using Edge = std::pair<int, int>;

/// Simple undirected graph on Z_n. Edges are stored as (min, max) pairs in
/// ascending order, so equality is structural equality.
class EdgeSet {
public:
  /// Normalizes, sorts and deduplicates. Throws on self-loops or out-of-range
  /// vertices.
  EdgeSet(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool has_edge(int u, int v) const;

  /// Neighbours of every vertex, each list ascending.
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> neighbors(int v) const;

  /// Applies a vertex bijection given as an image table of length n.
  EdgeSet relabel(const std::vector<int>& image) const;

  /// True when x -> x + 1 (mod n) maps the edge set onto itself.
  bool rotation_invariant() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
  int n_;
  std::vector<Edge> edges_;
};

/// { {x, x + r} : x in Z_n, r in R }; the jump n/2 contributes n/2 edges.
EdgeSet build_edges(const ConnectionSet& c);

/// Returns S when the edge set is exactly C_n(S), otherwise nullopt.
std::optional<ConnectionSet> detect_circulant(const EdgeSet& e);

struct CycleStructure {
  int period;
  int count;
  int length;

  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
};

/// Cycles traced by the single jump r: gcd(n, r) of them, each n / gcd(n, r) long.
CycleStructure cycle_structure(int n, int r);

/// Sorted multiset { gcd(n, r) : r in R }.
std::vector<int> gcd_signature(const ConnectionSet& c);

}  // namespace circulant
