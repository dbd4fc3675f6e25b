#include "circulant/graph.hpp"

#include "circulant/modarith.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace circulant {

EdgeSet::EdgeSet(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
{
  if (n_ < 1)
    throw std::invalid_argument("edge set order must be positive");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("vertex out of range in edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v)
      std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::has_edge(int u, int v) const
{
  if (u > v)
    std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::vector<int>> EdgeSet::adjacency() const
{
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj)
    std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> EdgeSet::neighbors(int v) const
{
  std::vector<int> out;
  for (auto [a, b] : edges_) {
    if (a == v)
      out.push_back(b);
    else if (b == v)
      out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet EdgeSet::relabel(const std::vector<int>& image) const
{
  if (image.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("relabel: image table has wrong length");
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (auto [u, v] : edges_)
    mapped.emplace_back(image[u], image[v]);
  return EdgeSet(n_, std::move(mapped));
}

bool EdgeSet::rotation_invariant() const
{
  for (auto [u, v] : edges_)
    if (!has_edge((u + 1) % n_, (v + 1) % n_))
      return false;
  return true;
}

EdgeSet build_edges(const ConnectionSet& c)
{
  const int n = c.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * c.size());
  for (int r : c.jumps())
    for (int x = 0; x < n; ++x)
      edges.emplace_back(x, (x + r) % n);
  return EdgeSet(n, std::move(edges));
}

std::optional<ConnectionSet> detect_circulant(const EdgeSet& e)
{
  const int n = e.order();
  if (n < 2 || e.size() == 0)
    return std::nullopt;
  const auto nbrs = e.neighbors(0);
  if (nbrs.empty())
    return std::nullopt;
  std::vector<std::int64_t> values(nbrs.begin(), nbrs.end());
  ConnectionSet candidate = ConnectionSet::from_values(n, values);
  // Circulant means rotation invariant AND exactly reconstructible from the
  // star at vertex 0.
  if (!e.rotation_invariant())
    return std::nullopt;
  if (build_edges(candidate) != e)
    return std::nullopt;
  return candidate;
}

CycleStructure cycle_structure(int n, int r)
{
  if (n < 2 || r < 1 || 2 * r > n)
    throw std::invalid_argument("cycle_structure: jump " + std::to_string(r) + " outside [1, n/2] for n = " +
                                std::to_string(n));
  const int g = gcd(n, r);
  return {r, g, n / g};
}

std::vector<int> gcd_signature(const ConnectionSet& c)
{
  std::vector<int> sig;
  sig.reserve(c.size());
  for (int r : c.jumps())
    sig.push_back(gcd(c.order(), r));
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace circulant
