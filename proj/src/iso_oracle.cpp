#include "circulant/iso_oracle.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <cstdint>
#include <map>
#include <string>

namespace circulant {

InvariantVector refine_invariants(const EdgeSet& g)
{
  const auto adj = g.adjacency();
  const int n = g.order();
  InvariantVector inv;
  inv.order = n;
  inv.edge_count = g.size();
  inv.degrees.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    inv.degrees[v] = static_cast<int>(adj[v].size());

  inv.neighbor_degrees.resize(static_cast<std::size_t>(n));
  inv.triangles.resize(static_cast<std::size_t>(n));
  std::vector<int> common;
  for (int v = 0; v < n; ++v) {
    auto& profile = inv.neighbor_degrees[v];
    int twice_triangles = 0;
    for (int u : adj[v]) {
      profile.push_back(inv.degrees[u]);
      common.clear();
      std::set_intersection(adj[v].begin(), adj[v].end(), adj[u].begin(), adj[u].end(), std::back_inserter(common));
      twice_triangles += static_cast<int>(common.size());
    }
    std::sort(profile.begin(), profile.end());
    inv.triangles[v] = twice_triangles / 2;
  }
  std::sort(inv.degrees.begin(), inv.degrees.end());
  std::sort(inv.neighbor_degrees.begin(), inv.neighbor_degrees.end());
  std::sort(inv.triangles.begin(), inv.triangles.end());

  if (auto c = detect_circulant(g))
    inv.gcd_signature = gcd_signature(*c);
  return inv;
}

bool invariants_compatible(const InvariantVector& a, const InvariantVector& b)
{
  if (a.order != b.order || a.edge_count != b.edge_count || a.degrees != b.degrees ||
      a.neighbor_degrees != b.neighbor_degrees || a.triangles != b.triangles)
    return false;
  if (a.gcd_signature && b.gcd_signature)
    return *a.gcd_signature == *b.gcd_signature;
  return true;
}

namespace {

struct BitGraph {
  int n = 0;
  std::vector<std::uint64_t> rows;

  explicit BitGraph(const EdgeSet& e) : n(e.order()), rows(static_cast<std::size_t>(e.order()), 0)
  {
    for (auto [u, v] : e.edges()) {
      rows[u] |= std::uint64_t{1} << v;
      rows[v] |= std::uint64_t{1} << u;
    }
  }

  bool edge(int u, int v) const { return (rows[u] >> v) & 1U; }
};

using Colouring = std::vector<int>;

class Matcher {
public:
  Matcher(const BitGraph& a, const BitGraph& b, bool target_vertex_transitive)
      : a_(a), b_(b), n_(a.n), transitive_(target_vertex_transitive)
  {
  }

  std::optional<std::vector<int>> run()
  {
    if (search(Colouring(n_, 0), Colouring(n_, 0), true))
      return mapping_;
    return std::nullopt;
  }

private:
  // Signature of v: own colour followed by the sorted colours of its neighbours.
  void signatures(const BitGraph& g, const Colouring& c, std::vector<std::vector<int>>& out) const
  {
    for (int v = 0; v < n_; ++v) {
      auto& sig = out[v];
      sig.clear();
      sig.push_back(c[v]);
      for (std::uint64_t bits = g.rows[v]; bits; bits &= bits - 1)
        sig.push_back(c[std::countr_zero(bits)]);
      std::sort(sig.begin() + 1, sig.end());
    }
  }

  // Joint 1-dimensional refinement to the coarsest equitable colouring.
  // Returns false as soon as the colour histograms of the two graphs differ.
  bool refine(Colouring& ca, Colouring& cb) const
  {
    std::size_t classes = 0;
    std::vector<std::vector<int>> sa(n_), sb(n_);
    for (;;) {
      signatures(a_, ca, sa);
      signatures(b_, cb, sb);
      std::map<std::vector<int>, int> ids;
      for (const auto& s : sa)
        ids.emplace(s, 0);
      for (const auto& s : sb)
        ids.emplace(s, 0);
      int next = 0;
      for (auto& [sig, id] : ids)
        id = next++;

      std::vector<int> ha(ids.size(), 0), hb(ids.size(), 0);
      for (int v = 0; v < n_; ++v) {
        ca[v] = ids[sa[v]];
        cb[v] = ids[sb[v]];
        ++ha[ca[v]];
        ++hb[cb[v]];
      }
      if (ha != hb)
        return false;
      if (ids.size() == classes)
        return true;
      classes = ids.size();
    }
  }

  bool search(Colouring ca, Colouring cb, bool root)
  {
    if (!refine(ca, cb))
      return false;

    const int colours = *std::max_element(ca.begin(), ca.end()) + 1;
    std::vector<int> cell_size(static_cast<std::size_t>(colours), 0);
    for (int c : ca)
      ++cell_size[c];

    // Anchor vertex 0 at the root; afterwards branch on the smallest
    // non-singleton cell.
    int target = -1;
    if (root && cell_size[ca[0]] > 1) {
      target = ca[0];
    } else {
      for (int c = 0; c < colours; ++c)
        if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target]))
          target = c;
    }

    if (target < 0)
      return check_discrete(ca, cb);

    const int v = static_cast<int>(std::find(ca.begin(), ca.end(), target) - ca.begin());
    for (int w = 0; w < n_; ++w) {
      if (cb[w] != target)
        continue;
      Colouring na = ca, nb = cb;
      na[v] = nb[w] = colours;
      if (search(std::move(na), std::move(nb), false))
        return true;
      // A vertex-transitive target makes every root candidate equivalent.
      if (root && transitive_)
        return false;
    }
    return false;
  }

  bool check_discrete(const Colouring& ca, const Colouring& cb)
  {
    std::vector<int> by_colour(static_cast<std::size_t>(n_));
    for (int w = 0; w < n_; ++w)
      by_colour[cb[w]] = w;
    std::vector<int> f(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      f[v] = by_colour[ca[v]];
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (a_.edge(u, v) != b_.edge(f[u], f[v]))
          return false;
    mapping_ = std::move(f);
    return true;
  }

  const BitGraph& a_;
  const BitGraph& b_;
  int n_;
  bool transitive_;
  std::vector<int> mapping_;
};

void check_cap(const EdgeSet& g, const OracleOptions& options)
{
  if (options.order_cap < 1 || options.order_cap > kMaxOracleOrder)
    throw std::invalid_argument("oracle order cap must lie in [1, " + std::to_string(kMaxOracleOrder) + "]");
  if (g.order() > options.order_cap)
    throw OracleRefusal("graph order " + std::to_string(g.order()) + " exceeds oracle cap " +
                        std::to_string(options.order_cap));
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const EdgeSet& g1, const EdgeSet& g2, const OracleOptions& options)
{
  check_cap(g1, options);
  check_cap(g2, options);
  if (g1.order() != g2.order() || g1.size() != g2.size())
    return std::nullopt;
  const BitGraph a(g1), b(g2);
  Matcher matcher(a, b, g2.rotation_invariant());
  return matcher.run();
}

bool are_isomorphic(const EdgeSet& g1, const EdgeSet& g2, const OracleOptions& options)
{
  return find_isomorphism(g1, g2, options).has_value();
}

}  // namespace circulant
