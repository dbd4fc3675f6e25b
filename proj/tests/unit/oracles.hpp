#pragma once

// Naive reimplementations used as independent expectations. Nothing here calls
// into the library except for plain value types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline int slow_gcd(int a, int b)
{
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  int best = 0;
  for (int d = 1; d <= std::max(a, b); ++d)
    if (a % d == 0 && b % d == 0)
      best = d;
  return best;
}

inline int slow_reduce(int n, long long v)
{
  long long r = v;
  while (r < 0)
    r += n;
  while (r >= n)
    r -= n;
  return 2 * r > n ? static_cast<int>(n - r) : static_cast<int>(r);
}

inline std::vector<int> slow_reduce_set(int n, const std::vector<long long>& values)
{
  std::set<int> out;
  for (long long v : values)
    if (int r = slow_reduce(n, v))
      out.insert(r);
  return {out.begin(), out.end()};
}

using Graph = std::set<std::pair<int, int>>;

inline std::pair<int, int> edge(int u, int v)
{
  return {std::min(u, v), std::max(u, v)};
}

inline Graph circulant(int n, const std::vector<int>& jumps)
{
  Graph g;
  for (int x = 0; x < n; ++x)
    for (int r : jumps)
      g.insert(edge(x, (x + r) % n));
  return g;
}

inline int theta_vertex(int n, int m, int t, int x)
{
  return static_cast<int>((x + static_cast<long long>(x % m) * t * m) % n);
}

inline Graph theta_graph(int n, int m, int t, const Graph& g)
{
  Graph out;
  for (auto [u, v] : g)
    out.insert(edge(theta_vertex(n, m, t, u), theta_vertex(n, m, t, v)));
  return out;
}

// Jumps of g if g is circulant, otherwise empty.
inline std::vector<int> circulant_jumps(int n, const Graph& g)
{
  std::set<int> jumps;
  for (auto [u, v] : g) {
    if (u == 0)
      jumps.insert(slow_reduce(n, v));
    if (v == 0)
      jumps.insert(slow_reduce(n, u));
  }
  std::vector<int> j(jumps.begin(), jumps.end());
  if (j.empty() || circulant(n, j) != g)
    return {};
  return j;
}

// Cycles traced by x -> x + r: (count, lengths).
inline std::pair<int, std::set<int>> trace_cycles(int n, int r)
{
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int count = 0;
  std::set<int> lengths;
  for (int s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    ++count;
    int len = 0, x = s;
    do {
      seen[x] = true;
      x = (x + r) % n;
      ++len;
    } while (x != s);
    lengths.insert(len);
  }
  return {count, lengths};
}

// Exhaustive permutation search; only for n <= 9.
inline bool brute_isomorphic(int n, const Graph& a, const Graph& b)
{
  if (a.size() != b.size())
    return false;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a)
      if (!b.contains(edge(p[u], p[v]))) {
        ok = false;
        break;
      }
    if (ok)
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Unit multiples of R, each reflexively reduced.
inline std::set<std::vector<int>> slow_orbit(int n, const std::vector<int>& jumps)
{
  std::set<std::vector<int>> out;
  for (int x = 1; x < n; ++x) {
    if (slow_gcd(n, x) != 1)
      continue;
    std::vector<long long> v;
    for (int r : jumps)
      v.push_back(static_cast<long long>(x) * r);
    out.insert(slow_reduce_set(n, v));
  }
  return out;
}

inline std::vector<int> random_jumps(std::mt19937& rng, int n, int size)
{
  std::vector<int> all(static_cast<std::size_t>(n / 2));
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(size));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace oracle
