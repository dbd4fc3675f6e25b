#include "circulant/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circulant {

int gcd(std::int64_t a, std::int64_t b)
{
  return static_cast<int>(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b));
}

int mod(std::int64_t v, int n)
{
  if (n < 1)
    throw std::invalid_argument("modulus must be positive, got " + std::to_string(n));
  std::int64_t r = v % n;
  if (r < 0)
    r += n;
  return static_cast<int>(r);
}

int reflexive_reduce(int n, std::int64_t v)
{
  if (n < 2)
    throw std::invalid_argument("order must be at least 2, got " + std::to_string(n));
  const int w = mod(v, n);
  return 2 * w <= n ? w : n - w;
}

std::vector<int> reduce_values(int n, std::span<const std::int64_t> values)
{
  std::vector<int> out;
  out.reserve(values.size());
  for (std::int64_t v : values) {
    const int w = reflexive_reduce(n, v);
    if (w != 0)
      out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty())
    throw std::invalid_argument("degenerate connection set: every value is 0 mod " + std::to_string(n));
  return out;
}

std::vector<int> unit_group(int n)
{
  if (n < 2)
    throw std::invalid_argument("order must be at least 2, got " + std::to_string(n));
  std::vector<int> units;
  for (int x = 1; x < n; ++x)
    if (std::gcd(x, n) == 1)
      units.push_back(x);
  return units;
}

bool is_unit(int n, std::int64_t x)
{
  return n >= 2 && gcd(mod(x, n), n) == 1;
}

std::vector<int> divisors_gt1(int k)
{
  if (k < 1)
    throw std::invalid_argument("divisors_gt1 needs k >= 1, got " + std::to_string(k));
  std::vector<int> small, large;
  for (int d = 1; d * d <= k; ++d) {
    if (k % d != 0)
      continue;
    if (d > 1)
      small.push_back(d);
    if (k / d != d)
      large.push_back(k / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace circulant
