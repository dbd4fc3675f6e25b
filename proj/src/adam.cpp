#include "circulant/adam.hpp"

#include "circulant/modarith.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace circulant {

ConnectionSet multiply_set(const ConnectionSet& c, std::int64_t x)
{
  const int n = c.order();
  if (!is_unit(n, x))
    throw std::invalid_argument(std::to_string(x) + " is not a unit modulo " + std::to_string(n));
  const std::int64_t xm = mod(x, n);
  std::vector<std::int64_t> products;
  products.reserve(c.size());
  for (int r : c.jumps())
    products.push_back(xm * r);
  return ConnectionSet::from_values(n, products);
}

bool AdamOrbit::contains(const ConnectionSet& c) const
{
  return std::binary_search(members.begin(), members.end(), c);
}

std::optional<int> AdamOrbit::witness_for(const ConnectionSet& c) const
{
  if (auto it = witness.find(c); it != witness.end())
    return it->second;
  return std::nullopt;
}

AdamOrbit adam_orbit(const ConnectionSet& c)
{
  AdamOrbit orbit;
  orbit.n = c.order();
  for (int x : unit_group(c.order())) {
    ConnectionSet image = multiply_set(c, x);
    orbit.witness.try_emplace(image, x);
  }
  orbit.members.reserve(orbit.witness.size());
  for (const auto& [member, unit] : orbit.witness)
    orbit.members.push_back(member);
  return orbit;
}

std::optional<int> adam_witness(const ConnectionSet& a, const ConnectionSet& b)
{
  if (a.order() != b.order())
    throw std::invalid_argument("order mismatch: " + a.name() + " vs " + b.name());
  if (a.size() != b.size())
    return std::nullopt;
  for (int x : unit_group(a.order()))
    if (multiply_set(a, x) == b)
      return x;
  return std::nullopt;
}

bool same_adam_orbit(const ConnectionSet& a, const ConnectionSet& b)
{
  return adam_witness(a, b).has_value();
}

}  // namespace circulant
