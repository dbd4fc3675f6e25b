#include "circulant/theta.hpp"

#include "circulant/modarith.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace circulant {

ThetaMap::ThetaMap(int n, int m, int t) : n_(n), m_(m), t_(t)
{
  if (n_ < 2)
    throw std::invalid_argument("theta: order must be at least 2");
  if (m_ < 2 || n_ % m_ != 0)
    throw std::invalid_argument("theta: m = " + std::to_string(m_) + " must be > 1 and divide n = " +
                                std::to_string(n_));
  if (t_ < 0 || t_ > n_ / m_ - 1)
    throw std::invalid_argument("theta: t = " + std::to_string(t_) + " outside [0, " + std::to_string(n_ / m_ - 1) +
                                "]");
}

int ThetaMap::operator()(std::int64_t x) const
{
  const int v = mod(x, n_);
  const std::int64_t j = v % m_;
  return mod(v + j * t_ * m_, n_);
}

std::vector<int> ThetaMap::image_table() const
{
  std::vector<int> table(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x)
    table[x] = (*this)(x);
  return table;
}

EdgeSet ThetaMap::apply(const EdgeSet& e) const
{
  if (e.order() != n_)
    throw std::invalid_argument("theta: edge set order does not match map order");
  return e.relabel(image_table());
}

ThetaMap theta_perm(int n, int m, int t)
{
  return ThetaMap(n, m, t);
}

ThetaResult theta_image(const ConnectionSet& c, int m, int t)
{
  ThetaMap map(c.order(), m, t);
  const EdgeSet image = map.apply(build_edges(c));
  return ThetaResult{c, map, detect_circulant(image)};
}

SymmetricImage symmetric_image(const ConnectionSet& c, const ThetaMap& map)
{
  if (c.order() != map.order())
    throw std::invalid_argument("theta: connection set order does not match map order");
  const int n = c.order();
  SymmetricImage out;
  out.domain = c.symmetric_closure();
  out.image.reserve(out.domain.size());
  for (int x : out.domain)
    out.image.push_back(map(x));

  std::vector<int> sorted = out.image;
  std::sort(sorted.begin(), sorted.end());
  out.negation_closed = std::all_of(sorted.begin(), sorted.end(), [&](int y) {
    return y != 0 && std::binary_search(sorted.begin(), sorted.end(), (n - y) % n);
  });
  return out;
}

ThetaResult jump_shortcut(const ConnectionSet& c, int m, int t)
{
  ThetaMap map(c.order(), m, t);
  const SymmetricImage si = symmetric_image(c, map);
  std::optional<ConnectionSet> image;
  if (si.negation_closed) {
    std::vector<std::int64_t> values(si.image.begin(), si.image.end());
    image = ConnectionSet::from_values(c.order(), values);
  }
  return ThetaResult{c, map, std::move(image)};
}

}  // namespace circulant
