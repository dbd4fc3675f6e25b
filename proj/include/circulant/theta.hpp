#pragma once

#include "circulant/connection_set.hpp"
#include "circulant/graph.hpp"

#include <optional>
#include <vector>

namespace circulant {

/// The vertex bijection x -> x + (x mod m) * t * m (mod n). Each residue class
/// j mod m is shifted rigidly by j * t * m, so 0 and every multiple of m stay
/// fixed.
class ThetaMap {
public:
  /// Requires m > 1, m | n and 0 <= t <= n/m - 1; throws std::invalid_argument.
  ThetaMap(int n, int m, int t);

  int order() const noexcept { return n_; }
  int modulus() const noexcept { return m_; }
  int shift() const noexcept { return t_; }
  /// n / m: the number of distinct shifts.
  int period() const noexcept { return n_ / m_; }

  int operator()(std::int64_t x) const;

  /// Image table [pi(0), ..., pi(n - 1)].
  std::vector<int> image_table() const;

  EdgeSet apply(const EdgeSet& e) const;

  friend bool operator==(const ThetaMap&, const ThetaMap&) = default;

private:
  int n_;
  int m_;
  int t_;
};

ThetaMap theta_perm(int n, int m, int t);

struct ThetaResult {
  ConnectionSet source;
  ThetaMap map;
  /// Set when the image graph is circulant.
  std::optional<ConnectionSet> image;

  bool circulant() const noexcept { return image.has_value(); }
};

/// Edge-level image of C_n(R) under theta_{n,m,t}; authoritative.
ThetaResult theta_image(const ConnectionSet& c, int m, int t);

/// Elementwise image of the symmetric jump set R u (n - R).
struct SymmetricImage {
  /// R u (n - R), ascending.
  std::vector<int> domain;
  /// pi(x) for each domain entry, same order.
  std::vector<int> image;
  /// True when the image set is closed under x -> n - x.
  bool negation_closed = false;
};

SymmetricImage symmetric_image(const ConnectionSet& c, const ThetaMap& map);

/// Jump-level pre-filter: circulant(reduce(image)) iff the elementwise image
/// of R u (n - R) is closed under negation. Exact for m = 2; for larger m it is
/// a heuristic and theta_image decides.
ThetaResult jump_shortcut(const ConnectionSet& c, int m, int t);

}  // namespace circulant
