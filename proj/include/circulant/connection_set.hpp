#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circulant {

/// Canonical name of a circulant graph C_n(R): an order n >= 2 and a
/// nonempty, strictly ascending jump list inside [1, n/2].
class ConnectionSet {
public:
  /// Validates an already-reduced jump list. Throws std::invalid_argument.
  ConnectionSet(int n, std::vector<int> jumps);

  /// Reflexively reduces arbitrary integers into a connection set.
  static ConnectionSet from_values(int n, std::span<const std::int64_t> values);
  static ConnectionSet from_values(int n, std::initializer_list<std::int64_t> values);

  /// The complete graph C_n(1, ..., n/2).
  static ConnectionSet complete(int n);

  int order() const noexcept { return n_; }
  const std::vector<int>& jumps() const noexcept { return jumps_; }
  std::size_t size() const noexcept { return jumps_.size(); }
  bool contains(int jump) const;

  /// R together with n - R, ascending: the neighbourhood of vertex 0.
  std::vector<int> symmetric_closure() const;

  /// "1,6,7"
  std::string jump_list() const;
  /// "C_16(1,6,7)"
  std::string name() const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;
  friend std::strong_ordering operator<=>(const ConnectionSet& a, const ConnectionSet& b);

private:
  int n_;
  std::vector<int> jumps_;
};

std::ostream& operator<<(std::ostream& os, const ConnectionSet& c);

/// Parses a comma separated literal such as "1, 6,7" (values reduced mod n).
ConnectionSet parse_set_literal(int n, std::string_view literal);

/// Parses the shared text format: one `n: r1,r2,...` per line, `#` starts a
/// comment, blank lines ignored, whitespace insignificant.
std::vector<ConnectionSet> parse_connection_sets(std::istream& in);
std::vector<ConnectionSet> parse_connection_sets(std::string_view text);

/// Inverse of parse_connection_sets for a single entry: "16: 1,6,7".
std::string format_connection_set(const ConnectionSet& c);

}  // namespace circulant
