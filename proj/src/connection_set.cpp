#include "circulant/connection_set.hpp"

#include "circulant/modarith.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace circulant {

ConnectionSet::ConnectionSet(int n, std::vector<int> jumps) : n_(n), jumps_(std::move(jumps))
{
  if (n_ < 2)
    throw std::invalid_argument("order must be at least 2, got " + std::to_string(n_));
  if (jumps_.empty())
    throw std::invalid_argument("connection set must be nonempty");
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    const int r = jumps_[i];
    if (r < 1 || 2 * r > n_)
      throw std::invalid_argument("jump " + std::to_string(r) + " outside [1, " + std::to_string(n_ / 2) + "]");
    if (i > 0 && jumps_[i - 1] >= r)
      throw std::invalid_argument("jumps must be strictly ascending");
  }
}

ConnectionSet ConnectionSet::from_values(int n, std::span<const std::int64_t> values)
{
  return ConnectionSet(n, reduce_values(n, values));
}

ConnectionSet ConnectionSet::from_values(int n, std::initializer_list<std::int64_t> values)
{
  return from_values(n, std::span<const std::int64_t>(values.begin(), values.size()));
}

ConnectionSet ConnectionSet::complete(int n)
{
  std::vector<int> all;
  for (int r = 1; 2 * r <= n; ++r)
    all.push_back(r);
  return ConnectionSet(n, std::move(all));
}

bool ConnectionSet::contains(int jump) const
{
  return std::binary_search(jumps_.begin(), jumps_.end(), jump);
}

std::vector<int> ConnectionSet::symmetric_closure() const
{
  std::vector<int> out;
  out.reserve(2 * jumps_.size());
  for (int r : jumps_) {
    out.push_back(r);
    if (2 * r != n_)
      out.push_back(n_ - r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ConnectionSet::jump_list() const
{
  std::string s;
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(jumps_[i]);
  }
  return s;
}

std::string ConnectionSet::name() const
{
  return "C_" + std::to_string(n_) + "(" + jump_list() + ")";
}

std::strong_ordering operator<=>(const ConnectionSet& a, const ConnectionSet& b)
{
  if (auto c = a.n_ <=> b.n_; c != 0)
    return c;
  return std::lexicographical_compare_three_way(a.jumps_.begin(), a.jumps_.end(), b.jumps_.begin(),
                                                b.jumps_.end());
}

std::ostream& operator<<(std::ostream& os, const ConnectionSet& c)
{
  return os << c.name();
}

namespace {

std::string strip_spaces(std::string_view s)
{
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      out += ch;
  return out;
}

std::int64_t parse_integer(std::string_view token, std::string_view context)
{
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last)
    throw std::invalid_argument("malformed integer '" + std::string(token) + "' in '" + std::string(context) + "'");
  return value;
}

}  // namespace

ConnectionSet parse_set_literal(int n, std::string_view literal)
{
  const std::string compact = strip_spaces(literal);
  if (compact.empty())
    throw std::invalid_argument("empty set literal");
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (start <= compact.size()) {
    const std::size_t comma = compact.find(',', start);
    const std::size_t end = comma == std::string::npos ? compact.size() : comma;
    values.push_back(parse_integer(std::string_view(compact).substr(start, end - start), literal));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return ConnectionSet::from_values(n, values);
}

std::vector<ConnectionSet> parse_connection_sets(std::istream& in)
{
  std::vector<ConnectionSet> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const std::string compact = strip_spaces(line);
    if (compact.empty())
      continue;
    const auto colon = compact.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'n: r1,r2,...'");
    const auto n = parse_integer(std::string_view(compact).substr(0, colon), line);
    if (n < 2 || n > 1'000'000)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": order out of range");
    try {
      out.push_back(parse_set_literal(static_cast<int>(n), std::string_view(compact).substr(colon + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<ConnectionSet> parse_connection_sets(std::string_view text)
{
  std::istringstream in{std::string(text)};
  return parse_connection_sets(in);
}

std::string format_connection_set(const ConnectionSet& c)
{
  return std::to_string(c.order()) + ": " + c.jump_list();
}

}  // namespace circulant
