#include "circulant/families.hpp"

#include "circulant/adam.hpp"
#include "circulant/graph.hpp"
#include "circulant/theta.hpp"

#include <stdexcept>

namespace circulant {

namespace {

constexpr std::int64_t kMaxFamilyOrder = 1'000'000;

void check_order(std::int64_t order)
{
  if (order > kMaxFamilyOrder)
    throw std::invalid_argument("family order " + std::to_string(order) + " exceeds " +
                                std::to_string(kMaxFamilyOrder));
}

void add_set(FamilyInstance& f, std::vector<std::int64_t> values)
{
  f.sets.push_back(ConnectionSet::from_values(f.order, values));
  f.formula_values.push_back(std::move(values));
}

// R_i = {m, d_i, c*n - d_i, c*n + d_i, ...} with d_i = m*n*(i-1) + 1 and c
// running over the multiples of m*m below m*m*m / 2.
FamilyInstance cyclic_family(FamilyKind kind, int m, int n)
{
  if (n < 1)
    throw std::invalid_argument("family parameter n must be >= 1");
  const std::int64_t order = std::int64_t{m} * m * m * n;
  check_order(order);
  FamilyInstance f;
  f.kind = kind;
  f.parameter = n;
  f.order = static_cast<int>(order);
  f.modulus = m;
  f.expected_t = {n};
  for (int i = 1; i <= m; ++i) {
    const std::int64_t d = std::int64_t{m} * n * (i - 1) + 1;
    std::vector<std::int64_t> values{m, d};
    for (int c = 1; 2 * c < m; ++c) {
      const std::int64_t base = std::int64_t{c} * m * m * n;
      values.push_back(base - d);
      values.push_back(base + d);
    }
    add_set(f, std::move(values));
  }
  return f;
}

}  // namespace

std::string to_string(FamilyKind kind)
{
  switch (kind) {
  case FamilyKind::M2:
    return "m2";
  case FamilyKind::M3:
    return "m3";
  case FamilyKind::M5:
    return "m5";
  case FamilyKind::M7:
    return "m7";
  case FamilyKind::Scaled:
    return "scaled";
  }
  return "unknown";
}

FamilyKind parse_family_kind(const std::string& text)
{
  for (auto kind : {FamilyKind::M2, FamilyKind::M3, FamilyKind::M5, FamilyKind::M7, FamilyKind::Scaled})
    if (to_string(kind) == text)
      return kind;
  throw std::invalid_argument("unknown family kind '" + text + "' (expected m2, m3, m5, m7 or scaled)");
}

FamilyInstance family_m2(int n, int s)
{
  if (n < 2)
    throw std::invalid_argument("family_m2: n must be >= 2");
  if (s < 1 || s > n)
    throw std::invalid_argument("family_m2: need 1 <= 2s-1 <= 2n-1, i.e. 1 <= s <= n");
  const std::int64_t order = std::int64_t{8} * n;
  check_order(order);
  FamilyInstance f;
  f.kind = FamilyKind::M2;
  f.parameter = n;
  f.s = s;
  f.order = static_cast<int>(order);
  f.modulus = 2;
  f.expected_t = {n, 3 * n};
  const std::int64_t odd = 2 * std::int64_t{s} - 1;
  add_set(f, {2, odd, 4 * std::int64_t{n} - odd});
  add_set(f, {2, 2 * std::int64_t{n} - odd, 2 * std::int64_t{n} + odd});
  f.degenerate = odd == n;
  return f;
}

FamilyInstance family_m3(int n)
{
  if (n < 1)
    throw std::invalid_argument("family_m3: n must be >= 1");
  const std::int64_t order = std::int64_t{27} * n;
  check_order(order);
  FamilyInstance f;
  f.kind = FamilyKind::M3;
  f.parameter = n;
  f.order = static_cast<int>(order);
  f.modulus = 3;
  f.expected_t = {n};
  const std::int64_t N = n;
  add_set(f, {1, 3, 9 * N - 1, 9 * N + 1});
  add_set(f, {3, 3 * N + 1, 6 * N - 1, 12 * N + 1});
  add_set(f, {3, 3 * N - 1, 6 * N + 1, 12 * N - 1});
  return f;
}

FamilyInstance family_m5(int n)
{
  return cyclic_family(FamilyKind::M5, 5, n);
}

FamilyInstance family_m7(int n)
{
  return cyclic_family(FamilyKind::M7, 7, n);
}

std::pair<ConnectionSet, ConnectionSet> scale_pair(const ConnectionSet& r, const ConnectionSet& s, int k)
{
  if (r.order() != s.order())
    throw std::invalid_argument("scale_pair: order mismatch " + r.name() + " vs " + s.name());
  if (k < 2)
    throw std::invalid_argument("scale_pair: k must be >= 2");
  const std::int64_t order = std::int64_t{k} * r.order();
  check_order(order);
  auto scale = [&](const ConnectionSet& c) {
    std::vector<std::int64_t> values;
    for (int j : c.jumps())
      values.push_back(std::int64_t{k} * j);
    return ConnectionSet::from_values(static_cast<int>(order), values);
  };
  return {scale(r), scale(s)};
}

FamilyInstance family_scaled(const ConnectionSet& r, const ConnectionSet& s, int k)
{
  auto [kr, ks] = scale_pair(r, s, k);
  FamilyInstance f;
  f.kind = FamilyKind::Scaled;
  f.parameter = r.order();
  f.k = k;
  f.order = kr.order();
  for (const auto* c : {&r, &s}) {
    std::vector<std::int64_t> raw;
    for (int j : c->jumps())
      raw.push_back(std::int64_t{k} * j);
    f.formula_values.push_back(std::move(raw));
  }
  f.sets = {std::move(kr), std::move(ks)};
  f.degenerate = f.sets[0] == f.sets[1];
  return f;
}

namespace {

void expect_theta(FamilyVerification& v, const ConnectionSet& from, int m, int t, const ConnectionSet& to)
{
  const auto result = theta_image(from, m, t);
  if (!result.image || *result.image != to) {
    v.theta_relations = false;
    v.failures.push_back("theta_{" + std::to_string(from.order()) + "," + std::to_string(m) + "," +
                         std::to_string(t) + "}(" + from.name() + ") = " +
                         (result.image ? result.image->name() : std::string("not circulant")) + ", expected " +
                         to.name());
  }
}

void expect_type2(FamilyVerification& v, const ConnectionSet& from, int m, int t, const ConnectionSet& to)
{
  const auto rec = classify_pair(from, m, t);
  if (rec.outcome != Outcome::Type2 || rec.image != to) {
    v.type2 = false;
    v.failures.push_back(from.name() + " at (m=" + std::to_string(m) + ", t=" + std::to_string(t) + ") classified " +
                         to_string(rec.outcome) + ", expected type2 " + to.name());
  }
}

}  // namespace

FamilyVerification verify_family(const FamilyInstance& f, const OracleOptions& oracle)
{
  FamilyVerification v;
  const auto& sets = f.sets;
  const int count = static_cast<int>(sets.size());

  if (f.kind == FamilyKind::M2) {
    for (int t : f.expected_t) {
      expect_theta(v, sets[0], 2, t, sets[1]);
      expect_theta(v, sets[1], 2, t, sets[0]);
      if (!f.degenerate) {
        expect_type2(v, sets[0], 2, t, sets[1]);
        expect_type2(v, sets[1], 2, t, sets[0]);
      }
    }
  } else if (f.kind != FamilyKind::Scaled) {
    // theta_{t = j*n} advances the cycle by j; j = count wraps to the identity.
    const int n = f.parameter;
    const int period = f.order / f.modulus;
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j <= count; ++j) {
        const int t = (j * n) % period;
        const auto& to = sets[(i + j) % count];
        expect_theta(v, sets[i], f.modulus, t, to);
        if (j > 0 && j < count)
          expect_type2(v, sets[i], f.modulus, t, to);
      }
    }
  }

  if (!f.degenerate) {
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) {
        if (auto x = adam_witness(sets[i], sets[j])) {
          v.adam_exclusion = false;
          v.failures.push_back(sets[j].name() + " = " + std::to_string(*x) + " * " + sets[i].jump_list() +
                               " lies in the Adam orbit of " + sets[i].name());
        }
      }
    }
  }

  if (f.order <= oracle.order_cap) {
    const EdgeSet base = build_edges(sets[0]);
    bool all = true;
    for (int i = 1; i < count; ++i) {
      if (!are_isomorphic(base, build_edges(sets[i]), oracle)) {
        all = false;
        v.failures.push_back("oracle: " + sets[i].name() + " is not isomorphic to " + sets[0].name());
      }
    }
    v.oracle = all;
  }
  return v;
}

}  // namespace circulant
