#include "circulant/classify.hpp"

#include "circulant/graph.hpp"
#include "circulant/modarith.hpp"
#include "circulant/theta.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace circulant {

std::vector<AdmissibleModulus> admissible_m(const ConnectionSet& c)
{
  std::map<int, std::vector<int>> by_m;
  for (int r : c.jumps())
    for (int d : divisors_gt1(gcd(c.order(), r)))
      by_m[d].push_back(r);
  std::vector<AdmissibleModulus> out;
  out.reserve(by_m.size());
  for (auto& [m, witnesses] : by_m)
    out.push_back({m, std::move(witnesses)});
  return out;
}

std::string to_string(Outcome o)
{
  switch (o) {
  case Outcome::NotCirculant:
    return "not-circulant";
  case Outcome::Self:
    return "self";
  case Outcome::Type1:
    return "type1";
  case Outcome::Type2:
    return "type2";
  }
  return "unknown";
}

namespace {

bool is_admissible(const ConnectionSet& c, int m)
{
  return std::any_of(c.jumps().begin(), c.jumps().end(),
                     [&](int r) { return m > 1 && gcd(c.order(), r) % m == 0; });
}

ClassificationRecord classify_image(const ConnectionSet& c, Probe probe, const std::optional<ConnectionSet>& image)
{
  ClassificationRecord rec{c, probe, Outcome::NotCirculant, image, std::nullopt};
  if (!image)
    return rec;
  if (*image == c) {
    rec.outcome = Outcome::Self;
  } else if (auto x = adam_witness(c, *image)) {
    rec.outcome = Outcome::Type1;
    rec.unit = *x;
  } else {
    rec.outcome = Outcome::Type2;
  }
  return rec;
}

}  // namespace

ClassificationRecord classify_pair(const ConnectionSet& c, int m, int t)
{
  if (!is_admissible(c, m))
    throw std::invalid_argument("m = " + std::to_string(m) + " divides gcd(n, r) for no jump of " + c.name());
  const int period = c.order() / m;
  if (t < 1 || t > period - 1)
    throw std::invalid_argument("t = " + std::to_string(t) + " outside [1, " + std::to_string(period - 1) + "]");
  return classify_image(c, {m, t}, theta_image(c, m, t).image);
}

std::vector<ClassificationRecord> classify_all(const ConnectionSet& c)
{
  std::vector<ClassificationRecord> out;
  for (const auto& adm : admissible_m(c))
    for (int t = 1; t < c.order() / adm.m; ++t)
      out.push_back(classify_pair(c, adm.m, t));
  return out;
}

std::vector<Type2Partner> type2_partners(const ConnectionSet& c, const ClassifyOptions& options)
{
  if (c.size() < options.min_size)
    throw std::invalid_argument(c.name() + " has fewer than " + std::to_string(options.min_size) + " jumps");

  std::map<ConnectionSet, std::vector<Probe>> found;
  std::optional<AdamOrbit> orbit;
  for (const auto& adm : admissible_m(c)) {
    for (int t = 1; t < c.order() / adm.m; ++t) {
      auto image = theta_image(c, adm.m, t).image;
      if (!image || *image == c)
        continue;
      if (!orbit)
        orbit = adam_orbit(c);
      if (orbit->contains(*image))
        continue;
      found[*image].push_back({adm.m, t});
    }
  }
  std::vector<Type2Partner> out;
  out.reserve(found.size());
  for (auto& [partner, probes] : found)
    out.push_back({partner, std::move(probes)});
  return out;
}

std::map<int, int> count_by_size(const std::vector<CensusPair>& pairs)
{
  std::map<int, int> counts;
  for (const auto& p : pairs)
    ++counts[static_cast<int>(p.left.size())];
  return counts;
}

std::vector<ConnectionSet> all_connection_sets(int n, int size)
{
  const int half = n / 2;
  if (size < 1 || size > half)
    throw std::invalid_argument("set size " + std::to_string(size) + " outside [1, " + std::to_string(half) + "]");
  std::vector<ConnectionSet> out;
  std::vector<int> combo(static_cast<std::size_t>(size));
  std::iota(combo.begin(), combo.end(), 1);
  for (;;) {
    out.emplace_back(n, combo);
    int i = size - 1;
    while (i >= 0 && combo[i] == half - (size - 1 - i))
      --i;
    if (i < 0)
      break;
    ++combo[i];
    for (int j = i + 1; j < size; ++j)
      combo[j] = combo[j - 1] + 1;
  }
  return out;
}

PairCensus enumerate_type2(int n, int size_min, int size_max, const CensusOptions& options)
{
  if (n < 2)
    throw std::invalid_argument("census order must be at least 2");
  if (size_min < 1 || static_cast<std::size_t>(size_min) < options.classify.min_size || size_min > size_max ||
      size_max > n / 2)
    throw std::invalid_argument("size range [" + std::to_string(size_min) + ", " + std::to_string(size_max) +
                                "] invalid for n = " + std::to_string(n));

  std::vector<ConnectionSet> sets;
  for (int k = size_min; k <= size_max; ++k) {
    auto batch = all_connection_sets(n, k);
    sets.insert(sets.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  std::sort(sets.begin(), sets.end());

  std::vector<std::vector<Type2Partner>> found(sets.size());
  detail::parallel_for(sets.size(), options.jobs,
                       [&](std::size_t i) { found[i] = type2_partners(sets[i], options.classify); });

  std::map<std::pair<ConnectionSet, ConnectionSet>, std::set<Probe>> merged;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (auto& partner : found[i]) {
      auto key = sets[i] < partner.partner ? std::pair{sets[i], partner.partner} : std::pair{partner.partner, sets[i]};
      merged[key].insert(partner.probes.begin(), partner.probes.end());
    }
  }

  PairCensus census;
  census.n = n;
  census.size_min = size_min;
  census.size_max = size_max;
  census.pairs.reserve(merged.size());
  for (auto& [key, probes] : merged)
    census.pairs.push_back({key.first, key.second, {probes.begin(), probes.end()}, std::nullopt});

  if (options.verify_with_oracle && n <= options.oracle.order_cap) {
    detail::parallel_for(census.pairs.size(), options.jobs, [&](std::size_t i) {
      auto& p = census.pairs[i];
      p.oracle_confirmed = are_isomorphic(build_edges(p.left), build_edges(p.right), options.oracle);
    });
  }
  census.counts_by_size = count_by_size(census.pairs);
  return census;
}

std::string to_string(CIVerdict v)
{
  return v == CIVerdict::CITheta ? "ci-theta" : "non-ci";
}

std::string to_string(FullCIVerdict v)
{
  return v == FullCIVerdict::CI ? "ci" : "non-ci";
}

CIStatus ci_theta_status(const ConnectionSet& c, const ClassifyOptions& options)
{
  CIStatus status{c, CIVerdict::CITheta, {}};
  if (c.size() < options.min_size)
    return status;
  status.evidence = type2_partners(c, options);
  if (!status.evidence.empty())
    status.verdict = CIVerdict::NonCI;
  return status;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<OrbitVerdict> ci_full_census(int n, int size, const FullCensusOptions& options)
{
  if (n > options.oracle.order_cap)
    throw OracleRefusal("ci_full_census: order " + std::to_string(n) + " exceeds oracle cap " +
                        std::to_string(options.oracle.order_cap));

  const auto sets = all_connection_sets(n, size);
  std::vector<OrbitVerdict> orbits;
  std::set<ConnectionSet> assigned;
  for (const auto& c : sets) {
    if (assigned.contains(c))
      continue;
    OrbitVerdict ov;
    ov.orbit = adam_orbit(c);
    ov.signature = gcd_signature(c);
    assigned.insert(ov.orbit.members.begin(), ov.orbit.members.end());
    orbits.push_back(std::move(ov));
  }

  std::vector<InvariantVector> invariants(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i)
    invariants[i] = refine_invariants(build_edges(orbits[i].orbit.representative()));

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t j = i + 1; j < orbits.size(); ++j)
      if (orbits[i].signature == orbits[j].signature && invariants_compatible(invariants[i], invariants[j]))
        candidates.emplace_back(i, j);

  std::vector<char> isomorphic(candidates.size(), 0);
  detail::parallel_for(candidates.size(), options.jobs, [&](std::size_t k) {
    const auto [i, j] = candidates[k];
    isomorphic[k] = are_isomorphic(build_edges(orbits[i].orbit.representative()),
                                   build_edges(orbits[j].orbit.representative()), options.oracle);
  });

  DisjointSets classes(orbits.size());
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (isomorphic[k])
      classes.unite(candidates[k].first, candidates[k].second);

  for (std::size_t i = 0; i < orbits.size(); ++i) {
    auto& ov = orbits[i];
    for (std::size_t j = 0; j < orbits.size(); ++j)
      if (j != i && classes.find(j) == classes.find(i))
        ov.isomorphic_orbits.push_back(orbits[j].orbit.representative());
    ov.verdict = ov.isomorphic_orbits.empty() ? FullCIVerdict::CI : FullCIVerdict::NonCI;

    for (const auto& member : ov.orbit.members) {
      const CIStatus theta = ci_theta_status(member, options.classify);
      if (theta.verdict == CIVerdict::CITheta && ov.verdict == FullCIVerdict::NonCI) {
        ov.anomalies.push_back(member.name() + " passes the theta-restricted CI test but is isomorphic to " +
                               ov.isomorphic_orbits.front().name() + " outside its Adam orbit");
      } else if (theta.verdict == CIVerdict::NonCI && ov.verdict == FullCIVerdict::CI) {
        ov.anomalies.push_back(member.name() + " has theta Type-2 partner " + theta.evidence.front().partner.name() +
                               " but the oracle found no isomorphic orbit");
      }
    }
  }
  return orbits;
}

}  // namespace circulant
