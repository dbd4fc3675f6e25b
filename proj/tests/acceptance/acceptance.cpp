// Acceptance suite: one [PASS]/[FAIL] line per criterion on stdout, supporting
// detail on stderr. Exit status is nonzero when any selected criterion fails.

#include "reference_data.hpp"

#include "circulant/adam.hpp"
#include "circulant/classify.hpp"
#include "circulant/families.hpp"
#include "circulant/graph.hpp"
#include "circulant/iso_oracle.hpp"
#include "circulant/modarith.hpp"
#include "circulant/report.hpp"
#include "circulant/theta.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace circulant;
using Clock = std::chrono::steady_clock;
using Seconds = std::chrono::duration<double>;

namespace {

constexpr double kCensus16Limit = 10.0;
constexpr double kCensus24Limit = 60.0;
constexpr double kOracleLimit = 120.0;
constexpr double kFamilyLimit = 120.0;
constexpr double kCICensusLimit = 300.0;

struct Result {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(std::string why)
  {
    pass = false;
    details.push_back("FAIL " + std::move(why));
  }
  void note(std::string what) { details.push_back(std::move(what)); }
  void expect(bool ok, const std::string& what)
  {
    if (!ok)
      fail(what);
  }
};

double since(Clock::time_point start)
{
  return Seconds(Clock::now() - start).count();
}

std::string fmt_seconds(double s)
{
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << " s";
  return out.str();
}

using RawPair = std::pair<std::vector<int>, std::vector<int>>;

RawPair ordered(std::vector<int> a, std::vector<int> b)
{
  return a < b ? RawPair{std::move(a), std::move(b)} : RawPair{std::move(b), std::move(a)};
}

std::set<RawPair> reference_set(const std::vector<reference::Pair>& pairs)
{
  std::set<RawPair> out;
  for (const auto& [a, b] : pairs)
    out.insert(ordered(a, b));
  return out;
}

std::set<RawPair> census_set(const PairCensus& census)
{
  std::set<RawPair> out;
  for (const auto& p : census.pairs)
    out.insert({p.left.jumps(), p.right.jumps()});
  return out;
}

std::string show(const RawPair& p)
{
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  return "(" + list(p.first) + ")/(" + list(p.second) + ")";
}

Result criterion_census16()
{
  Result r;
  CensusOptions opts;
  opts.jobs = 1;
  const auto start = Clock::now();
  const auto census = enumerate_type2(16, 3, 8, opts);
  const double elapsed = since(start);
  const auto got = census_set(census);
  const auto want = reference_set(reference::kPairs16);
  r.expect(got == want, "census differs from the reference list");
  r.expect(census.pairs.size() == 8, "expected 8 pairs, got " + std::to_string(census.pairs.size()));
  r.expect(elapsed < kCensus16Limit, "runtime " + fmt_seconds(elapsed) + " over limit");
  r.summary = "n=16 census: " + std::to_string(census.pairs.size()) + " pairs, " + fmt_seconds(elapsed);
  return r;
}

Result criterion_census24()
{
  Result r;
  CensusOptions opts;
  opts.jobs = 1;
  const auto start = Clock::now();
  const auto census = enumerate_type2(24, 3, 12, opts);
  const double elapsed = since(start);
  const auto got = census_set(census);
  const auto want = reference_set(reference::kPairs24);

  std::vector<RawPair> missing, extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  r.expect(census.pairs.size() == 32, "expected 32 pairs, got " + std::to_string(census.pairs.size()));
  r.expect(missing.empty(), std::to_string(missing.size()) + " reference pairs missing from the census");
  r.expect(extra.empty(), std::to_string(extra.size()) + " census pairs absent from the reference list");
  for (const auto& p : missing)
    r.note("missing " + show(p));
  std::size_t shown = 0;
  for (const auto& p : census.pairs) {
    const RawPair key{p.left.jumps(), p.right.jumps()};
    if (want.contains(key) || shown == 8)
      continue;
    ++shown;
    std::string w;
    for (const auto& probe : p.witnesses)
      w += " (" + std::to_string(probe.m) + "," + std::to_string(probe.t) + ")";
    r.note("extra " + show(key) + " witnesses" + w +
           (p.oracle_confirmed.value_or(false) ? ", oracle isomorphic" : ", oracle NOT confirmed"));
  }
  if (extra.size() > shown)
    r.note("... " + std::to_string(extra.size() - shown) + " further extra pairs");

  bool all_m2 = true;
  for (const auto& p : census.pairs)
    all_m2 &= std::any_of(p.witnesses.begin(), p.witnesses.end(), [](const Probe& w) { return w.m == 2; });
  r.expect(all_m2, "some pair lacks an m = 2 witness");
  r.expect(elapsed < kCensus24Limit, "runtime " + fmt_seconds(elapsed) + " over limit");
  r.summary = "n=24 census: " + std::to_string(census.pairs.size()) + " pairs (" + std::to_string(missing.size()) +
              " of 32 reference pairs missing, " + std::to_string(extra.size()) + " extra), " + fmt_seconds(elapsed);
  return r;
}

Result criterion_theta()
{
  Result r;
  struct Case {
    int n, m, t;
    std::vector<int> from, to;
  };
  const std::vector<Case> cases{{16, 2, 2, {1, 6, 7}, {3, 5, 6}},
                                {24, 2, 3, {1, 2, 11}, {2, 5, 7}},
                                {24, 2, 3, {1, 10, 11}, {5, 7, 10}},
                                {24, 2, 6, {1, 2, 3}, {2, 9, 11}},
                                {24, 2, 3, {2, 3, 9}, {2, 3, 9}}};
  for (const auto& c : cases) {
    const ConnectionSet from(c.n, c.from);
    const auto image = theta_image(from, c.m, c.t).image;
    r.expect(image == ConnectionSet(c.n, c.to),
             "theta_{" + std::to_string(c.n) + "," + std::to_string(c.m) + "," + std::to_string(c.t) + "}(" +
                 from.name() + ") = " + (image ? image->name() : std::string("not circulant")));
  }
  r.summary = "theta spot checks: " + std::to_string(cases.size()) + " cases";
  return r;
}

Result criterion_orbits()
{
  Result r;
  struct Case {
    int n;
    std::vector<int> base;
    std::vector<std::vector<int>> members;
  };
  const std::vector<Case> cases{{16, {1, 6, 7}, {{1, 6, 7}, {2, 3, 5}}},
                                {24, {1, 2, 3}, {{1, 2, 3}, {5, 9, 10}, {3, 7, 10}, {2, 9, 11}}},
                                {24, {1, 2, 11}, {{1, 2, 11}, {5, 7, 10}}}};
  for (const auto& c : cases) {
    std::set<std::vector<int>> want(c.members.begin(), c.members.end());
    std::set<std::vector<int>> got;
    for (const auto& m : adam_orbit(ConnectionSet(c.n, c.base)).members)
      got.insert(m.jumps());
    r.expect(got == want, "orbit of " + ConnectionSet(c.n, c.base).name() + " has " + std::to_string(got.size()) +
                              " members, expected " + std::to_string(want.size()));
  }
  r.summary = "Adam orbit spot checks: " + std::to_string(cases.size()) + " orbits";
  return r;
}

Result criterion_oracle()
{
  Result r;
  const auto start = Clock::now();
  std::size_t checked = 0;
  for (const auto* list : {&reference::kPairs16, &reference::kPairs24}) {
    const int n = list == &reference::kPairs16 ? 16 : 24;
    for (const auto& [a, b] : *list) {
      const ConnectionSet ca(n, a), cb(n, b);
      r.expect(are_isomorphic(build_edges(ca), build_edges(cb)), ca.name() + " vs " + cb.name() + " not isomorphic");
      r.expect(!same_adam_orbit(ca, cb), ca.name() + " and " + cb.name() + " share an Adam orbit");
      ++checked;
    }
  }
  r.expect(!are_isomorphic(build_edges(ConnectionSet(8, {1})), build_edges(ConnectionSet(8, {2}))),
           "C_8(1) reported isomorphic to C_8(2)");
  const double elapsed = since(start);
  r.expect(elapsed < kOracleLimit, "runtime " + fmt_seconds(elapsed) + " over limit");
  r.summary = "oracle cross-check: " + std::to_string(checked) + " pairs, " + fmt_seconds(elapsed);
  return r;
}

std::vector<std::vector<std::string>> table_cells(const std::string& text)
{
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    const auto bar1 = line.find('|');
    const auto bar2 = line.find('|', bar1 + 1);
    std::istringstream nums(line.substr(bar1 + 1, bar2 - bar1 - 1));
    for (std::string v; nums >> v;)
      cells.push_back(v);
    auto verdict = line.substr(bar2 + 2);
    cells.push_back(verdict);
    rows.push_back(std::move(cells));
  }
  return rows;
}

Result criterion_tables()
{
  Result r;
  std::size_t rows_checked = 0;
  for (const auto& ref : reference::kTables) {
    const ConnectionSet c(24, ref.source);
    const auto table = theta_table(c, 2);
    r.expect(std::equal(ref.domain.begin(), ref.domain.end(), table.domain.begin(), table.domain.end()),
             c.name() + ": domain differs");
    r.expect(table.rows.size() == ref.rows.size(), c.name() + ": row count " + std::to_string(table.rows.size()));
    const auto rendered = table_cells(render_theta_table(table));
    for (std::size_t i = 0; i < std::min(ref.rows.size(), table.rows.size()); ++i) {
      const auto& want = ref.rows[i];
      const auto& got = table.rows[i];
      const std::string where = c.name() + " t=" + std::to_string(want.t);
      r.expect(got.t == want.t, where + ": row order");
      r.expect(std::equal(want.image.begin(), want.image.end(), got.image.begin(), got.image.end()),
               where + ": image cells differ");
      r.expect(got.verdict == want.verdict, where + ": verdict '" + got.verdict + "'");
      r.expect(!got.diagnostic, where + ": " + got.diagnostic.value_or(""));
      std::vector<std::string> text_want;
      for (int v : want.image)
        text_want.push_back(std::to_string(v));
      text_want.emplace_back(want.verdict);
      r.expect(i < rendered.size() && rendered[i] == text_want, where + ": rendered row differs");
      ++rows_checked;
    }
  }
  r.summary = "theta tables: " + std::to_string(reference::kTables.size()) + " tables, " +
              std::to_string(rows_checked) + " rows";
  return r;
}

Result criterion_families()
{
  Result r;
  const auto start = Clock::now();
  auto check_ok = [&](const FamilyInstance& f, const std::string& label, bool want_oracle) {
    const auto v = verify_family(f);
    r.expect(v.theta_relations, label + ": theta relations");
    r.expect(v.adam_exclusion, label + ": Adam exclusion");
    r.expect(v.type2, label + ": type2 verdicts");
    if (want_oracle)
      r.expect(v.oracle == true, label + ": oracle");
    for (const auto& f : v.failures)
      r.note(label + ": " + f);
  };

  const auto a = family_m2(2, 1);
  r.expect(a.order == 16 && a.sets[0] == ConnectionSet(16, {1, 2, 7}) && a.sets[1] == ConnectionSet(16, {2, 3, 5}),
           "family_m2(2,1) does not give (1,2,7)/(2,3,5) at order 16");
  check_ok(a, "m2(2,1)", true);

  const auto b = family_m2(3, 1);
  r.expect(b.order == 24 && b.sets[0] == ConnectionSet(24, {1, 2, 11}) && b.sets[1] == ConnectionSet(24, {2, 5, 7}),
           "family_m2(3,1) does not give (1,2,11)/(2,5,7) at order 24");
  check_ok(b, "m2(3,1)", true);

  const auto c = family_m2(3, 2);
  r.expect(c.degenerate, "family_m2(3,2) not flagged degenerate");
  r.expect(c.sets[0] == ConnectionSet(24, {2, 3, 9}) && c.sets[1] == c.sets[0], "family_m2(3,2) sets differ");

  const auto m3 = family_m3(1);
  r.expect(m3.order == 27, "family_m3(1) order");
  check_ok(m3, "m3(1)", true);
  const auto m5 = family_m5(1);
  r.expect(m5.order == 125, "family_m5(1) order");
  check_ok(m5, "m5(1)", false);
  const auto m7 = family_m7(1);
  r.expect(m7.order == 343, "family_m7(1) order");
  check_ok(m7, "m7(1)", false);

  const double elapsed = since(start);
  r.expect(elapsed < kFamilyLimit, "runtime " + fmt_seconds(elapsed) + " over limit");
  r.summary = "family theorems: m2 x3, m3, m5, m7, " + fmt_seconds(elapsed);
  return r;
}

std::pair<int, std::set<int>> trace(int n, int r)
{
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int count = 0;
  std::set<int> lengths;
  for (int s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    ++count;
    int len = 0;
    for (int x = s; !seen[x]; x = (x + r) % n, ++len)
      seen[x] = 1;
    lengths.insert(len);
  }
  return {count, lengths};
}

Result criterion_properties()
{
  Result r;
  const auto start = Clock::now();

  std::size_t group_cases = 0;
  for (int n = 2; n <= 48; ++n) {
    for (int m : divisors_gt1(n)) {
      const int period = n / m;
      std::vector<std::vector<int>> tables;
      for (int t = 0; t < period; ++t)
        tables.push_back(ThetaMap(n, m, t).image_table());
      for (int t1 = 0; t1 < period; ++t1) {
        for (int t2 = 0; t2 < period; ++t2) {
          const auto& a = tables[t1];
          const auto& b = tables[t2];
          const auto& c = tables[(t1 + t2) % period];
          bool ok = true;
          for (int x = 0; x < n; ++x)
            ok &= a[b[x]] == c[x];
          r.expect(ok, "group law n=" + std::to_string(n) + " m=" + std::to_string(m) + " t1=" + std::to_string(t1) +
                           " t2=" + std::to_string(t2));
          ++group_cases;
        }
        std::vector<int> x(static_cast<std::size_t>(n));
        std::iota(x.begin(), x.end(), 0);
        for (int i = 0; i < period; ++i)
          for (auto& v : x)
            v = tables[t1][v];
        bool identity = true;
        for (int v = 0; v < n; ++v)
          identity &= x[v] == v;
        r.expect(identity, "order n/m fails for n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
  }

  std::size_t cycle_cases = 0;
  for (int n = 2; n <= 40; ++n)
    for (int j = 1; 2 * j <= n; ++j) {
      const auto cs = cycle_structure(n, j);
      const auto [count, lengths] = trace(n, j);
      r.expect(cs.count == count && lengths == std::set<int>{cs.length},
               "cycle structure n=" + std::to_string(n) + " r=" + std::to_string(j));
      ++cycle_cases;
    }

  std::size_t shortcut_cases = 0;
  for (int n : {16, 24})
    for (int k = 1; k <= 4; ++k)
      for (const auto& c : all_connection_sets(n, k)) {
        if (std::none_of(c.jumps().begin(), c.jumps().end(), [](int j) { return j % 2 == 0; }))
          continue;
        for (int t = 0; t < n / 2; ++t) {
          r.expect(jump_shortcut(c, 2, t).image == theta_image(c, 2, t).image,
                   "shortcut disagrees for " + c.name() + " t=" + std::to_string(t));
          ++shortcut_cases;
        }
      }

  std::size_t symmetry_cases = 0;
  for (int n : {16, 24}) {
    const auto sets = all_connection_sets(n, 3);
    for (const auto& a : sets)
      for (const auto& b : sets) {
        r.expect(same_adam_orbit(a, b) == same_adam_orbit(b, a), "orbit symmetry " + a.name() + " " + b.name());
        ++symmetry_cases;
      }
  }

  std::size_t necessity_cases = 0;
  for (int n : {16, 24, 32, 40}) {
    CensusOptions opts;
    opts.verify_with_oracle = false;
    const auto census = enumerate_type2(n, 3, 3, opts);
    for (const auto& p : census.pairs) {
      for (const auto* side : {&p.left, &p.right}) {
        const auto& j = side->jumps();
        if (!side->contains(2))
          continue;
        std::vector<int> odd;
        for (int v : j)
          if (v % 2 == 1)
            odd.push_back(v);
        if (odd.size() != 2) {
          r.note("n=" + std::to_string(n) + ": " + side->name() + " contains 2 without two odd jumps; not covered");
          continue;
        }
        for (int t = 1; t < n / 2; ++t) {
          const auto rec = classify_pair(*side, 2, t);
          if (rec.outcome != Outcome::Type2)
            continue;
          ++necessity_cases;
          const int a = odd[0], b = odd[1];
          const std::string where = side->name() + " t=" + std::to_string(t);
          r.expect(n % 8 == 0, where + ": n not divisible by 8");
          r.expect(a + b == n / 2, where + ": odd jumps do not sum to n/2");
          r.expect(8 * a != n, where + ": smaller odd jump equals n/8");
          r.expect(8 * t == n || 8 * t == 3 * n, where + ": t not n/8 or 3n/8");
          r.expect(a >= 1 && 4 * a <= n, where + ": smaller odd jump above n/4");
          r.expect(n >= 16, where + ": n below 16");
        }
      }
    }
  }
  r.expect(necessity_cases > 0, "no triples exercised the necessity conditions");

  r.summary = "property suites: " + std::to_string(group_cases) + " group-law, " + std::to_string(cycle_cases) +
              " cycle, " + std::to_string(shortcut_cases) + " shortcut, " + std::to_string(symmetry_cases) +
              " symmetry, " + std::to_string(necessity_cases) + " necessity cases, " + fmt_seconds(since(start));
  return r;
}

Result criterion_ci_census()
{
  Result r;
  const auto start = Clock::now();
  std::size_t anomalies = 0;
  std::size_t non_ci_orbits = 0;
  for (int n : {16, 24}) {
    std::vector<OrbitVerdict> census;
    try {
      census = ci_full_census(n, 3);
    } catch (const std::exception& e) {
      r.fail("ci_full_census(" + std::to_string(n) + ", 3) threw: " + e.what());
      continue;
    }
    std::map<ConnectionSet, const OrbitVerdict*> by_member;
    for (const auto& ov : census) {
      non_ci_orbits += ov.verdict == FullCIVerdict::NonCI;
      for (const auto& m : ov.orbit.members)
        by_member[m] = &ov;
      for (const auto& a : ov.anomalies) {
        ++anomalies;
        r.note("anomaly n=" + std::to_string(n) + ": " + a);
      }
    }

    CensusOptions opts;
    opts.verify_with_oracle = false;
    for (const auto& p : enumerate_type2(n, 3, 3, opts).pairs)
      for (const auto* side : {&p.left, &p.right})
        r.expect(by_member.at(*side)->verdict == FullCIVerdict::NonCI,
                 side->name() + " belongs to a Type-2 pair but is reported CI");

    if (n == 24) {
      for (const auto& jumps : reference::kClaimedCI24) {
        const ConnectionSet c(24, jumps);
        const auto* ov = by_member.at(c);
        if (ov->verdict == FullCIVerdict::CI)
          continue;
        ++anomalies;
        std::string partners;
        for (const auto& o : ov->isomorphic_orbits)
          partners += " " + o.name();
        r.note("anomaly n=24: " + c.name() + " is listed as CI but is isomorphic to orbit(s)" + partners);
      }
    }
  }
  const double elapsed = since(start);
  r.expect(elapsed < kCICensusLimit, "runtime " + fmt_seconds(elapsed) + " over limit");
  r.summary = "CI census n=16,24 |R|=3: " + std::to_string(non_ci_orbits) + " non-CI orbits, " +
              std::to_string(anomalies) + " anomalies reported, " + fmt_seconds(elapsed);
  return r;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"acceptance criteria"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "criterion numbers to run (default: all)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);
  if (selected.empty())
    selected = {1, 2, 3, 4, 5, 6, 7, 8, 9};

  const std::vector<std::function<Result()>> criteria{criterion_census16, criterion_census24, criterion_theta,
                                                      criterion_orbits,   criterion_oracle,   criterion_tables,
                                                      criterion_families, criterion_properties, criterion_ci_census};
  bool all = true;
  for (int id : selected) {
    Result r;
    try {
      r = criteria[static_cast<std::size_t>(id - 1)]();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
      r.summary = "aborted";
    }
    all &= r.pass;
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << r.summary << std::endl;
    for (const auto& d : r.details)
      std::cerr << "    " << d << '\n';
  }
  return all ? 0 : 1;
}
