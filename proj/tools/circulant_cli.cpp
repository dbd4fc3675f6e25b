#include "circulant/adam.hpp"
#include "circulant/classify.hpp"
#include "circulant/families.hpp"
#include "circulant/graph.hpp"
#include "circulant/iso_oracle.hpp"
#include "circulant/modarith.hpp"
#include "circulant/report.hpp"
#include "circulant/theta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

using namespace circulant;

namespace {

struct Globals {
  std::string format = "text";
  unsigned jobs = 1;
  std::optional<int> min_size;
  std::optional<int> max_size;
  bool allow_small_sets = false;
  int oracle_cap = OracleOptions{}.order_cap;
  std::optional<std::string> timestamp;
};

struct SetArgs {
  std::optional<int> n;
  std::optional<std::string> set;
  std::optional<std::string> file;
};

std::string read_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int require_n(const SetArgs& a)
{
  if (!a.n)
    throw std::invalid_argument("--n is required with --set");
  return *a.n;
}

std::vector<ConnectionSet> collect_sets(const SetArgs& a)
{
  if (a.set && a.file)
    throw std::invalid_argument("give either --set or --file, not both");
  if (a.set)
    return {parse_set_literal(require_n(a), *a.set)};
  if (a.file) {
    auto sets = parse_connection_sets(read_file(*a.file));
    if (sets.empty())
      throw std::invalid_argument(*a.file + " contains no connection sets");
    return sets;
  }
  throw std::invalid_argument("a connection set is required (--set with --n, or --file)");
}

void add_set_args(CLI::App* cmd, SetArgs& a)
{
  cmd->add_option("--n", a.n, "graph order");
  cmd->add_option("--set", a.set, "jump list r1,r2,...");
  cmd->add_option("--file", a.file, "file of `n: r1,r2,...` lines");
}

ClassifyOptions classify_options(const Globals& g)
{
  ClassifyOptions o;
  if (g.allow_small_sets)
    o.min_size = 1;
  return o;
}

OracleOptions oracle_options(const Globals& g)
{
  if (g.oracle_cap < 1 || g.oracle_cap > kMaxOracleOrder)
    throw std::invalid_argument("--oracle-cap must lie in [1, " + std::to_string(kMaxOracleOrder) + "]");
  return OracleOptions{g.oracle_cap};
}

Format text_or_json(const Globals& g)
{
  return parse_format(g.format);
}

int cmd_reduce(const Globals& g, const SetArgs& a)
{
  const ConnectionSet c = parse_set_literal(require_n(a), a.set.value_or(""));
  if (text_or_json(g) == Format::Json)
    std::cout << nlohmann::json{{"n", c.order()}, {"jumps", c.jumps()}}.dump(2) << '\n';
  else
    std::cout << format_connection_set(c) << '\n';
  return 0;
}

int cmd_orbit(const Globals& g, const SetArgs& a)
{
  const Format f = text_or_json(g);
  for (const auto& c : collect_sets(a))
    std::cout << render_orbit(adam_orbit(c), c, f);
  return 0;
}

int cmd_theta(const Globals& g, const SetArgs& a, int m, int t)
{
  const Format f = text_or_json(g);
  for (const auto& c : collect_sets(a)) {
    const ThetaResult r = theta_image(c, m, t);
    if (f == Format::Json) {
      nlohmann::json doc{{"n", c.order()}, {"source", c.jumps()}, {"m", m}, {"t", t}};
      doc["image"] = r.image ? nlohmann::json(r.image->jumps()) : nlohmann::json(nullptr);
      std::cout << doc.dump(2) << '\n';
    } else if (r.image) {
      std::cout << "circulant: " << r.image->jump_list() << '\n';
    } else {
      std::cout << "not circulant\n";
    }
  }
  return 0;
}

int cmd_theta_table(const Globals&, const SetArgs& a, int m)
{
  for (const auto& c : collect_sets(a))
    std::cout << render_theta_table(c, m);
  return 0;
}

int cmd_classify(const Globals& g, const SetArgs& a, std::optional<int> m, std::optional<int> t)
{
  if (m.has_value() != t.has_value())
    throw std::invalid_argument("--m and --t must be given together");
  const Format f = text_or_json(g);
  std::vector<ClassificationRecord> records;
  for (const auto& c : collect_sets(a)) {
    if (m) {
      records.push_back(classify_pair(c, *m, *t));
    } else {
      auto all = classify_all(c);
      records.insert(records.end(), all.begin(), all.end());
    }
  }
  std::cout << render_records(records, f);
  return 0;
}

int cmd_enumerate(const Globals& g, int n)
{
  CensusOptions o;
  o.classify = classify_options(g);
  o.jobs = g.jobs;
  o.oracle = oracle_options(g);
  const int lo = g.min_size.value_or(static_cast<int>(o.classify.min_size));
  const int hi = g.max_size.value_or(n / 2);
  const PairCensus census = enumerate_type2(n, lo, hi, o);
  std::cout << emit_census(census, parse_format(g.format), EmitOptions{g.timestamp});
  return 0;
}

int cmd_ci_census(const Globals& g, int n, int size)
{
  FullCensusOptions o;
  o.classify = classify_options(g);
  o.oracle = oracle_options(g);
  o.jobs = g.jobs;
  std::cout << render_ci_census(n, size, ci_full_census(n, size, o), text_or_json(g));
  return 0;
}

struct FamilyArgs {
  std::string kind;
  std::optional<int> param;
  std::optional<int> s;
  std::optional<int> k;
  SetArgs sets;
  std::optional<std::string> other;
};

FamilyInstance build_family(const FamilyArgs& a)
{
  const FamilyKind kind = parse_family_kind(a.kind);
  if (kind == FamilyKind::Scaled) {
    if (!a.k || !a.other || !a.sets.set)
      throw std::invalid_argument("family scaled needs --n, --set, --other and --k");
    const int n = require_n(a.sets);
    return family_scaled(parse_set_literal(n, *a.sets.set), parse_set_literal(n, *a.other), *a.k);
  }
  if (!a.param)
    throw std::invalid_argument("family " + a.kind + " needs --param");
  switch (kind) {
  case FamilyKind::M2:
    if (!a.s)
      throw std::invalid_argument("family m2 needs --s");
    return family_m2(*a.param, *a.s);
  case FamilyKind::M3:
    return family_m3(*a.param);
  case FamilyKind::M5:
    return family_m5(*a.param);
  default:
    return family_m7(*a.param);
  }
}

int cmd_family(const Globals& g, const FamilyArgs& a)
{
  const FamilyInstance f = build_family(a);
  const FamilyVerification v = verify_family(f, oracle_options(g));
  std::cout << render_family(f, v, text_or_json(g));
  return v.ok() ? 0 : 1;
}

int cmd_scale(const Globals& g, const SetArgs& a, const std::optional<std::string>& other, int k)
{
  const int n = require_n(a);
  if (!a.set || !other)
    throw std::invalid_argument("scale needs --set and --other");
  const auto [r, s] = scale_pair(parse_set_literal(n, *a.set), parse_set_literal(n, *other), k);
  if (text_or_json(g) == Format::Json)
    std::cout << nlohmann::json{{"n", r.order()}, {"left", r.jumps()}, {"right", s.jumps()}}.dump(2) << '\n';
  else
    std::cout << format_connection_set(r) << '\n' << format_connection_set(s) << '\n';
  return 0;
}

int verify_two(const Globals& g, const ConnectionSet& a, const ConnectionSet& b)
{
  const OracleOptions oracle = oracle_options(g);
  const bool iso = are_isomorphic(build_edges(a), build_edges(b), oracle);
  const auto unit = adam_witness(a, b);
  std::cout << a.name() << " vs " << b.name() << ": " << (iso ? "isomorphic" : "not isomorphic");
  if (unit)
    std::cout << " (Adam, x = " << *unit << ')';
  else if (iso)
    std::cout << " (not Adam)";
  if (gcd_signature(a) != gcd_signature(b))
    std::cout << "; gcd signatures differ";
  std::cout << '\n';
  return 0;
}

int verify_census(const Globals& g, const std::string& path)
{
  const PairCensus census = parse_census_json(read_file(path));
  const OracleOptions oracle = oracle_options(g);
  const bool run_oracle = census.n <= oracle.order_cap;
  int failures = 0;
  for (const auto& p : census.pairs) {
    std::vector<std::string> problems;
    for (const auto& probe : p.witnesses) {
      const auto forward = theta_image(p.left, probe.m, probe.t).image;
      const auto backward = theta_image(p.right, probe.m, probe.t).image;
      if (forward != p.right && backward != p.left)
        problems.push_back("theta_{" + std::to_string(census.n) + "," + std::to_string(probe.m) + "," +
                           std::to_string(probe.t) + "} relates neither direction");
    }
    if (p.witnesses.empty())
      problems.push_back("no witnesses");
    if (same_adam_orbit(p.left, p.right))
      problems.push_back("pair lies in one Adam orbit");
    if (run_oracle && !are_isomorphic(build_edges(p.left), build_edges(p.right), oracle))
      problems.push_back("oracle reports non-isomorphic");
    std::cout << p.left.name() << ", " << p.right.name() << ": ";
    if (problems.empty()) {
      std::cout << "ok\n";
      continue;
    }
    ++failures;
    for (std::size_t i = 0; i < problems.size(); ++i)
      std::cout << (i ? "; " : "") << problems[i];
    std::cout << '\n';
  }
  std::cout << census.pairs.size() - failures << '/' << census.pairs.size() << " pairs verified";
  if (!run_oracle)
    std::cout << " (oracle skipped: order above cap)";
  std::cout << '\n';
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Circulant graph isomorphism toolkit: Adam orbits, theta transforms and Type-2 censuses"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", g.jobs, "worker threads for censuses (0 = all cores)");
  app.add_option("--min-size", g.min_size, "smallest |R| in a census");
  app.add_option("--max-size", g.max_size, "largest |R| in a census");
  app.add_flag("--allow-small-sets", g.allow_small_sets, "lift the |R| >= 3 restriction");
  app.add_option("--oracle-cap", g.oracle_cap, "largest order the isomorphism oracle accepts");
  app.add_option("--timestamp", g.timestamp, "generated_at value for JSON censuses");

  SetArgs sets;
  std::optional<std::string> other;
  int m = 2, t = 0, k = 2, size = 3;
  std::optional<int> opt_m, opt_t;
  std::optional<std::string> census_path;
  FamilyArgs family;

  auto* reduce = app.add_subcommand("reduce", "reflexively reduce a list of integers");
  reduce->add_option("--n", sets.n, "graph order")->required();
  reduce->add_option("--set", sets.set, "values v1,v2,...")->required();

  auto* orbit = app.add_subcommand("orbit", "Adam orbit with unit witnesses");
  add_set_args(orbit, sets);

  auto* theta = app.add_subcommand("theta", "edge-level image under theta_{n,m,t}");
  add_set_args(theta, sets);
  theta->add_option("--m", m, "modulus")->required();
  theta->add_option("--t", t, "shift")->required();

  auto* table = app.add_subcommand("theta-table", "elementwise theta images for every t");
  add_set_args(table, sets);
  table->add_option("--m", m, "modulus")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "classify theta probes as self, type1 or type2");
  add_set_args(classify, sets);
  classify->add_option("--m", opt_m, "modulus (default: every admissible m)");
  classify->add_option("--t", opt_t, "shift (default: every t)");

  auto* enumerate = app.add_subcommand("enumerate", "census of Type-2 pairs of one order");
  enumerate->add_option("--n", sets.n, "graph order")->required();

  auto* ci = app.add_subcommand("ci-census", "oracle-backed CI census over Adam orbits");
  ci->add_option("--n", sets.n, "graph order")->required();
  ci->add_option("--size", size, "set size")->capture_default_str();

  auto* fam = app.add_subcommand("family", "generate and verify a parametric Type-2 family");
  fam->add_option("--kind", family.kind, "m2, m3, m5, m7 or scaled")->required();
  fam->add_option("--param", family.param, "family parameter n");
  fam->add_option("--s", family.s, "m2 parameter s");
  fam->add_option("--k", family.k, "scale factor (scaled)");
  fam->add_option("--n", family.sets.n, "source order (scaled)");
  fam->add_option("--set", family.sets.set, "first source set (scaled)");
  fam->add_option("--other", family.other, "second source set (scaled)");

  auto* verify = app.add_subcommand("verify", "check a census file or a pair of sets with the oracle");
  verify->add_option("--census", census_path, "census JSON document");
  verify->add_option("--n", sets.n, "graph order");
  verify->add_option("--set", sets.set, "first set");
  verify->add_option("--other", other, "second set");

  auto* scale = app.add_subcommand("scale", "multiply a pair of sets by k");
  scale->add_option("--n", sets.n, "graph order")->required();
  scale->add_option("--set", sets.set, "first set")->required();
  scale->add_option("--other", other, "second set")->required();
  scale->add_option("--k", k, "scale factor")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reduce)
      return cmd_reduce(g, sets);
    if (*orbit)
      return cmd_orbit(g, sets);
    if (*theta)
      return cmd_theta(g, sets, m, t);
    if (*table)
      return cmd_theta_table(g, sets, m);
    if (*classify)
      return cmd_classify(g, sets, opt_m, opt_t);
    if (*enumerate)
      return cmd_enumerate(g, *sets.n);
    if (*ci)
      return cmd_ci_census(g, *sets.n, size);
    if (*fam)
      return cmd_family(g, family);
    if (*scale)
      return cmd_scale(g, sets, other, k);
    if (*verify) {
      if (census_path)
        return verify_census(g, *census_path);
      if (!sets.set || !other)
        throw std::invalid_argument("verify needs --census, or --n with --set and --other");
      const int n = require_n(sets);
      return verify_two(g, parse_set_literal(n, *sets.set), parse_set_literal(n, *other));
    }
  } catch (const OracleRefusal& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
