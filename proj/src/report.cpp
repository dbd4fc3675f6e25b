#include "circulant/report.hpp"

#include "circulant/theta.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace circulant {

using nlohmann::json;

Format parse_format(std::string_view text)
{
  if (text == "json")
    return Format::Json;
  if (text == "csv")
    return Format::Csv;
  if (text == "text")
    return Format::Text;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected json, csv or text)");
}

namespace {

std::string join(const std::vector<int>& values, std::string_view sep = ",")
{
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string probe_list(const std::vector<Probe>& probes)
{
  // "m = 2: t = 2, 6; m = 4: t = 1"
  std::string out;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (i == 0 || probes[i].m != probes[i - 1].m) {
      if (i)
        out += "; ";
      out += "m = " + std::to_string(probes[i].m) + ": t = ";
    } else {
      out += ", ";
    }
    out += std::to_string(probes[i].t);
  }
  return out;
}

json census_to_json(const PairCensus& census, const EmitOptions& options)
{
  json doc;
  doc["schema_version"] = kCensusSchemaVersion;
  doc["n"] = census.n;
  doc["size_min"] = census.size_min;
  doc["size_max"] = census.size_max;
  doc["pair_count"] = census.pairs.size();
  json counts = json::array();
  for (auto [size, count] : census.counts_by_size)
    counts.push_back({{"size", size}, {"count", count}});
  doc["counts_by_size"] = std::move(counts);
  json pairs = json::array();
  for (const auto& p : census.pairs) {
    json w = json::array();
    for (const auto& probe : p.witnesses)
      w.push_back({{"m", probe.m}, {"t", probe.t}});
    json entry{{"left", p.left.jumps()}, {"right", p.right.jumps()}, {"witnesses", std::move(w)}};
    entry["oracle_confirmed"] = p.oracle_confirmed ? json(*p.oracle_confirmed) : json(nullptr);
    pairs.push_back(std::move(entry));
  }
  doc["pairs"] = std::move(pairs);
  if (options.timestamp)
    doc["generated_at"] = *options.timestamp;
  return doc;
}

std::string census_to_csv(const PairCensus& census)
{
  std::ostringstream out;
  out << kCensusCsvHeader << '\n';
  for (const auto& p : census.pairs) {
    std::vector<int> ms, ts;
    for (const auto& probe : p.witnesses) {
      ms.push_back(probe.m);
      ts.push_back(probe.t);
    }
    out << census.n << ",\"" << p.left.jump_list() << "\",\"" << p.right.jump_list() << "\",\"" << join(ms)
        << "\",\"" << join(ts) << "\",";
    if (p.oracle_confirmed)
      out << (*p.oracle_confirmed ? "true" : "false");
    out << '\n';
  }
  return out.str();
}

std::string census_to_text(const PairCensus& census)
{
  std::ostringstream out;
  out << "Type-2 isomorphic pairs of order " << census.n << " with " << census.size_min << " <= |R| <= "
      << census.size_max << ": " << census.pairs.size() << '\n';
  for (std::size_t i = 0; i < census.pairs.size(); ++i) {
    const auto& p = census.pairs[i];
    out << '(' << i + 1 << ") " << p.left.name() << ", " << p.right.name() << "; " << probe_list(p.witnesses);
    if (p.oracle_confirmed)
      out << "; oracle: " << (*p.oracle_confirmed ? "isomorphic" : "NOT isomorphic");
    out << '\n';
  }
  out << "pairs by |R|:";
  if (census.counts_by_size.empty())
    out << " none";
  for (auto [size, count] : census.counts_by_size)
    out << ' ' << size << ':' << count;
  out << '\n';
  return out.str();
}

template <typename T>
T require(const json& j, const char* key)
{
  if (!j.contains(key))
    throw std::invalid_argument(std::string("census document missing '") + key + "'");
  return j.at(key).get<T>();
}

}  // namespace

std::string emit_census(const PairCensus& census, Format format, const EmitOptions& options)
{
  switch (format) {
  case Format::Json:
    return census_to_json(census, options).dump(2) + "\n";
  case Format::Csv:
    return census_to_csv(census);
  case Format::Text:
    return census_to_text(census);
  }
  throw std::invalid_argument("unsupported format");
}

PairCensus parse_census_json(std::string_view document)
{
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("census document is not valid JSON: ") + e.what());
  }
  try {
    if (require<int>(doc, "schema_version") != kCensusSchemaVersion)
      throw std::invalid_argument("unsupported census schema_version");
    PairCensus census;
    census.n = require<int>(doc, "n");
    census.size_min = require<int>(doc, "size_min");
    census.size_max = require<int>(doc, "size_max");
    for (const auto& p : require<json>(doc, "pairs")) {
      CensusPair pair{ConnectionSet(census.n, require<std::vector<int>>(p, "left")),
                      ConnectionSet(census.n, require<std::vector<int>>(p, "right")),
                      {},
                      std::nullopt};
      for (const auto& w : require<json>(p, "witnesses"))
        pair.witnesses.push_back({require<int>(w, "m"), require<int>(w, "t")});
      if (p.contains("oracle_confirmed") && !p.at("oracle_confirmed").is_null())
        pair.oracle_confirmed = p.at("oracle_confirmed").get<bool>();
      if (!(pair.left < pair.right))
        throw std::invalid_argument("census pair not ordered: " + pair.left.name() + ", " + pair.right.name());
      if (!census.pairs.empty() &&
          !(std::tie(census.pairs.back().left, census.pairs.back().right) < std::tie(pair.left, pair.right)))
        throw std::invalid_argument("census pairs not strictly ascending");
      census.pairs.push_back(std::move(pair));
    }
    for (const auto& c : require<json>(doc, "counts_by_size"))
      census.counts_by_size[require<int>(c, "size")] = require<int>(c, "count");
    if (require<std::size_t>(doc, "pair_count") != census.pairs.size())
      throw std::invalid_argument("pair_count does not match the pair list");
    if (census.counts_by_size != count_by_size(census.pairs))
      throw std::invalid_argument("counts_by_size does not match the pair list");
    return census;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed census document: ") + e.what());
  }
}

ThetaTable theta_table(const ConnectionSet& c, int m)
{
  const int n = c.order();
  ThetaMap probe_map(n, m, 0);
  ThetaTable table{c, m, c.symmetric_closure(), {}};
  for (int t = 1; t < probe_map.period(); ++t) {
    const ThetaMap map(n, m, t);
    const SymmetricImage si = symmetric_image(c, map);
    ThetaTableRow row{t, si.image, si.negation_closed, "Not", std::nullopt};

    const ThetaResult shortcut = jump_shortcut(c, m, t);
    if (shortcut.image) {
      const ConnectionSet& s = *shortcut.image;
      if (s == c)
        row.verdict = "Yes (same)";
      else if (auto x = adam_witness(c, s))
        row.verdict = "Yes (Type-1 with " + std::to_string(*x) + " in phi_" + std::to_string(n) + ")";
      else
        row.verdict = "Yes (Type-2)";
    }
    const ThetaResult edge = theta_image(c, m, t);
    if (edge.image != shortcut.image)
      row.diagnostic = "edge-level image: " + (edge.image ? edge.image->name() : std::string("not circulant"));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render_theta_table(const ThetaTable& table)
{
  const int n = table.source.order();
  std::ostringstream out;
  out << "theta_{" << n << ',' << table.m << ",t}(" << join(table.domain) << ") for " << table.source.name()
      << '\n';
  auto cell = [](const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };
  const std::size_t width = std::to_string(n).size() + 1;
  const std::size_t label = std::string("t = ").size() + std::to_string(table.rows.size()).size();

  out << cell("x", label) << " |";
  for (int x : table.domain)
    out << cell(std::to_string(x), width + 1);
  out << " | pairwise equidistant from 0\n";
  for (const auto& row : table.rows) {
    out << cell("t = " + std::to_string(row.t), label) << " |";
    for (int y : row.image)
      out << cell(std::to_string(y), width + 1);
    out << " | " << row.verdict;
    if (row.diagnostic)
      out << " [" << *row.diagnostic << ']';
    out << '\n';
  }
  return out.str();
}

std::string render_theta_table(const ConnectionSet& c, int m)
{
  return render_theta_table(theta_table(c, m));
}

std::string render_orbit(const AdamOrbit& orbit, const ConnectionSet& base, Format format)
{
  if (format == Format::Json) {
    json members = json::array();
    for (const auto& member : orbit.members)
      members.push_back({{"set", member.jumps()}, {"unit", orbit.witness.at(member)}});
    json doc{{"n", orbit.n}, {"base", base.jumps()}, {"members", std::move(members)}};
    return doc.dump(2) + "\n";
  }
  if (format == Format::Csv)
    throw std::invalid_argument("csv output is only available for censuses");
  std::ostringstream out;
  out << "Ad_" << orbit.n << '(' << base.name() << "): " << orbit.members.size() << " member"
      << (orbit.members.size() == 1 ? "" : "s") << '\n';
  for (const auto& member : orbit.members)
    out << "  " << member.name() << " = C_" << orbit.n << '(' << orbit.witness.at(member) << '('
        << base.jump_list() << "))\n";
  return out.str();
}

std::string render_records(const std::vector<ClassificationRecord>& records, Format format)
{
  if (format == Format::Json) {
    json list = json::array();
    for (const auto& r : records) {
      json entry{{"source", r.source.jumps()}, {"m", r.probe.m}, {"t", r.probe.t}, {"outcome", to_string(r.outcome)}};
      entry["image"] = r.image ? json(r.image->jumps()) : json(nullptr);
      entry["unit"] = r.unit ? json(*r.unit) : json(nullptr);
      list.push_back(std::move(entry));
    }
    return list.dump(2) + "\n";
  }
  if (format == Format::Csv)
    throw std::invalid_argument("csv output is only available for censuses");
  std::ostringstream out;
  for (const auto& r : records) {
    out << "theta_{" << r.source.order() << ',' << r.probe.m << ',' << r.probe.t << "}(" << r.source.name()
        << "): ";
    switch (r.outcome) {
    case Outcome::NotCirculant:
      out << "not circulant";
      break;
    case Outcome::Self:
      out << "self";
      break;
    case Outcome::Type1:
      out << "type1 " << r.image->name() << " = C_" << r.source.order() << '(' << *r.unit << '('
          << r.source.jump_list() << "))";
      break;
    case Outcome::Type2:
      out << "type2 " << r.image->name();
      break;
    }
    out << '\n';
  }
  return out.str();
}

std::string render_ci_census(int n, int size, const std::vector<OrbitVerdict>& census, Format format)
{
  if (format == Format::Json) {
    json orbits = json::array();
    for (const auto& ov : census) {
      json members = json::array();
      for (const auto& m : ov.orbit.members)
        members.push_back(m.jumps());
      json iso = json::array();
      for (const auto& c : ov.isomorphic_orbits)
        iso.push_back(c.jumps());
      orbits.push_back({{"representative", ov.orbit.representative().jumps()},
                        {"members", std::move(members)},
                        {"gcd_signature", ov.signature},
                        {"verdict", to_string(ov.verdict)},
                        {"isomorphic_orbits", std::move(iso)},
                        {"anomalies", ov.anomalies}});
    }
    json doc{{"n", n}, {"size", size}, {"orbits", std::move(orbits)}};
    return doc.dump(2) + "\n";
  }
  if (format == Format::Csv)
    throw std::invalid_argument("csv output is only available for censuses");
  std::ostringstream out;
  std::size_t non_ci = 0, anomalies = 0;
  for (const auto& ov : census) {
    non_ci += ov.verdict == FullCIVerdict::NonCI;
    anomalies += ov.anomalies.size();
  }
  out << "Adam orbits of order " << n << ", |R| = " << size << ": " << census.size() << " (" << non_ci
      << " non-CI, " << anomalies << " anomalies)\n";
  for (const auto& ov : census) {
    out << "  Ad_" << n << '(' << ov.orbit.representative().name() << ") size " << ov.orbit.members.size()
        << ", gcd signature {" << join(ov.signature) << "}: " << to_string(ov.verdict);
    if (!ov.isomorphic_orbits.empty()) {
      out << ", isomorphic to";
      for (const auto& c : ov.isomorphic_orbits)
        out << ' ' << c.name();
    }
    out << '\n';
    for (const auto& a : ov.anomalies)
      out << "    anomaly: " << a << '\n';
  }
  return out.str();
}

std::string render_family(const FamilyInstance& f, const FamilyVerification& v, Format format)
{
  if (format == Format::Json) {
    json sets = json::array();
    for (std::size_t i = 0; i < f.sets.size(); ++i)
      sets.push_back({{"set", f.sets[i].jumps()}, {"formula_values", f.formula_values[i]}});
    json doc{{"kind", to_string(f.kind)},   {"parameter", f.parameter},   {"order", f.order},
             {"modulus", f.modulus},        {"expected_t", f.expected_t}, {"degenerate", f.degenerate},
             {"sets", std::move(sets)},     {"theta_relations", v.theta_relations},
             {"type2", v.type2},            {"adam_exclusion", v.adam_exclusion},
             {"failures", v.failures},      {"verified", v.ok()}};
    doc["s"] = f.s ? json(*f.s) : json(nullptr);
    doc["k"] = f.k ? json(*f.k) : json(nullptr);
    doc["oracle"] = v.oracle ? json(*v.oracle) : json(nullptr);
    return doc.dump(2) + "\n";
  }
  if (format == Format::Csv)
    throw std::invalid_argument("csv output is only available for censuses");
  std::ostringstream out;
  out << "family " << to_string(f.kind) << " parameter " << f.parameter;
  if (f.s)
    out << ", s = " << *f.s;
  if (f.k)
    out << ", k = " << *f.k;
  out << ": order " << f.order;
  if (f.modulus)
    out << ", m = " << f.modulus << ", t = " << join(f.expected_t, ", ");
  if (f.degenerate)
    out << " (degenerate: sets coincide)";
  out << '\n';
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    std::vector<int> raw;
    for (auto value : f.formula_values[i])
      raw.push_back(static_cast<int>(value));
    out << "  " << f.sets[i].name() << "  from {" << join(raw, ", ") << "}\n";
  }
  out << "  theta relations: " << (v.theta_relations ? "ok" : "FAILED") << '\n';
  if (!f.degenerate) {
    out << "  type2 verdicts:  " << (v.type2 ? "ok" : "FAILED") << '\n';
    out << "  Adam exclusion:  " << (v.adam_exclusion ? "ok" : "FAILED") << '\n';
  }
  out << "  oracle:          " << (v.oracle ? (*v.oracle ? "isomorphic" : "FAILED") : "skipped (order above cap)")
      << '\n';
  for (const auto& failure : v.failures)
    out << "  failure: " << failure << '\n';
  return out.str();
}

}  // namespace circulant
