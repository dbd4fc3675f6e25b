#pragma once

#include "circulant/adam.hpp"
#include "circulant/classify.hpp"
#include "circulant/families.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circulant {

enum class Format { Json, Csv, Text };

Format parse_format(std::string_view text);

inline constexpr int kCensusSchemaVersion = 1;
inline constexpr std::string_view kCensusCsvHeader = "n,left,right,m_witnesses,t_witnesses,oracle_confirmed";

struct EmitOptions {
  /// Included as "generated_at" in JSON when set; canonical output leaves it
  /// empty so documents are byte-stable.
  std::optional<std::string> timestamp;
};

/// Serializes a census. JSON keys are sorted and the layout is fixed.
std::string emit_census(const PairCensus& census, Format format, const EmitOptions& options = {});

/// Parses the JSON census document. Throws std::invalid_argument on schema
/// violations (wrong version, inconsistent counts, malformed sets).
PairCensus parse_census_json(std::string_view document);

struct ThetaTableRow {
  int t = 0;
  std::vector<int> image;
  bool equidistant = false;
  /// "Not", "Yes (same)", "Yes (Type-1 with 11 in phi_24)" or "Yes (Type-2)".
  std::string verdict;
  /// Set when the edge-level computation disagrees with the jump-level test.
  std::optional<std::string> diagnostic;
};

struct ThetaTable {
  ConnectionSet source;
  int m = 0;
  std::vector<int> domain;
  std::vector<ThetaTableRow> rows;  // t = 1 .. n/m - 1
};

/// Elementwise images of R u (n - R) under theta_{n,m,t} for every t.
ThetaTable theta_table(const ConnectionSet& c, int m);

std::string render_theta_table(const ThetaTable& table);
std::string render_theta_table(const ConnectionSet& c, int m);

std::string render_orbit(const AdamOrbit& orbit, const ConnectionSet& base, Format format);
std::string render_records(const std::vector<ClassificationRecord>& records, Format format);
std::string render_ci_census(int n, int size, const std::vector<OrbitVerdict>& census, Format format);
std::string render_family(const FamilyInstance& family, const FamilyVerification& verification, Format format);

}  // namespace circulant
