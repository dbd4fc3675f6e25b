#pragma once

#include "circulant/adam.hpp"
#include "circulant/connection_set.hpp"
#include "circulant/iso_oracle.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace circulant {

/// One theta parameter choice.
struct Probe {
  int m = 0;
  int t = 0;

  friend bool operator==(const Probe&, const Probe&) = default;
  friend auto operator<=>(const Probe&, const Probe&) = default;
};

/// An admissible modulus together with the jumps it divides gcd(n, r) for.
struct AdmissibleModulus {
  int m = 0;
  std::vector<int> witnesses;

  friend bool operator==(const AdmissibleModulus&, const AdmissibleModulus&) = default;
};

/// Union over r in R of the divisors > 1 of gcd(n, r), ascending.
std::vector<AdmissibleModulus> admissible_m(const ConnectionSet& c);

enum class Outcome { NotCirculant, Self, Type1, Type2 };

std::string to_string(Outcome o);

struct ClassificationRecord {
  ConnectionSet source;
  Probe probe;
  Outcome outcome = Outcome::NotCirculant;
  /// Image connection set for every outcome except NotCirculant.
  std::optional<ConnectionSet> image;
  /// Unit x with image = reduce(x * source), for Type1.
  std::optional<int> unit;
};

struct ClassifyOptions {
  /// Smallest |R| the Type-2 protocol applies to.
  std::size_t min_size = 3;
};

/// Runs theta_{n,m,t} on c and classifies the image. Requires m admissible
/// for c and 1 <= t <= n/m - 1; throws std::invalid_argument otherwise.
ClassificationRecord classify_pair(const ConnectionSet& c, int m, int t);

/// Every probe (admissible m ascending, t ascending) applied to c.
std::vector<ClassificationRecord> classify_all(const ConnectionSet& c);

struct Type2Partner {
  ConnectionSet partner;
  std::vector<Probe> probes;
};

/// Distinct Type-2 images of c with all probes reaching them, partner
/// ascending. Throws std::invalid_argument when |c| < options.min_size.
std::vector<Type2Partner> type2_partners(const ConnectionSet& c, const ClassifyOptions& options = {});

struct CensusPair {
  ConnectionSet left;   // left < right
  ConnectionSet right;
  std::vector<Probe> witnesses;  // from either direction, ascending
  std::optional<bool> oracle_confirmed;

  friend bool operator==(const CensusPair&, const CensusPair&) = default;
};

struct PairCensus {
  int n = 0;
  int size_min = 0;
  int size_max = 0;
  std::vector<CensusPair> pairs;               // ascending by (left, right)
  std::map<int, int> counts_by_size;           // |R| -> number of pairs

  friend bool operator==(const PairCensus&, const PairCensus&) = default;
};

struct CensusOptions {
  ClassifyOptions classify;
  /// Worker threads; 0 selects hardware concurrency.
  unsigned jobs = 1;
  /// Confirm each pair with the isomorphism oracle when n <= oracle.order_cap.
  bool verify_with_oracle = true;
  OracleOptions oracle;
};

/// All unordered Type-2 pairs {R, S} with size_min <= |R| <= size_max.
/// Output does not depend on options.jobs.
PairCensus enumerate_type2(int n, int size_min, int size_max, const CensusOptions& options = {});

/// Recomputes counts_by_size from the pair list.
std::map<int, int> count_by_size(const std::vector<CensusPair>& pairs);

enum class CIVerdict { CITheta, NonCI };

std::string to_string(CIVerdict v);

struct CIStatus {
  ConnectionSet graph;
  CIVerdict verdict = CIVerdict::CITheta;
  std::vector<Type2Partner> evidence;
};

/// CI judged by theta images only: non-CI iff some Type-2 partner exists.
/// Sets below options.min_size are reported CI-theta with no evidence.
CIStatus ci_theta_status(const ConnectionSet& c, const ClassifyOptions& options = {});

enum class FullCIVerdict { CI, NonCI };

std::string to_string(FullCIVerdict v);

struct OrbitVerdict {
  AdamOrbit orbit;
  std::vector<int> signature;
  FullCIVerdict verdict = FullCIVerdict::CI;
  /// Representatives of other Adam orbits isomorphic to this one.
  std::vector<ConnectionSet> isomorphic_orbits;
  /// Disagreements between the theta-restricted verdict and the oracle.
  std::vector<std::string> anomalies;
};

struct FullCensusOptions {
  ClassifyOptions classify;
  OracleOptions oracle;
  unsigned jobs = 1;
};

/// Groups every size-k connection set of order n into Adam orbits and decides
/// isomorphism between orbits with the oracle. Orbits ascend by representative.
std::vector<OrbitVerdict> ci_full_census(int n, int size, const FullCensusOptions& options = {});

/// All k-subsets of [1, n/2] as connection sets, lexicographic order.
std::vector<ConnectionSet> all_connection_sets(int n, int size);

}  // namespace circulant
