#pragma once

// Parametric Type-2 families and the k-scaling rule. Generators emit reduced
// connection sets and keep the raw formula values for display.

#include "circulant/classify.hpp"
#include "circulant/connection_set.hpp"
#include "circulant/iso_oracle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace circulant {

enum class FamilyKind { M2, M3, M5, M7, Scaled };

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& text);

struct FamilyInstance {
  FamilyKind kind = FamilyKind::M2;
  /// The family parameter (the theorem's n; for Scaled, the source order).
  int parameter = 0;
  std::optional<int> s;  // M2 only
  std::optional<int> k;  // Scaled only
  int order = 0;
  /// theta modulus relating the sets; 0 when no theta relation is claimed.
  int modulus = 0;
  std::vector<ConnectionSet> sets;
  /// Unreduced formula values, one list per set.
  std::vector<std::vector<std::int64_t>> formula_values;
  /// Shifts at which theta carries sets[i] to sets[i + 1] (cyclically).
  std::vector<int> expected_t;
  bool degenerate = false;
};

/// R = {2, 2s-1, 4n-(2s-1)}, S = {2, 2n-(2s-1), 2n+2s-1} at order 8n, related
/// by theta_{8n,2,n} and theta_{8n,2,3n}. Requires n >= 2 and 1 <= s <= n.
FamilyInstance family_m2(int n, int s);

/// R, S, T at order 27n cycled by theta_{27n,3,n}. Requires n >= 1.
FamilyInstance family_m3(int n);

/// R_1..R_5 at order 125n; theta_{125n,5,jn} maps R_i to R_{i+j}. n >= 1.
FamilyInstance family_m5(int n);

/// R_1..R_7 at order 343n; theta_{343n,7,jn} maps R_i to R_{i+j}. n >= 1.
FamilyInstance family_m7(int n);

/// (kR, kS) at order k*n. Requires equal orders and k >= 2.
std::pair<ConnectionSet, ConnectionSet> scale_pair(const ConnectionSet& r, const ConnectionSet& s, int k);

FamilyInstance family_scaled(const ConnectionSet& r, const ConnectionSet& s, int k);

struct FamilyVerification {
  /// Every stated theta relation holds at edge level.
  bool theta_relations = true;
  /// Every theta relation between distinct sets classifies as type2.
  bool type2 = true;
  /// No two distinct sets share an Adam orbit.
  bool adam_exclusion = true;
  /// Oracle isomorphism of all sets to sets[0]; empty above the cap.
  std::optional<bool> oracle;
  std::vector<std::string> failures;

  bool ok() const { return theta_relations && type2 && adam_exclusion && oracle.value_or(true); }
};

/// Checks an instance through the classify pipeline. Degenerate instances
/// only have their theta relations checked.
FamilyVerification verify_family(const FamilyInstance& family, const OracleOptions& oracle = {});

}  // namespace circulant
