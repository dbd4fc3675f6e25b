#pragma once

// Number-theoretic substrate: reflexive reduction modulo n, unit groups and
// divisor enumeration. Every function here is pure.

#include <cstdint>
#include <span>
#include <vector>

namespace circulant {

/// Mathematical gcd of non-negative integers (gcd(0, 0) == 0).
int gcd(std::int64_t a, std::int64_t b);

/// Residue of v in [0, n); negative v allowed.
int mod(std::int64_t v, int n);

/// Reflexive reduction of v modulo n: reduce into [0, n), then fold values
/// above n/2 onto n - value. Result lies in [0, n/2] and is 0 iff n | v.
int reflexive_reduce(int n, std::int64_t v);

/// Reflexively reduces every value, drops zeros, deduplicates and sorts.
/// Throws std::invalid_argument when nothing survives (edgeless graph).
std::vector<int> reduce_values(int n, std::span<const std::int64_t> values);

/// Units of Z_n in ascending order: 1 <= x < n with gcd(n, x) == 1.
std::vector<int> unit_group(int n);

bool is_unit(int n, std::int64_t x);

/// Divisors of k strictly greater than 1, ascending. Empty for k == 1.
std::vector<int> divisors_gt1(int k);

}  // namespace circulant
