#pragma once

#include <compare>
#include <string>
#include <vector>

#include "casson3/arith.hpp"

namespace casson3 {

/// Conjugacy class of an SU(3) element: eigenvalues exp(2*pi*i*k_j/denom)
/// with the exponents normalized into the Weyl alcove
///   k1 <= k2 <= k3 <= k1 + denom,  k1 + k2 + k3 = 0.
struct AlcovePoint {
  i64 k1 = 0;
  i64 k2 = 0;
  i64 k3 = 0;
  i64 denom = 1;

  /// Builds (k1, k2, -k1-k2)/denom; throws InvalidArgument if it is not in
  /// the alcove.
  static AlcovePoint make(i64 k1, i64 k2, i64 denom);

  /// Canonical alcove representative of the eigenvalue multiset
  /// {exp(2*pi*i*e_j/denom)}; requires e1 + e2 + e3 = 0 (mod denom).
  static AlcovePoint from_exponents(i64 e1, i64 e2, i64 e3, i64 denom);

  static bool in_alcove(i64 k1, i64 k2, i64 k3, i64 denom) noexcept;

  /// True when exp(2*pi*i*k_j/denom) = 1 for some j (only k2 can be zero
  /// unless the point is the identity).
  bool has_unit_eigenvalue() const noexcept { return k1 == 0 || k2 == 0 || k3 == 0; }

  /// Class of the inverse matrix.
  AlcovePoint inverse() const noexcept { return {-k3, -k2, -k1, denom}; }

  std::string to_string() const;

  auto operator<=>(const AlcovePoint&) const = default;
};

enum class Multiplicity { Distinct, Double, Central };

const char* to_string(Multiplicity m) noexcept;

/// Number of distinct eigenvalues, read off the exponents modulo denom (so
/// k3 = k1 + denom counts as a repeat).
Multiplicity classify_multiplicity(const AlcovePoint& pt) noexcept;

/// Noncentral classes X with X^p = exp(2*pi*i*ell*a/3) I, as alcove points of
/// denominator 3p whose scaled coordinates are all = a*ell (mod 3).
/// Sorted lexicographically by (k1, k2).
std::vector<AlcovePoint> root_classes(i64 p, int ell, int a_mod3);

struct RootClassCounts {
  i64 distinct = 0;  // three distinct eigenvalues
  i64 doubled = 0;   // exactly two distinct eigenvalues
  bool operator==(const RootClassCounts&) const = default;
};

/// Closed-form number of conjugacy classes of p-th roots of
/// exp(2*pi*i*ell/3) I with three (resp. two) distinct eigenvalues.
RootClassCounts count_root_classes(i64 p, int ell);

}  // namespace casson3
