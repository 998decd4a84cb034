#pragma once

#include <array>
#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "casson3/alcove.hpp"
#include "casson3/arith.hpp"

namespace casson3 {

using Rational = boost::rational<i64>;
using RationalTriple = std::array<Rational, 3>;

std::string to_string(const Rational& x);

/// One of the 18 fusion inequalities  a_i + b_j + c_k  (<= or >=)  bound,
/// coordinates 0-based.
struct FusionConstraint {
  int ia;
  int ib;
  int ic;
  bool upper;  // true: sum <= bound, false: sum >= bound
  int bound;
};

/// The 18 inequalities in display order: the first block of three rows, then
/// the second, each row read left to right. Tightness diagnostics refer to
/// indices into this table.
extern const std::array<FusionConstraint, 18> kFusionConstraints;

/// Signed slack of every constraint over a common denominator; >= 0 means
/// satisfied, 0 means tight.
struct FusionMargins {
  std::array<i128, 18> value{};
  i128 denom = 1;

  bool all_satisfied() const noexcept;
  bool any_tight() const noexcept;
  int first_violated() const noexcept;  // -1 when none
  Rational at(int index) const;
};

FusionMargins inequality_margins(const AlcovePoint& a, const AlcovePoint& b, const AlcovePoint& c);

enum class Membership { Outside, BoundaryFirstKind, BoundarySecondKind, Interior };

const char* to_string(Membership m) noexcept;

/// Position of the class triple relative to the fusion polytope P: outside,
/// on a facet (some inequality tight), on the boundary only because a class
/// has a repeated eigenvalue, or in the interior.
Membership membership(const AlcovePoint& a, const AlcovePoint& b, const AlcovePoint& c);

/// Bounds of c = (c1,c2,c3) on the slice a, b fixed, as integers over the
/// common denominator lcm(a.denom, b.denom):
///   xl <= c1*denom <= xu,  yl <= c2*denom <= yu,  zl <= c3*denom <= zu.
struct SliceBounds {
  i64 denom = 1;
  i64 xl = 0, xu = 0, yl = 0, yu = 0, zl = 0, zu = 0;

  Rational Xl() const { return {xl, denom}; }
  Rational Xu() const { return {xu, denom}; }
  Rational Yl() const { return {yl, denom}; }
  Rational Yu() const { return {yu, denom}; }
  Rational Zl() const { return {zl, denom}; }
  Rational Zu() const { return {zu, denom}; }

  bool empty_box() const noexcept { return xl > xu || yl > yu || zl > zu; }
  bool contains(const AlcovePoint& c) const;
  bool operator==(const SliceBounds&) const = default;
};

SliceBounds slice_bounds(const AlcovePoint& a, const AlcovePoint& b);

enum class SliceKind { TypeI, TypeII };

const char* to_string(SliceKind k) noexcept;

/// One component C^ell_ab of the knot-complement representation variety,
/// with the slice Q^ell_ab of the fusion polytope it maps onto.
struct FusionSlice {
  AlcovePoint a;
  AlcovePoint b;
  int ell = 0;
  SliceKind kind = SliceKind::TypeII;
  SliceBounds bounds;

  /// Throws InvalidArgument when a or b is central or both repeat an
  /// eigenvalue (no irreducible component there).
  static FusionSlice make(const AlcovePoint& a, const AlcovePoint& b, int ell);
};

/// Polygon vertices of the slice, in boundary order. Type I slices give the
/// hexagon V1..V6. Type II slices give the nonagon V1..V9, except that a
/// pair of vertices on an alcove wall collapses into the box corner when the
/// box never reaches that wall. Coincident vertices are kept; an empty box
/// yields no vertices.
std::vector<RationalTriple> slice_vertices(const FusionSlice& slice);

}  // namespace casson3
