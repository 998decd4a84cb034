#pragma once

#include <array>
#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "casson3/alcove.hpp"
#include "casson3/enumerate.hpp"

namespace casson3::oracle {

using Q = boost::multiprecision::cpp_rational;
using QTriple = std::array<Q, 3>;

/// A half-plane n1*c1 + n2*c2 <= offset in the plane c1 + c2 + c3 = 0.
struct HalfPlane {
  Q n1;
  Q n2;
  Q offset;
};

/// The 18 fusion constraints with a and b substituted, followed by the three
/// alcove walls for c.
std::vector<HalfPlane> slice_half_planes(const AlcovePoint& a, const AlcovePoint& b);

/// Raw slack of each of the 18 constraints, parsed from their written form.
std::array<Q, 18> raw_margins(const AlcovePoint& a, const AlcovePoint& b, const AlcovePoint& c);

/// Pairwise line intersections satisfying every half-plane, sorted and
/// deduplicated.
std::vector<QTriple> polygon_vertices(const std::vector<HalfPlane>& planes);

/// Vertices of the slice polygon: every pairwise line intersection that
/// satisfies all half-planes, deduplicated and sorted.
std::vector<QTriple> vertices_by_halfplane_intersection(const AlcovePoint& a, const AlcovePoint& b);

QTriple to_q(const RationalTriple& v);

/// `count` distinct slices for the pair (p, q) in random order: first those
/// of actual components (a, b roots of the same central element), then, if
/// those run out, pairs of roots of different central elements. Fewer are
/// returned only when both pools are exhausted.
std::vector<FusionSlice> sample_slices(i64 p, i64 q, std::size_t count, std::uint32_t seed);

/// Sorted, deduplicated copy.
std::vector<QTriple> vertex_set(std::vector<QTriple> v);

struct ScanTally {
  i64 scanned = 0;
  i64 outside = 0;
  i64 n_ia = 0;
  i64 n_iia = 0;
  i64 n_iib = 0;
  i64 n_excluded = 0;
  i64 n_tight = 0;
  i64 box_violations = 0;  // in P but outside the six-bound box
  i64 box_excess = 0;      // inside the box but outside P
  i64 disagreements = 0;   // engine says Outside where raw margins say in P, or vice versa
};

/// Every alcove point of denominator D (a multiple of 3), optionally only
/// those with k1 = k2 = residue (mod 3); residue < 0 disables the filter.
ScanTally dense_membership_scan(const AlcovePoint& a, const AlcovePoint& b, int ell, i64 D, int residue);

}  // namespace casson3::oracle
