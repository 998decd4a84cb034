#pragma once

#include <vector>

#include "casson3/alcove.hpp"
#include "casson3/arith.hpp"
#include "casson3/fusion.hpp"

namespace casson3 {

enum class PointClass { Ia, IIa, IIb, Excluded, Outside, DiagnosticTight };

const char* to_string(PointClass c) noexcept;

/// Contribution to tau. Throws DiagnosticTight for that class.
int weight(PointClass c);

/// Classifies c = (k1,k2,k3)/3r against the slice (a, b, ell), using the full
/// set of 18 margins.
PointClass classify_lattice_point(const AlcovePoint& a, const AlcovePoint& b, const AlcovePoint& c, int ell);

struct TightPoint {
  i64 slice_id = 0;
  i64 k1 = 0;
  i64 k2 = 0;
  bool operator==(const TightPoint&) const = default;
};

struct ComponentTally {
  i64 slice_id = 0;
  int ell = 0;
  AlcovePoint a;
  AlcovePoint b;
  SliceKind kind = SliceKind::TypeII;
  i64 n_ia = 0;
  i64 n_iia = 0;
  i64 n_iib = 0;
  i64 n_excluded = 0;
  i64 n_central = 0;  // central c inside P, also counted in n_excluded
  i64 n_points = 0;   // lattice points of the slice that were classified
  std::vector<TightPoint> tight;

  i64 weighted() const noexcept { return n_ia + 2 * n_iia + 2 * n_iib; }
  bool operator==(const ComponentTally&) const = default;
};

struct Totals {
  i64 n_ia = 0;
  i64 n_iia = 0;
  i64 n_iib = 0;
  i64 n_excluded = 0;
  i64 n_central = 0;
  i64 n_tight = 0;
  bool operator==(const Totals&) const = default;
};

struct Census {
  i64 n_type_i = 0;
  i64 n_type_ii = 0;
  bool operator==(const Census&) const = default;
};

struct CassonResult {
  SurgeryData surgery;
  i64 tau = 0;
  Totals totals;
  Census census;
  std::vector<ComponentTally> slices;  // filled when EngineOptions::keep_slices
  std::vector<TightPoint> diagnostics;
  i64 lattice_points = 0;
  bool operator==(const CassonResult&) const = default;
};

struct EngineOptions {
  unsigned threads = 1;  // 0: one per hardware thread
  bool keep_slices = false;
  bool throw_on_tight = true;
};

/// Thrown when a lattice point with three distinct-eigenvalue classes lies on
/// a facet of P; carries the full result with its diagnostics.
class DiagnosticTightError : public Error {
 public:
  explicit DiagnosticTightError(CassonResult result);
  const CassonResult& result() const noexcept { return result_; }

 private:
  CassonResult result_;
};

/// All slices of Sigma(p,q,r) for this framing, ordered by ell, then a, then b.
std::vector<FusionSlice> generate_slices(const SurgeryData& data);

/// Tally of the lattice points c = (k1,k2,k3)/3r in the slice with
/// k1 = k2 = c_mod3*ell (mod 3).
ComponentTally enumerate_slice(const FusionSlice& slice, const SurgeryData& data, i64 slice_id = 0);

/// tau of Sigma(p,q,r) with the normalized framing.
CassonResult tau(i64 p, i64 q, i64 r, const EngineOptions& options = {});

/// tau with the framing exactly as given.
CassonResult tau(const SurgeryData& data, const EngineOptions& options = {});

Census component_census(i64 p, i64 q, i64 r);

}  // namespace casson3
