#include "casson3/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <optional>
#include <thread>

#include "casson3/su2.hpp"

namespace casson3 {

const char* to_string(PointClass c) noexcept {
  switch (c) {
    case PointClass::Ia: return "Ia";
    case PointClass::IIa: return "IIa";
    case PointClass::IIb: return "IIb";
    case PointClass::Excluded: return "Excluded";
    case PointClass::Outside: return "Outside";
    case PointClass::DiagnosticTight: return "DiagnosticTight";
  }
  return "?";
}

int weight(PointClass c) {
  switch (c) {
    case PointClass::Ia: return 1;
    case PointClass::IIa:
    case PointClass::IIb: return 2;
    case PointClass::Excluded:
    case PointClass::Outside: return 0;
    case PointClass::DiagnosticTight: break;
  }
  throw Error(ErrorKind::DiagnosticTight, "a tight point has no weight");
}

namespace {

bool su2_reduction(const AlcovePoint& a, const AlcovePoint& b, const AlcovePoint& c, int ell) {
  if (ell != 0) return false;
  if (!a.has_unit_eigenvalue() || !b.has_unit_eigenvalue() || !c.has_unit_eigenvalue()) return false;
  return su2_irreducible_exists(Rational(2 * a.k3, a.denom), Rational(2 * b.k3, b.denom),
                                Rational(2 * c.k3, c.denom));
}

int repeated(Multiplicity m) { return m == Multiplicity::Distinct ? 0 : 1; }

}  // namespace

PointClass classify_lattice_point(const AlcovePoint& a, const AlcovePoint& b, const AlcovePoint& c, int ell) {
  const FusionMargins m = inequality_margins(a, b, c);
  if (!m.all_satisfied()) return PointClass::Outside;
  const Multiplicity mc = classify_multiplicity(c);
  if (mc == Multiplicity::Central) return PointClass::Excluded;
  const int rep = repeated(classify_multiplicity(a)) + repeated(classify_multiplicity(b)) + repeated(mc);
  if (rep >= 2) return PointClass::Excluded;
  if (rep == 1) return PointClass::Ia;
  if (m.any_tight()) return PointClass::DiagnosticTight;
  return su2_reduction(a, b, c, ell) ? PointClass::IIb : PointClass::IIa;
}

DiagnosticTightError::DiagnosticTightError(CassonResult result)
    : Error(ErrorKind::DiagnosticTight,
            std::to_string(result.diagnostics.size()) + " lattice point(s) with distinct eigenvalues on a facet"),
      result_(std::move(result)) {}

namespace {

// Integer bounds on one scaled coordinate of c, with the exact face value
// when the rational bound is itself a lattice value.
struct AxisRange {
  i64 lo = 0;
  i64 hi = -1;
  bool lo_exact = false;
  bool hi_exact = false;

  bool tight(i64 k) const noexcept { return (lo_exact && k == lo) || (hi_exact && k == hi); }
};

AxisRange axis_range(i64 lower, i64 upper, i64 denom, i64 dc) {
  const i128 ln = static_cast<i128>(lower) * dc;
  const i128 un = static_cast<i128>(upper) * dc;
  AxisRange r;
  r.lo = narrow(ceil_div(ln, denom));
  r.hi = narrow(floor_div(un, denom));
  r.lo_exact = ln % denom == 0;
  r.hi_exact = un % denom == 0;
  return r;
}

i64 round_up(i64 x, i64 rho) { return x + mod_floor(rho - x, 3); }
i64 round_down(i64 x, i64 rho) { return x - mod_floor(x - rho, 3); }

class SliceCounter {
 public:
  SliceCounter(const FusionSlice& slice, const SurgeryData& data, ComponentTally& out)
      : slice_(slice), out_(out) {
    dc_ = 3 * data.r;
    rho_ = mod_floor(static_cast<i64>(data.c_mod3) * slice.ell, 3);
    const SliceBounds& s = slice.bounds;
    x_ = axis_range(s.xl, s.xu, s.denom, dc_);
    y_ = axis_range(s.yl, s.yu, s.denom, dc_);
    z_ = axis_range(s.zl, s.zu, s.denom, dc_);
    rep_ab_ = repeated(classify_multiplicity(slice.a)) + repeated(classify_multiplicity(slice.b));
    generic_ = rep_ab_ == 1 ? PointClass::Ia : PointClass::IIa;
  }

  void run() {
    if (slice_.bounds.empty_box()) return;
    const i64 k1_first = round_up(std::max(x_.lo, -2 * (dc_ / 3)), rho_);
    const i64 k1_last = std::min<i64>(x_.hi, 0);
    for (i64 k1 = k1_first; k1 <= k1_last; k1 += 3) row(k1);
  }

 private:
  void row(i64 k1) {
    i64 lo = std::max({y_.lo, k1, -2 * k1 - dc_, -k1 - z_.hi});
    i64 hi = std::min({y_.hi, (-k1) / 2, -k1 - z_.lo});
    lo = round_up(lo, rho_);
    hi = round_down(hi, rho_);
    if (lo > hi) return;
    const i64 n = (hi - lo) / 3 + 1;
    out_.n_points += n;
    if (k1 == 0 || x_.tight(k1)) {
      for (i64 k2 = lo; k2 <= hi; k2 += 3) point(k1, k2);
      return;
    }
    std::array<i64, 9> cand{};
    int nc = 0;
    auto add = [&](i64 k2) {
      if (k2 >= lo && k2 <= hi && mod_floor(k2 - rho_, 3) == 0) cand[nc++] = k2;
    };
    add(k1);
    if (k1 % 2 == 0) add(-k1 / 2);
    add(-2 * k1 - dc_);
    add(0);
    if (y_.lo_exact) add(y_.lo);
    if (y_.hi_exact) add(y_.hi);
    if (z_.lo_exact) add(-k1 - z_.lo);
    if (z_.hi_exact) add(-k1 - z_.hi);
    std::sort(cand.begin(), cand.begin() + nc);
    nc = static_cast<int>(std::unique(cand.begin(), cand.begin() + nc) - cand.begin());
    for (int i = 0; i < nc; ++i) point(k1, cand[i]);
    tally(generic_, n - nc);
  }

  void point(i64 k1, i64 k2) {
    const i64 k3 = -k1 - k2;
    const AlcovePoint c{k1, k2, k3, dc_};
    const Multiplicity mc = classify_multiplicity(c);
    if (mc == Multiplicity::Central) {
      ++out_.n_central;
      tally(PointClass::Excluded, 1);
      return;
    }
    const int rep = rep_ab_ + repeated(mc);
    if (rep >= 2) {
      tally(PointClass::Excluded, 1);
    } else if (rep == 1) {
      tally(PointClass::Ia, 1);
    } else if (x_.tight(k1) || y_.tight(k2) || z_.tight(k3)) {
      out_.tight.push_back({out_.slice_id, k1, k2});
    } else {
      tally(su2_reduction(slice_.a, slice_.b, c, slice_.ell) ? PointClass::IIb : PointClass::IIa, 1);
    }
  }

  void tally(PointClass c, i64 n) {
    switch (c) {
      case PointClass::Ia: out_.n_ia += n; break;
      case PointClass::IIa: out_.n_iia += n; break;
      case PointClass::IIb: out_.n_iib += n; break;
      case PointClass::Excluded: out_.n_excluded += n; break;
      default: break;
    }
  }

  const FusionSlice& slice_;
  ComponentTally& out_;
  i64 dc_ = 3;
  i64 rho_ = 0;
  AxisRange x_, y_, z_;
  int rep_ab_ = 0;
  PointClass generic_ = PointClass::IIa;
};

struct RootTable {
  std::array<std::vector<AlcovePoint>, 3> a;
  std::array<std::vector<AlcovePoint>, 3> b;
  std::array<std::vector<Multiplicity>, 3> ma;
  std::array<std::vector<Multiplicity>, 3> mb;
};

RootTable root_table(const SurgeryData& data) {
  RootTable t;
  for (int ell = 0; ell < 3; ++ell) {
    t.a[ell] = root_classes(data.p, ell, data.a_mod3);
    t.b[ell] = root_classes(data.q, ell, data.a_mod3);
    for (const auto& x : t.a[ell]) t.ma[ell].push_back(classify_multiplicity(x));
    for (const auto& x : t.b[ell]) t.mb[ell].push_back(classify_multiplicity(x));
  }
  return t;
}

bool admissible(Multiplicity ma, Multiplicity mb) {
  return !(ma == Multiplicity::Double && mb == Multiplicity::Double);
}

struct WorkUnit {
  int ell = 0;
  std::size_t ai = 0;
  i64 first_id = 0;
};

struct UnitResult {
  Totals totals;
  Census census;
  i64 lattice_points = 0;
  std::vector<ComponentTally> slices;
  std::vector<TightPoint> tight;
};

void add_tally(UnitResult& u, const ComponentTally& t) {
  u.totals.n_ia += t.n_ia;
  u.totals.n_iia += t.n_iia;
  u.totals.n_iib += t.n_iib;
  u.totals.n_excluded += t.n_excluded;
  u.totals.n_central += t.n_central;
  u.totals.n_tight += static_cast<i64>(t.tight.size());
  u.lattice_points += t.n_points;
  if (t.kind == SliceKind::TypeI) {
    ++u.census.n_type_i;
  } else {
    ++u.census.n_type_ii;
  }
  u.tight.insert(u.tight.end(), t.tight.begin(), t.tight.end());
}

UnitResult run_unit(const RootTable& t, const WorkUnit& w, const SurgeryData& data, bool keep) {
  UnitResult u;
  const AlcovePoint& a = t.a[w.ell][w.ai];
  const Multiplicity ma = t.ma[w.ell][w.ai];
  i64 id = w.first_id;
  for (std::size_t bi = 0; bi < t.b[w.ell].size(); ++bi) {
    if (!admissible(ma, t.mb[w.ell][bi])) continue;
    const FusionSlice slice = FusionSlice::make(a, t.b[w.ell][bi], w.ell);
    ComponentTally tally = enumerate_slice(slice, data, id++);
    add_tally(u, tally);
    if (keep) u.slices.push_back(std::move(tally));
  }
  return u;
}

}  // namespace

std::vector<FusionSlice> generate_slices(const SurgeryData& data) {
  validate(data);
  const RootTable t = root_table(data);
  std::vector<FusionSlice> out;
  for (int ell = 0; ell < 3; ++ell) {
    for (std::size_t ai = 0; ai < t.a[ell].size(); ++ai) {
      for (std::size_t bi = 0; bi < t.b[ell].size(); ++bi) {
        if (!admissible(t.ma[ell][ai], t.mb[ell][bi])) continue;
        out.push_back(FusionSlice::make(t.a[ell][ai], t.b[ell][bi], ell));
      }
    }
  }
  return out;
}

ComponentTally enumerate_slice(const FusionSlice& slice, const SurgeryData& data, i64 slice_id) {
  ComponentTally out;
  out.slice_id = slice_id;
  out.ell = slice.ell;
  out.a = slice.a;
  out.b = slice.b;
  out.kind = slice.kind;
  SliceCounter(slice, data, out).run();
  return out;
}

CassonResult tau(const SurgeryData& data, const EngineOptions& options) {
  validate(data);
  const RootTable t = root_table(data);

  std::vector<WorkUnit> units;
  i64 next_id = 0;
  for (int ell = 0; ell < 3; ++ell) {
    for (std::size_t ai = 0; ai < t.a[ell].size(); ++ai) {
      units.push_back({ell, ai, next_id});
      for (const Multiplicity mb : t.mb[ell]) next_id += admissible(t.ma[ell][ai], mb) ? 1 : 0;
    }
  }

  std::vector<UnitResult> results(units.size());
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, units.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < units.size(); ++i) results[i] = run_unit(t, units[i], data, options.keep_slices);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < units.size(); i = next++) {
            results[i] = run_unit(t, units[i], data, options.keep_slices);
          }
        } catch (...) {
          errors[w] = std::current_exception();
          next = units.size();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  CassonResult res;
  res.surgery = data;
  for (auto& u : results) {
    res.totals.n_ia += u.totals.n_ia;
    res.totals.n_iia += u.totals.n_iia;
    res.totals.n_iib += u.totals.n_iib;
    res.totals.n_excluded += u.totals.n_excluded;
    res.totals.n_central += u.totals.n_central;
    res.totals.n_tight += u.totals.n_tight;
    res.census.n_type_i += u.census.n_type_i;
    res.census.n_type_ii += u.census.n_type_ii;
    res.lattice_points += u.lattice_points;
    res.diagnostics.insert(res.diagnostics.end(), u.tight.begin(), u.tight.end());
    for (auto& s : u.slices) res.slices.push_back(std::move(s));
  }
  res.tau = res.totals.n_ia + 2 * res.totals.n_iia + 2 * res.totals.n_iib;
  if (options.throw_on_tight && !res.diagnostics.empty()) throw DiagnosticTightError(std::move(res));
  return res;
}

CassonResult tau(i64 p, i64 q, i64 r, const EngineOptions& options) {
  return tau(normalize_mod3(make_surgery_data(p, q, r)), options);
}

Census component_census(i64 p, i64 q, i64 r) {
  const SurgeryData data = normalize_mod3(make_surgery_data(p, q, r));
  const RootTable t = root_table(data);
  Census c;
  for (int ell = 0; ell < 3; ++ell) {
    for (const Multiplicity ma : t.ma[ell]) {
      for (const Multiplicity mb : t.mb[ell]) {
        if (!admissible(ma, mb)) continue;
        if (ma == Multiplicity::Distinct && mb == Multiplicity::Distinct) {
          ++c.n_type_ii;
        } else {
          ++c.n_type_i;
        }
      }
    }
  }
  return c;
}

}  // namespace casson3
