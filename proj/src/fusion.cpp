#include "casson3/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace casson3 {

std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << x.numerator();
  if (x.denominator() != 1) os << "/" << x.denominator();
  return os.str();
}

// clang-format off
const std::array<FusionConstraint, 18> kFusionConstraints{{
    {0, 1, 1, true, 0},  {0, 2, 2, false, 0}, {1, 2, 2, true, 1},
    {1, 0, 1, true, 0},  {2, 0, 2, false, 0}, {2, 1, 2, true, 1},
    {1, 1, 0, true, 0},  {2, 2, 0, false, 0}, {2, 2, 1, true, 1},
    {1, 1, 2, false, 0}, {0, 0, 2, true, 0},  {0, 0, 1, false, -1},
    {1, 2, 1, false, 0}, {0, 2, 0, true, 0},  {0, 1, 0, false, -1},
    {2, 1, 1, false, 0}, {2, 0, 0, true, 0},  {1, 0, 0, false, -1},
}};
// clang-format on

bool FusionMargins::all_satisfied() const noexcept { return first_violated() < 0; }

bool FusionMargins::any_tight() const noexcept {
  return std::any_of(value.begin(), value.end(), [](i128 v) { return v == 0; });
}

int FusionMargins::first_violated() const noexcept {
  for (int i = 0; i < 18; ++i) {
    if (value[i] < 0) return i;
  }
  return -1;
}

Rational FusionMargins::at(int index) const {
  return Rational(narrow(value.at(index)), narrow(denom));
}

namespace {

std::array<i64, 3> coords(const AlcovePoint& x) { return {x.k1, x.k2, x.k3}; }

}  // namespace

FusionMargins inequality_margins(const AlcovePoint& a, const AlcovePoint& b, const AlcovePoint& c) {
  const i128 l_ab = std::lcm(a.denom, b.denom);
  const i128 den = checked_mul(l_ab / std::gcd(static_cast<i64>(l_ab), c.denom), c.denom);
  const i128 sa = den / a.denom, sb = den / b.denom, sc = den / c.denom;
  const auto ka = coords(a), kb = coords(b), kc = coords(c);
  FusionMargins m;
  m.denom = den;
  for (int i = 0; i < 18; ++i) {
    const auto& f = kFusionConstraints[i];
    const i128 sum = ka[f.ia] * sa + kb[f.ib] * sb + kc[f.ic] * sc;
    const i128 bound = f.bound * den;
    m.value[i] = f.upper ? bound - sum : sum - bound;
  }
  return m;
}

const char* to_string(Membership m) noexcept {
  switch (m) {
    case Membership::Outside: return "Outside";
    case Membership::BoundaryFirstKind: return "BoundaryFirstKind";
    case Membership::BoundarySecondKind: return "BoundarySecondKind";
    case Membership::Interior: return "Interior";
  }
  return "?";
}

Membership membership(const AlcovePoint& a, const AlcovePoint& b, const AlcovePoint& c) {
  const FusionMargins m = inequality_margins(a, b, c);
  if (!m.all_satisfied()) return Membership::Outside;
  if (m.any_tight()) return Membership::BoundaryFirstKind;
  const bool distinct = classify_multiplicity(a) == Multiplicity::Distinct &&
                        classify_multiplicity(b) == Multiplicity::Distinct &&
                        classify_multiplicity(c) == Multiplicity::Distinct;
  return distinct ? Membership::Interior : Membership::BoundarySecondKind;
}

bool SliceBounds::contains(const AlcovePoint& c) const {
  // c_j / c.denom against bound / denom, cross-multiplied.
  auto ge = [&](i64 k, i64 bound) { return static_cast<i128>(k) * denom >= static_cast<i128>(bound) * c.denom; };
  auto le = [&](i64 k, i64 bound) { return static_cast<i128>(k) * denom <= static_cast<i128>(bound) * c.denom; };
  return ge(c.k1, xl) && le(c.k1, xu) && ge(c.k2, yl) && le(c.k2, yu) && ge(c.k3, zl) && le(c.k3, zu);
}

SliceBounds slice_bounds(const AlcovePoint& a, const AlcovePoint& b) {
  const i64 den = std::lcm(a.denom, b.denom);
  const i64 sa = den / a.denom, sb = den / b.denom;
  const i64 a1 = a.k1 * sa, a2 = a.k2 * sa, a3 = a.k3 * sa;
  const i64 b1 = b.k1 * sb, b2 = b.k2 * sb, b3 = b.k3 * sb;
  const i64 one = den;
  SliceBounds s;
  s.denom = den;
  s.xl = std::max({-one - a1 - b2, -one - a2 - b1, -a3 - b3});
  s.xu = std::min({-a1 - b3, -a3 - b1, -a2 - b2});
  s.yl = std::max({-one - a1 - b1, -a2 - b3, -a3 - b2});
  s.yu = std::min({-a1 - b2, -a2 - b1, one - a3 - b3});
  s.zl = std::max({-a1 - b3, -a3 - b1, -a2 - b2});
  s.zu = std::min({-a1 - b1, one - a2 - b3, one - a3 - b2});
  return s;
}

const char* to_string(SliceKind k) noexcept { return k == SliceKind::TypeI ? "I" : "II"; }

FusionSlice FusionSlice::make(const AlcovePoint& a, const AlcovePoint& b, int ell) {
  const Multiplicity ma = classify_multiplicity(a);
  const Multiplicity mb = classify_multiplicity(b);
  if (ma == Multiplicity::Central || mb == Multiplicity::Central) {
    throw Error(ErrorKind::InvalidArgument, "slice classes must be noncentral");
  }
  if (ma == Multiplicity::Double && mb == Multiplicity::Double) {
    throw Error(ErrorKind::InvalidArgument, "at least one slice class needs three distinct eigenvalues");
  }
  FusionSlice s;
  s.a = a;
  s.b = b;
  s.ell = ell;
  s.kind = (ma == Multiplicity::Distinct && mb == Multiplicity::Distinct) ? SliceKind::TypeII : SliceKind::TypeI;
  s.bounds = slice_bounds(a, b);
  return s;
}

std::vector<RationalTriple> slice_vertices(const FusionSlice& slice) {
  const SliceBounds& s = slice.bounds;
  if (s.empty_box()) return {};
  const Rational Xl = s.Xl(), Xu = s.Xu(), Yl = s.Yl(), Yu = s.Yu(), Zl = s.Zl(), Zu = s.Zu();
  const Rational one(1);
  std::vector<RationalTriple> v;
  if (slice.kind == SliceKind::TypeI) {
    v = {
        {Xu, -Xu - Zl, Zl}, {-Yu - Zl, Yu, Zl}, {Xl, Yu, -Xl - Yu},
        {Xl, -Xl - Zu, Zu}, {-Yl - Zu, Yl, Zu}, {Xu, Yl, -Xu - Yl},
    };
    return v;
  }
  v.push_back({Xu, -Xu - Zl, Zl});
  if (Yu <= Zl) {
    v.push_back({-Yu - Zl, Yu, Zl});
  } else {
    v.push_back({-2 * Zl, Zl, Zl});
    v.push_back({-2 * Yu, Yu, Yu});
  }
  v.push_back({Xl, Yu, -Xl - Yu});
  if (Zu <= Xl + one) {
    v.push_back({Xl, -Xl - Zu, Zu});
  } else {
    v.push_back({Xl, -one - 2 * Xl, one + Xl});
    v.push_back({Zu - one, one - 2 * Zu, Zu});
  }
  v.push_back({-Yl - Zu, Yl, Zu});
  if (Xu <= Yl) {
    v.push_back({Xu, Yl, -Xu - Yl});
  } else {
    v.push_back({Yl, Yl, -2 * Yl});
    v.push_back({Xu, Xu, -2 * Xu});
  }
  return v;
}

}  // namespace casson3
