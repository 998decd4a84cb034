#include "casson3/alcove.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace casson3 {

bool AlcovePoint::in_alcove(i64 k1, i64 k2, i64 k3, i64 denom) noexcept {
  return denom > 0 && k1 + k2 + k3 == 0 && k1 <= k2 && k2 <= k3 && k3 <= k1 + denom;
}

AlcovePoint AlcovePoint::make(i64 k1, i64 k2, i64 denom) {
  const i64 k3 = -k1 - k2;
  if (!in_alcove(k1, k2, k3, denom)) {
    std::ostringstream os;
    os << "(" << k1 << "," << k2 << "," << k3 << ")/" << denom << " is not in the alcove";
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  return {k1, k2, k3, denom};
}

AlcovePoint AlcovePoint::from_exponents(i64 e1, i64 e2, i64 e3, i64 denom) {
  if (denom <= 0) throw Error(ErrorKind::InvalidArgument, "denominator must be positive");
  std::array<i64, 3> e{mod_floor(e1, denom), mod_floor(e2, denom), mod_floor(e3, denom)};
  std::sort(e.begin(), e.end());
  const i64 sum = e[0] + e[1] + e[2];
  if (sum % denom != 0) {
    throw Error(ErrorKind::InvalidArgument, "exponents do not multiply to determinant 1");
  }
  // Reduced exponents lie in [0, denom), so the sum is 0, denom or 2*denom;
  // wrapping the largest sum/denom of them down by denom lands in the alcove.
  const i64 wraps = sum / denom;
  for (i64 i = 0; i < wraps; ++i) e[2 - i] -= denom;
  std::sort(e.begin(), e.end());
  return make(e[0], e[1], denom);
}

std::string AlcovePoint::to_string() const {
  std::ostringstream os;
  os << "(" << k1 << "," << k2 << "," << k3 << ")/" << denom;
  return os.str();
}

const char* to_string(Multiplicity m) noexcept {
  switch (m) {
    case Multiplicity::Distinct: return "Distinct";
    case Multiplicity::Double: return "Double";
    case Multiplicity::Central: return "Central";
  }
  return "?";
}

Multiplicity classify_multiplicity(const AlcovePoint& pt) noexcept {
  // Within the alcove two exponents agree mod denom iff they are equal or
  // k3 = k1 + denom.
  const bool e12 = pt.k1 == pt.k2;
  const bool e23 = pt.k2 == pt.k3;
  const bool e13 = pt.k1 == pt.k3 || pt.k3 == pt.k1 + pt.denom;
  const int equal_pairs = int(e12) + int(e23) + int(e13);
  if (equal_pairs == 0) return Multiplicity::Distinct;
  if (equal_pairs == 1) return Multiplicity::Double;
  return Multiplicity::Central;
}

std::vector<AlcovePoint> root_classes(i64 p, int ell, int a_mod3) {
  if (p < 1) throw Error(ErrorKind::NonPositive, "root_classes needs p >= 1");
  const i64 residue = mod_floor(static_cast<i64>(a_mod3) * ell, 3);
  const i64 denom = 3 * p;
  std::vector<AlcovePoint> out;
  // k1 in [-2p, 0] and k1 <= k2 <= k3 = -k1-k2 cover the alcove.
  i64 k1 = -2 * p;
  k1 += mod_floor(residue - k1, 3);
  for (; k1 <= 0; k1 += 3) {
    i64 k2 = k1;  // k1 already carries the residue
    for (; 2 * k2 <= -k1; k2 += 3) {
      const i64 k3 = -k1 - k2;
      if (k3 > k1 + denom) continue;
      AlcovePoint pt{k1, k2, k3, denom};
      if (classify_multiplicity(pt) == Multiplicity::Central) continue;
      out.push_back(pt);
    }
  }
  return out;
}

RootClassCounts count_root_classes(i64 p, int ell) {
  if (p < 1) throw Error(ErrorKind::NonPositive, "count_root_classes needs p >= 1");
  if (ell < 0 || ell > 2) throw Error(ErrorKind::InvalidArgument, "ell must be 0, 1 or 2");
  if (p % 3 != 0) return {(p * p - 3 * p + 2) / 6, p - 1};
  if (ell == 0) return {(p * p - 3 * p + 6) / 6, p - 3};
  return {(p * p - 3 * p) / 6, p};
}

}  // namespace casson3
