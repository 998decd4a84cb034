#include "casson3/su2.hpp"

#include <algorithm>

namespace casson3 {

bool su2_irreducible_exists(const Rational& g1, const Rational& g2, const Rational& g3) {
  const Rational zero(0), one(1);
  for (const Rational* g : {&g1, &g2, &g3}) {
    if (*g <= zero || *g >= one) {
      throw Error(ErrorKind::DomainError, "rotation number " + to_string(*g) + " outside (0,1)");
    }
  }
  const Rational diff = g1 > g2 ? g1 - g2 : g2 - g1;
  return diff < g3 && g3 < std::min(g1 + g2, Rational(2) - g1 - g2);
}

namespace {

std::vector<Rational> rotation_numbers(i64 n, i64 parity) {
  std::vector<Rational> out;
  for (i64 j = 1; j < n; ++j) {
    if (mod_floor(j, 2) == parity) out.emplace_back(j, n);
  }
  return out;
}

}  // namespace

std::vector<Su2Class> su2_classes(const SurgeryData& data, int eps) {
  validate(data);
  if (eps != 0 && eps != 1) throw Error(ErrorKind::InvalidArgument, "eps must be 0 or 1");
  const i64 pa = mod_floor(data.a * eps, 2);
  const i64 pc = mod_floor(data.c * eps, 2);
  const auto gx = rotation_numbers(data.p, pa);
  const auto gy = rotation_numbers(data.q, pa);
  const auto gz = rotation_numbers(data.r, pc);
  std::vector<Su2Class> out;
  for (const auto& g1 : gx) {
    for (const auto& g2 : gy) {
      for (const auto& g3 : gz) {
        if (su2_irreducible_exists(g1, g2, g3)) out.push_back({g1, g2, g3});
      }
    }
  }
  return out;
}

i64 count_pointed_spheres(const SurgeryData& data) {
  return static_cast<i64>(su2_classes(data, 0).size());
}

i64 count_type_Ib(const SurgeryData& data) {
  return static_cast<i64>(su2_classes(data, 1).size());
}

}  // namespace casson3
