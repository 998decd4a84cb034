#pragma once

#include "casson3/arith.hpp"
#include "casson3/fusion.hpp"

namespace casson3 {

/// Rotation numbers of the SU(2) images of x, y, z: the image of x has
/// eigenvalues exp(+-pi*i*gamma1), and so on.
struct Su2Class {
  Rational gamma1;
  Rational gamma2;
  Rational gamma3;
  bool operator==(const Su2Class&) const = default;
};

/// Strict spherical triangle test
///   |g1 - g2| < g3 < min(g1 + g2, 2 - g1 - g2).
/// Throws DomainError unless every g lies strictly between 0 and 1.
bool su2_irreducible_exists(const Rational& g1, const Rational& g2, const Rational& g3);

/// Irreducible SU(2) classes with h -> (-I)^eps. The image of x is a p-th
/// root of (-I)^(a*eps), so gamma1 = j/p with 0 < j < p and j = a*eps
/// (mod 2); likewise gamma2 with q and a, gamma3 with r and c.
std::vector<Su2Class> su2_classes(const SurgeryData& data, int eps);

/// Classes with h -> I; these are the pointed 2-spheres (Type IIb).
i64 count_pointed_spheres(const SurgeryData& data);

/// Classes with h -> -I (Type Ib, weight 0).
i64 count_type_Ib(const SurgeryData& data);

}  // namespace casson3
