#include "casson3/family.hpp"

#include <numeric>
#include <sstream>

namespace casson3 {

i64 FamilySpec::r(i64 n) const { return narrow(checked_mul(checked_mul(p, q), n) + m); }

std::vector<FamilySample> family_tau(const FamilySpec& spec, i64 n_first, i64 n_last,
                                     const EngineOptions& options) {
  if (spec.p < 1 || spec.q < 1) throw Error(ErrorKind::NonPositive, "family needs p, q >= 1");
  if (std::gcd(spec.p, spec.q) != 1) throw Error(ErrorKind::NotCoprime, "family needs gcd(p,q) = 1");
  if (std::gcd(spec.p * spec.q, mod_floor(spec.m, spec.p * spec.q)) != 1) {
    throw Error(ErrorKind::NotCoprime, "m must be prime to pq");
  }
  if (n_first > n_last) throw Error(ErrorKind::InvalidArgument, "empty range of n");
  std::vector<FamilySample> out;
  for (i64 n = n_first; n <= n_last; ++n) {
    const i64 r = spec.r(n);
    if (r < 1) throw Error(ErrorKind::NonPositive, "r = pq*n + m < 1 at n = " + std::to_string(n));
    const SurgeryData d = normalize_mod3(make_surgery_data(spec.p, spec.q, r), spec.m);
    out.push_back({n, tau(d, options).tau});
  }
  return out;
}

QuadraticFit fit_quadratic(const std::vector<FamilySample>& samples) {
  if (samples.size() < 3) throw Error(ErrorKind::InvalidArgument, "a quadratic fit needs at least 3 samples");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].n != samples[i - 1].n + 1) {
      throw Error(ErrorKind::InvalidArgument, "samples must be at consecutive n");
    }
  }
  const i64 n0 = samples[0].n;
  const Rational t0(samples[0].tau), t1(samples[1].tau), t2(samples[2].tau);
  // In u = n - n0: tau = t0 + d1*u + d2*u(u-1)/2.
  const Rational d1 = t1 - t0;
  const Rational d2 = t2 - 2 * t1 + t0;
  const Rational a = d2 / 2;
  const Rational b = d1 - d2 / 2;
  QuadraticFit fit;
  fit.A = a;
  fit.B = b - 2 * a * n0;
  fit.C = t0 - b * n0 + a * n0 * n0;
  for (const auto& s : samples) {
    if (fit.at(s.n) != Rational(s.tau)) {
      std::ostringstream os;
      os << "tau(" << s.n << ") = " << s.tau << " but the fit gives " << to_string(fit.at(s.n));
      throw NotQuadraticError(s.n, os.str());
    }
  }
  return fit;
}

Rational conway_leading_coeff(i64 p, i64 q) {
  if (p < 2 || q < 2) throw Error(ErrorKind::InvalidArgument, "torus knot needs p, q >= 2");
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::NotCoprime, "torus knot needs gcd(p,q) = 1");
  const i128 p2 = static_cast<i128>(p) * p, q2 = static_cast<i128>(q) * q;
  const i128 num = checked_mul(checked_mul(p2 - 1, q2 - 1), 2 * p2 * q2 - 3 * p2 - 3 * q2 - 3);
  return Rational(narrow(num), 240);
}

Rational b_coefficient_formula(i64 p, i64 q) {
  if (q < 3 || std::gcd(p, q) != 1) throw Error(ErrorKind::InvalidArgument, "need q >= 3 prime to p");
  const i64 q2 = q * q, q3 = q2 * q;
  switch (p) {
    case 2: {
      const i64 k = mod_floor(q, 4) == 1 ? 3 : -3;
      return Rational(q3 - 4 * q + k, 12);
    }
    case 3: {
      const i64 rq = mod_floor(q, 6);
      const i64 sign = (rq == 1 || rq == 4) ? 1 : -1;
      const i64 k = rq == 1 ? 25 : rq == 2 ? 2 : rq == 4 ? -2 : -25;
      return Rational(20 * q3 + sign * 3 * q2 - 48 * q + k, 54);
    }
    case 4: {
      const i64 rq = mod_floor(q, 8);
      const i64 sign = (rq == 1 || rq == 5) ? 1 : -1;
      const i64 k = rq == 1 ? 25 : rq == 3 ? 39 : rq == 5 ? -39 : -25;
      return Rational(16 * q3 + sign * q2 - 42 * q + k, 16);
    }
    default: break;
  }
  throw Error(ErrorKind::UnsupportedP, "B(K_{p,q}) is only known for p = 2, 3, 4");
}

}  // namespace casson3
