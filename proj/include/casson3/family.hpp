#pragma once

#include <utility>
#include <vector>

#include "casson3/enumerate.hpp"
#include "casson3/fusion.hpp"

namespace casson3 {

/// The surgery family Sigma(p, q, pq*n + m). m may be negative, as in
/// pq*n - 1; r(n) must stay positive for every sampled n.
struct FamilySpec {
  i64 p = 2;
  i64 q = 3;
  i64 m = 1;

  i64 r(i64 n) const;
};

struct FamilySample {
  i64 n = 0;
  i64 tau = 0;
  bool operator==(const FamilySample&) const = default;
};

/// tau(Sigma(p,q,pq*n+m)) for n = n_first..n_last, each with the framing
/// normalized with respect to m so the congruence data does not move with n.
std::vector<FamilySample> family_tau(const FamilySpec& spec, i64 n_first, i64 n_last,
                                     const EngineOptions& options = {});

/// tau(n) = A n^2 + B n + C.
struct QuadraticFit {
  Rational A;
  Rational B;
  Rational C;

  Rational at(i64 n) const { return A * n * n + B * n + C; }
  bool operator==(const QuadraticFit&) const = default;
};

/// Thrown by fit_quadratic; n() is the first sample off the fitted parabola.
class NotQuadraticError : public Error {
 public:
  NotQuadraticError(i64 n, const std::string& what) : Error(ErrorKind::NotQuadratic, what), n_(n) {}
  i64 n() const noexcept { return n_; }

 private:
  i64 n_;
};

/// Fits the first three samples by finite differences and checks the rest.
/// Samples must be at consecutive n.
QuadraticFit fit_quadratic(const std::vector<FamilySample>& samples);

/// (p^2-1)(q^2-1)(2p^2q^2 - 3p^2 - 3q^2 - 3)/240.
Rational conway_leading_coeff(i64 p, i64 q);

/// Empirical B(K_{p,q}) for p in {2,3,4}; throws UnsupportedP otherwise.
Rational b_coefficient_formula(i64 p, i64 q);

}  // namespace casson3
