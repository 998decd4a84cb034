#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace casson3 {

using i64 = std::int64_t;
using i128 = __int128;

enum class ErrorKind {
  NonPositive,
  NotCoprime,
  Overflow,
  InvalidArgument,
  DomainError,
  NotQuadratic,
  UnsupportedP,
  DiagnosticTight,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error thrown by the library. `kind()` is what the CLI maps
/// onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Floor/ceil division and nonnegative remainder; den must be nonzero.
i128 floor_div(i128 num, i128 den);
i128 ceil_div(i128 num, i128 den);
i64 mod_floor(i64 x, i64 m);

/// Narrowing with a range check; throws Error(Overflow).
i64 narrow(i128 value);

/// Product that throws Error(Overflow) instead of wrapping.
i128 checked_mul(i128 x, i128 y);

/// Surgery data of the Brieskorn sphere Sigma(p,q,r): Seifert invariants plus
/// a framing pair (a, c) with a*r*(p+q) + c*p*q = 1.
struct SurgeryData {
  i64 p = 1;
  i64 q = 1;
  i64 r = 1;
  i64 a = 0;
  i64 c = 1;
  int a_mod3 = 0;
  int c_mod3 = 1;

  /// a*r*(p+q) + c*p*q, evaluated in 128 bits.
  i128 bezout_value() const;
  bool operator==(const SurgeryData&) const = default;
};

/// Canonical surgery data: smallest nonnegative a, c forced by the identity.
/// Throws NonPositive, NotCoprime or Overflow.
SurgeryData make_surgery_data(i64 p, i64 q, i64 r);

/// Another valid framing: a' = a + pq*k, c' = c - k*(p+q)*r.
SurgeryData shift_framing(const SurgeryData& data, i64 k);

/// Re-chooses (a, c) so that their residues mod 3 depend only on (p, q, m):
///   3 does not divide pq: a = 0, c = pq (mod 3)
///   3 divides pq:         a = (p+q)m, c = -m (mod 3)
/// `m` defaults to r mod pq; when supplied it must satisfy r = m (mod pq).
/// Idempotent.
SurgeryData normalize_mod3(const SurgeryData& data, std::optional<i64> m = std::nullopt);

/// Throws if the triple or the framing is invalid.
void validate(const SurgeryData& data);

}  // namespace casson3
