#include "casson3/arith.hpp"

#include <limits>
#include <numeric>
#include <sstream>

namespace casson3 {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::UnsupportedP: return "UnsupportedP";
    case ErrorKind::DiagnosticTight: return "DiagnosticTight";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

i128 floor_div(i128 num, i128 den) {
  i128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

i128 ceil_div(i128 num, i128 den) { return -floor_div(-num, den); }

i64 mod_floor(i64 x, i64 m) {
  i64 v = x % m;
  return v < 0 ? v + m : v;
}

i64 narrow(i128 value) {
  if (value > std::numeric_limits<i64>::max() || value < std::numeric_limits<i64>::min()) {
    throw Error(ErrorKind::Overflow, "value does not fit in 64 bits");
  }
  return static_cast<i64>(value);
}

i128 checked_mul(i128 x, i128 y) {
  i128 out;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw Error(ErrorKind::Overflow, "128-bit product overflow");
  }
  return out;
}

i128 SurgeryData::bezout_value() const {
  return checked_mul(checked_mul(a, r), p + q) + checked_mul(checked_mul(c, p), q);
}

namespace {

// Inverse of x modulo m (m >= 1, gcd(x, m) = 1), in [0, m).
i128 mod_inverse(i128 x, i128 m) {
  if (m == 1) return 0;
  i128 old_r = ((x % m) + m) % m, r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 quot = old_r / r;
    i128 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  return ((old_s % m) + m) % m;
}

int residue3(i64 x) { return static_cast<int>(mod_floor(x, 3)); }

void check_triple(i64 p, i64 q, i64 r) {
  if (p < 1 || q < 1 || r < 1) {
    std::ostringstream os;
    os << "(" << p << "," << q << "," << r << ") has an entry < 1";
    throw Error(ErrorKind::NonPositive, os.str());
  }
  auto check_pair = [](i64 x, i64 y) {
    if (std::gcd(x, y) != 1) {
      std::ostringstream os;
      os << "gcd(" << x << "," << y << ") = " << std::gcd(x, y);
      throw Error(ErrorKind::NotCoprime, os.str());
    }
  };
  check_pair(p, q);
  check_pair(p, r);
  check_pair(q, r);
  // Scaled coordinates live on denominators 3p, 3q, 3r and margins on 3pqr;
  // keep a factor 8 of headroom inside int64.
  i128 scale = checked_mul(checked_mul(checked_mul(24, p), q), r);
  if (scale > std::numeric_limits<i64>::max()) {
    throw Error(ErrorKind::Overflow, "24*p*q*r exceeds the 64-bit coordinate range");
  }
}

SurgeryData with_residues(SurgeryData d) {
  d.a_mod3 = residue3(d.a);
  d.c_mod3 = residue3(d.c);
  return d;
}

}  // namespace

SurgeryData make_surgery_data(i64 p, i64 q, i64 r) {
  check_triple(p, q, r);
  const i128 pq = static_cast<i128>(p) * q;
  const i128 rpq = static_cast<i128>(r) * (p + q);
  const i128 a = mod_inverse(rpq, pq);
  const i128 rest = 1 - checked_mul(a, rpq);
  SurgeryData d;
  d.p = p;
  d.q = q;
  d.r = r;
  d.a = narrow(a);
  d.c = narrow(rest / pq);
  d = with_residues(d);
  if (d.bezout_value() != 1) throw Error(ErrorKind::InvalidArgument, "Bezout identity failed");
  return d;
}

SurgeryData shift_framing(const SurgeryData& data, i64 k) {
  SurgeryData d = data;
  d.a = narrow(static_cast<i128>(data.a) + checked_mul(checked_mul(data.p, data.q), k));
  d.c = narrow(static_cast<i128>(data.c) - checked_mul(checked_mul(k, data.p + data.q), data.r));
  return with_residues(d);
}

void validate(const SurgeryData& data) {
  check_triple(data.p, data.q, data.r);
  if (data.bezout_value() != 1) {
    throw Error(ErrorKind::InvalidArgument, "a*r*(p+q) + c*p*q != 1");
  }
  if (data.a_mod3 != residue3(data.a) || data.c_mod3 != residue3(data.c)) {
    throw Error(ErrorKind::InvalidArgument, "stale mod-3 residues");
  }
}

SurgeryData normalize_mod3(const SurgeryData& data, std::optional<i64> m) {
  validate(data);
  const i64 pq = data.p * data.q;
  if (m) {
    if (mod_floor(data.r, pq) != mod_floor(*m, pq)) {
      throw Error(ErrorKind::InvalidArgument, "r is not congruent to m modulo pq");
    }
  }
  const i64 m_eff = m ? *m : mod_floor(data.r, pq);
  const bool three_divides = (pq % 3 == 0);
  // The shift k in {0,1,2} moves a by pq*k and c by -k(p+q)r; exactly one k
  // reaches the target residue of whichever coordinate is adjustable.
  for (i64 k = 0; k < 3; ++k) {
    SurgeryData d = shift_framing(data, k);
    if (!three_divides) {
      if (d.a_mod3 == 0) return d;
    } else {
      if (d.c_mod3 == residue3(-m_eff)) return d;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no framing shift reaches the normalized residues");
}

}  // namespace casson3
