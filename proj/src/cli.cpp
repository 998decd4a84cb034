#include "casson3/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

#include "casson3/report.hpp"
#include "casson3/su2.hpp"

namespace casson3 {

namespace {

unsigned resolve_threads(int flag) {
  if (flag >= 0) return static_cast<unsigned>(flag);
  if (const char* env = std::getenv("CASSON3_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<unsigned>(v);
  }
  return 0;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::DiagnosticTight: return kExitDiagnosticTight;
    case ErrorKind::NotQuadratic: return kExitNotQuadratic;
    default: return kExitInvalidInput;
  }
}

struct TauArgs {
  i64 p = 0, q = 0, r = 0;
  bool breakdown = false;
  std::string format = "text";
  int threads = -1;
};

struct FamilyArgs {
  i64 p = 0, q = 0, m = 0;
  i64 n_max = 0;
  std::string format = "text";
  int threads = -1;
};

struct VerifyArgs {
  std::string data;
  bool full = false;
  int threads = -1;
};

struct Su2Args {
  i64 p = 0, q = 0, r = 0;
  std::string format = "text";
};

int cmd_tau(const TauArgs& a, std::ostream& out) {
  EngineOptions opt;
  opt.threads = resolve_threads(a.threads);
  opt.keep_slices = a.breakdown || a.format == "json";
  opt.throw_on_tight = false;
  const CassonResult r = tau(a.p, a.q, a.r, opt);
  if (a.format == "json") {
    nlohmann::ordered_json j = to_json(r);
    if (!a.breakdown) j["slices"] = nlohmann::ordered_json::array();
    out << j.dump(2) << "\n";
  } else if (a.format == "csv") {
    write_csv(out, r, a.breakdown);
  } else {
    write_text(out, r, a.breakdown);
  }
  return r.diagnostics.empty() ? kExitOk : kExitDiagnosticTight;
}

int cmd_family(const FamilyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n_max < 3) {
    err << "error: --n-max must be at least 3 to fit a quadratic\n";
    return kExitInvalidInput;
  }
  const FamilySpec spec{a.p, a.q, a.m};
  EngineOptions opt;
  opt.threads = resolve_threads(a.threads);
  const auto samples = family_tau(spec, 1, a.n_max, opt);
  std::optional<QuadraticFit> fit;
  std::optional<NotQuadraticError> bad;
  try {
    fit = fit_quadratic(samples);
  } catch (const NotQuadraticError& e) {
    bad = e;
  }
  if (a.format == "json") {
    out << family_to_json(spec, samples, fit ? &*fit : nullptr).dump(2) << "\n";
  } else if (a.format == "csv") {
    out << "n,r,tau\n";
    for (const auto& s : samples) out << s.n << "," << spec.r(s.n) << "," << s.tau << "\n";
    if (fit) out << "\nA,B,C\n" << to_string(fit->A) << "," << to_string(fit->B) << "," << to_string(fit->C) << "\n";
  } else {
    out << "family: Sigma(" << a.p << "," << a.q << "," << a.p * a.q << "n" << (a.m < 0 ? "" : "+") << a.m << ")\n";
    for (const auto& s : samples) out << "n=" << s.n << " r=" << spec.r(s.n) << " tau=" << s.tau << "\n";
    if (fit) out << "fit: A=" << to_string(fit->A) << " B=" << to_string(fit->B) << " C=" << to_string(fit->C) << "\n";
  }
  if (bad) {
    err << "error: " << bad->what() << " (n=" << bad->n() << ")\n";
    return kExitNotQuadratic;
  }
  return kExitOk;
}

int cmd_su2(const Su2Args& a, std::ostream& out) {
  const SurgeryData d = normalize_mod3(make_surgery_data(a.p, a.q, a.r));
  const i64 pointed = count_pointed_spheres(d);
  const i64 ib = count_type_Ib(d);
  if (a.format == "json") {
    out << nlohmann::ordered_json{{"schema", kReportSchema}, {"p", a.p}, {"q", a.q}, {"r", a.r},
                          {"pointed", pointed}, {"typeIb", ib}}
               .dump(2)
        << "\n";
  } else if (a.format == "csv") {
    out << "p,q,r,pointed,typeIb\n" << a.p << "," << a.q << "," << a.r << "," << pointed << "," << ib << "\n";
  } else {
    out << "pointed: " << pointed << "\n";
    out << "typeIb: " << ib << "\n";
  }
  return kExitOk;
}

class VerifyLog {
 public:
  explicit VerifyLog(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& name, const std::string& detail = "") {
    ++checks_;
    if (ok) {
      out_ << "ok    " << name << "\n";
    } else {
      ++failures_;
      out_ << "FAIL  " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    }
  }

  int failures() const { return failures_; }
  int checks() const { return checks_; }

 private:
  std::ostream& out_;
  int checks_ = 0;
  int failures_ = 0;
};

std::string fit_diff(const QuadraticFit& got, i64 A, i64 B, i64 C) {
  std::ostringstream os;
  os << "expected A=" << A << " B=" << B << " C=" << C << ", got A=" << to_string(got.A)
     << " B=" << to_string(got.B) << " C=" << to_string(got.C);
  return os.str();
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const std::string path = a.data.empty() ? default_data_path() : a.data;
  const ExpectedData data = load_expected(path);
  if (!data.checksum_ok()) {
    err << "error: checksum mismatch in " << path << std::hex << ": stored " << data.stored_checksum
        << ", computed " << data.computed_checksum << std::dec << "\n";
    return kExitChecksum;
  }
  EngineOptions opt;
  opt.threads = resolve_threads(a.threads);
  VerifyLog log(out);

  for (const auto& e : data.entries) {
    if (e.kind == ExpectedEntry::Kind::Family) {
      for (const int sign : {1, -1}) {
        const FamilySpec spec{e.p, e.q, sign * e.m0};
        const QuadraticFit fit = fit_quadratic(family_tau(spec, 1, 3, opt));
        std::ostringstream name;
        name << "family Sigma(" << e.p << "," << e.q << "," << e.p * e.q << "n" << (sign > 0 ? "+" : "-") << e.m0
             << ")";
        const bool ok = fit == QuadraticFit{Rational(e.A), Rational(sign * e.B), Rational(e.C)};
        log.check(ok, name.str(), ok ? "" : fit_diff(fit, e.A, sign * e.B, e.C));
      }
    } else {
      if (!a.full && e.q > 11) continue;
      const FamilySpec spec{e.p, e.q, -1};
      const QuadraticFit fit = fit_quadratic(family_tau(spec, 1, 3, opt));
      std::ostringstream name;
      name << "knot K(" << e.p << "," << e.q << ")";
      const bool ok = fit == QuadraticFit{Rational(e.A), Rational(-e.B), Rational(0)};
      log.check(ok, name.str(), ok ? "" : fit_diff(fit, e.A, -e.B, 0));
      const Rational A = conway_leading_coeff(e.p, e.q);
      log.check(A == Rational(e.A), name.str() + " leading coefficient formula", "formula gives " + to_string(A));
      if (e.p >= 2 && e.p <= 4) {
        const Rational B = b_coefficient_formula(e.p, e.q);
        log.check(B == Rational(e.B), name.str() + " linear coefficient formula", "formula gives " + to_string(B));
      }
    }
  }

  for (i64 p = 1; p <= 12; ++p) {
    for (int ell = 0; ell < 3; ++ell) {
      RootClassCounts got;
      for (const auto& pt : root_classes(p, ell, 1)) {
        (classify_multiplicity(pt) == Multiplicity::Distinct ? got.distinct : got.doubled) += 1;
      }
      const RootClassCounts want = count_root_classes(p, ell);
      std::ostringstream name, detail;
      name << "root classes p=" << p << " ell=" << ell;
      detail << "closed form " << want.distinct << "/" << want.doubled << ", generated " << got.distinct << "/"
             << got.doubled;
      log.check(got == want, name.str(), detail.str());
    }
  }

  for (i64 p = 3; p <= 11; p += 2) {
    for (i64 q = p + 2; q <= 11; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      const Census c = component_census(p, q, p * q + 1);
      const i64 ni = (p - 1) * (q - 1) * (p + q - 4) / 2;
      const i64 nii = (p - 1) * (p - 2) * (q - 1) * (q - 2) / 12;
      std::ostringstream name, detail;
      name << "census (" << p << "," << q << ")";
      detail << "expected N_I=" << ni << " N_II=" << nii << ", got " << c.n_type_i << " " << c.n_type_ii;
      log.check(c.n_type_i == ni && c.n_type_ii == nii, name.str(), detail.str());
    }
  }

  for (i64 q = 3; q <= 15; q += 2) {
    for (i64 r = q + 2; r <= 15; r += 2) {
      if (std::gcd(q, r) != 1) continue;
      const CassonResult res = tau(2, q, r, opt);
      const i64 su2 = count_pointed_spheres(res.surgery);
      std::ostringstream name, detail;
      name << "no pointed spheres (2," << q << "," << r << ")";
      detail << "IIb=" << res.totals.n_iib << " SU(2) pointed=" << su2;
      log.check(res.totals.n_iib == 0 && su2 == 0, name.str(), detail.str());
    }
  }

  out << "verify: " << log.checks() << " checks, " << log.failures() << " failures\n";
  return log.failures() == 0 ? kExitOk : kExitVerifyMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"SU(3) Casson invariants of Brieskorn spheres", "casson3"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "csv"};

  TauArgs ta;
  auto* tau_cmd = app.add_subcommand("tau", "tau of Sigma(p,q,r)");
  tau_cmd->add_option("--p", ta.p)->required();
  tau_cmd->add_option("--q", ta.q)->required();
  tau_cmd->add_option("--r", ta.r)->required();
  tau_cmd->add_flag("--breakdown", ta.breakdown, "Per-slice tallies and census");
  tau_cmd->add_option("--format", ta.format)->check(CLI::IsMember(formats));
  tau_cmd->add_option("--threads", ta.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

  FamilyArgs fa;
  auto* fam_cmd = app.add_subcommand("family", "tau of Sigma(p,q,pq*n+m) for n = 1..n-max and its quadratic fit");
  fam_cmd->add_option("--p", fa.p)->required();
  fam_cmd->add_option("--q", fa.q)->required();
  fam_cmd->add_option("--m", fa.m)->required();
  fam_cmd->add_option("--n-max", fa.n_max)->required();
  fam_cmd->add_option("--format", fa.format)->check(CLI::IsMember(formats));
  fam_cmd->add_option("--threads", fa.threads)->check(CLI::NonNegativeNumber);

  VerifyArgs va;
  auto* ver_cmd = app.add_subcommand("verify", "Recompute the expected-values file and the counting checks");
  ver_cmd->add_option("--data", va.data, "Expected-values file");
  ver_cmd->add_flag("--full", va.full, "Also check knots with q > 11");
  ver_cmd->add_option("--threads", va.threads)->check(CLI::NonNegativeNumber);

  Su2Args sa;
  auto* su2_cmd = app.add_subcommand("su2", "Irreducible SU(2) classes with h -> I and h -> -I");
  su2_cmd->add_option("--p", sa.p)->required();
  su2_cmd->add_option("--q", sa.q)->required();
  su2_cmd->add_option("--r", sa.r)->required();
  su2_cmd->add_option("--format", sa.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (*tau_cmd) return cmd_tau(ta, out);
    if (*fam_cmd) return cmd_family(fa, out, err);
    if (*ver_cmd) return cmd_verify(va, out, err);
    if (*su2_cmd) return cmd_su2(sa, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  }
  return kExitInvalidInput;
}

}  // namespace casson3
