#include "casson3/report.hpp"

#include <zlib.h>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#ifndef CASSON3_DEFAULT_DATA
#define CASSON3_DEFAULT_DATA "data/expected_values.txt"
#endif

namespace casson3 {

using json = nlohmann::ordered_json;

json to_json(const AlcovePoint& pt) { return json::array({pt.k1, pt.k2, pt.k3, pt.denom}); }

AlcovePoint alcove_point_from_json(const json& j) {
  const AlcovePoint pt = AlcovePoint::make(j.at(0).get<i64>(), j.at(1).get<i64>(), j.at(3).get<i64>());
  if (pt.k3 != j.at(2).get<i64>()) throw Error(ErrorKind::InvalidArgument, "alcove point does not sum to zero");
  return pt;
}

namespace {

json tight_to_json(const TightPoint& t) { return {{"slice", t.slice_id}, {"k1", t.k1}, {"k2", t.k2}}; }

TightPoint tight_from_json(const json& j) {
  return {j.at("slice").get<i64>(), j.at("k1").get<i64>(), j.at("k2").get<i64>()};
}

std::string framing(const SurgeryData& d) {
  std::ostringstream os;
  os << "a=" << d.a << " c=" << d.c << " (a mod 3 = " << d.a_mod3 << ", c mod 3 = " << d.c_mod3 << ")";
  return os.str();
}

}  // namespace

json to_json(const CassonResult& r) {
  const SurgeryData& d = r.surgery;
  json slices = json::array();
  for (const auto& s : r.slices) {
    json tight = json::array();
    for (const auto& t : s.tight) tight.push_back(tight_to_json(t));
    slices.push_back({{"id", s.slice_id},
                      {"ell", s.ell},
                      {"a", to_json(s.a)},
                      {"b", to_json(s.b)},
                      {"kind", to_string(s.kind)},
                      {"Ia", s.n_ia},
                      {"IIa", s.n_iia},
                      {"IIb", s.n_iib},
                      {"excluded", s.n_excluded},
                      {"central", s.n_central},
                      {"points", s.n_points},
                      {"tight", tight}});
  }
  json diagnostics = json::array();
  for (const auto& t : r.diagnostics) diagnostics.push_back(tight_to_json(t));
  return {{"schema", kReportSchema},
          {"p", d.p},
          {"q", d.q},
          {"r", d.r},
          {"a", d.a},
          {"c", d.c},
          {"a_mod3", d.a_mod3},
          {"c_mod3", d.c_mod3},
          {"tau", r.tau},
          {"totals",
           {{"Ia", r.totals.n_ia},
            {"IIa", r.totals.n_iia},
            {"IIb", r.totals.n_iib},
            {"excluded", r.totals.n_excluded},
            {"central", r.totals.n_central},
            {"tight", r.totals.n_tight}}},
          {"census", {{"N_I", r.census.n_type_i}, {"N_II", r.census.n_type_ii}}},
          {"lattice_points", r.lattice_points},
          {"slices", slices},
          {"diagnostics", diagnostics}};
}

CassonResult casson_result_from_json(const json& j) {
  if (j.at("schema").get<int>() != kReportSchema) {
    throw Error(ErrorKind::InvalidArgument, "unsupported report schema");
  }
  CassonResult r;
  SurgeryData& d = r.surgery;
  d.p = j.at("p").get<i64>();
  d.q = j.at("q").get<i64>();
  d.r = j.at("r").get<i64>();
  d.a = j.at("a").get<i64>();
  d.c = j.at("c").get<i64>();
  d.a_mod3 = j.at("a_mod3").get<int>();
  d.c_mod3 = j.at("c_mod3").get<int>();
  validate(d);
  r.tau = j.at("tau").get<i64>();
  const json& t = j.at("totals");
  r.totals.n_ia = t.at("Ia").get<i64>();
  r.totals.n_iia = t.at("IIa").get<i64>();
  r.totals.n_iib = t.at("IIb").get<i64>();
  r.totals.n_excluded = t.at("excluded").get<i64>();
  r.totals.n_central = t.at("central").get<i64>();
  r.totals.n_tight = t.at("tight").get<i64>();
  r.census.n_type_i = j.at("census").at("N_I").get<i64>();
  r.census.n_type_ii = j.at("census").at("N_II").get<i64>();
  r.lattice_points = j.at("lattice_points").get<i64>();
  for (const auto& s : j.at("slices")) {
    ComponentTally c;
    c.slice_id = s.at("id").get<i64>();
    c.ell = s.at("ell").get<int>();
    c.a = alcove_point_from_json(s.at("a"));
    c.b = alcove_point_from_json(s.at("b"));
    c.kind = s.at("kind").get<std::string>() == "I" ? SliceKind::TypeI : SliceKind::TypeII;
    c.n_ia = s.at("Ia").get<i64>();
    c.n_iia = s.at("IIa").get<i64>();
    c.n_iib = s.at("IIb").get<i64>();
    c.n_excluded = s.at("excluded").get<i64>();
    c.n_central = s.at("central").get<i64>();
    c.n_points = s.at("points").get<i64>();
    for (const auto& tp : s.at("tight")) c.tight.push_back(tight_from_json(tp));
    r.slices.push_back(std::move(c));
  }
  for (const auto& tp : j.at("diagnostics")) r.diagnostics.push_back(tight_from_json(tp));
  return r;
}

void write_text(std::ostream& os, const CassonResult& r, bool breakdown) {
  const SurgeryData& d = r.surgery;
  os << "sigma: (" << d.p << "," << d.q << "," << d.r << ")\n";
  os << "framing: " << framing(d) << "\n";
  os << "tau: " << r.tau << "\n";
  os << "totals: Ia=" << r.totals.n_ia << " IIa=" << r.totals.n_iia << " IIb=" << r.totals.n_iib
     << " excluded=" << r.totals.n_excluded << "\n";
  if (r.totals.n_central > 0) os << "central points in P: " << r.totals.n_central << "\n";
  for (const auto& t : r.diagnostics) {
    os << "tight: slice " << t.slice_id << " k1=" << t.k1 << " k2=" << t.k2 << "\n";
  }
  if (!breakdown) return;
  os << "census: N_I=" << r.census.n_type_i << " N_II=" << r.census.n_type_ii << "\n";
  os << "lattice points: " << r.lattice_points << "\n";
  os << "slices:\n";
  for (const auto& s : r.slices) {
    os << "  " << std::setw(5) << s.slice_id << "  ell=" << s.ell << "  " << std::left << std::setw(3)
       << to_string(s.kind) << std::right << " a=" << s.a.to_string() << " b=" << s.b.to_string()
       << "  Ia=" << s.n_ia << " IIa=" << s.n_iia << " IIb=" << s.n_iib << " excluded=" << s.n_excluded << "\n";
  }
}

void write_csv(std::ostream& os, const CassonResult& r, bool breakdown) {
  const SurgeryData& d = r.surgery;
  os << "p,q,r,a,c,tau,Ia,IIa,IIb,excluded,N_I,N_II\n";
  os << d.p << "," << d.q << "," << d.r << "," << d.a << "," << d.c << "," << r.tau << "," << r.totals.n_ia << ","
     << r.totals.n_iia << "," << r.totals.n_iib << "," << r.totals.n_excluded << "," << r.census.n_type_i << ","
     << r.census.n_type_ii << "\n";
  if (!breakdown) return;
  auto pt = [](const AlcovePoint& x) {
    std::ostringstream s;
    s << x.k1 << " " << x.k2 << " " << x.k3 << " /" << x.denom;
    return s.str();
  };
  os << "\nslice,ell,kind,a,b,Ia,IIa,IIb,excluded\n";
  for (const auto& s : r.slices) {
    os << s.slice_id << "," << s.ell << "," << to_string(s.kind) << "," << pt(s.a) << "," << pt(s.b) << ","
       << s.n_ia << "," << s.n_iia << "," << s.n_iib << "," << s.n_excluded << "\n";
  }
}

json family_to_json(const FamilySpec& spec, const std::vector<FamilySample>& samples, const QuadraticFit* fit) {
  json rows = json::array();
  for (const auto& s : samples) rows.push_back({{"n", s.n}, {"r", spec.r(s.n)}, {"tau", s.tau}});
  json out = {{"schema", kReportSchema}, {"p", spec.p}, {"q", spec.q}, {"m", spec.m}, {"samples", rows}};
  if (fit) out["fit"] = {{"A", to_string(fit->A)}, {"B", to_string(fit->B)}, {"C", to_string(fit->C)}};
  return out;
}

ExpectedData load_expected(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  ExpectedData data;
  uLong crc = crc32(0L, Z_NULL, 0);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto bad = [&](const std::string& why) {
      return Error(ErrorKind::InvalidArgument, path + ":" + std::to_string(lineno) + ": " + why);
    };
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "checksum") {
      std::string algo, hex;
      ls >> algo >> hex;
      if (algo != "crc32" || hex.empty()) throw bad("malformed checksum line");
      data.stored_checksum = static_cast<std::uint32_t>(std::stoul(hex, nullptr, 16));
      data.has_checksum = true;
      continue;
    }
    const std::string with_nl = line + "\n";
    crc = crc32(crc, reinterpret_cast<const Bytef*>(with_nl.data()), static_cast<uInt>(with_nl.size()));
    if (tag.empty() || tag[0] == '#') continue;
    ExpectedEntry e;
    e.line = lineno;
    if (tag == "family") {
      e.kind = ExpectedEntry::Kind::Family;
      ls >> e.p >> e.q >> e.m0 >> e.A >> e.B >> e.C >> e.source;
    } else if (tag == "knot") {
      e.kind = ExpectedEntry::Kind::Knot;
      ls >> e.p >> e.q >> e.A >> e.B >> e.source;
    } else {
      throw bad("unknown record '" + tag + "'");
    }
    if (!ls && !ls.eof()) throw bad("malformed record");
    if (e.source.empty()) throw bad("missing source tag");
    data.entries.push_back(e);
  }
  data.computed_checksum = static_cast<std::uint32_t>(crc);
  return data;
}

std::string default_data_path() { return CASSON3_DEFAULT_DATA; }

}  // namespace casson3
