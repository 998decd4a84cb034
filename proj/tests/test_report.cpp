#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "casson3/report.hpp"

using namespace casson3;

namespace {

CassonResult full(i64 p, i64 q, i64 r, unsigned threads = 1) {
  EngineOptions opt;
  opt.keep_slices = true;
  opt.threads = threads;
  return tau(p, q, r, opt);
}

std::string value_after(const std::string& text, const std::string& key) {
  const auto at = text.find(key);
  REQUIRE(at != std::string::npos);
  std::istringstream is(text.substr(at + key.size()));
  std::string v;
  is >> v;
  return v;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("json round trip") {
    for (const auto& t : {std::array<i64, 3>{3, 5, 7}, {2, 3, 5}, {1, 2, 3}}) {
      const CassonResult r = full(t[0], t[1], t[2]);
      const auto j = to_json(r);
      CHECK(j["schema"] == kReportSchema);
      CHECK(casson_result_from_json(j) == r);
      CHECK(casson_result_from_json(nlohmann::ordered_json::parse(j.dump())) == r);
    }
  }

  TEST_CASE("text, json and csv carry the same numbers") {
    const CassonResult r = full(3, 5, 7);
    std::ostringstream text, csv;
    write_text(text, r, true);
    write_csv(csv, r, true);
    const auto j = to_json(r);

    CHECK(value_after(text.str(), "tau: ") == std::to_string(j["tau"].get<i64>()));
    CHECK(value_after(text.str(), "Ia=") == std::to_string(j["totals"]["Ia"].get<i64>()));
    CHECK(value_after(text.str(), "IIb=") == std::to_string(j["totals"]["IIb"].get<i64>()));
    CHECK(value_after(text.str(), "N_II=") == std::to_string(j["census"]["N_II"].get<i64>()));

    std::istringstream lines(csv.str());
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "p,q,r,a,c,tau,Ia,IIa,IIb,excluded,N_I,N_II");
    std::ostringstream expected;
    expected << "3,5,7," << r.surgery.a << "," << r.surgery.c << ",56,36,6,4,0,16,2";
    CHECK(row == expected.str());
    std::string blank, slice_header;
    std::getline(lines, blank);
    std::getline(lines, slice_header);
    int slice_rows = 0;
    for (std::string l; std::getline(lines, l);) ++slice_rows;
    CHECK(slice_rows == static_cast<int>(r.slices.size()));
  }

  TEST_CASE("reports do not depend on the thread count") {
    const auto a = to_json(full(5, 7, 11, 1)).dump();
    const auto b = to_json(full(5, 7, 11, 3)).dump();
    CHECK(a == b);
  }

  TEST_CASE("expected-values file") {
    const ExpectedData d = load_expected(default_data_path());
    CHECK(d.checksum_ok());
    int families = 0, knots = 0;
    for (const auto& e : d.entries) {
      (e.kind == ExpectedEntry::Kind::Family ? families : knots) += 1;
      CHECK_FALSE(e.source.empty());
    }
    CHECK(families == 15);
    CHECK(knots == 39);
  }

  TEST_CASE("corrupted file fails its checksum") {
    std::ifstream in(default_data_path());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    const auto at = text.find("family 2 5 3 33 19 2");
    REQUIRE(at != std::string::npos);
    text.replace(at, 20, "family 2 5 3 33 18 2");
    const std::string path = "corrupted_expected_values.txt";
    std::ofstream(path) << text;
    const ExpectedData d = load_expected(path);
    CHECK(d.has_checksum);
    CHECK_FALSE(d.checksum_ok());
    std::remove(path.c_str());
  }

  TEST_CASE("missing file") { CHECK_THROWS_AS(load_expected("/nonexistent/expected.txt"), Error); }
}
