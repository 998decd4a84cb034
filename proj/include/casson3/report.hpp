#pragma once

#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "casson3/enumerate.hpp"
#include "casson3/family.hpp"

namespace casson3 {

inline constexpr int kReportSchema = 1;

nlohmann::ordered_json to_json(const AlcovePoint& pt);
AlcovePoint alcove_point_from_json(const nlohmann::ordered_json& j);

/// Report object for one tau computation; slices and diagnostics are always
/// present (possibly empty).
nlohmann::ordered_json to_json(const CassonResult& result);
CassonResult casson_result_from_json(const nlohmann::ordered_json& j);

void write_text(std::ostream& os, const CassonResult& result, bool breakdown);
void write_csv(std::ostream& os, const CassonResult& result, bool breakdown);

nlohmann::ordered_json family_to_json(const FamilySpec& spec, const std::vector<FamilySample>& samples,
                              const QuadraticFit* fit);

/// One record of the expected-values file.
struct ExpectedEntry {
  enum class Kind { Family, Knot };
  Kind kind = Kind::Family;
  i64 p = 0;
  i64 q = 0;
  i64 m0 = 0;  // families only
  i64 A = 0;
  i64 B = 0;
  i64 C = 0;
  std::string source;
  int line = 0;
};

struct ExpectedData {
  std::vector<ExpectedEntry> entries;
  std::uint32_t stored_checksum = 0;
  std::uint32_t computed_checksum = 0;
  bool has_checksum = false;

  bool checksum_ok() const noexcept { return has_checksum && stored_checksum == computed_checksum; }
};

/// Parses the file; throws InvalidArgument on unreadable or malformed input.
/// A checksum mismatch is reported through checksum_ok(), not thrown.
ExpectedData load_expected(const std::string& path);

/// Path baked in at build time.
std::string default_data_path();

}  // namespace casson3
