#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace srs3 {

struct CheckRecord {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline CheckRecord make_check(std::string name, double expected,
                              double observed, double tolerance) {
  const bool ok = std::abs(observed - expected) <= tolerance;
  return CheckRecord{std::move(name), expected, observed, tolerance, ok};
}

/// Structured campaign output.  JSON layout is versioned ("schema": 1) and
/// byte-deterministic for a fixed seed; the wall clock is only emitted when
/// include_timing is set, so that default reports stay reproducible.
struct Report {
  std::string campaign;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CheckRecord> checks;
  nlohmann::json tables = nlohmann::json::object();
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
  bool include_timing = false;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// CSV helpers: '.' decimal separator, round-trip doubles, no locale.
std::string csv_cell(double x);
std::string csv_line(const std::vector<std::string>& cells);

}  // namespace srs3
