#include "srs3/report.hpp"

#include <cstdio>

namespace srs3 {

bool Report::pass() const {
  for (const CheckRecord& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["campaign"] = campaign;
  j["rng"] = "splitmix64-counter";
  j["seed"] = seed;
  j["parameters"] = parameters;
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckRecord& c : checks) {
    arr.push_back({{"name", c.name},
                   {"expected", c.expected},
                   {"observed", c.observed},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass}});
  }
  j["checks"] = arr;
  j["tables"] = tables;
  j["pass"] = pass();
  if (include_timing) j["wall_ms"] = wall_ms;
  return j;
}

std::string csv_cell(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

}  // namespace srs3
