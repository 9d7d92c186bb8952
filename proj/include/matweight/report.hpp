#ifndef MATWEIGHT_REPORT_HPP
#define MATWEIGHT_REPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace matweight {

struct CheckRecord {
  std::string name;
  std::string expected;
  std::string got;
  double tolerance = 0.0;  ///< 0 for exact checks
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;  ///< echoed inputs, in insertion order
  std::vector<CheckRecord> checks;
  double elapsed_ms = 0.0;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
  }

  void add(CheckRecord r) { checks.push_back(std::move(r)); }

  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  void sort_checks() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  }
};

/// Shortest round-trip decimal form of a double.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

inline nlohmann::ordered_json to_json(const Report& r, bool with_timing = true) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckRecord& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"got", c.got},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  j["checks"] = checks;
  j["pass"] = r.pass();
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "name,expected,got,tolerance,pass\n";
  for (const CheckRecord& c : r.checks)
    os << csv_field(c.name) << ',' << csv_field(c.expected) << ',' << csv_field(c.got) << ','
       << format_double(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
  return os.str();
}

inline std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << '\n';
  for (const auto& [k, v] : r.params) os << "  " << k << " = " << v << '\n';
  std::size_t failed = 0;
  for (const CheckRecord& c : r.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  expected " << c.expected << "  got " << c.got;
    if (c.tolerance > 0.0) os << "  tol " << format_double(c.tolerance);
    os << '\n';
    if (!c.pass) ++failed;
  }
  os << (failed == 0 ? "PASS" : "FAIL") << ": " << r.checks.size() - failed << '/' << r.checks.size()
     << " checks passed\n";
  return os.str();
}

}  // namespace matweight

#endif  // MATWEIGHT_REPORT_HPP
