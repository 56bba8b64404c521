#include "spindeg/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace spindeg {

namespace {

// Commas and line breaks would corrupt the table, so error messages carried
// inside a CSV cell swap them for semicolons.
std::string csv_sanitize(const std::string& msg) {
  std::string out = msg;
  for (char& c : out)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string config_json(const RunMeta& meta) {
  std::string out = "  \"config\": {\n";
  out += "    \"command\": \"" + json_escape(meta.command) + "\",\n";
  out += "    \"family\": \"" + json_escape(meta.family) + "\",\n";
  if (meta.has_a) {
    out += "    \"a_mode\": \"" + json_escape(meta.a_mode) + "\",\n";
    out += "    \"a\": " + format_g17(meta.a) + ",\n";
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%llu", static_cast<unsigned long long>(meta.seed));
  out += std::string("    \"seed\": ") + buf + "\n";
  out += "  }";
  return out;
}

std::string fit_summary_json(const SlopeFit* fit, const std::string& fit_error) {
  if (fit == nullptr) return "  \"summary\": { \"error\": \"" + json_escape(fit_error) + "\" }";
  std::string out = "  \"summary\": {\n";
  out += "    \"slope\": " + format_g17(fit->slope) + ",\n";
  out += "    \"intercept\": " + format_g17(fit->intercept) + ",\n";
  out += "    \"residual\": " + format_g17(fit->residual) + ",\n";
  out += "    \"points\": " + std::to_string(fit->points) + "\n";
  out += "  }";
  return out;
}

}  // namespace

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string scaling_table_csv(const std::vector<ScalingRecord>& records, const SlopeFit* fit,
                              const std::string& fit_error) {
  std::string out = "family,p,a,eta,eta_lower,eta_upper,floor_flag\n";
  for (const ScalingRecord& rec : records) {
    out += rec.family + "," + format_g17(rec.p) + "," + format_g17(rec.a) + ",";
    if (rec.ok) {
      out += format_g17(rec.eta) + "," + format_g17(rec.eta_lower) + "," +
             format_g17(rec.eta_upper) + "," + (rec.floor_flag ? "1" : "0");
    } else {
      out += ",,,error:" + csv_sanitize(rec.error);
    }
    out += "\n";
  }
  if (fit != nullptr) {
    out += "fit," + format_g17(fit->slope) + "," + format_g17(fit->intercept) + "," +
           format_g17(fit->residual) + "," + std::to_string(fit->points) + ",,\n";
  } else {
    out += "fit,,,,,,error:" + csv_sanitize(fit_error) + "\n";
  }
  return out;
}

std::string scaling_json(const RunMeta& meta, const std::vector<ScalingRecord>& records,
                         const SlopeFit* fit, const std::string& fit_error) {
  std::string out = "{\n" + config_json(meta) + ",\n  \"records\": [\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ScalingRecord& rec = records[i];
    out += "    { \"family\": \"" + json_escape(rec.family) + "\", \"p\": " + format_g17(rec.p) +
           ", \"a\": " + format_g17(rec.a);
    if (rec.ok) {
      out += ", \"eta\": " + format_g17(rec.eta) +
             ", \"eta_lower\": " + format_g17(rec.eta_lower) +
             ", \"eta_upper\": " + format_g17(rec.eta_upper) +
             ", \"floor_flag\": " + (rec.floor_flag ? "true" : "false");
    } else {
      out += ", \"error\": \"" + json_escape(rec.error) + "\"";
    }
    out += i + 1 < records.size() ? " },\n" : " }\n";
  }
  out += "  ],\n" + fit_summary_json(fit, fit_error) + "\n}\n";
  return out;
}

std::string capacity_table_csv(const std::vector<CapacityPoint>& optimal,
                               const std::vector<CapacityPoint>& generic15) {
  if (optimal.size() != generic15.size())
    throw std::invalid_argument("capacity_table_csv: mode curves differ in length");
  std::string out =
      "p,ic,eta_optimal,delta_optimal,lower_optimal,"
      "eta_generic15,delta_generic15,lower_generic15\n";
  for (std::size_t i = 0; i < optimal.size(); ++i) {
    const CapacityPoint& o = optimal[i];
    const CapacityPoint& g = generic15[i];
    out += format_g17(o.p) + "," + format_g17(o.ic) + "," + format_g17(o.eta) + "," +
           format_g17(o.delta) + "," + format_g17(o.lower_bound) + "," + format_g17(g.eta) +
           "," + format_g17(g.delta) + "," + format_g17(g.lower_bound) + "\n";
  }
  return out;
}

std::string capacity_json(const RunMeta& meta, const std::vector<CapacityPoint>& optimal,
                          const std::vector<CapacityPoint>& generic15) {
  if (optimal.size() != generic15.size())
    throw std::invalid_argument("capacity_json: mode curves differ in length");
  std::string out = "{\n" + config_json(meta) + ",\n  \"records\": [\n";
  for (std::size_t i = 0; i < optimal.size(); ++i) {
    const CapacityPoint& o = optimal[i];
    const CapacityPoint& g = generic15[i];
    out += "    { \"p\": " + format_g17(o.p) + ", \"ic\": " + format_g17(o.ic) +
           ", \"eta_optimal\": " + format_g17(o.eta) +
           ", \"delta_optimal\": " + format_g17(o.delta) +
           ", \"lower_optimal\": " + format_g17(o.lower_bound) +
           ", \"eta_generic15\": " + format_g17(g.eta) +
           ", \"delta_generic15\": " + format_g17(g.delta) +
           ", \"lower_generic15\": " + format_g17(g.lower_bound);
    out += i + 1 < optimal.size() ? " },\n" : " }\n";
  }
  out += "  ],\n  \"summary\": { \"points\": " + std::to_string(optimal.size()) + " }\n}\n";
  return out;
}

}  // namespace spindeg
