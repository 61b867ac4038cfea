#include "lfock/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>
#include <fstream>
#include <iostream>
#include "json.hpp"
#include <sstream>
#include <stdexcept>

namespace lfock {

namespace {

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_number(double v) { return std::isfinite(v) ? number(v) : "null"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper:
      return "paper";
    case Provenance::Derived:
      return "derived";
    case Provenance::Trivial:
      return "trivial";
  }
  return "derived";
}

ReportRow make_row(std::string suite, std::string quantity, double computed, double target, Provenance prov,
                   double tolerance, bool relative) {
  ReportRow r{std::move(suite), std::move(quantity), computed, target, prov, tolerance, relative, false};
  if (relative) r.quantity += " [rel]";
  const double diff = std::abs(computed - target);
  const double allowed = relative ? tolerance * std::abs(target) : tolerance;
  r.pass = std::isfinite(computed) && diff <= allowed;
  if (computed == target) r.pass = true;  // exact matches, including infinities
  return r;
}

ReportRow info_row(std::string suite, std::string quantity, double computed, Provenance prov) {
  ReportRow r{std::move(suite), std::move(quantity), computed, std::nan(""), prov, 0.0, false, false};
  r.pass = std::isfinite(computed);
  return r;
}

std::string format_table(std::vector<ReportRow> rows, TableFormat format) {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.suite, a.quantity) < std::tie(b.suite, b.quantity);
  });
  std::ostringstream os;
  if (format == TableFormat::Csv) {
    os << "suite,quantity,computed,target,provenance,tolerance,pass\n";
    for (const auto& r : rows)
      os << csv_field(r.suite) << ',' << csv_field(r.quantity) << ',' << number(r.computed) << ','
         << number(r.target) << ',' << to_string(r.provenance) << ',' << number(r.tolerance) << ','
         << (r.pass ? "true" : "false") << '\n';
  } else {
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      os << "  {\"suite\": " << nlohmann::json(r.suite).dump() << ", \"quantity\": " << nlohmann::json(r.quantity).dump()
         << ", \"computed\": " << json_number(r.computed) << ", \"target\": " << json_number(r.target)
         << ", \"provenance\": \"" << to_string(r.provenance) << "\", \"tolerance\": " << json_number(r.tolerance)
         << ", \"pass\": " << (r.pass ? "true" : "false") << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
  }
  return os.str();
}

void emit_table(const std::vector<ReportRow>& rows, TableFormat format, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("no report rows to emit");
  const std::string text = format_table(rows, format);
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

bool all_pass(const std::vector<ReportRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

}  // namespace lfock
