#pragma once

#include <string>
#include <vector>

namespace lfock {

enum class Provenance { Paper, Derived, Trivial };
std::string to_string(Provenance p);

/// One checked quantity. Relative rows compare |computed - target| against
/// tolerance * |target|, absolute rows against tolerance. A NaN target marks an
/// informational row that passes when `computed` is finite.
struct ReportRow {
  std::string suite;
  std::string quantity;
  double computed = 0.0;
  double target = 0.0;
  Provenance provenance = Provenance::Derived;
  double tolerance = 0.0;
  bool relative = false;
  bool pass = false;
};

ReportRow make_row(std::string suite, std::string quantity, double computed, double target, Provenance prov,
                   double tolerance, bool relative = false);

/// Informational row: no target, passes when `computed` is finite.
ReportRow info_row(std::string suite, std::string quantity, double computed, Provenance prov = Provenance::Derived);

enum class TableFormat { Csv, Json };

/// Rows sorted by (suite, quantity), numbers with 17 significant digits.
std::string format_table(std::vector<ReportRow> rows, TableFormat format);

/// Writes format_table to `path` ("" or "-" means stdout). Empty rows are an
/// error and leave no file behind.
void emit_table(const std::vector<ReportRow>& rows, TableFormat format, const std::string& path);

bool all_pass(const std::vector<ReportRow>& rows);

}  // namespace lfock
