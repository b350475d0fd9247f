#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qeccf/codes.hpp"
#include "qeccf/scenario.hpp"

namespace qeccf {

struct TableRow {
  int sl = 0;
  std::vector<std::string> labels;
  bool is_clifford = false;
  bool in_A = false;
  std::optional<bool> table_convention;
  long dim = 0;
  std::size_t detectable = 0;
  std::optional<int> wt1, wt2;  // empty for loaded bases
  std::string distance;
};

struct Table {
  std::string name;
  bool table_convention = false;
  std::vector<TableRow> rows;
};

// Analyzes one assignment.
TableRow analyze_row(const Prepared& p, const std::vector<int>& slots, const std::vector<std::string>& labels,
                     bool table_convention, const Tol& tol = {});

// Every tuple of values over the slots, all-zero tuple skipped, slot 1 most
// significant. Rows are computed concurrently and emitted in tuple order.
Table run_prepared(const Prepared& p, const Scenario& s, int threads);
Table run_scenario(const Scenario& s, int threads);

std::string components_label(const std::vector<std::string>& labels);
std::string to_csv(const Table& t);
std::string to_markdown(const Table& t);
void emit(const Table& t, const std::string& format, const std::filesystem::path& path);

// Plain comma-separated table with a header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(std::string_view text);
CsvTable load_csv(const std::filesystem::path& path);

struct CellDiff {
  std::string row;  // components label
  std::string column;
  std::string produced;
  std::string golden;
};

// Golden cells: empty = not compared; "?v" = documented discrepancy with
// printed value v. Rows align on the components column; golden rows missing
// from the produced table are hard mismatches.
struct DiffReport {
  std::size_t compared = 0;
  std::size_t matched = 0;
  std::vector<CellDiff> documented;
  std::vector<CellDiff> hard;
  std::vector<std::string> missing_rows;
  std::vector<std::string> extra_rows;

  int exit_code() const;  // 0 exact, 2 documented only, 1 hard
  std::string to_string() const;
};

DiffReport golden_diff(const CsvTable& produced, const CsvTable& golden);

}  // namespace qeccf
