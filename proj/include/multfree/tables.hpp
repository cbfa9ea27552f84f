#pragma once

#include <string>
#include <vector>

#include "multfree/induction.hpp"

namespace multfree {

/// One row of the bundled reference tables of multiplicity-free subgroups.
struct TableRow {
  enum class Mode {
    Exact,       // compare n, index, rank, mf against the listed values
    Corrected,   // same, but rank/mf were recomputed; note explains
    ReportRank,  // rank is not listed; print the computed value
    Verdict      // mf status disputed; compare against the recorded verdict
  };

  std::string label;
  std::string spec;
  int n = 0;
  BigInt index = 0;
  bool has_rank = false;
  long long rank = 0;
  bool mf = true;
  Mode mode = Mode::Exact;
  std::string note;
};

std::vector<TableRow> load_table(int id, const std::string& data_dir);

struct RowResult {
  TableRow row;
  bool pass = false;
  bool skipped = false;
  BigInt index;
  long long rank = 0;
  bool mf = false;
  Provenance prov = Provenance::brute_force;
  std::string message;
};

/// Verifies every row: brute force within the census cap, closed form when
/// the census is infeasible, skip with a notice when neither applies.
std::vector<RowResult> verify_table(int id, const std::string& data_dir,
                                    long long census_cap, Exec mode);

/// "PASS"/"FAIL" line per row.
std::string format_row_result(const RowResult& r);

}  // namespace multfree
