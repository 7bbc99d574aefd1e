#pragma once

#include "fano/enumerator.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fano {

struct RayRow {
  RayType type = RayType::C1;
  // Keys among r, L3, degB, genus, deg_delta, d2, e.
  std::map<std::string, Integer> invariants;
  std::optional<std::array<Integer, 2>> delta_bidegree;
  bool operator==(const RayRow& other) const = default;
};

struct TableRow {
  std::string table_id;
  int rho = 2;
  Integer kx3;
  std::vector<RayRow> rays;
  std::vector<std::string> descriptions;
  bool primitive = false;
  std::optional<std::string> char_note;
  // Free-text remark kept with the row; never compared.
  std::optional<std::string> note;

  std::vector<RayType> ray_types() const;
  bool operator==(const TableRow& other) const = default;
};

struct Mismatch {
  std::string table_id;
  std::string field;
  std::string expected;
  std::string actual;
};

struct DiffReport {
  std::vector<std::string> missing;
  std::vector<SolutionRecord> extra;
  std::vector<Mismatch> mismatched;
  bool empty() const { return missing.empty() && extra.empty() && mismatched.empty(); }
};

enum class Format { Json, Csv, Markdown };

Format parse_format(const std::string& name);

// Rows of the embedded table, or of the file named by FANO_GROUND_TRUTH when set.
std::vector<TableRow> ground_truth(int rho, bool primitive_only);

// Parses a JSON array of rows.
std::vector<TableRow> parse_rows(const std::string& json_text);

TableRow to_table_row(const SolutionRecord& record);

std::string lookup_table_id(const SolutionRecord& record, const std::vector<TableRow>& truth);

DiffReport diff(const std::vector<SolutionRecord>& computed, const std::vector<TableRow>& truth);

std::string format_report(const DiffReport& report);

std::string emit(const std::vector<TableRow>& rows, Format format);

// Lowercase, punctuation removed, whitespace collapsed.
std::string normalize_description(const std::string& text);

}  // namespace fano
