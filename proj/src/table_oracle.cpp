#include "fano/table_oracle.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

namespace fano {

// Defined in the source generated from data/ground_truth.json.
extern const char* const kEmbeddedGroundTruth;

namespace {

using nlohmann::ordered_json;

const char* const kInvariantKeys[] = {"r", "L3", "degB", "genus", "deg_delta", "d2", "e"};

Integer integer_from_json(const ordered_json& value, const std::string& where) {
  if (value.is_number_integer()) return Integer(value.get<long long>());
  if (value.is_string()) return Integer(value.get<std::string>());
  throw Error(ErrorKind::Usage, "expected an integer for " + where);
}

ordered_json integer_to_json(const Integer& n) { return to_int64(n); }

RayRow ray_from_json(const ordered_json& j, const std::string& where) {
  RayRow ray;
  ray.type = parse_ray_type(j.at("type").get<std::string>());
  for (const char* key : kInvariantKeys) {
    if (j.contains(key)) ray.invariants[key] = integer_from_json(j.at(key), where + "." + key);
  }
  if (j.contains("delta_bidegree")) {
    const auto& pair = j.at("delta_bidegree");
    if (!pair.is_array() || pair.size() != 2) throw Error(ErrorKind::Usage, where + ".delta_bidegree must be a pair");
    ray.delta_bidegree = std::array<Integer, 2>{integer_from_json(pair[0], where), integer_from_json(pair[1], where)};
  }
  return ray;
}

ordered_json ray_to_json(const RayRow& ray) {
  ordered_json j;
  j["type"] = to_string(ray.type);
  for (const char* key : kInvariantKeys) {
    auto it = ray.invariants.find(key);
    if (it != ray.invariants.end()) j[key] = integer_to_json(it->second);
  }
  if (ray.delta_bidegree) {
    j["delta_bidegree"] = {integer_to_json((*ray.delta_bidegree)[0]), integer_to_json((*ray.delta_bidegree)[1])};
  }
  return j;
}

TableRow row_from_json(const ordered_json& j) {
  TableRow row;
  row.table_id = j.at("table_id").get<std::string>();
  row.rho = j.at("rho").get<int>();
  row.kx3 = integer_from_json(j.at("kx3"), row.table_id + ".kx3");
  size_t index = 0;
  for (const auto& ray : j.at("rays")) {
    row.rays.push_back(ray_from_json(ray, row.table_id + ".rays[" + std::to_string(index++) + "]"));
  }
  row.descriptions = j.at("descriptions").get<std::vector<std::string>>();
  row.primitive = j.at("primitive").get<bool>();
  if (j.contains("char_note")) row.char_note = j.at("char_note").get<std::string>();
  if (j.contains("note")) row.note = j.at("note").get<std::string>();
  return row;
}

ordered_json row_to_json(const TableRow& row) {
  ordered_json j;
  j["table_id"] = row.table_id;
  j["rho"] = row.rho;
  j["kx3"] = integer_to_json(row.kx3);
  j["primitive"] = row.primitive;
  j["rays"] = ordered_json::array();
  for (const auto& ray : row.rays) j["rays"].push_back(ray_to_json(ray));
  j["descriptions"] = row.descriptions;
  if (row.char_note) j["char_note"] = *row.char_note;
  if (row.note) j["note"] = *row.note;
  return j;
}

void validate_rows(const std::vector<TableRow>& rows) {
  std::vector<std::string> ids;
  for (const auto& row : rows) {
    if (row.kx3 <= 0 || row.kx3 % 2 != 0) {
      throw Error(ErrorKind::Constraint, "row " + row.table_id + " has a non-positive or odd (-K)^3");
    }
    ids.push_back(row.table_id);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw Error(ErrorKind::Constraint, "duplicate table id in ground truth");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Usage, "cannot read ground-truth file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<TableRow> all_rows() {
  static std::mutex mutex;
  static std::vector<TableRow> rows;
  static std::optional<std::string> source;
  const char* path = std::getenv("FANO_GROUND_TRUTH");
  const std::string wanted = path ? path : "";
  std::lock_guard<std::mutex> lock(mutex);
  if (source != wanted) {
    rows = parse_rows(wanted.empty() ? std::string(kEmbeddedGroundTruth) : read_file(wanted));
    source = wanted;
  }
  return rows;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string types_string(const std::vector<RayType>& types) {
  std::vector<std::string> parts;
  for (RayType t : types) parts.push_back(to_string(t));
  return join(parts, "+");
}

std::string ray_summary(const RayRow& ray) {
  std::vector<std::string> parts;
  for (const char* key : kInvariantKeys) {
    auto it = ray.invariants.find(key);
    if (it != ray.invariants.end()) parts.push_back(std::string(key) + "=" + it->second.str());
  }
  if (ray.delta_bidegree) {
    parts.push_back("delta_bidegree=(" + (*ray.delta_bidegree)[0].str() + "," + (*ray.delta_bidegree)[1].str() + ")");
  }
  return parts.empty() ? to_string(ray.type) : to_string(ray.type) + " (" + join(parts, ", ") + ")";
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string markdown_cell(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

// Truth invariants that disagree with a computed ray.
void compare_ray(const std::string& id, size_t index, const RayRow& expected, const RayRow& actual,
                 std::vector<Mismatch>& out) {
  const std::string prefix = "rays[" + std::to_string(index) + "].";
  for (const auto& [key, value] : expected.invariants) {
    auto it = actual.invariants.find(key);
    const std::string got = it == actual.invariants.end() ? "<absent>" : it->second.str();
    if (got != value.str()) out.push_back({id, prefix + key, value.str(), got});
  }
  if (expected.delta_bidegree) {
    auto show = [](const std::optional<std::array<Integer, 2>>& b) {
      return b ? "(" + (*b)[0].str() + "," + (*b)[1].str() + ")" : std::string("<absent>");
    };
    if (expected.delta_bidegree != actual.delta_bidegree) {
      out.push_back({id, prefix + "delta_bidegree", show(expected.delta_bidegree), show(actual.delta_bidegree)});
    }
  }
}

}  // namespace

std::vector<RayType> TableRow::ray_types() const {
  std::vector<RayType> out;
  for (const auto& ray : rays) out.push_back(ray.type);
  return out;
}

Format parse_format(const std::string& name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "json") return Format::Json;
  if (lower == "csv") return Format::Csv;
  if (lower == "markdown" || lower == "md") return Format::Markdown;
  throw Error(ErrorKind::Usage, "unknown format '" + name + "' (expected json, csv or markdown)");
}

std::vector<TableRow> parse_rows(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::exception& err) {
    throw Error(ErrorKind::Usage, std::string("malformed table JSON: ") + err.what());
  }
  if (!doc.is_array()) throw Error(ErrorKind::Usage, "table JSON must be an array of rows");
  std::vector<TableRow> rows;
  try {
    for (const auto& j : doc) rows.push_back(row_from_json(j));
  } catch (const ordered_json::exception& err) {
    throw Error(ErrorKind::Usage, std::string("malformed table row: ") + err.what());
  }
  validate_rows(rows);
  return rows;
}

std::vector<TableRow> ground_truth(int rho, bool primitive_only) {
  if (rho != 2 && rho != 3) throw Error(ErrorKind::Scope, "no table for Picard rank " + std::to_string(rho));
  std::vector<TableRow> out;
  for (const auto& row : all_rows()) {
    if (row.rho == rho && (!primitive_only || row.primitive)) out.push_back(row);
  }
  std::stable_sort(out.begin(), out.end(), [](const TableRow& a, const TableRow& b) {
    if (a.kx3 != b.kx3) return a.kx3 < b.kx3;
    return table_id_less(a.table_id, b.table_id);
  });
  return out;
}

TableRow to_table_row(const SolutionRecord& record) {
  TableRow row;
  row.table_id = record.table_id;
  row.rho = record.rho;
  row.kx3 = record.kx3;
  for (const auto& spec : record.rays) {
    RayRow ray;
    ray.type = spec.type;
    const std::pair<const char*, const std::optional<Integer>*> fields[] = {
        {"r", &spec.r},         {"L3", &spec.L3}, {"degB", &spec.degB}, {"genus", &spec.genus},
        {"deg_delta", &spec.deg_delta}, {"d2", &spec.d2}, {"e", &spec.e}};
    for (const auto& [key, value] : fields) {
      if (*value) ray.invariants[key] = **value;
    }
    ray.delta_bidegree = spec.delta_bidegree;
    row.rays.push_back(std::move(ray));
  }
  row.descriptions = record.descriptions;
  row.primitive = record.primitive;
  row.char_note = record.char_note;
  return row;
}

std::string lookup_table_id(const SolutionRecord& record, const std::vector<TableRow>& truth) {
  const TableRow computed = to_table_row(record);
  std::vector<const TableRow*> candidates;
  for (const auto& row : truth) {
    if (row.rho == record.rho && row.kx3 == record.kx3 && row.ray_types() == computed.ray_types()) {
      candidates.push_back(&row);
    }
  }
  if (candidates.size() == 1) return candidates.front()->table_id;
  for (const TableRow* row : candidates) {
    std::vector<Mismatch> scratch;
    for (size_t i = 0; i < row->rays.size(); ++i) compare_ray(row->table_id, i, row->rays[i], computed.rays[i], scratch);
    if (scratch.empty()) return row->table_id;
  }
  return "";
}

DiffReport diff(const std::vector<SolutionRecord>& computed, const std::vector<TableRow>& truth) {
  DiffReport report;
  std::vector<bool> matched(truth.size(), false);
  for (const auto& record : computed) {
    auto it = std::find_if(truth.begin(), truth.end(),
                           [&](const TableRow& row) { return !record.table_id.empty() && row.table_id == record.table_id; });
    if (it == truth.end() || matched[static_cast<size_t>(it - truth.begin())]) {
      report.extra.push_back(record);
      continue;
    }
    matched[static_cast<size_t>(it - truth.begin())] = true;
    const TableRow& expected = *it;
    const TableRow actual = to_table_row(record);
    const std::string& id = expected.table_id;
    if (expected.kx3 != actual.kx3) report.mismatched.push_back({id, "kx3", expected.kx3.str(), actual.kx3.str()});
    if (expected.ray_types() != actual.ray_types()) {
      report.mismatched.push_back({id, "ray_types", types_string(expected.ray_types()), types_string(actual.ray_types())});
    } else {
      for (size_t i = 0; i < expected.rays.size(); ++i) {
        compare_ray(id, i, expected.rays[i], actual.rays[i], report.mismatched);
      }
    }
    std::vector<std::string> want;
    std::vector<std::string> got;
    for (const auto& d : expected.descriptions) want.push_back(normalize_description(d));
    for (const auto& d : actual.descriptions) got.push_back(normalize_description(d));
    if (want != got) {
      report.mismatched.push_back({id, "descriptions", join(expected.descriptions, " | "), join(actual.descriptions, " | ")});
    }
    if (expected.primitive != actual.primitive) {
      report.mismatched.push_back({id, "primitive", expected.primitive ? "true" : "false", actual.primitive ? "true" : "false"});
    }
    if (expected.char_note && (!actual.char_note ||
                               normalize_description(*expected.char_note) != normalize_description(*actual.char_note))) {
      report.mismatched.push_back({id, "char_note", *expected.char_note, actual.char_note.value_or("<absent>")});
    }
  }
  for (size_t i = 0; i < truth.size(); ++i) {
    if (!matched[i]) report.missing.push_back(truth[i].table_id);
  }
  return report;
}

std::string format_report(const DiffReport& report) {
  std::ostringstream out;
  if (report.empty()) {
    out << "no differences\n";
    return out.str();
  }
  for (const auto& id : report.missing) out << "missing " << id << "\n";
  for (const auto& record : report.extra) {
    out << "extra " << (record.table_id.empty() ? "<unassigned>" : record.table_id) << " kx3=" << record.kx3.str()
        << " rays=" << types_string(record.ray_types()) << "\n";
  }
  for (const auto& m : report.mismatched) {
    out << "mismatch " << m.table_id << " " << m.field << ": expected " << m.expected << ", got " << m.actual << "\n";
  }
  return out.str();
}

std::string emit(const std::vector<TableRow>& rows, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      ordered_json doc = ordered_json::array();
      for (const auto& row : rows) doc.push_back(row_to_json(row));
      out << doc.dump(2);
      break;
    }
    case Format::Csv: {
      out << "table_id,rho,kx3,primitive,extremal_rays,descriptions,char_note\n";
      for (const auto& row : rows) {
        std::vector<std::string> rays;
        for (const auto& ray : row.rays) rays.push_back(ray_summary(ray));
        out << csv_field(row.table_id) << "," << row.rho << "," << row.kx3.str() << ","
            << (row.primitive ? "true" : "false") << "," << csv_field(join(rays, "; ")) << ","
            << csv_field(join(row.descriptions, " | ")) << "," << csv_field(row.char_note.value_or("")) << "\n";
      }
      break;
    }
    case Format::Markdown: {
      out << "| No. | (-K)^3 | Description | Extremal rays |\n";
      out << "|---|---|---|---|\n";
      for (const auto& row : rows) {
        std::vector<std::string> rays;
        for (const auto& ray : row.rays) rays.push_back(ray_summary(ray));
        std::string description = join(row.descriptions, "; or ");
        if (row.char_note) description += " [" + *row.char_note + "]";
        out << "| " << markdown_cell(row.table_id) << " | " << row.kx3.str() << " | " << markdown_cell(description)
            << " | " << markdown_cell(join(rays, "; ")) << " |\n";
      }
      break;
    }
  }
  return out.str();
}

std::string normalize_description(const std::string& text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      if (pending_space && !out.empty()) out += ' ';
      pending_space = false;
      out += static_cast<char>(std::tolower(u));
    } else if (std::isspace(u)) {
      pending_space = true;
    }
  }
  return out;
}

}  // namespace fano
