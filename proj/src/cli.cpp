#include "fano/cli.hpp"

#include "fano/chern_calculus.hpp"
#include "fano/enumerator.hpp"
#include "fano/table_oracle.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

namespace fano::cli {

namespace {

struct Formula {
  std::vector<std::string> params;
  std::function<Integer(const std::vector<Integer>&)> eval;
};

const std::map<std::string, Formula>& formulas() {
  static const std::map<std::string, Formula> table{
      {"antican-cube-p1-bundle",
       {{"c1_sq", "c2", "Ky_sq"},
        [](const std::vector<Integer>& a) {
          return antican_cube_p1_bundle_over_surface(SurfaceBundleData{a[0], a[1], a[2], {}, {}, {}, {}});
        }}},
      {"xi-square", {{"deg_E"}, [](const std::vector<Integer>& a) { return xi_square_on_curve(a[0]); }}},
      {"antican-cube-divisor-p2-bundle",
       {{"c1_sq", "c2", "c1_dot_F", "c1_dot_Ky", "F_dot_Ky", "Ky_sq", "F_sq"},
        [](const std::vector<Integer>& a) {
          return antican_cube_divisor_in_p2_bundle(SurfaceBundleData{a[0], a[1], a[5], a[3], a[2], a[4], a[6]});
        }}},
      {"exceptional-cube",
       {{"deg_conormal"},
        [](const std::vector<Integer>& a) { return blowup_exceptional_cube(BlowupData{{}, {}, {}, a[0]}); }}},
      {"antican-sq-dot-exceptional",
       {{"ky_dot_C", "genus"},
        [](const std::vector<Integer>& a) { return antican_sq_dot_exceptional(BlowupData{{}, a[0], a[1], {}}); }}},
      {"conic-ksq-dot-pullback",
       {{"ks_dot_d", "delta_dot_d"},
        [](const std::vector<Integer>& a) { return conic_bundle_ksq_dot_pullback(a[0], a[1]); }}},
      {"genus-from-blowup",
       {{"kx3", "ky3", "r", "degB"},
        [](const std::vector<Integer>& a) { return genus_from_blowup(a[0], a[1], a[2], a[3]); }}},
      {"c2-dot-divisor",
       {{"chi_O_D", "chi_O_D_D", "d_cube", "kx_sq_dot_d"},
        [](const std::vector<Integer>& a) { return c2_dot_divisor(a[0], a[1], a[2], a[3]); }}},
  };
  return table;
}

Integer parse_integer(const std::string& text) {
  const bool valid = !text.empty() && std::all_of(text.begin() + (text[0] == '-' || text[0] == '+' ? 1 : 0),
                                                  text.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
                     text != "-" && text != "+";
  if (!valid) throw Error(ErrorKind::Usage, "'" + text + "' is not an integer");
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

std::vector<RayType> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::Usage, "pair must be written TYPE,TYPE");
  std::vector<RayType> pair{parse_ray_type(text.substr(0, comma)), parse_ray_type(text.substr(comma + 1))};
  std::sort(pair.begin(), pair.end());
  return pair;
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Usage, "cannot write " + out_path);
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

std::vector<TableRow> as_rows(const std::vector<SolutionRecord>& records) {
  std::vector<TableRow> rows;
  for (const auto& record : records) rows.push_back(to_table_row(record));
  return rows;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerates and verifies Fano threefolds of Picard rank 2 and primitive ones of rank 3."};
  app.require_subcommand(1);

  int rho = 2;
  bool primitive = false;
  std::string pair;
  std::string format = "markdown";
  std::string out_path;
  bool computed = false;
  std::string formula;
  std::vector<std::string> formula_args;

  auto* enumerate = app.add_subcommand("enumerate", "Print the enumerated families");
  enumerate->add_option("--rho", rho, "Picard rank (2 or 3)")->required();
  enumerate->add_option("--pair", pair, "Keep only records with this unordered ray-type pair, e.g. E1,C2");
  enumerate->add_flag("--primitive", primitive, "Keep only primitive families");
  enumerate->add_option("--format", format, "json, csv or markdown");
  enumerate->add_option("--out", out_path, "Write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Diff the enumeration against the embedded table");
  verify->add_option("--rho", rho, "Picard rank (2 or 3)")->required();
  verify->add_flag("--primitive", primitive, "Compare only primitive families");

  auto* chern = app.add_subcommand("chern", "Evaluate a Chern-class formula on integer arguments");
  chern->add_option("formula", formula, "Formula name")->required();
  chern->add_option("args", formula_args, "Integer arguments");
  chern->positionals_at_end();

  auto* emit_cmd = app.add_subcommand("emit", "Write the ground-truth table (or the computed one)");
  emit_cmd->add_option("--rho", rho, "Picard rank (2 or 3)")->required();
  emit_cmd->add_option("--format", format, "json, csv or markdown");
  emit_cmd->add_flag("--primitive", primitive, "Keep only primitive families");
  emit_cmd->add_flag("--computed", computed, "Emit the enumerated table instead of the embedded one");
  emit_cmd->add_option("--out", out_path, "Write to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << app.help();
    return kUsage;
  }

  try {
    if (*enumerate) {
      const Format fmt = parse_format(format);
      std::vector<SolutionRecord> records = enumerate_all(rho, rho == 3 ? true : primitive);
      if (!pair.empty()) {
        const std::vector<RayType> wanted = parse_pair(pair);
        std::erase_if(records, [&](const SolutionRecord& r) {
          std::vector<RayType> types = r.ray_types();
          std::sort(types.begin(), types.end());
          return types != wanted;
        });
      }
      write_output(emit(as_rows(records), fmt), out_path, out);
      return kOk;
    }
    if (*verify) {
      const bool primitive_only = rho == 3 ? true : primitive;
      const std::vector<TableRow> truth = ground_truth(rho, primitive_only);
      const DiffReport report = diff(enumerate_all(rho, primitive_only), truth);
      out << "rho=" << rho << (primitive_only ? " primitive" : "") << ": " << truth.size() << " table rows, ";
      out << format_report(report);
      return report.empty() ? kOk : kMismatch;
    }
    if (*chern) {
      auto it = formulas().find(formula);
      if (it == formulas().end()) {
        std::string names;
        for (const auto& [name, f] : formulas()) names += " " + name;
        throw Error(ErrorKind::Usage, "unknown formula '" + formula + "'; known:" + names);
      }
      const Formula& f = it->second;
      if (formula_args.size() != f.params.size()) {
        std::string params;
        for (const auto& p : f.params) params += " " + p;
        throw Error(ErrorKind::Usage, formula + " takes " + std::to_string(f.params.size()) + " arguments:" + params);
      }
      std::vector<Integer> values;
      for (const auto& a : formula_args) values.push_back(parse_integer(a));
      out << f.eval(values).str() << "\n";
      return kOk;
    }
    if (*emit_cmd) {
      const Format fmt = parse_format(format);
      std::vector<TableRow> rows;
      if (computed) {
        rows = as_rows(enumerate_all(rho, rho == 3 ? true : primitive));
      } else {
        rows = ground_truth(rho, primitive);
      }
      write_output(emit(rows, fmt), out_path, out);
      return kOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace fano::cli
