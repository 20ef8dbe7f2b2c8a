// Command-line front end: theorem verification over (n, Y) grids,
// factorization of user-supplied transformations, partition enumeration,
// and the relative-rank formula table.
//
// Exit codes: 0 all checks pass, 1 any failure, 2 usage or parse error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chainrr/factorize.hpp"
#include "chainrr/generators.hpp"
#include "chainrr/json_io.hpp"
#include "chainrr/literals.hpp"
#include "chainrr/verify.hpp"

namespace {

using namespace chainrr;

std::vector<int> parse_contains_list(const std::string& text) {
  // Comma list of chain points; the letter n stands for the chain maximum.
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item == "n") {
      out.push_back(0);
    } else {
      out.push_back(std::stoi(item));
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorKind::ParseError, "cannot write " + path);
  }
  out << content;
}

int run_verify_cmd(const std::string& scope_name, int n_max, const std::string& y_exact,
                   bool y_all, const std::string& y_contains, const std::string& json_path,
                   const std::string& csv_path) {
  auto scope = parse_scope(scope_name);
  if (!scope) {
    std::cerr << "unknown scope '" << scope_name
              << "' (expected thm5|thm6|thm11|thm12|lemma-eta|prop2|lemma7|all)\n";
    return 2;
  }
  YFilter filter;
  if (!y_exact.empty()) {
    filter.mode = YFilter::Mode::Exact;
    std::string item;
    std::istringstream in(y_exact);
    while (std::getline(in, item, ',')) {
      filter.values.push_back(std::stoi(item));
    }
  } else if (!y_contains.empty()) {
    filter.mode = YFilter::Mode::Contains;
    filter.values = parse_contains_list(y_contains);
  }
  if (y_all && n_max > 7) {
    std::cerr << "--y-all sweeps are bounded by --n-max 7\n";
    return 2;
  }

  auto report = run_verify(*scope, n_max, filter);

  std::cout << std::left << std::setw(4) << "n" << std::setw(4) << "m" << std::setw(12) << "y"
            << std::setw(34) << "check" << std::setw(10) << "formula" << std::setw(10) << "brute"
            << std::setw(10) << "universe" << std::setw(10) << "millis" << "status\n";
  for (const auto& row : report.rows) {
    std::cout << std::left << std::setw(4) << row.n << std::setw(4) << row.m << std::setw(12)
              << format_y(row.y) << std::setw(34) << row.check << std::setw(10)
              << row.formula_value << std::setw(10) << row.brute_value << std::setw(10)
              << row.universe_size << std::setw(10) << std::fixed << std::setprecision(1)
              << row.millis << row.status;
    if (!row.note.empty()) {
      std::cout << "  # " << row.note;
    }
    std::cout << '\n';
  }
  std::cout << report.rows.size() << " rows: " << report.count("PASS") << " pass, "
            << report.count("FAIL") << " fail, " << report.count("SKIPPED") << " skipped\n";

  if (!json_path.empty()) {
    write_file(json_path, nlohmann::json(report).dump(2) + "\n");
  }
  if (!csv_path.empty()) {
    write_file(csv_path, report_to_csv(report));
  }
  return report.all_pass() ? 0 : 1;
}

int run_factor_cmd(const std::string& mode, const std::string& ctx_text,
                   const std::string& map_text, const std::string& json_path) {
  ChainContext ctx = parse_chain_context(ctx_text);
  Transformation target = parse_transformation(ctx, map_text);
  Word word;
  if (mode == "over-o") {
    word = factor_op_over_o(target);
  } else {
    word = factor_t_over_op(target, canonical_b_t_mod_op(ctx).set);
  }
  std::cout << "word: " << word.display() << '\n';
  for (std::size_t i = 0; i < word.factors.size(); ++i) {
    const auto& f = word.factors[i];
    std::cout << "  [" << i + 1 << "] " << f.label << " = " << format_transformation(f.map)
              << "  (" << to_string(f.tag);
    if (f.tag == FactorTag::EtaPower) {
      std::cout << "^" << f.power;
    }
    std::cout << ")\n";
  }
  bool ok = word.product() == target;
  std::cout << "product == input: " << (ok ? "true" : "false") << '\n';
  if (!json_path.empty()) {
    write_file(json_path, nlohmann::json(word).dump(2) + "\n");
  }
  return ok ? 0 : 1;
}

int run_enumerate_cmd(const std::string& what, int n, int l, const std::string& format) {
  std::vector<Partition> items;
  if (what == "q") {
    items = enumerate_q(n, l);
  } else if (what == "p") {
    items = enumerate_p(n, l);
  } else if (what == "r") {
    items = enumerate_r(n, l);
  } else {
    items = enumerate_all(n, l);
  }
  if (format == "count") {
    std::cout << items.size() << '\n';
  } else if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : items) {
      j.push_back(p);
    }
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& p : items) {
      std::cout << format_partition(p) << '\n';
    }
  }
  return 0;
}

int run_formulas_cmd(int n, const std::string& y_text, const std::string& json_path) {
  auto y = parse_contains_list(y_text);
  for (int& v : y) {
    if (v == 0) {
      v = n;
    }
  }
  ChainContext ctx(n, std::move(y));
  const int m = ctx.m();
  nlohmann::json j{{"n", n}, {"y", ctx.y()}, {"m", m}};

  auto q_count = binomial(n - 1, m - 1);
  auto p_count = (2 <= m && m <= n - 1) ? binomial(n - 1, m) : 0;
  auto all_count = stirling2(n, m);
  auto r_count = all_count - q_count - p_count;
  std::cout << "n = " << n << ", Y = {" << format_y(ctx.y()) << "}, m = " << m << '\n';
  std::cout << "  |Q_m| = " << q_count << "\n  |P_m| = " << p_count << "\n  |R_m| = " << r_count
            << "\n  S(n,m) = " << all_count << "\n  C(n,m) = " << binomial(n, m) << '\n';
  j["q_count"] = q_count;
  j["p_count"] = p_count;
  j["r_count"] = r_count;
  j["stirling"] = all_count;
  j["binomial"] = binomial(n, m);

  if (m == 1 || (1 < m && m < n)) {
    auto value = relrank_op_mod_o(ctx);
    std::cout << "  relrank(OP:O) = " << value << '\n';
    j["relrank_op_mod_o"] = value;
  } else {
    std::cout << "  relrank(OP:O) = out of theorem scope (m = n)\n";
    j["relrank_op_mod_o"] = nullptr;
  }
  if (m < n) {
    auto value = relrank_t_mod_op(ctx);
    std::cout << "  relrank(T:OP) = " << value << '\n';
    j["relrank_t_mod_op"] = value;
  } else {
    std::cout << "  relrank(T:OP) = out of theorem scope (m = n)\n";
    j["relrank_t_mod_op"] = nullptr;
  }
  if (!json_path.empty()) {
    write_file(json_path, j.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computation with transformation semigroups on a finite chain with "
      "restricted range.\nBudget override: set CHAINRR_MAX_UNIVERSE to raise or lower "
      "the maximum m^n universe size (default 10000000)."};
  app.require_subcommand(1);

  // verify
  std::string scope = "all";
  int n_max = 4;
  std::string y_exact, y_contains, json_path, csv_path;
  bool y_all = false;
  auto* verify = app.add_subcommand("verify", "run theorem checks over an (n, Y) grid");
  verify->add_option("scope", scope, "thm5|thm6|thm11|thm12|lemma-eta|prop2|lemma7|all");
  verify->add_option("--n-max", n_max, "largest chain size in the grid")->check(CLI::Range(2, 9));
  verify->add_option("--y", y_exact, "restrict to one exact Y, e.g. \"2,4\"");
  verify->add_flag("--y-all", y_all, "sweep all nonempty Y (default; bounded by --n-max 7)");
  verify->add_option("--y-contains", y_contains,
                     "restrict to Y containing the listed points; 'n' means the chain maximum");
  verify->add_option("--json", json_path, "write the report as JSON");
  verify->add_option("--csv", csv_path, "write the report as CSV");

  // factor
  std::string mode, ctx_text, map_text, factor_json;
  auto* factor = app.add_subcommand("factor", "factor a transformation into a certified word");
  factor->add_option("mode", mode, "over-o (orientation-preserving input) or over-op")
      ->required()
      ->check(CLI::IsMember({"over-o", "over-op"}));
  factor->add_option("--ctx", ctx_text, "context literal, e.g. \"n=4 Y=2,3\"")->required();
  factor->add_option("--map", map_text, "image list, e.g. \"[3,2,2,3]\"")->required();
  factor->add_option("--json", factor_json, "write the word as JSON");

  // enumerate
  std::string what, format = "text";
  int en = 0, el = 0;
  auto* enumerate = app.add_subcommand("enumerate", "list a partition family");
  enumerate->add_option("what", what, "q|p|r|all")
      ->required()
      ->check(CLI::IsMember({"q", "p", "r", "all"}));
  enumerate->add_option("--n", en, "chain size")->required()->check(CLI::Range(1, 12));
  enumerate->add_option("--l", el, "block count")->required();
  enumerate->add_option("--format", format, "text|json|count")
      ->check(CLI::IsMember({"text", "json", "count"}));

  // formulas
  int fn = 0;
  std::string fy, formulas_json;
  auto* formulas = app.add_subcommand("formulas", "print counts and relative ranks for one ctx");
  formulas->add_option("--n", fn, "chain size")->required();
  formulas->add_option("--y", fy, "Y as a comma list; 'n' means the chain maximum")->required();
  formulas->add_option("--json", formulas_json, "write the table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      return run_verify_cmd(scope, n_max, y_exact, y_all, y_contains, json_path, csv_path);
    }
    if (factor->parsed()) {
      return run_factor_cmd(mode, ctx_text, map_text, factor_json);
    }
    if (enumerate->parsed()) {
      return run_enumerate_cmd(what, en, el, format);
    }
    if (formulas->parsed()) {
      return run_formulas_cmd(fn, fy, formulas_json);
    }
  } catch (const chainrr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case chainrr::ErrorKind::ParseError:
      case chainrr::ErrorKind::InvalidArity:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
