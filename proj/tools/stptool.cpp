// stptool: command-line access to the stochastic tensor polytope toolkit.
//
//   bounds     vertex-count bound report for one order or a range
//   enumerate  exact vertex enumeration
//   check      validate a tensor file and certify vertexhood
//   decompose  exact convex decomposition into vertices
//   latin      Latin-square counts by two independent routes
//   verify     bound comparisons across a range of orders
//
// Exit codes: 0 success, 1 validation or verification failure, 2 usage or
// parse error.

#include "stp/bounds.hpp"
#include "stp/enumeration.hpp"
#include "stp/polytope.hpp"
#include "stp/rational.hpp"
#include "stp/serialization.hpp"
#include "stp/tensor.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

struct BoundsOptions {
  int n = 0;
  int n_max = 0;  // 0 = single order
  std::string format = "table";
  bool with_enumeration = false;
  std::string out;
};

struct EnumerateOptions {
  int n = 0;
  std::string format = "table";
  std::string out;
};

struct CheckOptions {
  std::string tensor_path;
};

struct DecomposeOptions {
  std::string tensor_path;
  int n = 0;
  std::uint64_t seed = 0;
  std::string format = "table";
  std::string out;
};

struct LatinOptions {
  int n = 0;
  std::string method = "both";
  std::string format = "table";
};

struct VerifyOptions {
  int n_max = 10;
  std::string format = "table";
  std::string out;
};

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line.append(widths[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t c = 0; c < fields.size(); ++c) {
    if (c > 0) line += ',';
    line += csv_quote(fields[c]);
  }
  line += '\n';
  return line;
}

// Table cell for a large integer: exact while it stays short, otherwise the
// factored form with a decimal approximation.
std::string int_cell(const stp::Int& value, const std::string& factored) {
  const std::string exact = value.str();
  if (exact.size() <= 15) return factored.empty() || factored == exact ? exact : factored + " = " + exact;
  return factored.empty() ? stp::decimal_string(stp::Rational(value))
                          : factored + " ~ " + stp::decimal_string(stp::Rational(value));
}

std::string rational_cell(const stp::Rational& value, const std::string& factored) {
  const std::string exact = stp::to_string(value);
  if (exact.size() <= 15) return exact;
  return factored.empty() ? stp::decimal_string(value) : factored + " ~ " + stp::decimal_string(value);
}

std::string verdict_cell(const std::optional<bool>& verdict) {
  if (!verdict) return "-";
  return *verdict ? "pass" : "FAIL";
}

std::string linial_factored(int n) { return std::to_string(n) + "^" + std::to_string(3 * n * n); }

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) stp::save_text_file(out_path, text);
}

Json report_doc(const stp::BoundReport& report, const std::optional<std::size_t>& f0) {
  Json doc = Json::parse(stp::write_bound_report(report));
  if (f0) doc["f0"] = *f0;
  return doc;
}

int run_bounds(const BoundsOptions& opt) {
  const int n_hi = opt.n_max == 0 ? opt.n : opt.n_max;
  if (n_hi < opt.n) {
    std::cerr << "error: --n-max must be at least --n\n";
    return 2;
  }
  std::vector<stp::BoundReport> reports;
  std::vector<std::optional<std::size_t>> f0;
  for (int n = opt.n; n <= n_hi; ++n) {
    reports.push_back(stp::make_bound_report(n));
    if (opt.with_enumeration) {
      if (n >= 4)
        std::cerr << "warning: n = " << n << ": vertex enumeration beyond n = 3 explores an exponential cone and may run extremely long\n";
      f0.push_back(stp::enumerate_vertices(stp::build_omega_h(n)).vertices.size());
    } else {
      f0.push_back(std::nullopt);
    }
  }

  std::string text;
  if (opt.format == "json") {
    Json doc;
    doc["reports"] = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) doc["reports"].push_back(report_doc(reports[i], f0[i]));
    text = doc.dump(2) + "\n";
  } else if (opt.format == "csv") {
    text = csv_line({"n", "lower_latin_ratio_exact", "lower_latin_ratio_approx", "latin_count", "lbt_lower", "f0",
                     "new_upper_exact", "new_upper_factored", "old_upper_exact", "old_upper_approx",
                     "old_upper_factored", "linial_luria_upper", "barnette_simplicial_max", "new_upper_below_old",
                     "new_upper_below_linial_luria", "lbt_matches_closed_form", "lbt_vs_latin_ratio_as_expected",
                     "lbt_below_new_upper"});
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      const auto opt_bool = [](const std::optional<bool>& b) {
        return b ? std::string(*b ? "true" : "false") : std::string();
      };
      text += csv_line({std::to_string(r.n), stp::to_string(r.lower_latin_ratio),
                        stp::decimal_string(r.lower_latin_ratio), r.latin_count ? r.latin_count->str() : "",
                        r.lbt_lower ? std::to_string(*r.lbt_lower) : "", f0[i] ? std::to_string(*f0[i]) : "",
                        r.new_upper.str(), stp::new_upper_factored(r.n), stp::to_string(r.old_upper),
                        stp::decimal_string(r.old_upper), stp::old_upper_factored(r.n), r.linial_luria_upper.str(),
                        r.barnette_simplicial_max ? r.barnette_simplicial_max->str() : "",
                        r.verdicts.new_upper_below_old ? "true" : "false",
                        r.verdicts.new_upper_below_linial_luria ? "true" : "false",
                        opt_bool(r.verdicts.lbt_matches_closed_form),
                        opt_bool(r.verdicts.lbt_vs_latin_ratio_as_expected),
                        opt_bool(r.verdicts.lbt_below_new_upper)});
    }
  } else if (opt.n_max != 0) {
    std::ostringstream body;
    body << "vertex count bounds, n = " << opt.n << ".." << n_hi << "\n\n";
    body << "lower bounds and exact counts\n";
    std::vector<std::vector<std::string>> lower_rows;
    lower_rows.push_back({"n", "latin_lower_ratio", "latin_count", "lbt_lower", "f0"});
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      lower_rows.push_back({std::to_string(r.n), stp::decimal_string(r.lower_latin_ratio),
                            r.latin_count ? r.latin_count->str() : "-",
                            r.lbt_lower ? std::to_string(*r.lbt_lower) : "-",
                            f0[i] ? std::to_string(*f0[i]) : "?"});
    }
    body << render_table(lower_rows) << "\n";
    body << "upper bounds\n";
    std::vector<std::vector<std::string>> upper_rows;
    upper_rows.push_back({"n", "f0", "new_upper", "old_upper"});
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      upper_rows.push_back({std::to_string(r.n), f0[i] ? std::to_string(*f0[i]) : "?",
                            int_cell(r.new_upper, stp::new_upper_factored(r.n)),
                            rational_cell(r.old_upper, stp::old_upper_factored(r.n))});
    }
    body << render_table(upper_rows);
    text = body.str();
  } else {
    const auto& r = reports.front();
    std::ostringstream body;
    body << "bound report, n = " << r.n << "\n";
    body << "  lower_latin_ratio:        " << stp::to_string(r.lower_latin_ratio) << " ~ "
         << stp::decimal_string(r.lower_latin_ratio) << "\n";
    if (r.latin_count) body << "  latin_count:              " << r.latin_count->str() << "\n";
    if (r.lbt_lower) body << "  lbt_lower:                " << *r.lbt_lower << "\n";
    body << "  f0:                       " << (f0.front() ? std::to_string(*f0.front()) : "?") << "\n";
    body << "  new_upper:                " << int_cell(r.new_upper, stp::new_upper_factored(r.n)) << "\n";
    body << "  old_upper:                " << rational_cell(r.old_upper, stp::old_upper_factored(r.n)) << "\n";
    body << "  linial_luria_upper:       " << int_cell(r.linial_luria_upper, linial_factored(r.n)) << "\n";
    if (r.barnette_simplicial_max)
      body << "  barnette_simplicial_max:  " << r.barnette_simplicial_max->str() << "\n";
    body << "  verdicts:\n";
    body << "    new_upper_below_old:            " << verdict_cell(r.verdicts.new_upper_below_old) << "\n";
    body << "    new_upper_below_linial_luria:   " << verdict_cell(r.verdicts.new_upper_below_linial_luria) << "\n";
    body << "    lbt_matches_closed_form:        " << verdict_cell(r.verdicts.lbt_matches_closed_form) << "\n";
    body << "    lbt_vs_latin_ratio_as_expected: " << verdict_cell(r.verdicts.lbt_vs_latin_ratio_as_expected)
         << "\n";
    body << "    lbt_below_new_upper:            " << verdict_cell(r.verdicts.lbt_below_new_upper) << "\n";
    text = body.str();
  }
  emit(text, opt.out);
  return 0;
}

int run_enumerate(const EnumerateOptions& opt) {
  if (opt.n >= 4)
    std::cerr << "warning: vertex enumeration beyond n = 3 explores an exponential cone and may run extremely long\n";
  const auto set = stp::enumerate_vertices(stp::build_omega_h(opt.n));
  const std::string doc = stp::write_vertex_set(set);
  if (opt.format == "json") {
    std::cout << doc;
  } else {
    std::cout << set.vertices.size() << " / " << set.integral_count << " / " << set.nonintegral_count << "\n";
  }
  if (!opt.out.empty()) stp::save_text_file(opt.out, doc);
  return 0;
}

int run_check(const CheckOptions& opt) {
  const stp::StochasticTensor t = stp::load_tensor_file(opt.tensor_path);
  if (const auto violation = stp::validate(t)) {
    std::cout << "invalid: " << violation->message() << "\n";
    return 1;
  }
  const auto h = stp::build_omega_h(t.n);
  const auto cert = stp::is_vertex(h, t);
  if (cert.vertex()) {
    std::cout << "valid, vertex (active rank " << cert.active_rank << "/" << cert.ambient_dim << ")\n";
  } else {
    std::cout << "valid, not a vertex (active rank " << cert.active_rank << "/" << cert.ambient_dim << ")\n";
  }
  return 0;
}

int run_decompose(const DecomposeOptions& opt) {
  if (!opt.tensor_path.empty() && opt.n != 0) {
    std::cerr << "error: pass either --tensor or --n, not both\n";
    return 2;
  }
  stp::StochasticTensor t;
  if (!opt.tensor_path.empty()) {
    t = stp::load_tensor_file(opt.tensor_path);
  } else if (opt.n != 0) {
    t = stp::random_tensor(opt.n, opt.seed);
  } else {
    std::cerr << "error: pass --tensor PATH or --n N [--seed S]\n";
    return 2;
  }
  if (const auto violation = stp::validate(t)) {
    std::cout << "invalid: " << violation->message() << "\n";
    return 1;
  }

  const auto h = stp::build_omega_h(t.n);
  const auto hull = stp::affine_hull(h);
  const auto terms = stp::caratheodory_decompose(h, hull, t);

  stp::StochasticTensor reconstruction(t.n);
  stp::Rational weight_sum(0);
  bool all_vertices = true;
  for (const auto& term : terms) {
    weight_sum += term.weight;
    for (std::size_t f = 0; f < reconstruction.entries.size(); ++f)
      reconstruction.entries[f] += term.weight * term.vertex.entries[f];
    all_vertices = all_vertices && stp::is_vertex(h, hull, term.vertex).vertex();
  }
  const bool exact = reconstruction == t && weight_sum == 1;

  Json doc;
  doc["n"] = t.n;
  doc["source"] = Json::parse(stp::write_tensor(t));
  doc["terms"] = Json::array();
  for (const auto& term : terms) {
    Json entry;
    entry["weight"] = stp::to_string(term.weight);
    entry["vertex"] = Json::parse(stp::write_tensor(term.vertex));
    doc["terms"].push_back(std::move(entry));
  }
  doc["reconstruction"] = exact ? "exact" : "mismatch";

  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "terms: " << terms.size() << "\n";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      std::cout << "  " << (i + 1) << ": weight " << stp::to_string(terms[i].weight) << ", "
                << (stp::is_integral(terms[i].vertex) ? "integral vertex" : "fractional vertex") << "\n";
    }
    std::cout << "sum of weights: " << stp::to_string(weight_sum) << "\n";
    std::cout << "reconstruction: " << (exact ? "exact" : "mismatch") << "\n";
  }
  if (!opt.out.empty()) stp::save_text_file(opt.out, doc.dump(2) + "\n");
  return exact && all_vertices ? 0 : 1;
}

int run_latin(const LatinOptions& opt) {
  std::optional<stp::Int> backtracking;
  std::optional<stp::Int> formula;
  if (opt.method == "backtrack" || opt.method == "both")
    backtracking = stp::Int(stp::count_latin_squares_backtracking(opt.n));
  if (opt.method == "permanent" || opt.method == "both") formula = stp::latin_count_shao_wei(opt.n);
  const bool agree = !backtracking || !formula || *backtracking == *formula;

  if (opt.format == "json") {
    Json doc;
    doc["n"] = opt.n;
    if (backtracking) doc["backtracking"] = backtracking->str();
    if (formula) doc["permanent_formula"] = formula->str();
    if (backtracking && formula) doc["agree"] = agree;
    std::cout << doc.dump(2) << "\n";
  } else {
    if (backtracking) std::cout << "backtracking:       " << backtracking->str() << "\n";
    if (formula) std::cout << "permanent formula:  " << formula->str() << "\n";
    if (backtracking && formula) std::cout << (agree ? "agree" : "DISAGREE") << "\n";
  }
  if (!agree) {
    std::cerr << "error: the two counting routes disagree\n";
    return 1;
  }
  return 0;
}

int run_verify(const VerifyOptions& opt) {
  const auto reports = stp::verify_propositions(2, opt.n_max);
  bool all = true;
  for (const auto& r : reports) all = all && r.verdicts.all_pass();

  std::string text;
  if (opt.format == "json") {
    Json doc;
    doc["reports"] = Json::array();
    for (const auto& r : reports) doc["reports"].push_back(report_doc(r, std::nullopt));
    doc["all_pass"] = all;
    text = doc.dump(2) + "\n";
  } else if (opt.format == "csv") {
    text = csv_line({"n", "new_upper_below_old", "new_upper_below_linial_luria", "lbt_matches_closed_form",
                     "lbt_vs_latin_ratio_as_expected", "lbt_below_new_upper", "all_pass"});
    for (const auto& r : reports) {
      const auto opt_bool = [](const std::optional<bool>& b) {
        return b ? std::string(*b ? "true" : "false") : std::string();
      };
      text += csv_line({std::to_string(r.n), r.verdicts.new_upper_below_old ? "true" : "false",
                        r.verdicts.new_upper_below_linial_luria ? "true" : "false",
                        opt_bool(r.verdicts.lbt_matches_closed_form),
                        opt_bool(r.verdicts.lbt_vs_latin_ratio_as_expected),
                        opt_bool(r.verdicts.lbt_below_new_upper), r.verdicts.all_pass() ? "true" : "false"});
    }
  } else {
    std::ostringstream body;
    body << "proposition verdicts, n = 2.." << opt.n_max << "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "new<old", "new<power", "lbt_form", "lbt_vs_ratio", "lbt<new", "all"});
    for (const auto& r : reports) {
      rows.push_back({std::to_string(r.n), verdict_cell(r.verdicts.new_upper_below_old),
                      verdict_cell(r.verdicts.new_upper_below_linial_luria),
                      verdict_cell(r.verdicts.lbt_matches_closed_form),
                      verdict_cell(r.verdicts.lbt_vs_latin_ratio_as_expected),
                      verdict_cell(r.verdicts.lbt_below_new_upper), r.verdicts.all_pass() ? "pass" : "FAIL"});
    }
    body << render_table(rows);
    text = body.str();
  }
  emit(text, opt.out);
  if (!all) {
    std::cerr << "error: at least one bound comparison failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stochastic tensor polytope toolkit"};
  app.require_subcommand(1);

  BoundsOptions bounds_opt;
  auto* bounds = app.add_subcommand("bounds", "Vertex-count bound report for one order or a range");
  bounds->add_option("--n", bounds_opt.n, "tensor order")->required()->check(CLI::Range(2, 30));
  bounds->add_option("--n-max", bounds_opt.n_max, "report every order in [n, n-max]")->check(CLI::Range(2, 30));
  bounds->add_option("--format", bounds_opt.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  bounds->add_flag("--with-enumeration", bounds_opt.with_enumeration,
                   "fill the f0 column by enumerating vertices (exponential beyond n = 3)");
  bounds->add_option("--out", bounds_opt.out, "also write the output to this file");

  EnumerateOptions enum_opt;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate every vertex of the order-n polytope");
  enumerate->add_option("--n", enum_opt.n, "tensor order")->required()->check(CLI::Range(1, 6));
  enumerate->add_option("--format", enum_opt.format, "output format")->check(CLI::IsMember({"table", "json"}));
  enumerate->add_option("--out", enum_opt.out, "write the vertex-set document to this file");

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "Validate a tensor file and certify vertexhood");
  check->add_option("--tensor", check_opt.tensor_path, "tensor document path")->required();

  DecomposeOptions dec_opt;
  auto* decompose = app.add_subcommand("decompose", "Decompose a member into a convex combination of vertices");
  decompose->add_option("--tensor", dec_opt.tensor_path, "tensor document path");
  decompose->add_option("--n", dec_opt.n, "generate a seeded random member of this order")->check(CLI::Range(1, 10));
  decompose->add_option("--seed", dec_opt.seed, "seed for --n generation");
  decompose->add_option("--format", dec_opt.format, "output format")->check(CLI::IsMember({"table", "json"}));
  decompose->add_option("--out", dec_opt.out, "write the decomposition document to this file");

  LatinOptions latin_opt;
  auto* latin = app.add_subcommand("latin", "Count Latin squares by backtracking and by the permanent formula");
  latin->add_option("--n", latin_opt.n, "square order")->required()->check(CLI::Range(1, 5));
  latin->add_option("--method", latin_opt.method, "counting route")
      ->check(CLI::IsMember({"backtrack", "permanent", "both"}));
  latin->add_option("--format", latin_opt.format, "output format")->check(CLI::IsMember({"table", "json"}));

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Check every bound comparison for n in [2, n-max]");
  verify->add_option("--n-max", verify_opt.n_max, "top of the verified range")->check(CLI::Range(2, 30));
  verify->add_option("--format", verify_opt.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
  verify->add_option("--out", verify_opt.out, "also write the output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(bounds)) return run_bounds(bounds_opt);
    if (app.got_subcommand(enumerate)) return run_enumerate(enum_opt);
    if (app.got_subcommand(check)) return run_check(check_opt);
    if (app.got_subcommand(decompose)) return run_decompose(dec_opt);
    if (app.got_subcommand(latin)) return run_latin(latin_opt);
    if (app.got_subcommand(verify)) return run_verify(verify_opt);
  } catch (const stp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
