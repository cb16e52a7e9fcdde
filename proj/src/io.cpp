#include "pcm/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcm/experiments.hpp"
#include "pcm/normalization.hpp"
#include "pcm/tools.hpp"

namespace pcm {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current += ch;
    }
  }
  if (!current.empty()) {
    lines.push_back(current);
  }
  while (!lines.empty() && lines.back().empty()) {
    lines.pop_back();
  }
  return lines;
}

std::vector<double> parse_csv_line(const std::string& line, std::size_t lineno) {
  std::vector<double> values;
  std::size_t pos = 0;
  std::size_t col = 1;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) {
      comma = line.size();
    }
    std::string field = line.substr(pos, comma - pos);
    // trim surrounding blanks
    const auto a = field.find_first_not_of(" \t");
    const auto b = field.find_last_not_of(" \t");
    field = a == std::string::npos ? "" : field.substr(a, b - a + 1);
    if (field.empty()) {
      throw ParseError("empty field at line " + std::to_string(lineno) +
                       ", column " + std::to_string(col));
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != field.size()) {
      throw ParseError("malformed number '" + field + "' at line " +
                       std::to_string(lineno) + ", column " +
                       std::to_string(col));
    }
    values.push_back(v);
    pos = comma + 1;
    ++col;
    if (comma == line.size()) {
      break;
    }
  }
  return values;
}

}  // namespace

MatrixFormat parse_format(const std::string& name) {
  if (name == "csv-full") {
    return MatrixFormat::csv_full;
  }
  if (name == "csv-upper") {
    return MatrixFormat::csv_upper;
  }
  throw ParseError("unknown matrix format '" + name +
                   "' (expected csv-full or csv-upper)");
}

PCMatrix parse_matrix_text(const std::string& text, MatrixFormat format) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) {
    throw ParseError("empty matrix file");
  }
  if (format == MatrixFormat::csv_full) {
    std::vector<std::vector<double>> grid;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      grid.push_back(parse_csv_line(lines[i], i + 1));
      if (grid.back().size() != lines.size()) {
        throw ParseError("line " + std::to_string(i + 1) + " has " +
                         std::to_string(grid.back().size()) +
                         " values, expected " + std::to_string(lines.size()));
      }
    }
    return PCMatrix(grid);
  }
  // csv-upper: row i carries n-1-i values; n comes from the first row.
  const std::size_t n = lines.empty() ? 0 : parse_csv_line(lines[0], 1).size() + 1;
  if (lines.size() != n - 1) {
    throw ParseError("upper-triangle file for n=" + std::to_string(n) +
                     " needs " + std::to_string(n - 1) + " lines, got " +
                     std::to_string(lines.size()));
  }
  std::vector<double> values;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::vector<double> row = parse_csv_line(lines[i], i + 1);
    if (row.size() != n - 1 - i) {
      throw ParseError("line " + std::to_string(i + 1) + " has " +
                       std::to_string(row.size()) + " values, expected " +
                       std::to_string(n - 1 - i));
    }
    values.insert(values.end(), row.begin(), row.end());
  }
  return PCMatrix::from_upper_triangle(n, values);
}

PCMatrix parse_matrix(const std::string& path, MatrixFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str(), format);
}

std::string serialize_matrix(const PCMatrix& m, MatrixFormat format) {
  std::string out;
  const std::size_t n = m.size();
  if (format == MatrixFormat::csv_full) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out += fmt(m.at(i, j));
        out += j + 1 < n ? "," : "\n";
      }
    }
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        out += fmt(m.at(i, j));
        out += j + 1 < n ? "," : "\n";
      }
    }
  }
  return out;
}

AnalysisDocument analyze(const PCMatrix& m, double tolerance) {
  return {m, kii_matrix(m, tolerance), tolerance};
}

namespace {

ordered_json matrix_to_json(const PCMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m.rows()) {
    rows.push_back(row);
  }
  return rows;
}

ordered_json report_to_json(const IndicatorReport& r) {
  ordered_json per_triad = ordered_json::array();
  for (const TriadRecord& t : r.per_triad) {
    per_triad.push_back({{"i", t.i},
                         {"j", t.j},
                         {"k", t.k},
                         {"x", t.x},
                         {"y", t.y},
                         {"z", t.z},
                         {"kii", t.kii},
                         {"distance", t.distance},
                         {"relative_error", t.relative_error}});
  }
  return {{"per_triad", per_triad},
          {"matrix_kii", r.matrix_kii},
          {"worst_triad", {r.worst_i, r.worst_j, r.worst_k}},
          {"ci", r.ci},
          {"tolerance", r.tolerance},
          {"consistent", r.consistent}};
}

}  // namespace

std::string to_json(const AnalysisDocument& doc) {
  ordered_json j{{"tool_version", kToolVersion},
                 {"parameters", {{"tolerance", doc.tolerance}}},
                 {"input", matrix_to_json(doc.matrix)},
                 {"report", report_to_json(doc.report)}};
  return j.dump(2) + "\n";
}

std::string to_text(const AnalysisDocument& doc) {
  std::ostringstream out;
  const IndicatorReport& r = doc.report;
  out << "PC matrix (n=" << doc.matrix.size() << ")\n";
  for (const auto& row : doc.matrix.rows()) {
    out << " ";
    for (double v : row) {
      out << " " << std::setw(12) << fmt(v);
    }
    out << "\n";
  }
  out << "\n  triad (i,j,k)          x            y            z"
      << "          kii     distance    rel.error\n";
  for (const TriadRecord& t : r.per_triad) {
    char line[256];
    std::snprintf(line, sizeof(line),
                  "  (%zu,%zu,%zu)     %12.6g %12.6g %12.6g %12.6g %12.6g %12.6g\n",
                  t.i, t.j, t.k, t.x, t.y, t.z, t.kii, t.distance,
                  t.relative_error);
    out << line;
  }
  out << "\nmatrix Kii   = " << fmt(r.matrix_kii) << "  (worst triad "
      << r.worst_i << "," << r.worst_j << "," << r.worst_k << ")\n";
  out << "CI           = " << fmt(r.ci) << "\n";
  out << "verdict      = " << (r.consistent ? "consistent" : "inconsistent")
      << " at tolerance " << fmt(r.tolerance) << "\n";
  return out.str();
}

namespace {

const char* element_name(TriadElement e) {
  switch (e) {
    case TriadElement::x:
      return "x";
    case TriadElement::y:
      return "y";
    case TriadElement::z:
      return "z";
  }
  return "?";
}

ordered_json rows_to_json(const std::vector<ConvergenceRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const ConvergenceRow& r : rows) {
    arr.push_back({{"n", r.n},
                   {"triad", {r.triad.x, r.triad.y, r.triad.z}},
                   {"distance", r.distance},
                   {"relative_error", r.relative_error},
                   {"kii", r.kii}});
  }
  return arr;
}

void print_rows_text(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "   n     distance        relative_error                   kii\n";
  for (const ConvergenceRow& r : rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "%4zu %12.6g %21.15g %21.15g\n", r.n,
                  r.distance, r.relative_error, r.kii);
    out << line;
  }
}

ordered_json stats_to_json(const IndicatorStats& s) {
  return {{"mean", s.mean},
          {"max", s.max},
          {"rank_correlation", s.rank_correlation}};
}

struct CliOptions {
  std::string input;
  std::string format = "csv-upper";
  double tolerance = kDefaultTolerance;
  std::string output = "text";
  std::uint64_t seed = 1;
  double x = 2.0;
  std::size_t nmax = 10;
  double c = 1.0;
  std::size_t n = 0;
  std::string generators;
  double blend = 1.0;
  std::size_t max_iter = 1000;
  std::size_t trials = 1000;
  double perturbation = 3.0;
  bool strict = false;
};

std::vector<double> parse_number_list(const std::string& text) {
  return parse_csv_line(text, 1);
}

int cmd_analyze(const CliOptions& opt, std::ostream& out) {
  const PCMatrix m = parse_matrix(opt.input, parse_format(opt.format));
  const AnalysisDocument doc = analyze(m, opt.tolerance);
  out << (opt.output == "structured" ? to_json(doc) : to_text(doc));
  if (opt.strict && !doc.report.consistent) {
    return 1;
  }
  return 0;
}

int cmd_triads(const CliOptions& opt, std::ostream& out) {
  const PCMatrix m = parse_matrix(opt.input, parse_format(opt.format));
  const auto triads = m.triads();
  if (opt.output == "structured") {
    ordered_json arr = ordered_json::array();
    for (const Triad& t : triads) {
      arr.push_back({{"i", t.i},
                     {"j", t.j},
                     {"k", t.k},
                     {"x", t.x},
                     {"y", t.y},
                     {"z", t.z},
                     {"kii", kii_triad(t.x, t.y, t.z)}});
    }
    out << ordered_json{{"tool_version", kToolVersion}, {"triads", arr}}.dump(2)
        << "\n";
  } else {
    out << "  (i,j,k)            x            y            z          kii\n";
    for (const Triad& t : triads) {
      char line[160];
      std::snprintf(line, sizeof(line), "  (%zu,%zu,%zu)  %12.6g %12.6g %12.6g %12.6g\n",
                    t.i, t.j, t.k, t.x, t.y, t.z, kii_triad(t.x, t.y, t.z));
      out << line;
    }
  }
  return 0;
}

int cmd_reconstruct(const CliOptions& opt, std::ostream& out) {
  const std::vector<double> gens = parse_number_list(opt.generators);
  const std::size_t n = opt.n != 0 ? opt.n : gens.size() + 1;
  const PCMatrix m = complete_from_generators({n, gens});
  if (opt.output == "structured") {
    ordered_json j{{"tool_version", kToolVersion},
                   {"n", n},
                   {"generators", gens},
                   {"matrix", matrix_to_json(m)},
                   {"matrix_kii", kii_matrix(m, opt.tolerance).matrix_kii}};
    out << j.dump(2) << "\n";
  } else {
    out << serialize_matrix(m, MatrixFormat::csv_full);
  }
  return 0;
}

int cmd_reduce(const CliOptions& opt, std::ostream& out) {
  const PCMatrix m = parse_matrix(opt.input, parse_format(opt.format));
  const ReductionTrace trace = reduce(m, opt.tolerance, opt.max_iter, opt.blend);
  if (opt.output == "structured") {
    ordered_json steps = ordered_json::array();
    for (const ReductionStep& s : trace.steps) {
      steps.push_back({{"step", s.step},
                       {"triad", {s.i, s.j, s.k}},
                       {"replaced", element_name(s.replaced)},
                       {"old_value", s.old_value},
                       {"new_value", s.new_value},
                       {"kii_after", s.kii_after}});
    }
    ordered_json j{{"tool_version", kToolVersion},
                   {"parameters",
                    {{"tolerance", opt.tolerance},
                     {"blend", opt.blend},
                     {"max_iter", opt.max_iter}}},
                   {"steps", steps},
                   {"converged", trace.converged},
                   {"final_matrix", matrix_to_json(trace.final_matrix)}};
    out << j.dump(2) << "\n";
  } else {
    for (const ReductionStep& s : trace.steps) {
      out << "step " << s.step << ": triad (" << s.i << "," << s.j << ","
          << s.k << ") " << element_name(s.replaced) << " " << fmt(s.old_value)
          << " -> " << fmt(s.new_value) << ", kii " << fmt(s.kii_after) << "\n";
    }
    out << (trace.converged ? "converged" : "not converged") << " after "
        << trace.steps.size() << " step(s)\n";
    out << serialize_matrix(trace.final_matrix, MatrixFormat::csv_full);
  }
  return trace.converged ? 0 : 1;
}

int cmd_counterexample(const CliOptions& opt, std::ostream& out) {
  const auto rows = constant_offset_table(opt.x, opt.c, opt.nmax);
  if (opt.output == "structured") {
    ordered_json j{{"tool_version", kToolVersion},
                   {"parameters", {{"x", opt.x}, {"c", opt.c}, {"nmax", opt.nmax}}},
                   {"rows", rows_to_json(rows)}};
    out << j.dump(2) << "\n";
  } else {
    out << "triads (x^n, x^2n+c, x^n) for x=" << fmt(opt.x)
        << ", c=" << fmt(opt.c) << "\n";
    print_rows_text(out, rows);
  }
  return 0;
}

int cmd_sticks(const CliOptions& opt, std::ostream& out) {
  const StickExample ex = stick_example();
  if (opt.output == "structured") {
    auto record = [](const StickRecord& r) {
      return ordered_json{{"triad", {r.triad.x, r.triad.y, r.triad.z}},
                          {"distance", r.distance},
                          {"relative_error", r.relative_error},
                          {"relative_error_true", r.relative_error_true}};
    };
    ordered_json j{{"tool_version", kToolVersion},
                   {"short_sticks", record(ex.short_sticks)},
                   {"long_sticks", record(ex.long_sticks)}};
    out << j.dump(2) << "\n";
  } else {
    auto print = [&out](const char* name, const StickRecord& r) {
      out << name << " (" << fmt(r.triad.x) << ", " << fmt(r.triad.y) << ", "
          << fmt(r.triad.z) << "): distance " << fmt(r.distance)
          << ", relative error " << fmt(r.relative_error)
          << " (against true value: " << fmt(r.relative_error_true) << ")\n";
    };
    print("short sticks", ex.short_sticks);
    print("long sticks ", ex.long_sticks);
  }
  return 0;
}

int cmd_montecarlo(const CliOptions& opt, std::ostream& out) {
  const MonteCarloSummary s =
      monte_carlo_comparison(opt.n != 0 ? opt.n : 3, opt.trials,
                             opt.perturbation, opt.seed);
  if (opt.output == "structured") {
    ordered_json j{{"tool_version", kToolVersion},
                   {"parameters",
                    {{"n", s.n},
                     {"trials", s.trials},
                     {"perturbation", s.perturbation},
                     {"seed", s.seed}}},
                   {"kii", stats_to_json(s.kii)},
                   {"distance", stats_to_json(s.distance)},
                   {"ci", stats_to_json(s.ci)},
                   {"relative_error", stats_to_json(s.relative_error)}};
    out << j.dump(2) << "\n";
  } else {
    out << "Monte Carlo comparison: n=" << s.n << ", trials=" << s.trials
        << ", perturbation=" << fmt(s.perturbation) << ", seed=" << s.seed
        << "\n";
    out << "  indicator             mean          max    rank-corr(rel.err)\n";
    auto print = [&out](const char* name, const IndicatorStats& st) {
      char line[160];
      std::snprintf(line, sizeof(line), "  %-14s %12.6g %12.6g %12.6g\n", name,
                    st.mean, st.max, st.rank_correlation);
      out << line;
    };
    print("kii", s.kii);
    print("distance", s.distance);
    print("ci", s.ci);
    print("relative_error", s.relative_error);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Inconsistency analysis for pairwise-comparison matrices"};
  app.require_subcommand(1);
  CliOptions opt;

  auto add_io = [&opt](CLI::App* cmd, bool required_input) {
    auto* in = cmd->add_option("--input", opt.input, "matrix file path");
    if (required_input) {
      in->required();
    }
    cmd->add_option("--format", opt.format, "csv-full or csv-upper")
        ->check(CLI::IsMember({"csv-full", "csv-upper"}));
  };
  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--tolerance", opt.tolerance, "consistency tolerance");
    cmd->add_option("--output", opt.output, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full indicator report");
  add_io(analyze_cmd, true);
  add_common(analyze_cmd);
  analyze_cmd->add_flag("--strict", opt.strict,
                        "exit 1 when inconsistent beyond tolerance");

  CLI::App* triads_cmd = app.add_subcommand("triads", "list all triads");
  add_io(triads_cmd, true);
  add_common(triads_cmd);

  CLI::App* reconstruct_cmd =
      app.add_subcommand("reconstruct", "consistent matrix from generators");
  reconstruct_cmd->add_option("--n", opt.n, "matrix dimension");
  reconstruct_cmd
      ->add_option("--generators", opt.generators,
                   "comma-separated list of n-1 ratios")
      ->required();
  add_common(reconstruct_cmd);

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "iterative inconsistency reduction");
  add_io(reduce_cmd, true);
  add_common(reduce_cmd);
  reduce_cmd->add_option("--blend", opt.blend, "geometric blend in (0,1]");
  reduce_cmd->add_option("--max-iter", opt.max_iter, "step limit");

  CLI::App* counter_cmd = app.add_subcommand(
      "counterexample", "constant-distance convergent triad sequence");
  counter_cmd->add_option("--x", opt.x, "base, must be > 1");
  counter_cmd->add_option("--nmax", opt.nmax, "number of rows");
  counter_cmd->add_option("--c", opt.c, "distance offset constant");
  add_common(counter_cmd);

  CLI::App* sticks_cmd =
      app.add_subcommand("sticks", "equal-distance stick estimations");
  add_common(sticks_cmd);

  CLI::App* mc_cmd = app.add_subcommand(
      "montecarlo", "indicator comparison on random perturbed matrices");
  mc_cmd->add_option("--n", opt.n, "matrix dimension");
  mc_cmd->add_option("--trials", opt.trials, "number of trials");
  mc_cmd->add_option("--perturbation", opt.perturbation,
                     "multiplicative noise factor, >= 1");
  mc_cmd->add_option("--seed", opt.seed, "random seed");
  add_common(mc_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) {
      return cmd_analyze(opt, out);
    }
    if (triads_cmd->parsed()) {
      return cmd_triads(opt, out);
    }
    if (reconstruct_cmd->parsed()) {
      return cmd_reconstruct(opt, out);
    }
    if (reduce_cmd->parsed()) {
      return cmd_reduce(opt, out);
    }
    if (counter_cmd->parsed()) {
      return cmd_counterexample(opt, out);
    }
    if (sticks_cmd->parsed()) {
      return cmd_sticks(opt, out);
    }
    if (mc_cmd->parsed()) {
      return cmd_montecarlo(opt, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace pcm
