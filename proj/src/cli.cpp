#include "ramanujan/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ramanujan/core.hpp"
#include "ramanujan/problems.hpp"
#include "ramanujan/series.hpp"
#include "ramanujan/tables.hpp"

namespace ramanujan::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string problem;
  std::string poly;
  std::string coeffs;
  std::string mode = "float";
  int order = 1;
  int nmax = 10;
  int max_iter = 100;
  std::string tol;
  std::string step_tol;
  std::string format = "text";
  int digits = 14;
  std::string start;
  int m = 2;
  std::string a;
  long c = 1;
  std::string b;
  bool condition = false;
  int series_n = 10;
  std::string n_range = "1..3";
  int table = 0;
  int scan = 64;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw Error(ErrorCode::InvalidParameter, "empty coefficient list");
  return out;
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(ErrorCode::InvalidParameter, "unknown format '" + name + "'");
}

Problem resolve_problem(const Options& o) {
  if (o.problem.empty() == o.poly.empty()) {
    throw Error(ErrorCode::InvalidParameter, "give exactly one of --problem or --poly");
  }
  Problem p;
  if (!o.poly.empty()) {
    p.name = "poly";
    p.expr = Expr::polynomial(parse_rational_list(o.poly));
    p.default_start = 0;
  } else if (o.problem == "sqrt" || o.problem == "root") {
    p = mth_root_problem(o.m, o.a.empty() ? Rational(2) : Rational::parse(o.a), o.c);
  } else if (o.problem == "log1p") {
    p = log_problem(o.a.empty() ? Rational(0) : Rational::parse(o.a));
  } else if (o.problem == "ln") {
    p = log_value_problem(o.b.empty() ? Rational(2) : Rational::parse(o.b));
  } else {
    p = named_problem(o.problem);
  }
  if (!o.start.empty()) p.default_start = Rational::parse(o.start);
  return p;
}

std::string scientific(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(6) << x;
  return os.str();
}

template <Scalar S>
Cell value_cell(const S& x, int digits) {
  return Cell::of_decimal(render(x, digits));
}

/// Exact fraction column, only populated in rational mode.
template <Scalar S>
Cell fraction_cell(const S& x) {
  if constexpr (is_exact_v<S>) {
    return Cell::of_fraction(x);
  } else {
    return Cell::empty();
  }
}

template <Scalar S>
int digits_against(const S& x, const Problem& p) {
  if constexpr (is_exact_v<S>) {
    return matching_digits(x, p.reference());
  } else {
    return matching_digits(Rational::from_double(x), p.reference());
  }
}

template <Scalar S>
SolverConfig<S> solver_config(const Options& o) {
  SolverConfig<S> config;
  config.order = o.order;
  config.max_iterations = o.max_iter;
  if (!o.tol.empty()) config.residual_tolerance = from_rational<S>(Rational::parse(o.tol));
  if (!o.step_tol.empty()) config.step_tolerance = from_rational<S>(Rational::parse(o.step_tol));
  config.check_condition = o.condition;
  config.validate();
  return config;
}

template <Scalar S>
int solve(const Options& o, const Problem& p, Report& report) {
  const SolverConfig<S> config = solver_config<S>(o);
  const auto trace = iterate(p.oracle<S>(), p.start<S>(), config);

  report.title = "Iteration of order " + std::to_string(config.order) + " on " + p.name;
  report.columns = {"m", "z", "fraction", "residual"};
  if (config.check_condition) report.columns.emplace_back("condition");
  for (const auto& it : trace.iterates) {
    std::vector<Cell> row{Cell::of_int(it.index), value_cell(it.z, o.digits), fraction_cell(it.z),
                          Cell::of_decimal(scientific(to_double(it.residual)))};
    if (config.check_condition) {
      row.push_back(it.condition ? Cell::of_decimal(scientific(to_double(*it.condition))) : Cell::empty());
    }
    report.rows.push_back(std::move(row));
  }
  report.summary = {
      {"problem", Cell::of_text(p.name)},
      {"mode", Cell::of_text(o.mode)},
      {"order", Cell::of_int(config.order)},
      {"iterations", Cell::of_int(trace.steps())},
      {"root", value_cell(trace.root(), o.digits)},
      {"root_fraction", fraction_cell(trace.root())},
      {"termination", Cell::of_text(std::string(to_string(trace.termination)))},
  };
  switch (trace.termination) {
    case Termination::ResidualMet:
    case Termination::StepMet: return kOk;
    case Termination::MaxIterations: return kNotConverged;
    case Termination::StepUndefined: return kStepUndefined;
  }
  return kOk;
}

template <Scalar S>
int converge(const Options& o, const Problem& p, Report& report) {
  if (o.nmax < 1) throw Error(ErrorCode::InvalidParameter, "--nmax must be >= 1");
  const auto table = convergent_table(p.oracle<S>(), p.start<S>(), o.nmax);
  const bool scored = !p.reference_root.empty();

  report.title = "Convergents of " + p.name + " at " + p.default_start.str();
  report.columns = {"n", "value", "fraction"};
  if (scored) report.columns.emplace_back("digits");
  for (int n = 1; n <= o.nmax; ++n) {
    const auto& entry = table[static_cast<std::size_t>(n - 1)];
    std::vector<Cell> row{Cell::of_int(n)};
    if (entry) {
      row.push_back(value_cell(*entry, o.digits));
      row.push_back(fraction_cell(*entry));
      if (scored) row.push_back(Cell::of_int(digits_against(*entry, p)));
    } else {
      row.push_back(Cell::of_text("undefined"));
      row.push_back(Cell::empty());
      if (scored) row.push_back(Cell::empty());
    }
    report.rows.push_back(std::move(row));
  }
  report.summary = {
      {"problem", Cell::of_text(p.name)},
      {"mode", Cell::of_text(o.mode)},
      {"start", Cell::of_fraction(p.default_start)},
      {"nmax", Cell::of_int(o.nmax)},
      {"reference_root", scored ? Cell::of_decimal(p.reference_root) : Cell::empty()},
  };
  return kOk;
}

template <Scalar S>
int series(const Options& o, Report& report) {
  if (o.coeffs.empty()) throw Error(ErrorCode::InvalidParameter, "series needs --coeffs");
  if (o.series_n < 2) throw Error(ErrorCode::InvalidParameter, "series needs --n >= 2");
  std::vector<S> coeffs;
  for (const auto& r : parse_rational_list(o.coeffs)) coeffs.push_back(from_rational<S>(r));
  const PowerSeriesEquation<S> eq(std::move(coeffs));
  const auto p = p_sequence(eq, o.series_n);
  const auto ratios = root_convergents(eq, o.series_n);
  const SeriesDiagnostic diag = oscillation_diagnostic(ratios);

  report.title = "Series convergents P_k/P_(k+1) for sum A_k z^k = 1, A = " + o.coeffs;
  report.columns = {"k", "P_k", "ratio", "ratio_fraction"};
  for (int k = 1; k <= o.series_n; ++k) {
    std::vector<Cell> row{Cell::of_int(k)};
    const S& pk = p[static_cast<std::size_t>(k - 1)];
    if constexpr (is_exact_v<S>) {
      row.push_back(Cell::of_fraction(pk));
    } else {
      row.push_back(value_cell(pk, o.digits));
    }
    if (k < o.series_n && ratios[static_cast<std::size_t>(k - 1)]) {
      const S& r = *ratios[static_cast<std::size_t>(k - 1)];
      row.push_back(value_cell(r, o.digits));
      row.push_back(fraction_cell(r));
    } else {
      row.push_back(Cell::of_text(k < o.series_n ? "undefined" : ""));
      row.push_back(Cell::empty());
    }
    report.rows.push_back(std::move(row));
  }
  std::optional<S> last;
  for (const auto& r : ratios) {
    if (r) last = *r;
  }
  report.summary = {
      {"mode", Cell::of_text(o.mode)},
      {"terms", Cell::of_int(o.series_n)},
      {"last_convergent", last ? value_cell(*last, o.digits) : Cell::empty()},
      {"last_convergent_fraction", last ? fraction_cell(*last) : Cell::empty()},
      {"irregular", Cell::of_bool(diag.irregular())},
      {"sign_changes", Cell::of_int(diag.sign_changes)},
      {"non_monotone", Cell::of_bool(diag.non_monotone)},
  };
  return kOk;
}

int digit_table(int id, const Options& o, Report& report) {
  const auto results = reproduce_digit_table(id == 1 ? table1_rows() : table2_rows(), o.scan);
  report.title = id == 1 ? "Rational approximations of irrational numbers"
                         : "Rational approximations of logarithmic values";
  report.columns = {"row",           "label",      "fraction",    "stated_digits", "fraction_digits",
                    "exact_match_n", "first_n",    "convergent",  "value",         "digits",
                    "target_met"};
  int met = 0;
  int row_index = 1;
  for (const auto& r : results) {
    met += r.target_met() ? 1 : 0;
    report.rows.push_back({
        Cell::of_int(row_index++),
        Cell::of_text(r.spec.label),
        Cell::of_fraction(r.spec.expected_fraction),
        Cell::of_int(r.spec.digit_target),
        Cell::of_int(r.expected_fraction_digits),
        r.exact_match_n ? Cell::of_int(*r.exact_match_n) : Cell::empty(),
        r.first_n_meeting_target ? Cell::of_int(*r.first_n_meeting_target) : Cell::empty(),
        r.convergent_at_target ? Cell::of_fraction(*r.convergent_at_target) : Cell::empty(),
        r.convergent_at_target ? value_cell(*r.convergent_at_target, o.digits) : Cell::empty(),
        Cell::of_int(r.target_met() ? r.digits_at_target : r.best_digits),
        Cell::of_bool(r.target_met()),
    });
  }
  const bool all = met == static_cast<int>(results.size());
  report.summary = {
      {"table", Cell::of_int(id)},
      {"scan_budget", Cell::of_int(o.scan)},
      {"rows_meeting_target", Cell::of_int(met)},
      {"all_targets_met", Cell::of_bool(all)},
  };
  return all ? kOk : kNotConverged;
}

int grid_table(int id, const Options& o, Report& report) {
  const GridTable table = id == 3 ? reproduce_table3() : reproduce_table4();
  report.title = table.title;
  report.columns = {table.row_label, "column", "computed", "published", "abs_deviation"};
  for (const auto& c : table.cells) {
    report.rows.push_back({
        Cell::of_int(c.row),
        Cell::of_text(table.columns[static_cast<std::size_t>(c.column)]),
        c.computed ? value_cell(*c.computed, o.digits) : Cell::of_text("missing"),
        Cell::of_decimal(to_decimal(c.expected, 14)),
        Cell::of_decimal(scientific(c.deviation())),
    });
  }
  const bool ok = table.complete() && table.max_deviation() <= kGridTolerance;
  std::string starts;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    std::ostringstream os;
    os << table.columns[c] << '@' << table.starts[c];
    starts += (c ? " " : "") + os.str();
  }
  report.summary = {
      {"table", Cell::of_int(id)},
      {"starts", Cell::of_text(starts)},
      {"cells", Cell::of_int(static_cast<long long>(table.cells.size()))},
      {"cells_within_tolerance", Cell::of_int(table.cells_within(kGridTolerance))},
      {"max_abs_deviation", Cell::of_decimal(scientific(table.max_deviation()))},
      {"tolerance", Cell::of_decimal(scientific(kGridTolerance))},
      {"within_tolerance", Cell::of_bool(ok)},
  };
  return ok ? kOk : kNotConverged;
}

std::vector<int> parse_order_range(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  } else {
    for (const auto& item : split(text, ',')) out.push_back(std::stoi(item));
  }
  if (out.empty()) throw Error(ErrorCode::InvalidParameter, "empty order range '" + text + "'");
  for (int n : out) {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "orders must be >= 1");
  }
  return out;
}

int order(const Options& o, const Problem& p, Report& report) {
  const std::vector<int> orders = parse_order_range(o.n_range);
  const auto oracle = p.oracle<double>();
  const double root = p.reference_value();

  report.title = "Empirical convergence order on " + p.name;
  report.columns = {"n", "iterations", "termination", "estimate", "expected", "flagged"};
  for (int n : orders) {
    SolverConfig<double> config;
    config.order = n;
    config.max_iterations = o.max_iter;
    if (!o.tol.empty()) config.residual_tolerance = Rational::parse(o.tol).to_double();
    const auto trace = iterate(oracle, p.start<double>(), config);
    std::vector<Cell> row{Cell::of_int(n), Cell::of_int(trace.steps()),
                          Cell::of_text(std::string(to_string(trace.termination)))};
    try {
      const double estimate = empirical_order(trace, root);
      std::ostringstream os;
      os << std::fixed << std::setprecision(4) << estimate;
      row.push_back(Cell::of_decimal(os.str()));
      row.push_back(Cell::of_int(n + 1));
      row.push_back(Cell::of_bool(std::abs(estimate - (n + 1)) > 0.5));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientData) throw;
      row.push_back(Cell::of_text("InsufficientData"));
      row.push_back(Cell::of_int(n + 1));
      row.push_back(Cell::empty());
    }
    report.rows.push_back(std::move(row));
  }
  report.summary = {
      {"problem", Cell::of_text(p.name)},
      {"mode", Cell::of_text("float")},
      {"reference_root", Cell::of_decimal(p.reference_root)},
  };
  return kOk;
}

template <class F>
int dispatch_mode(const Options& o, F&& fn) {
  if (o.mode == "float") return fn(double{});
  if (o.mode == "rational") return fn(Rational{});
  throw Error(ErrorCode::InvalidParameter, "unknown mode '" + o.mode + "'");
}

json cell_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Empty: return nullptr;
    case Cell::Kind::Text:
    case Cell::Kind::Decimal: return c.text;
    case Cell::Kind::Integer: return c.integer;
    case Cell::Kind::Bool: return c.flag;
    case Cell::Kind::Fraction: return json{{"num", c.fraction->num().get_str()}, {"den", c.fraction->den().get_str()}};
  }
  return nullptr;
}

}  // namespace

void write_report(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: {
      json doc;
      doc["command"] = report.command;
      doc["title"] = report.title;
      json summary = json::object();
      for (const auto& [key, value] : report.summary) summary[key] = cell_json(value);
      doc["summary"] = summary;
      doc["columns"] = report.columns;
      json rows = json::array();
      for (const auto& row : report.rows) {
        json r = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[report.columns[i]] = cell_json(row[i]);
        rows.push_back(r);
      }
      doc["rows"] = rows;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? "," : "") << report.columns[i];
      out << '\n';
      for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].text;
        out << '\n';
      }
      for (const auto& [key, value] : report.summary) out << "# " << key << '=' << value.text << '\n';
      break;
    }
    case Format::Text: {
      out << report.title << '\n';
      for (const auto& [key, value] : report.summary) {
        if (value.kind != Cell::Kind::Empty) out << "  " << key << ": " << value.text << '\n';
      }
      // Drop columns that are empty in every row (e.g. fractions in float mode).
      std::vector<std::size_t> shown;
      std::vector<std::size_t> width;
      for (std::size_t i = 0; i < report.columns.size(); ++i) {
        std::size_t w = report.columns[i].size();
        bool any = false;
        for (const auto& row : report.rows) {
          if (row[i].kind == Cell::Kind::Empty) continue;
          any = true;
          w = std::max(w, row[i].text.size());
        }
        if (any) {
          shown.push_back(i);
          width.push_back(w);
        }
      }
      out << '\n';
      for (std::size_t s = 0; s < shown.size(); ++s) {
        out << (s ? "  " : "") << std::setw(static_cast<int>(width[s])) << report.columns[shown[s]];
      }
      out << '\n';
      for (const auto& row : report.rows) {
        for (std::size_t s = 0; s < shown.size(); ++s) {
          out << (s ? "  " : "") << std::setw(static_cast<int>(width[s])) << row[shown[s]].text;
        }
        out << '\n';
      }
      break;
    }
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Generalized Ramanujan root finder"};
  app.require_subcommand(1);

  const auto add_problem = [&o](CLI::App* sub) {
    sub->add_option("--problem", o.problem, "named problem, or sqrt|root|log1p|ln with --m/--a/--c/--b");
    sub->add_option("--poly", o.poly, "inline polynomial coefficients c0,c1,...,cK");
    sub->add_option("--m", o.m, "root degree for sqrt/root");
    sub->add_option("--a", o.a, "radicand (sqrt/root) or offset (log1p)");
    sub->add_option("--c", o.c, "integer start for sqrt/root");
    sub->add_option("--b", o.b, "argument of ln");
    sub->add_option("--start", o.start, "override the starting point");
  };
  const auto add_output = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "text|csv|json")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--digits", o.digits, "fractional digits in decimal output")->check(CLI::Range(1, 1000));
  };
  const auto add_mode = [&o](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "float|rational")->check(CLI::IsMember({"float", "rational"}));
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "iterate the order-n method to a root");
  add_problem(solve_cmd);
  add_mode(solve_cmd);
  add_output(solve_cmd);
  solve_cmd->add_option("-n,--order", o.order, "method order n (n=1 Newton, n=2 Halley)");
  solve_cmd->add_option("--max-iter", o.max_iter, "iteration cap");
  solve_cmd->add_option("--tol", o.tol, "residual tolerance");
  solve_cmd->add_option("--step-tol", o.step_tol, "step tolerance");
  solve_cmd->add_flag("--condition", o.condition, "record the convergence indicator per iterate");

  CLI::App* converge_cmd = app.add_subcommand("converge", "single-point convergents n = 1..nmax");
  add_problem(converge_cmd);
  add_mode(converge_cmd);
  add_output(converge_cmd);
  converge_cmd->add_option("--nmax", o.nmax, "largest convergent index");

  CLI::App* series_cmd = app.add_subcommand("series", "power-series method for sum A_k z^k = 1");
  add_output(series_cmd);
  series_cmd->add_option("--mode", o.mode, "float|rational")->check(CLI::IsMember({"float", "rational"}));
  series_cmd->add_option("--coeffs", o.coeffs, "A_1,A_2,...")->required();
  series_cmd->add_option("--n", o.series_n, "number of P terms");

  CLI::App* tables_cmd = app.add_subcommand("tables", "regenerate a published table (1-4)");
  add_output(tables_cmd);
  tables_cmd->add_option("--table", o.table, "table id")->required()->check(CLI::Range(1, 4));
  tables_cmd->add_option("--nmax", o.scan, "scan budget for tables 1-2");

  CLI::App* order_cmd = app.add_subcommand("order", "empirical convergence order per n");
  add_problem(order_cmd);
  add_output(order_cmd);
  order_cmd->add_option("--n", o.n_range, "orders, e.g. 1..3 or 1,2,4");
  order_cmd->add_option("--max-iter", o.max_iter, "iteration cap");
  order_cmd->add_option("--tol", o.tol, "residual tolerance");

  std::vector<std::string> argv_storage{"ramanujan"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Report report;
    int code = kOk;
    if (series_cmd->parsed()) {
      if (o.mode == "float" && !series_cmd->count("--mode")) o.mode = "rational";
      if (!series_cmd->count("--digits")) o.digits = 6;
    }
    const Format format = parse_format(o.format);
    if (solve_cmd->parsed()) {
      report.command = "solve";
      const Problem p = resolve_problem(o);
      code = dispatch_mode(o, [&]<class S>(S) { return solve<S>(o, p, report); });
    } else if (converge_cmd->parsed()) {
      report.command = "converge";
      const Problem p = resolve_problem(o);
      code = dispatch_mode(o, [&]<class S>(S) { return converge<S>(o, p, report); });
    } else if (series_cmd->parsed()) {
      report.command = "series";
      code = dispatch_mode(o, [&]<class S>(S) { return series<S>(o, report); });
    } else if (tables_cmd->parsed()) {
      report.command = "tables";
      code = o.table <= 2 ? digit_table(o.table, o, report) : grid_table(o.table, o, report);
    } else if (order_cmd->parsed()) {
      report.command = "order";
      code = order(o, resolve_problem(o), report);
    }
    write_report(report, format, out);
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace ramanujan::cli
