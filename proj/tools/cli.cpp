#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "gelint/errors.hpp"
#include "gelint/gci.hpp"
#include "gelint/gtrig.hpp"
#include "gelint/identities.hpp"
#include "gelint/params.hpp"
#include "gelint/special.hpp"
#include "table_output.hpp"

namespace gelint::cli {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text, const std::string& name) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end == text.c_str() || *end != '\0' || errno == ERANGE) {
    throw UsageError("--" + name + ": cannot parse '" + text + "' as a number");
  }
  return v;
}

// Exponent values travel as doubles inside the CLI; +HUGE_VAL is the tagged
// infinity and validate_triple(double, ...) maps it back.
double parse_param(const std::string& text, const std::string& name) {
  if (name == "p") {
    std::string lower = text;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "inf" || lower == "+inf" || lower == "infinity") return HUGE_VAL;
  }
  return parse_real(text, name);
}

double default_tol() {
  const char* env = std::getenv("GELINT_DEFAULT_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  try {
    return parse_real(env, "GELINT_DEFAULT_TOL");
  } catch (const UsageError&) {
    throw UsageError(std::string("GELINT_DEFAULT_TOL: cannot parse '") + env + "'");
  }
}

struct Sweep {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> values() const {
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      v[static_cast<std::size_t>(i)] =
          count == 1 ? start
          : i == count - 1
              ? stop
              : start + (stop - start) * static_cast<double>(i) / (count - 1);
    }
    return v;
  }
};

Sweep parse_sweep(const std::string& text, const std::set<std::string>& allowed) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string piece; std::getline(ss, piece, ':');) parts.push_back(piece);
  if (parts.size() != 4) {
    throw UsageError("--sweep expects name:start:stop:count, got '" + text + "'");
  }
  Sweep s;
  s.name = parts[0];
  if (!allowed.count(s.name)) {
    throw UsageError("--sweep: parameter '" + s.name + "' cannot be swept here");
  }
  s.start = parse_real(parts[1], "sweep");
  s.stop = parse_real(parts[2], "sweep");
  const double count = parse_real(parts[3], "sweep");
  if (count < 1 || count != std::floor(count) || count > 1e6) {
    throw UsageError("--sweep: count must be a positive integer");
  }
  s.count = static_cast<int>(count);
  if (!(s.start <= s.stop)) throw UsageError("--sweep: start must not exceed stop");
  return s;
}

using Point = std::map<std::string, double>;

// Cartesian product of the sweeps (first sweep outermost) over the fixed values.
std::vector<Point> expand(const Point& fixed, const std::vector<Sweep>& sweeps) {
  std::set<std::string> seen;
  for (const Sweep& s : sweeps) {
    if (!seen.insert(s.name).second) {
      throw UsageError("--sweep: parameter '" + s.name + "' swept twice");
    }
  }
  std::vector<Point> points{fixed};
  for (const Sweep& s : sweeps) {
    std::vector<Point> next;
    for (const Point& base : points) {
      for (double v : s.values()) {
        Point p = base;
        p[s.name] = v;
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  return points;
}

// Evaluates rows [0, n) on `threads` workers. Output order is the index order,
// and the error reported is the one at the lowest failing index, so results do
// not depend on scheduling.
template <class Row>
std::vector<Row> evaluate_rows(std::size_t n, unsigned threads,
                               const std::function<Row(std::size_t)>& f) {
  std::vector<Row> rows(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        rows[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

// Flags shared by the subcommands. Numeric values stay as text until the
// subcommand knows which of them it needs.
struct CommonFlags {
  std::map<std::string, std::string> values;
  std::vector<std::string> sweeps;
  std::string format = "table";
  std::string backend = "auto";
  std::optional<double> tol;
  unsigned threads = 1;

  double tolerance() const { return tol ? *tol : default_tol(); }
};

void add_param(CLI::App* app, CommonFlags& flags, const std::string& name,
               const std::string& help) {
  app->add_option_function<std::string>(
      "--" + name, [&flags, name](const std::string& v) { flags.values[name] = v; },
      help);
}

Point fixed_values(const CommonFlags& flags, const Point& defaults) {
  Point p = defaults;
  for (const auto& [name, text] : flags.values) p[name] = parse_param(text, name);
  return p;
}

double require(const Point& pt, const std::string& name) {
  const auto it = pt.find(name);
  if (it == pt.end()) throw UsageError("missing required flag --" + name);
  return it->second;
}

Exponent exponent_of(double p) {
  return std::isinf(p) && p > 0 ? Exponent::infinity() : Exponent::finite(p, "p");
}

// ---------------------------------------------------------------- eval/table

struct FunctionResult {
  double value = 0.0;
  double abs_err = 0.0;
  std::string backend;
};

const std::map<std::string, std::vector<std::string>>& function_params() {
  static const std::map<std::string, std::vector<std::string>> m{
      {"K", {"p", "q", "r", "k"}},      {"E", {"p", "q", "r", "k"}},
      {"pi", {"p", "q"}},               {"arcsin", {"p", "q", "x"}},
      {"sin", {"p", "q", "theta"}},     {"cos", {"p", "q", "theta"}},
  };
  return m;
}

std::string backend_label(Backend b) {
  return b == Backend::Auto ? "closed-form" : std::string(to_string(b));
}

FunctionResult evaluate_function(const std::string& fn, const Point& pt,
                                 Backend backend, double tol) {
  const Exponent p = exponent_of(require(pt, "p"));
  const double q = require(pt, "q");
  if (fn == "K" || fn == "E") {
    const ParamTriple triple = validate_triple(p, q, require(pt, "r"));
    const GciPoint point{triple, Modulus(require(pt, "k"))};
    const GciValue v = fn == "K" ? eval_K(point, backend, tol) : eval_E(point, backend, tol);
    return {v.value, v.abs_err_estimate, backend_label(v.backend_used)};
  }
  if (q <= 1.0 || !std::isfinite(q)) throw DomainError("q", "must be a finite real > 1");
  if (fn == "pi") {
    const double v = pi_pq(p, q);
    return {v, 4.0 * kEps * v, "closed-form"};
  }
  const GTrigParams g = GTrigParams::make(p, q);
  if (fn == "arcsin") {
    const double v = arcsin_pq(g, require(pt, "x"));
    return {v, 1e-15 * (1.0 + v), p.is_infinite() ? "closed-form" : "quadrature-t"};
  }
  const double theta = require(pt, "theta");
  if (fn == "sin") return {sin_pq(g, theta), 1e-12, "inversion"};
  return {cos_pq(g, theta), 1e-12, "inversion"};
}

void check_function(const std::string& fn) {
  if (!function_params().count(fn)) {
    throw UsageError("unknown function '" + fn + "' (expected K, E, pi, sin, cos, arcsin)");
  }
}

Cell param_cell(const std::string& name, double v) {
  if (name == "p" && std::isinf(v)) return std::string("inf");
  return v;
}

int cmd_eval(const std::string& fn, const CommonFlags& flags, std::ostream& out) {
  check_function(fn);
  if (!flags.sweeps.empty()) throw UsageError("eval takes no --sweep; use table");
  const Point pt = fixed_values(flags, {{"p", 2.0}, {"q", 2.0}, {"r", 2.0}});
  const OutputFormat format = parse_format(flags.format);
  const FunctionResult res =
      evaluate_function(fn, pt, parse_backend(flags.backend), flags.tolerance());

  Table t;
  t.columns = {"function"};
  std::vector<Cell> row{fn};
  for (const std::string& name : function_params().at(fn)) {
    t.columns.push_back(name);
    row.push_back(param_cell(name, require(pt, name)));
  }
  t.columns.insert(t.columns.end(), {"value", "abs_err_estimate", "backend"});
  row.insert(row.end(), {res.value, res.abs_err, res.backend});
  t.rows.push_back(std::move(row));
  write_table(t, format, out);
  return kOk;
}

int cmd_table(const std::string& fn, const CommonFlags& flags,
              const std::string& out_path, std::ostream& out) {
  check_function(fn);
  const auto& names = function_params().at(fn);
  std::vector<Sweep> sweeps;
  for (const auto& s : flags.sweeps) {
    sweeps.push_back(parse_sweep(s, {names.begin(), names.end()}));
  }
  if (sweeps.size() > 2) throw UsageError("table accepts at most two --sweep axes");
  const OutputFormat format = parse_format(flags.format);
  const Backend backend = parse_backend(flags.backend);
  const double tol = flags.tolerance();
  const std::vector<Point> points =
      expand(fixed_values(flags, {{"p", 2.0}, {"q", 2.0}, {"r", 2.0}}), sweeps);

  Table t;
  for (const Sweep& s : sweeps) t.columns.push_back(s.name);
  t.columns.insert(t.columns.end(), {"value", "abs_err_estimate", "backend"});
  t.rows = evaluate_rows<std::vector<Cell>>(
      points.size(), flags.threads, [&](std::size_t i) {
        const FunctionResult res = evaluate_function(fn, points[i], backend, tol);
        std::vector<Cell> row;
        for (const Sweep& s : sweeps) row.push_back(param_cell(s.name, points[i].at(s.name)));
        row.insert(row.end(), {res.value, res.abs_err, res.backend});
        return row;
      });

  if (out_path.empty() || out_path == "-") {
    write_table(t, format, out);
    return kOk;
  }
  std::ofstream file(out_path);
  if (!file) throw IoError("cannot open '" + out_path + "' for writing");
  write_table(t, format, file);
  file.flush();
  if (!file) throw IoError("failed writing '" + out_path + "'");
  return kOk;
}

// -------------------------------------------------------------------- verify

struct VerifyRow {
  std::vector<Cell> cells;
  double metric = 0.0;  // compared against --threshold
};

struct VerifyPlan {
  std::vector<std::string> columns;
  std::set<std::string> sweepable;
  Point defaults;
  std::function<VerifyRow(const Point&)> row;
};

VerifyPlan legendre_plan(double tol, Backend backend) {
  VerifyPlan plan;
  plan.columns = {"p", "q", "r", "k", "k_prime", "term_EKp", "term_KEp",
                  "term_KKp", "rhs", "residual", "err_estimate"};
  plan.sweepable = {"p", "q", "r", "k"};
  plan.defaults = {{"p", 2.0}, {"q", 2.0}, {"r", 2.0}};
  plan.row = [tol, backend](const Point& pt) {
    const double p = require(pt, "p");
    const ParamTriple t = validate_triple(exponent_of(p), require(pt, "q"), require(pt, "r"));
    const Modulus k(require(pt, "k"));
    const LegendreReport rep = legendre_residual(t, k, tol, backend);
    return VerifyRow{{param_cell("p", p), t.q(), t.r(), k.value(), rep.k_prime,
                      rep.term_EKp, rep.term_KEp, rep.term_KKp, rep.rhs,
                      rep.residual, rep.err_estimate},
                     std::abs(rep.residual)};
  };
  return plan;
}

VerifyPlan elliott_plan(double tol) {
  VerifyPlan plan;
  plan.columns = {"a", "b", "c", "x", "lhs", "rhs", "residual"};
  plan.sweepable = {"a", "b", "c", "x"};
  plan.defaults = {{"a", 0.0}, {"b", 0.0}, {"c", 0.0}, {"x", 0.5}};
  plan.row = [tol](const Point& pt) {
    const ElliottParams e = ElliottParams::make(require(pt, "a"), require(pt, "b"),
                                                require(pt, "c"), require(pt, "x"));
    const ElliottEvaluation ev = elliott_evaluate(e, tol);
    return VerifyRow{{e.a, e.b, e.c, e.x, ev.lhs, ev.rhs, ev.residual},
                     std::abs(ev.residual)};
  };
  return plan;
}

VerifyPlan ode_plan(double tol) {
  VerifyPlan plan;
  plan.columns = {"p", "q", "r", "k", "h", "dE_dk", "dK_dk", "residual_E", "residual_K"};
  plan.sweepable = {"p", "q", "r", "k"};
  plan.defaults = {{"p", 2.0}, {"q", 2.0}, {"r", 2.0}, {"h", 1e-5}};
  plan.row = [tol](const Point& pt) {
    const double p = require(pt, "p");
    const ParamTriple t = validate_triple(exponent_of(p), require(pt, "q"), require(pt, "r"));
    const Modulus k(require(pt, "k"));
    const double h = require(pt, "h");
    const OdeResidual res = ode_residual(t, k, h);
    const GciPoint point{t, k};
    return VerifyRow{{param_cell("p", p), t.q(), t.r(), k.value(), h,
                      dE_dk(point, tol), dK_dk(point, tol), res.residual_E,
                      res.residual_K},
                     std::max(res.residual_E, res.residual_K)};
  };
  return plan;
}

int cmd_verify(const std::string& which, const CommonFlags& flags,
               std::optional<double> threshold, std::ostream& out,
               std::ostream& err) {
  const double tol = flags.tolerance();
  const OutputFormat format = parse_format(flags.format);
  const Backend backend = parse_backend(flags.backend);

  const bool constancy = which == "constancy";
  VerifyPlan plan = which == "elliott" ? elliott_plan(tol)
                    : which == "ode"   ? ode_plan(tol)
                                       : legendre_plan(tol, backend);
  const double limit = threshold ? *threshold : which == "ode"       ? 1e-6
                                            : which == "elliott" ? 1e-9
                                                                 : 1e-8;

  std::vector<Sweep> sweeps;
  for (const auto& s : flags.sweeps) sweeps.push_back(parse_sweep(s, plan.sweepable));
  const Point fixed = fixed_values(flags, plan.defaults);

  Table t;
  double worst = 0.0;
  std::size_t breaches = 0;

  if (constancy) {
    // One row per triple; the k axis collapses into the flatness statistic.
    std::vector<Sweep> triple_sweeps;
    std::vector<Modulus> k_grid;
    for (const Sweep& s : sweeps) {
      if (s.name == "k") {
        for (double k : s.values()) k_grid.emplace_back(k);
      } else {
        triple_sweeps.push_back(s);
      }
    }
    if (k_grid.empty()) k_grid.emplace_back(require(fixed, "k"));
    const std::vector<Point> points = expand(fixed, triple_sweeps);
    t.columns = {"p", "q", "r", "k_min", "k_max", "k_count", "rhs", "max_residual"};
    const auto rows = evaluate_rows<VerifyRow>(points.size(), flags.threads, [&](std::size_t i) {
      const double p = require(points[i], "p");
      const ParamTriple tr =
          validate_triple(exponent_of(p), require(points[i], "q"), require(points[i], "r"));
      const double rhs = legendre_residual(tr, k_grid.front(), tol, backend).rhs;
      const double dev = legendre_constancy_scan(tr, k_grid, tol);
      return VerifyRow{{param_cell("p", p), tr.q(), tr.r(), k_grid.front().value(),
                        k_grid.back().value(), static_cast<double>(k_grid.size()), rhs, dev},
                       dev};
    });
    for (const auto& r : rows) {
      t.rows.push_back(r.cells);
      worst = std::max(worst, r.metric);
      breaches += r.metric > limit;
    }
  } else {
    const std::vector<Point> points = expand(fixed, sweeps);
    t.columns = plan.columns;
    const auto rows = evaluate_rows<VerifyRow>(
        points.size(), flags.threads, [&](std::size_t i) { return plan.row(points[i]); });
    for (const auto& r : rows) {
      t.rows.push_back(r.cells);
      worst = std::max(worst, r.metric);
      breaches += !(r.metric <= limit);
    }
  }

  write_table(t, format, out);
  std::ostream& summary = format == OutputFormat::HumanTable ? out : err;
  summary << "# " << which << ": points=" << t.rows.size()
          << " max_residual=" << format_number(worst)
          << " threshold=" << format_number(limit)
          << " status=" << (breaches ? "FAIL" : "ok") << '\n';
  return breaches ? kThresholdBreach : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized complete elliptic integrals K_{p,q,r}, E_{p,q,r} and their identities",
               "gelint"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string function;
  std::string out_path;
  std::optional<double> threshold;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", flags.format, "table (default), csv or json");
    sub->add_option("--backend", flags.backend, "auto, t, series or theta");
    sub->add_option_function<double>("--tol", [&](double v) { flags.tol = v; },
                                     "evaluation tolerance (default 1e-12 or $GELINT_DEFAULT_TOL)");
    sub->add_option("--sweep", flags.sweeps, "name:start:stop:count (inclusive linear grid)")
        ->take_all()
        ->allow_extra_args(false);
    sub->add_option("--threads", flags.threads, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);
    add_param(sub, flags, "p", "exponent p in (-inf,0) U (1,inf], 'inf' allowed");
    add_param(sub, flags, "q", "exponent q > 1");
    add_param(sub, flags, "r", "exponent r > 1");
    add_param(sub, flags, "k", "modulus k in [0,1]");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate one function at one point");
  eval->add_option("function", function, "K, E, pi, sin, cos or arcsin")->required();
  add_common(eval);
  add_param(eval, flags, "x", "argument of arcsin");
  add_param(eval, flags, "theta", "argument of sin and cos");

  CLI::App* table = app.add_subcommand("table", "tabulate a function over one or two sweeps");
  table->add_option("function", function, "K, E, pi, sin, cos or arcsin")->required();
  table->add_option("--out", out_path, "output path (default: standard output)");
  add_common(table);
  add_param(table, flags, "x", "argument of arcsin");
  add_param(table, flags, "theta", "argument of sin and cos");

  CLI::App* verify = app.add_subcommand("verify", "check an identity over a grid");
  verify->require_subcommand(1);
  std::string verify_which;
  for (const char* name : {"legendre", "elliott", "ode", "constancy"}) {
    CLI::App* sub = verify->add_subcommand(name);
    // -h stays free for the finite-difference step of `verify ode`.
    sub->set_help_flag("--help", "print this help message and exit");
    add_common(sub);
    sub->add_option_function<double>("--threshold", [&](double v) { threshold = v; },
                                     "maximum accepted |residual|");
    sub->callback([&verify_which, name] { verify_which = name; });
  }
  for (const char* name : {"a", "b", "c", "x"}) {
    add_param(verify->get_subcommand("elliott"), flags, name, "Elliott parameter");
  }
  add_param(verify->get_subcommand("ode"), flags, "h", "finite-difference step");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
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
    if (eval->parsed()) return cmd_eval(function, flags, out);
    if (table->parsed()) return cmd_table(function, flags, out_path, out);
    return cmd_verify(verify_which, flags, threshold, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << " (best value "
        << format_number(e.best_value()) << ", estimate "
        << format_number(e.error_estimate()) << ")\n";
    return kConvergence;
  } catch (const IntegrandError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kConvergence;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConvergence;
  }
}

}  // namespace gelint::cli
