#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <memory>
#include <sstream>

#include "commands.hpp"
#include "parallel.hpp"
#include "prabhakar/cli.hpp"
#include "prabhakar/distributions.hpp"
#include "prabhakar/mixture.hpp"
#include "prabhakar/mlf.hpp"
#include "prabhakar/stable.hpp"

namespace prabhakar::cli {

namespace {

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table{
      {"eval-ml", Command::EvalMl},       {"eval-prabhakar", Command::EvalPrabhakar},
      {"eval-stable", Command::EvalStable}, {"eval-mixture", Command::EvalMixture},
      {"density", Command::Density},      {"moments", Command::Moments},
      {"sample", Command::Sample},        {"verify", Command::Verify},
      {"cm-check", Command::CmCheck}};
  return table;
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParameterError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ParameterError("not a number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

Command parse_command(const std::string& name) {
  const auto& t = command_table();
  auto it = t.find(name);
  if (it == t.end()) throw ParameterError("unknown command '" + name + "'");
  return it->second;
}

const char* command_name(Command c) {
  for (const auto& [name, cmd] : command_table()) {
    if (cmd == c) return name.c_str();
  }
  return "?";
}

std::vector<double> parse_sweep(const std::string& text) {
  if (text.empty()) throw ParameterError("empty sweep");
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ParameterError("sweep must be start:stop:count, got '" + text + "'");
    const double a = parse_number(parts[0]);
    const double b = parse_number(parts[1]);
    const double c = parse_number(parts[2]);
    if (!(c >= 1.0) || c != std::floor(c)) throw ParameterError("sweep count must be a positive integer");
    const auto count = static_cast<std::size_t>(c);
    if (count == 1) return {a};
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    v.back() = b;
    return v;
  }
  std::vector<double> v;
  for (const auto& p : split(text, ',')) v.push_back(parse_number(p));
  return v;
}

std::vector<int> parse_int_list(const std::string& text) {
  auto to_int = [](const std::string& s) {
    const double d = parse_number(s);
    if (d != std::floor(d) || std::fabs(d) > 1e6) throw ParameterError("not an integer: '" + s + "'");
    return static_cast<int>(d);
  };
  if (const auto pos = text.find(".."); pos != std::string::npos) {
    const int a = to_int(text.substr(0, pos));
    const int b = to_int(text.substr(pos + 2));
    if (b < a) throw ParameterError("empty integer range '" + text + "'");
    std::vector<int> v;
    for (int i = a; i <= b; ++i) v.push_back(i);
    return v;
  }
  std::vector<int> v;
  for (const auto& p : split(text, ',')) v.push_back(to_int(p));
  if (v.empty()) throw ParameterError("empty integer list");
  return v;
}

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<std::string>(c)) return csv_escape(std::get<std::string>(c));
  return "";
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_escape(table.columns[i]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  // Numbers are emitted by hand so JSON and CSV agree digit for digit.
  out << "[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << "{";
    const auto& row = table.rows[r];
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? ", " : "") << nlohmann::json(table.columns[i]).dump() << ": ";
      const Cell& c = i < row.size() ? row[i] : Cell{};
      if (std::holds_alternative<double>(c)) {
        const double v = std::get<double>(c);
        out << (std::isfinite(v) ? format_double(v) : "null");
      } else if (std::holds_alternative<long long>(c)) {
        out << std::get<long long>(c);
      } else if (std::holds_alternative<std::string>(c)) {
        out << nlohmann::json(std::get<std::string>(c)).dump();
      } else {
        out << "null";
      }
    }
    out << "}";
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

// ---------------------------------------------------------------------------
// Evaluation commands
// ---------------------------------------------------------------------------

namespace {

constexpr double kRouteTol = 1e-6;

struct Point {
  BaseParams b;
  double lambda;
  double x;
};

bool has_route(const RunConfig& c, const std::string& r) {
  return std::find(c.routes.begin(), c.routes.end(), r) != c.routes.end();
}

void append_note(std::string& status, const std::string& note) { status += (status.empty() ? "" : "; ") + note; }

// Shared body of eval-ml and eval-prabhakar: one column per route plus
// pairwise deviations.
RunOutcome eval_routes(const RunConfig& c, bool ml_only) {
  RunOutcome out;
  std::vector<std::string> routes;
  for (const char* r : {"series", "mixture", "inversion"}) {
    if (has_route(c, r)) routes.emplace_back(r);
  }
  if (routes.empty()) throw ParameterError("routes must name at least one of series, mixture, inversion");

  out.table.columns = ml_only ? std::vector<std::string>{"alpha", "lambda", "x"}
                              : std::vector<std::string>{"alpha", "beta", "gamma", "theta", "lambda", "x"};
  for (const auto& r : routes) out.table.columns.push_back(r);
  for (std::size_t i = 0; i < routes.size(); ++i) {
    for (std::size_t j = i + 1; j < routes.size(); ++j) out.table.columns.push_back("dev_" + routes[i] + "_" + routes[j]);
  }
  out.table.columns.push_back("status");

  // Cartesian product in declared order; one group per base-parameter tuple
  // so the mixture memo is shared across lambda and x.
  const std::vector<double> one{1.0}, zero{0.0};
  const auto& betas = ml_only ? one : c.beta;
  const auto& gammas = ml_only ? one : c.gamma;
  const auto& thetas = ml_only ? zero : c.theta;
  std::vector<std::vector<Point>> groups;
  for (double a : c.alpha)
    for (double be : betas)
      for (double ga : gammas)
        for (double th : thetas) {
          groups.emplace_back();
          for (double la : c.lambda)
            for (double x : c.x) groups.back().push_back({{a, be, ga, th}, la, x});
        }

  std::vector<std::vector<std::vector<Cell>>> group_rows(groups.size());
  std::vector<int> group_fail(groups.size(), 0), group_invalid(groups.size(), 0);
  parallel_for(groups.size(), c.threads, [&](std::size_t g) {
    std::unique_ptr<MixtureEvaluator> evaluator;
    std::string invalid;
    PrabhakarTriple triple{};
    try {
      const MixtureParams m = base_to_composite(groups[g].front().b);
      triple = prabhakar_triple(groups[g].front().b);
      if (has_route(c, "mixture")) evaluator = std::make_unique<MixtureEvaluator>(m, c.spec);
    } catch (const ParameterError& e) {
      invalid = e.what();
    }
    for (const Point& p : groups[g]) {
      std::vector<Cell> row;
      if (ml_only) {
        row = {p.b.alpha, p.lambda, p.x};
      } else {
        row = {p.b.alpha, p.b.beta, p.b.gamma, p.b.theta, p.lambda, p.x};
      }
      std::string status;
      std::vector<std::optional<double>> values;
      if (!invalid.empty() || !(p.x > 0.0) || !(p.lambda >= 0.0)) {
        status = "invalid: " + (!invalid.empty() ? invalid : std::string("x must be positive and lambda non-negative"));
        ++group_invalid[g];
        values.assign(routes.size(), std::nullopt);
      } else {
        for (const auto& r : routes) {
          try {
            if (r == "series") {
              values.emplace_back(prabhakar_kernel(triple, p.lambda, p.x));
            } else if (r == "inversion") {
              values.emplace_back(prabhakar_via_inversion(triple, p.lambda, p.x, c.spec));
            } else {
              values.emplace_back((*evaluator)(p.lambda, p.x).value);
            }
          } catch (const RouteError&) {
            values.emplace_back(std::nullopt);
            append_note(status, r + " refused");
          } catch (const ConvergenceError&) {
            values.emplace_back(std::nullopt);
            append_note(status, r + " did not converge");
          }
        }
      }
      for (const auto& v : values) row.push_back(v ? Cell{*v} : Cell{});
      bool disagree = false;
      for (std::size_t i = 0; i < routes.size(); ++i) {
        for (std::size_t j = i + 1; j < routes.size(); ++j) {
          if (values[i] && values[j]) {
            const double d = std::fabs(*values[i] - *values[j]);
            row.push_back(d);
            if (d > kRouteTol * (1.0 + std::fabs(*values[i]))) disagree = true;
          } else {
            row.push_back(Cell{});
          }
        }
      }
      if (disagree) {
        append_note(status, "routes disagree");
        ++group_fail[g];
      }
      row.push_back(status.empty() ? "ok" : status);
      group_rows[g].push_back(std::move(row));
    }
  });
  std::size_t rows = 0, invalid = 0, fails = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (auto& r : group_rows[g]) out.table.rows.push_back(std::move(r));
    rows += groups[g].size();
    invalid += group_invalid[g];
    fails += group_fail[g];
  }
  if (rows > 0 && invalid == rows) {
    out.exit_code = 2;
    out.message = std::get<std::string>(out.table.rows.front().back());
  } else if (fails > 0) {
    out.exit_code = 1;
    out.message = std::to_string(fails) + " grid point(s) with disagreeing routes";
  }
  return out;
}

RunOutcome eval_stable(const RunConfig& c) {
  RunOutcome out;
  out.table.columns = {"alpha", "t", "x", "pdf", "cdf", "ccdf", "branch", "status"};
  struct P {
    double a, t, x;
  };
  std::vector<P> pts;
  for (double a : c.alpha)
    for (double t : c.t)
      for (double x : c.x) pts.push_back({a, t, x});
  std::vector<std::vector<Cell>> rows(pts.size());
  std::vector<int> invalid(pts.size(), 0);
  parallel_for(pts.size(), c.threads, [&](std::size_t i) {
    const P& p = pts[i];
    std::vector<Cell> row{p.a, p.t, p.x};
    try {
      const StableLaw law{p.a, p.t};
      law.validate();
      if (law.degenerate()) {
        const double step = p.x >= p.t ? 1.0 : 0.0;
        row.insert(row.end(), {Cell{}, step, 1.0 - step, std::string("point-mass"), std::string("ok")});
      } else {
        const double y = p.x * std::pow(p.t, -1.0 / p.a);
        const double pdf = stable_pdf(law, p.x, c.spec);
        const double cdf = stable_cdf(p.a, y, c.spec);
        const double ccdf = stable_ccdf(p.a, y, c.spec);
        const bool series = y >= stable_switch_point(p.a, 0.0);
        row.insert(row.end(), {pdf, cdf, ccdf, std::string(series ? "series" : "integral"), std::string("ok")});
      }
    } catch (const ParameterError& e) {
      row.insert(row.end(), {Cell{}, Cell{}, Cell{}, Cell{}, std::string("invalid: ") + e.what()});
      invalid[i] = 1;
    }
    rows[i] = std::move(row);
  });
  out.table.rows = std::move(rows);
  if (!pts.empty() && std::count(invalid.begin(), invalid.end(), 1) == static_cast<long>(pts.size())) {
    out.exit_code = 2;
    out.message = std::get<std::string>(out.table.rows.front().back());
  }
  return out;
}

std::vector<BaseParams> base_grid(const RunConfig& c) {
  std::vector<BaseParams> v;
  for (double a : c.alpha)
    for (double be : c.beta)
      for (double ga : c.gamma)
        for (double th : c.theta) v.push_back({a, be, ga, th});
  return v;
}

// Runs `body` per base-parameter tuple; a ParameterError marks every row of
// that tuple invalid.
template <typename Body>
RunOutcome per_base(const RunConfig& c, std::vector<std::string> extra_columns, std::size_t rows_per_base,
                    Body body) {
  RunOutcome out;
  out.table.columns = {"alpha", "beta", "gamma", "theta"};
  for (auto& e : extra_columns) out.table.columns.push_back(e);
  const auto grid = base_grid(c);
  std::vector<std::vector<std::vector<Cell>>> rows(grid.size());
  std::vector<int> invalid(grid.size(), 0), fails(grid.size(), 0);
  const std::size_t width = out.table.columns.size();
  parallel_for(grid.size(), c.threads, [&](std::size_t g) {
    const BaseParams& b = grid[g];
    try {
      base_to_composite(b);
      rows[g] = body(b, fails[g]);
    } catch (const ParameterError& e) {
      invalid[g] = 1;
      rows[g].clear();
      for (std::size_t k = 0; k < rows_per_base; ++k) {
        std::vector<Cell> row(width - 5);
        row.push_back(std::string("invalid: ") + e.what());
        rows[g].push_back(std::move(row));
      }
    }
    for (auto& row : rows[g]) row.insert(row.begin(), {b.alpha, b.beta, b.gamma, b.theta});
  });
  for (auto& group : rows) {
    for (auto& row : group) out.table.rows.push_back(std::move(row));
  }
  const long n_invalid = std::count(invalid.begin(), invalid.end(), 1);
  const long n_fail = std::count_if(fails.begin(), fails.end(), [](int f) { return f > 0; });
  if (!grid.empty() && n_invalid == static_cast<long>(grid.size())) {
    out.exit_code = 2;
    out.message = std::get<std::string>(out.table.rows.front().back());
  } else if (n_fail > 0) {
    out.exit_code = 1;
    out.message = std::to_string(n_fail) + " parameter set(s) failed their check";
  }
  return out;
}

RunOutcome eval_mixture(const RunConfig& c) {
  const std::size_t per = c.lambda.size() * c.x.size();
  return per_base(
      c, {"lambda", "x", "nu", "mu", "mixture", "mixture_err", "special", "kernel", "dev", "status"}, per,
      [&](const BaseParams& b, int& fails) {
        std::vector<std::vector<Cell>> rows;
        const MixtureParams m = base_to_composite(b);
        const PrabhakarTriple p = prabhakar_triple(b);
        MixtureEvaluator ev(m, c.spec);
        const bool special = special_case(b) != SpecialCase::None;
        for (double la : c.lambda)
          for (double x : c.x) {
            std::vector<Cell> row{la, x, m.nu, m.mu};
            std::string status;
            if (!(x > 0.0) || !(la >= 0.0)) {
              row.resize(13);
              row.push_back(std::string("invalid: x must be positive and lambda non-negative"));
              rows.push_back(std::move(row));
              continue;
            }
            std::optional<double> mix, kernel;
            try {
              const NumResult r = ev(la, x);
              mix = r.value;
              row.insert(row.end(), {r.value, r.err_estimate});
            } catch (const ConvergenceError& e) {
              row.insert(row.end(), {Cell{}, Cell{}});
              append_note(status, "mixture did not converge");
            }
            if (special) {
              try {
                row.push_back(mixture_eval_special(b, la, x, c.spec).value);
              } catch (const ConvergenceError&) {
                row.push_back(Cell{});
                append_note(status, "special variant did not converge");
              }
            } else {
              row.push_back(Cell{});
            }
            try {
              kernel = std::pow(x, p.beta - 1.0) * prabhakar_function(p, -la * std::pow(x, p.alpha), c.spec);
              row.push_back(*kernel);
            } catch (const std::runtime_error&) {
              row.push_back(Cell{});
              append_note(status, "kernel unavailable");
            }
            if (mix && kernel) {
              const double d = std::fabs(*mix - *kernel);
              row.push_back(d);
              if (d > kRouteTol * (1.0 + std::fabs(*kernel))) {
                append_note(status, "routes disagree");
                ++fails;
              }
            } else {
              row.push_back(Cell{});
            }
            row.push_back(status.empty() ? "ok" : status);
            rows.push_back(std::move(row));
          }
        return rows;
      });
}

RunOutcome eval_density(const RunConfig& c) {
  return per_base(c, {"t", "q_density", "p_density", "status"}, c.t.size(), [&](const BaseParams& b, int&) {
    std::vector<std::vector<Cell>> rows;
    for (double t : c.t) {
      try {
        const double q = q_density(b, t, c.spec);
        rows.push_back({t, q, gamma_function(b.beta + b.theta) * q, std::string("ok")});
      } catch (const DegenerateLawError& e) {
        rows.push_back({t, Cell{}, Cell{}, std::string("point mass: ") + e.what()});
      }
    }
    return rows;
  });
}

RunOutcome eval_moments(const RunConfig& c) {
  return per_base(c, {"n", "analytic", "numeric", "abs_dev", "status"}, c.n.size(), [&](const BaseParams& b, int& fails) {
    std::vector<std::vector<Cell>> rows;
    for (int n : c.n) {
      if (n < 0) {
        rows.push_back({static_cast<long long>(n), Cell{}, Cell{}, Cell{}, std::string("invalid: n must be non-negative")});
        continue;
      }
      const double a = p_moment(b, n);
      try {
        const double num = p_integral(b, n, 0.0, c.spec).value;
        const double d = std::fabs(a - num);
        const bool ok = d <= kRouteTol * std::max(1.0, std::fabs(a));
        if (!ok) ++fails;
        rows.push_back({static_cast<long long>(n), a, num, d, std::string(ok ? "ok" : "moment mismatch")});
      } catch (const ConvergenceError&) {
        rows.push_back({static_cast<long long>(n), a, Cell{}, Cell{}, std::string("quadrature did not converge")});
      }
    }
    return rows;
  });
}

RunOutcome eval_sample(const RunConfig& c) {
  if (c.count < 1) throw ParameterError("count must be at least 1");
  const std::size_t per = c.count + 2 + c.lambda.size();
  // A fixed stream per parameter tuple, derived from the seed and the tuple
  // index, keeps output independent of thread scheduling.
  const auto grid = base_grid(c);
  return per_base(
      c, {"kind", "key", "value", "analytic", "std_error", "strategy", "status"}, per,
      [&](const BaseParams& b, int& fails) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          if (grid[i].alpha == b.alpha && grid[i].beta == b.beta && grid[i].gamma == b.gamma &&
              grid[i].theta == b.theta) {
            idx = i;
            break;
          }
        }
        RandomSource rng(c.seed + 0x9E3779B97F4A7C15ULL * idx);
        const PollardSampler sampler(b, c.spec);
        const std::string strategy = strategy_name(sampler.strategy());
        const auto draws = sampler.sample(c.count, rng);
        std::vector<std::vector<Cell>> rows;
        for (std::size_t i = 0; i < draws.size(); ++i) {
          rows.push_back({std::string("draw"), static_cast<long long>(i), draws[i], Cell{}, Cell{}, strategy,
                          std::string("ok")});
        }
        const double nd = static_cast<double>(draws.size());
        auto summary = [&](const std::string& kind, Cell key, auto fn, double analytic) {
          double s = 0.0, s2 = 0.0;
          for (double d : draws) {
            const double v = fn(d);
            s += v;
            s2 += v * v;
          }
          const double mean = s / nd;
          const double var = nd > 1 ? std::max(0.0, (s2 - nd * mean * mean) / (nd - 1.0)) : 0.0;
          const double se = std::sqrt(var / nd);
          const bool ok = std::fabs(mean - analytic) <= 4.0 * se + 1e-12;
          if (!ok) ++fails;
          rows.push_back({kind, key, mean, analytic, se, strategy, std::string(ok ? "ok" : "outside 4 standard errors")});
        };
        summary("moment", 1LL, [](double v) { return v; }, p_moment(b, 1));
        summary("moment", 2LL, [](double v) { return v * v; }, p_moment(b, 2));
        for (double la : c.lambda) {
          summary("laplace", la, [la](double v) { return std::exp(-la * v); }, p_laplace(b, la, c.spec));
        }
        return rows;
      });
}

RunOutcome eval_cm(const RunConfig& c) {
  const std::vector<double>& grid = c.lambda;
  auto report_row = [&](const CmReport& r) {
    std::vector<Cell> row{static_cast<long long>(c.max_order), static_cast<long long>(r.orders_checked),
                          std::string(r.passed ? "true" : "false")};
    if (r.first_violation) {
      row.push_back(static_cast<long long>(r.first_violation->order));
      row.push_back(r.first_violation->lambda);
    } else {
      row.insert(row.end(), {Cell{}, Cell{}});
    }
    row.push_back(std::string(r.passed ? "ok" : "not completely monotone"));
    return row;
  };
  if (c.function == "cos" || c.function == "exp") {
    RunOutcome out;
    out.table.columns = {"function", "max_order", "orders_checked", "passed", "violation_order", "violation_lambda",
                         "status"};
    const bool is_cos = c.function == "cos";
    const CmReport r =
        cm_check([&](double l) { return is_cos ? std::cos(l) : std::exp(-l); }, grid, c.max_order);
    auto row = report_row(r);
    row.insert(row.begin(), c.function);
    out.table.rows.push_back(std::move(row));
    if (!r.passed) {
      out.exit_code = 1;
      out.message = c.function + " fails the complete-monotonicity check";
    }
    return out;
  }
  if (c.function != "prabhakar") throw ParameterError("function must be prabhakar, exp or cos");
  return per_base(
      c, {"function", "max_order", "orders_checked", "passed", "violation_order", "violation_lambda", "status"}, 1,
      [&](const BaseParams& b, int& fails) {
        const CmReport r = cm_check([&](double l) { return p_laplace(b, l, c.spec); }, grid, c.max_order);
        if (!r.passed) ++fails;
        auto row = report_row(r);
        row.insert(row.begin(), std::string("prabhakar"));
        return std::vector<std::vector<Cell>>{row};
      });
}

}  // namespace

RunOutcome evaluate(const RunConfig& config) {
  try {
    config.spec.validate();
    switch (config.command) {
      case Command::EvalMl:
        return eval_routes(config, true);
      case Command::EvalPrabhakar:
        return eval_routes(config, false);
      case Command::EvalStable:
        return eval_stable(config);
      case Command::EvalMixture:
        return eval_mixture(config);
      case Command::Density:
        return eval_density(config);
      case Command::Moments:
        return eval_moments(config);
      case Command::Sample:
        return eval_sample(config);
      case Command::Verify:
        return run_verify(config);
      case Command::CmCheck:
        return eval_cm(config);
    }
  } catch (const ParameterError& e) {
    RunOutcome out;
    out.exit_code = 2;
    out.message = e.what();
    return out;
  } catch (const DomainError& e) {
    RunOutcome out;
    out.exit_code = 2;
    out.message = e.what();
    return out;
  }
  return {};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const RunOutcome outcome = evaluate(config);
  if (!outcome.message.empty()) err << command_name(config.command) << ": " << outcome.message << '\n';
  if (outcome.exit_code == 2 && outcome.table.rows.empty()) return 2;

  const char* ext = config.format == Format::Json ? "json" : "csv";
  std::string path = config.output;
  if (path.empty()) {
    if (const char* dir = std::getenv("PRABHAKAR_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      path = (std::filesystem::path(dir) / (std::string(command_name(config.command)) + "." + ext)).string();
    } else {
      path = "-";
    }
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) {
      err << "cannot open output file " << path << '\n';
      return 2;
    }
    sink = &file;
  }
  if (config.format == Format::Json) {
    write_json(outcome.table, *sink);
  } else {
    write_csv(outcome.table, *sink);
  }
  sink->flush();
  return outcome.exit_code;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prabhakar function, one-sided stable laws and the four-parameter Pollard family"};
  app.set_help_flag("-h,--help", "Print help and exit");
  std::string command;
  std::string alpha, beta, gamma, theta, lambda, x, t, n, routes, format = "csv";
  RunConfig cfg;
  const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : command_table()) v.push_back(k);
    return v;
  }();
  app.add_option("command", command, "eval-ml | eval-prabhakar | eval-stable | eval-mixture | density | moments | "
                                     "sample | verify | cm-check")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--alpha", alpha, "value, list a,b,c or sweep start:stop:count");
  app.add_option("--beta", beta, "value, list or sweep");
  app.add_option("--gamma", gamma, "value, list or sweep");
  app.add_option("--theta", theta, "value, list or sweep");
  app.add_option("--lambda", lambda, "value, list or sweep (cm-check: the uniform lambda grid)");
  app.add_option("--x", x, "evaluation points");
  app.add_option("--t", t, "stable scale (eval-stable) or density argument (density)");
  app.add_option("--n", n, "moment orders, a..b or a,b,c");
  app.add_option("--routes", routes, "comma list of series, mixture, inversion");
  app.add_option("--seed", cfg.seed, "64-bit seed");
  app.add_option("--count", cfg.count, "number of draws for sample");
  app.add_option("--max-order", cfg.max_order, "highest difference order for cm-check (<= 6)");
  app.add_option("--function", cfg.function, "cm-check target: prabhakar | exp | cos");
  app.add_option("--suite", cfg.suite, "verify suite name or all");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", cfg.output, "output file, - for stdout");
  app.add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
  app.add_option("--rel-tol", cfg.spec.rel_tol, "relative tolerance");
  app.add_option("--abs-tol", cfg.spec.abs_tol, "absolute tolerance");
  app.add_option("--max-subdivisions", cfg.spec.max_subdivisions, "adaptive quadrature budget");
  app.add_option("--tail-cutoff", cfg.spec.tail_cutoff_mass, "semi-infinite truncation criterion");
  app.add_option("--inversion-nodes", cfg.spec.inversion_nodes, "contour nodes for Laplace inversion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    cfg.command = parse_command(command);
    if (!alpha.empty()) cfg.alpha = parse_sweep(alpha);
    if (!beta.empty()) cfg.beta = parse_sweep(beta);
    if (!gamma.empty()) cfg.gamma = parse_sweep(gamma);
    if (!theta.empty()) cfg.theta = parse_sweep(theta);
    if (!lambda.empty()) {
      cfg.lambda = parse_sweep(lambda);
    } else if (cfg.command == Command::CmCheck) {
      cfg.lambda = parse_sweep("0.1:10:100");
    } else if (cfg.command == Command::Sample) {
      cfg.lambda = {0.5, 1.0, 2.0};
    }
    if (!x.empty()) cfg.x = parse_sweep(x);
    if (!t.empty()) cfg.t = parse_sweep(t);
    if (!n.empty()) cfg.n = parse_int_list(n);
    if (!routes.empty()) {
      cfg.routes.clear();
      for (std::string r; auto& part : [&] {
             std::vector<std::string> v;
             std::istringstream in(routes);
             while (std::getline(in, r, ',')) v.push_back(r);
             return v;
           }()) {
        if (part != "series" && part != "mixture" && part != "inversion") {
          throw ParameterError("unknown route '" + part + "'");
        }
        cfg.routes.push_back(part);
      }
    }
    cfg.format = format == "json" ? Format::Json : Format::Csv;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  return run(cfg, out, err);
}

}  // namespace prabhakar::cli
