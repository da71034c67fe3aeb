// Command-line driver: grid evaluation of the library entry points with
// deterministic CSV/JSON table output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaptlz/asymptotics.hpp"
#include "gaptlz/cue.hpp"
#include "gaptlz/equilibrium.hpp"
#include "gaptlz/parametrix.hpp"
#include "gaptlz/sine_kernel.hpp"
#include "gaptlz/toeplitz.hpp"

using json = nlohmann::json;
using namespace gaptlz;

namespace {

struct RunConfig {
  std::string command;
  std::string theta0 = "1.5707963267948966";
  std::vector<int> n_list;
  std::vector<std::string> s_list;
  std::vector<std::string> x_list;
  std::string w_json;
  std::vector<std::string> y_list;
  int p = -1;
  std::string lambda;
  unsigned precision = 0;  // 0 = auto
  unsigned digits = 20;
  std::string format = "csv";
  std::string out;

  void validate() const {
    if (!s_list.empty() && !x_list.empty())
      throw CLI::ValidationError("--s and --x are mutually exclusive");
    if (precision != 0 && precision < 64)
      throw CLI::ValidationError("--precision must be at least 64");
    if (format != "csv" && format != "json")
      throw CLI::ValidationError("--format must be csv or json");
  }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool has_error = false;
};

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Table& table, const RunConfig& cfg) {
  std::ostringstream body;
  if (cfg.format == "csv") {
    for (size_t i = 0; i < table.columns.size(); ++i)
      body << (i ? "," : "") << table.columns[i];
    body << "\n";
    for (const auto& row : table.rows) {
      for (size_t i = 0; i < row.size(); ++i)
        body << (i ? "," : "") << csv_escape(row[i]);
      body << "\n";
    }
  } else {
    json doc = json::array();
    for (const auto& row : table.rows) {
      json obj = json::object();
      for (size_t i = 0; i < table.columns.size(); ++i)
        obj[table.columns[i]] = row[i];
      doc.push_back(obj);
    }
    body << doc.dump(2) << "\n";
  }
  if (cfg.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
    f << body.str();
  }
}

real_t parse_real(const std::string& text) { return real_t(text); }

std::string fmt(const real_t& v, unsigned digits) { return to_str(v, digits); }

std::map<int, cplx> parse_w(const std::string& text) {
  std::map<int, cplx> w;
  if (text.empty()) return w;
  json j = json::parse(text);
  for (const auto& item : j) {
    int k = item.at("k").get<int>();
    auto num = [](const json& v) {
      return v.is_string() ? real_t(v.get<std::string>())
                           : real_t(v.dump());
    };
    real_t re = item.contains("re") ? num(item.at("re")) : real_t(0);
    real_t im = item.contains("im") ? num(item.at("im")) : real_t(0);
    w[k] = cplx(re, im);
  }
  return w;
}

bool is_symmetric_real(const std::map<int, cplx>& w) {
  for (const auto& [k, v] : w) {
    if (v.im != 0) return false;
    auto it = w.find(-k);
    if (it == w.end() || it->second.re != v.re || it->second.im != 0)
      return false;
  }
  return true;
}

SymbolSpec make_spec(const real_t& th0, const cplx& gap,
                     const std::map<int, cplx>& w) {
  if (w.empty()) return SymbolSpec(th0, gap);
  return SymbolSpec(th0, cplx(1), gap, w, is_symmetric_real(w));
}

// s values for one n: --s literally, --x through s = e^{-x n}, both defaulting
// to the single entry s = 0
std::vector<real_t> s_grid(const RunConfig& cfg, int n) {
  std::vector<real_t> out;
  if (!cfg.s_list.empty()) {
    for (const auto& t : cfg.s_list) out.push_back(parse_real(t));
  } else if (!cfg.x_list.empty()) {
    for (const auto& t : cfg.x_list) {
      real_t x = (t == "inf") ? real_infinity() : parse_real(t);
      GapParameter gp{x, n};
      out.push_back(gp.s_value());
    }
  } else {
    out.push_back(real_t(0));
  }
  return out;
}

unsigned pick_bits(const RunConfig& cfg, const SymbolSpec& spec, int n) {
  if (cfg.precision != 0) return cfg.precision;
  return default_precision_bits(spec, n);
}

// append a row; on exception record the message in the trailing error column
template <typename Fn>
void guarded_row(Table& table, std::vector<std::string> prefix, Fn&& fill) {
  try {
    fill(prefix);
    prefix.push_back("");
  } catch (const std::exception& e) {
    while (prefix.size() + 1 < table.columns.size()) prefix.push_back("");
    prefix.push_back(e.what());
    table.has_error = true;
  }
  table.rows.push_back(std::move(prefix));
}

Table run_logdet(const RunConfig& cfg) {
  Table t;
  t.columns = {"n", "s", "theta0", "lndet_re", "lndet_im", "precision_bits",
               "error"};
  real_t th0 = parse_real(cfg.theta0);
  std::map<int, cplx> w = parse_w(cfg.w_json);
  for (int n : cfg.n_list)
    for (const real_t& s : s_grid(cfg, n))
      guarded_row(t, {std::to_string(n), fmt(s, cfg.digits), cfg.theta0},
                  [&](std::vector<std::string>& row) {
                    SymbolSpec spec = make_spec(th0, cplx(s), w);
                    unsigned bits = pick_bits(cfg, spec, n);
                    LogDetResult r = log_det(spec, n, bits);
                    row.push_back(fmt(r.ln_D.re, cfg.digits));
                    row.push_back(fmt(r.ln_D.im, cfg.digits));
                    row.push_back(std::to_string(r.precision_bits));
                  });
  return t;
}

Table run_asym(const RunConfig& cfg) {
  Table t;
  t.columns = {"n",        "s",        "expansion", "value_re",
               "value_im", "trunc_bound", "error"};
  real_t th0 = parse_real(cfg.theta0);
  std::map<int, cplx> w = parse_w(cfg.w_json);
  for (int n : cfg.n_list)
    for (const real_t& s : s_grid(cfg, n))
      guarded_row(t, {std::to_string(n), fmt(s, cfg.digits)},
                  [&](std::vector<std::string>& row) {
                    ExpansionValue v;
                    if (s == 0) {
                      row.push_back("widom");
                      v = widom_expansion(th0, w, n, 64);
                    } else if (s == 1) {
                      row.push_back("szego");
                      v = szego_expansion(w, n);
                    } else {
                      row.push_back("fisher_hartwig");
                      v = fisher_hartwig_expansion(s, th0, w, n);
                    }
                    row.push_back(fmt(v.value.re, cfg.digits));
                    row.push_back(fmt(v.value.im, cfg.digits));
                    row.push_back(fmt(v.truncation_bound, cfg.digits));
                  });
  return t;
}

Table run_verify_theorem(const RunConfig& cfg) {
  Table t;
  t.columns = {"n",     "s",        "lndet_s", "lndet_0",
               "delta", "envelope", "ratio",   "error"};
  real_t th0 = parse_real(cfg.theta0);
  std::map<int, cplx> w = parse_w(cfg.w_json);
  RunConfig grid = cfg;
  if (grid.s_list.empty() && grid.x_list.empty())
    grid.x_list.push_back(to_str(x_critical(th0), 40));
  for (int n : cfg.n_list)
    for (const real_t& s : s_grid(grid, n))
      guarded_row(t, {std::to_string(n), fmt(s, cfg.digits)},
                  [&](std::vector<std::string>& row) {
                    SymbolSpec spec_s = make_spec(th0, cplx(s), w);
                    SymbolSpec spec_0 = make_spec(th0, cplx(0), w);
                    unsigned bits = pick_bits(cfg, spec_0, n);
                    real_t lds = log_det(spec_s, n, bits).ln_D.re;
                    real_t ld0 = log_det(spec_0, n, bits).ln_D.re;
                    real_t delta = abs(lds - ld0);
                    real_t env = theorem_error_envelope(n, th0, s);
                    row.push_back(fmt(lds, cfg.digits));
                    row.push_back(fmt(ld0, cfg.digits));
                    row.push_back(fmt(delta, cfg.digits));
                    row.push_back(fmt(env, cfg.digits));
                    row.push_back(fmt(env == 0 ? real_t(0) : delta / env,
                                      cfg.digits));
                  });
  return t;
}

Table run_equilibrium(const RunConfig& cfg) {
  Table t;
  t.columns = {"theta0",        "x",   "regime",
               "theta1",        "ell", "normalization",
               "eq_residual",   "min_margin", "error"};
  real_t th0 = parse_real(cfg.theta0);
  std::vector<std::string> xs = cfg.x_list;
  if (xs.empty()) xs.push_back("inf");
  unsigned bits = cfg.precision == 0 ? 128 : cfg.precision;
  PrecisionGuard guard(bits);
  for (const auto& xt : xs)
    guarded_row(t, {cfg.theta0, xt}, [&](std::vector<std::string>& row) {
      real_t x = (xt == "inf") ? real_infinity() : parse_real(xt);
      EquilibriumData data = equilibrium_solve(th0, x, bits);
      VariationalReport rep = variational_residuals(data, 12);
      row.push_back(regime_name(data.regime));
      row.push_back(fmt(data.theta1, cfg.digits));
      row.push_back(fmt(data.ell, cfg.digits));
      row.push_back(fmt(density_normalization(data), cfg.digits));
      row.push_back(fmt(rep.equality_residual, cfg.digits));
      row.push_back(fmt(rep.min_margin, cfg.digits));
    });
  return t;
}

Table run_parametrix_check(const RunConfig& cfg) {
  Table t;
  t.columns = {"n", "object", "point_re", "point_im", "offset", "residual",
               "error"};
  real_t th0 = parse_real(cfg.theta0);
  std::map<int, cplx> w = parse_w(cfg.w_json);
  unsigned bits = cfg.precision == 0 ? 128 : cfg.precision;
  PrecisionGuard guard(bits);
  real_t pi = const_pi();
  real_t x = x_critical(th0);
  if (!cfg.x_list.empty())
    x = (cfg.x_list[0] == "inf") ? real_infinity() : parse_real(cfg.x_list[0]);
  for (int n : cfg.n_list) {
    ParametrixContext ctx(th0, w, n, x);
    struct Probe {
      JumpObject object;
      const char* name;
      cplx point;
      real_t offset;
    };
    std::vector<Probe> probes = {
        {JumpObject::Pinf, "Pinf", cplx(1), real_t("1e-7")},
        {JumpObject::Psi, "Psi", cplx(-4), real_t("1e-10")},
        {JumpObject::Psi, "Psi", unit(2 * pi / 3), real_t("1e-10")},
        {JumpObject::Psi, "Psi", unit(-2 * pi / 3), real_t("1e-10")},
        {JumpObject::PsiHat, "PsiHat", cplx(2), real_t("1e-10")},
        {JumpObject::S, "S", unit(pi * 9 / 10), real_t("1e-6")},
        {JumpObject::S, "S", lens_point(ctx, true, real_t(1) / 2),
         real_t("1e-6")},
        {JumpObject::S, "S", lens_point(ctx, false, real_t(1) / 2),
         real_t("1e-6")},
        {JumpObject::P, "P",
         unit(th0 - ctx.disk_radius / 4), real_t("1e-6")},
    };
    for (const Probe& probe : probes)
      guarded_row(t,
                  {std::to_string(n), probe.name,
                   fmt(probe.point.re, cfg.digits),
                   fmt(probe.point.im, cfg.digits), fmt(probe.offset, 6)},
                  [&](std::vector<std::string>& row) {
                    real_t r = jump_residual(ctx, probe.object, probe.point,
                                             probe.offset);
                    row.push_back(fmt(r, cfg.digits));
                  });
  }
  return t;
}

Table run_sine_kernel(const RunConfig& cfg) {
  Table t;
  t.columns = {"y", "s", "n", "fredholm_logdet", "large_gap", "difference",
               "toeplitz_gap", "error"};
  unsigned bits = cfg.precision == 0 ? 128 : cfg.precision;
  PrecisionGuard guard(bits);
  std::vector<std::string> ys =
      cfg.y_list.empty() ? std::vector<std::string>{"1"} : cfg.y_list;
  std::vector<int> ns = cfg.n_list.empty() ? std::vector<int>{0} : cfg.n_list;
  for (const auto& yt : ys) {
    real_t y = parse_real(yt);
    std::vector<real_t> ss =
        cfg.s_list.empty() ? std::vector<real_t>{real_t(0)} : [&] {
          std::vector<real_t> v;
          for (const auto& st : cfg.s_list) v.push_back(parse_real(st));
          return v;
        }();
    for (const real_t& s : ss)
      for (int n : ns)
        guarded_row(t,
                    {yt, fmt(s, cfg.digits), n ? std::to_string(n) : ""},
                    [&](std::vector<std::string>& row) {
                      FredholmSpec spec{y, s};
                      real_t fred = fredholm_logdet(spec);
                      real_t big = large_gap_expansion(y);
                      row.push_back(fmt(fred, cfg.digits));
                      row.push_back(fmt(big, cfg.digits));
                      row.push_back(fmt(abs(fred - big), cfg.digits));
                      row.push_back(
                          n ? fmt(toeplitz_fredholm_gap(y, s, n), cfg.digits)
                            : "");
                    });
  }
  return t;
}

Table run_cue(const RunConfig& cfg) {
  Table t;
  t.columns = {"n", "kind", "index", "value", "error"};
  real_t th0 = parse_real(cfg.theta0);
  unsigned bits = cfg.precision == 0 ? 128 : cfg.precision;
  PrecisionGuard guard(bits);
  for (int n : cfg.n_list) {
    std::optional<CountDistribution> dist;
    try {
      dist = count_distribution(th0, n);
    } catch (const std::exception& e) {
      t.rows.push_back({std::to_string(n), "prob", "", "", e.what()});
      t.has_error = true;
      continue;
    }
    for (int k = 0; k <= n; ++k)
      t.rows.push_back({std::to_string(n), "prob", std::to_string(k),
                        fmt(dist->probs[k], cfg.digits), ""});
    t.rows.push_back(
        {std::to_string(n), "mean", "", fmt(dist->mean(), cfg.digits), ""});
    if (cfg.p >= 0)
      guarded_row(t, {std::to_string(n), "tail_bound", std::to_string(cfg.p)},
                  [&](std::vector<std::string>& row) {
                    real_t b = cfg.lambda.empty()
                                   ? tail_bound(th0, n, cfg.p)
                                   : tail_bound(th0, n, cfg.p,
                                                parse_real(cfg.lambda));
                    row.push_back(fmt(b, cfg.digits));
                  });
  }
  return t;
}

void apply_config_file(const std::string& path, RunConfig& cfg,
                       const std::map<std::string, bool>& given) {
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("cannot read config file " + path);
  json doc = json::parse(f);
  auto str_of = [](const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  auto list_of = [&](const json& v) {
    std::vector<std::string> out;
    if (v.is_array())
      for (const auto& item : v) out.push_back(str_of(item));
    else
      out.push_back(str_of(v));
    return out;
  };
  auto want = [&](const char* key) {
    return doc.contains(key) && !given.at(key);
  };
  if (want("theta0")) cfg.theta0 = str_of(doc["theta0"]);
  if (want("n")) {
    cfg.n_list.clear();
    for (const auto& item : doc["n"]) cfg.n_list.push_back(item.get<int>());
  }
  if (want("s")) cfg.s_list = list_of(doc["s"]);
  if (want("x")) cfg.x_list = list_of(doc["x"]);
  if (want("w")) cfg.w_json = doc["w"].dump();
  if (want("y")) cfg.y_list = list_of(doc["y"]);
  if (want("p")) cfg.p = doc["p"].get<int>();
  if (want("lambda")) cfg.lambda = str_of(doc["lambda"]);
  if (want("precision")) cfg.precision = doc["precision"].get<unsigned>();
  if (want("digits")) cfg.digits = doc["digits"].get<unsigned>();
  if (want("format")) cfg.format = doc["format"].get<std::string>();
  if (want("out")) cfg.out = doc["out"].get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz determinants with gap symbols: determinants, "
               "asymptotic expansions, and steepest-descent residual checks"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;

  std::vector<CLI::App*> subs;
  for (const char* name :
       {"logdet", "asym", "verify-theorem", "equilibrium", "parametrix-check",
        "sine-kernel", "cue"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--theta0", cfg.theta0, "arc half-width in radians");
    sub->add_option("--n", cfg.n_list, "matrix sizes")->delimiter(',');
    sub->add_option("--s", cfg.s_list, "gap values s")->delimiter(',');
    sub->add_option("--x", cfg.x_list, "gap exponents x with s = e^{-xn}")
        ->delimiter(',');
    sub->add_option("--w", cfg.w_json,
                    "JSON coefficient list [{\"k\":..,\"re\":..,\"im\":..}]");
    sub->add_option("--y", cfg.y_list, "sine-kernel interval half-widths")
        ->delimiter(',');
    sub->add_option("--p", cfg.p, "tail threshold for the Chernoff bound");
    sub->add_option("--lambda", cfg.lambda, "Chernoff tilt parameter");
    sub->add_option("--precision", cfg.precision, "working precision in bits");
    sub->add_option("--digits", cfg.digits, "emitted significant digits");
    sub->add_option("--format", cfg.format, "csv or json");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--config", config_path, "JSON config file");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
    CLI::App* active = app.get_subcommands().front();
    std::map<std::string, bool> given;
    for (const char* key : {"theta0", "n", "s", "x", "w", "y", "p", "lambda",
                            "precision", "digits", "format", "out"})
      given[key] = active->count("--" + std::string(key)) > 0;
    if (!config_path.empty()) apply_config_file(config_path, cfg, given);
    if (cfg.precision == 0)
      if (const char* env = std::getenv("GAPTLZ_PRECISION"))
        cfg.precision = static_cast<unsigned>(std::stoul(env));
    cfg.command = active->get_name();
    cfg.validate();

    if (cfg.n_list.empty() && cfg.command != "equilibrium" &&
        cfg.command != "sine-kernel")
      throw CLI::ValidationError("--n is required for " + cfg.command);

    Table table;
    if (cfg.command == "logdet") table = run_logdet(cfg);
    else if (cfg.command == "asym") table = run_asym(cfg);
    else if (cfg.command == "verify-theorem") table = run_verify_theorem(cfg);
    else if (cfg.command == "equilibrium") table = run_equilibrium(cfg);
    else if (cfg.command == "parametrix-check") table = run_parametrix_check(cfg);
    else if (cfg.command == "sine-kernel") table = run_sine_kernel(cfg);
    else table = run_cue(cfg);

    emit(table, cfg);
    return table.has_error ? 1 : 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
