#include "dcp_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dcp/orthopoly.hpp"
#include "dcp/spectra.hpp"
#include "dcp/verification.hpp"
#include "dcp/wavefunctions.hpp"

namespace dcp::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string mu1 = "0";
  std::string mu2 = "0";
  std::string alpha = "-1";
  int max_level = -1;
  int l = 0;
  int two_n = 0;
  int e1 = 0;
  int e2 = 0;
  std::string grid = "64x64";
  std::string box = "-10,10,-10,10";
  int quad_order = 0;
  std::uint64_t seed = default_seed;
  std::string format = "json";
  std::string out_path;
  std::vector<std::string> suites;
  std::string mutate;
  std::string kind = "full";
};

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ModelParams params_from(const Options& o) {
  ModelParams p;
  try {
    p.mu1 = parse_rational(o.mu1);
    p.mu2 = parse_rational(o.mu2);
    p.alpha = parse_rational(o.alpha);
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

json params_json(const ModelParams& p) {
  return {{"mu1", to_string(p.mu1)}, {"mu2", to_string(p.mu2)}, {"alpha", to_string(p.alpha)}};
}

QuantumNumbers qn_from(const Options& o) {
  QuantumNumbers qn{o.l, o.two_n, o.e1, o.e2};
  if (qn.l < 0 || qn.e1 < 0 || qn.e1 > 1 || qn.e2 < 0 || qn.e2 > 1) {
    throw UsageError("quantum numbers need l >= 0 and e1, e2 in {0, 1}");
  }
  try {
    qn.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return qn;
}

void require_bound(const ModelParams& p) {
  if (p.alpha >= 0) throw UsageError("bound states need alpha < 0");
}

// Writes to --out when given, stdout otherwise.
void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw UsageError("cannot open output file " + o.out_path);
  file << text;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const ModelParams p = params_from(o);
  require_bound(p);
  const int max_level = o.max_level < 0 ? 3 : o.max_level;

  json rows = json::array();
  for (int level = 0; level <= max_level; ++level) {
    const auto states = enumerate_level(level);
    for (const auto& qn : states) {
      json row = spectrum_record(p, qn);
      row["level"] = level;
      row["degeneracy"] = states.size();
      rows.push_back(std::move(row));
    }
  }

  std::ostringstream text;
  if (o.format == "csv") {
    static const char* cols[] = {"level", "l", "two_n", "e1", "e2", "kappa", "energy", "beta", "j3_sq", "degeneracy"};
    for (std::size_t i = 0; i < std::size(cols); ++i) text << (i ? "," : "") << cols[i];
    text << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < std::size(cols); ++i) {
        const json& v = row.at(cols[i]);
        text << (i ? "," : "") << (v.is_string() ? v.get<std::string>() : v.dump());
      }
      text << '\n';
    }
  } else {
    text << json{{"params", params_json(p)}, {"states", rows}}.dump(2) << '\n';
  }
  emit(o, text.str(), out);
  return ok;
}

struct Grid {
  int w = 0;
  int h = 0;
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;

  double x(int i) const { return w == 1 ? x0 : x0 + (x1 - x0) * i / (w - 1); }
  double y(int j) const { return h == 1 ? y0 : y0 + (y1 - y0) * j / (h - 1); }
};

Grid parse_grid(const Options& o) {
  Grid g;
  char sep = 0;
  std::istringstream gs(o.grid);
  if (!(gs >> g.w >> sep >> g.h) || sep != 'x' || !gs.eof() || g.w < 1 || g.h < 1) {
    throw UsageError("--grid expects WxH with positive integers");
  }
  std::vector<double> v;
  std::istringstream bs(o.box);
  std::string item;
  while (std::getline(bs, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--box expects x0,x1,y0,y1");
    }
  }
  if (v.size() != 4) throw UsageError("--box expects x0,x1,y0,y1");
  g.x0 = v[0];
  g.x1 = v[1];
  g.y0 = v[2];
  g.y1 = v[3];
  return g;
}

int cmd_state(const Options& o, std::ostream& out) {
  const ModelParams p = params_from(o);
  require_bound(p);
  const QuantumNumbers qn = qn_from(o);
  const Grid g = parse_grid(o);
  const WavefunctionBundle w = full_wavefunction(qn, p);

  json meta = qn;
  meta["energy"] = to_string(w.energy);
  meta["beta"] = to_string(w.beta);
  meta["norm"] = w.forced_norm;
  meta["norm_closed_form"] = w.norm_constant;
  meta["norm_ratio"] = w.norm_ratio();
  meta["params"] = params_json(p);
  meta["grid"] = {{"w", g.w}, {"h", g.h}};
  meta["box"] = {g.x0, g.x1, g.y0, g.y1};

  std::ostringstream text;
  if (o.format == "csv") {
    text << "x1,x2,psi\n";
    for (int j = 0; j < g.h; ++j) {
      for (int i = 0; i < g.w; ++i) {
        const double x = g.x(i), y = g.y(j);
        text << fmt17(x) << ',' << fmt17(y) << ',' << fmt17(w.evaluate(x, y)) << '\n';
      }
    }
  } else {
    json samples = json::array();
    for (int j = 0; j < g.h; ++j) {
      for (int i = 0; i < g.w; ++i) samples.push_back({g.x(i), g.y(j), w.evaluate(g.x(i), g.y(j))});
    }
    text << json{{"meta", meta}, {"samples", samples}}.dump(2) << '\n';
  }
  emit(o, text.str(), out);
  if (!o.out_path.empty() && o.format == "csv") {
    std::ofstream side(o.out_path + ".json");
    if (!side) throw UsageError("cannot open sidecar file " + o.out_path + ".json");
    side << meta.dump(2) << '\n';
  }
  return ok;
}

int cmd_verify(const Options& o, const CLI::App& sub, std::ostream& out) {
  std::vector<ModelParams> grid;
  if (sub.count("--mu1") || sub.count("--mu2") || sub.count("--alpha")) {
    grid.push_back(params_from(o));
  } else {
    grid = default_parameter_grid();
  }
  SuiteConfig config;
  config.seed = o.seed;
  config.suites = o.suites;
  if (!o.mutate.empty()) config.mutate = o.mutate;

  std::vector<CheckReport> reports;
  try {
    reports = run_suite(grid, config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });

  std::ostringstream text;
  if (o.format == "csv") {
    text << "name,mu1,mu2,alpha,status,exactness,residual,elapsed_ms\n";
    for (const auto& r : reports) {
      const json j = r;
      const json& res = j.at("residual");
      text << r.name << ',' << to_string(r.params.mu1) << ',' << to_string(r.params.mu2) << ','
           << to_string(r.params.alpha) << ',' << j.at("status").get<std::string>() << ','
           << j.at("exactness").get<std::string>() << ','
           << (res.is_string() ? res.get<std::string>() : fmt17(res.get<double>())) << ',' << r.elapsed_ms
           << '\n';
    }
  } else {
    text << json(reports).dump(2) << '\n';
  }
  emit(o, text.str(), out);
  return all_pass ? ok : verification_failed;
}

struct GramResult {
  std::vector<QuantumNumbers> states;
  std::vector<std::vector<double>> matrix;
};

GramResult gram_matrix(const Options& o, const ModelParams& p) {
  GramResult g;
  std::vector<std::vector<double>>& m = g.matrix;
  auto fill = [&](auto&& entry) {
    const std::size_t n = g.states.size();
    m.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = entry(i, j);
    }
  };

  if (o.kind == "angular") {
    const int two_n_max = o.max_level < 0 ? 6 : o.max_level;
    std::vector<FunctionExpr> hs;
    std::vector<double> etas;
    for (int two_n = 0; two_n <= two_n_max; ++two_n) {
      for (const auto& qn : enumerate_level(two_n)) {
        if (qn.two_n != two_n) continue;
        g.states.push_back(qn);
        hs.push_back(angular_harmonic(qn, p));
        etas.push_back(angular_norm_constant(qn, p));
      }
    }
    fill([&](std::size_t i, std::size_t j) {
      return etas[i] * etas[j] * angular_inner_product(hs[i], hs[j], p, o.quad_order);
    });
  } else if (o.kind == "radial") {
    require_bound(p);
    const int l_max = o.max_level < 0 ? 5 : o.max_level;
    std::vector<FunctionExpr> rs;
    std::vector<double> xis;
    for (int l = 0; l <= l_max; ++l) {
      const QuantumNumbers qn{l, o.two_n, o.two_n % 2, 0};
      g.states.push_back(qn);
      rs.push_back(radial_factor(qn, p));
      xis.push_back(radial_norm_constant(qn, p));
    }
    fill([&](std::size_t i, std::size_t j) {
      return xis[i] * xis[j] * radial_inner_product(rs[i], rs[j], p, o.quad_order);
    });
  } else {
    require_bound(p);
    std::vector<WavefunctionBundle> ws;
    if (o.kind == "state") {
      g.states.push_back(qn_from(o));
    } else {
      const int max_level = o.max_level < 0 ? 3 : o.max_level;
      for (int level = 0; level <= max_level; ++level) {
        for (const auto& qn : enumerate_level(level)) g.states.push_back(qn);
      }
    }
    for (const auto& qn : g.states) ws.push_back(full_wavefunction(qn, p));
    fill([&](std::size_t i, std::size_t j) { return inner_product(ws[i], ws[j], o.quad_order); });
  }
  return g;
}

int cmd_gram(const Options& o, std::ostream& out) {
  static const std::vector<std::string> kinds{"angular", "radial", "full", "state"};
  if (std::find(kinds.begin(), kinds.end(), o.kind) == kinds.end()) throw UsageError("unknown --kind " + o.kind);
  const ModelParams p = params_from(o);
  GramResult g;
  try {
    g = gram_matrix(o, p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  double max_off = 0.0, max_diag = 0.0;
  for (std::size_t i = 0; i < g.matrix.size(); ++i) {
    for (std::size_t j = 0; j < g.matrix.size(); ++j) {
      const double d = std::abs(g.matrix[i][j] - (i == j ? 1.0 : 0.0));
      (i == j ? max_diag : max_off) = std::max(i == j ? max_diag : max_off, d);
    }
  }

  std::ostringstream text;
  if (o.format == "csv") {
    for (const auto& row : g.matrix) {
      for (std::size_t j = 0; j < row.size(); ++j) text << (j ? "," : "") << fmt17(row[j]);
      text << '\n';
    }
  } else {
    text << json{{"kind", o.kind},
                 {"params", params_json(p)},
                 {"states", g.states},
                 {"matrix", g.matrix},
                 {"max_offdiag", max_off},
                 {"max_diag_deviation", max_diag}}
                .dump(2)
         << '\n';
  }
  emit(o, text.str(), out);
  return ok;
}

void add_params(CLI::App* app, Options& o) {
  app->add_option("--mu1", o.mu1, "Dunkl parameter mu1 (p/q)");
  app->add_option("--mu2", o.mu2, "Dunkl parameter mu2 (p/q)");
  app->add_option("--alpha", o.alpha, "Coulomb coupling (p/q)");
}

void add_state(CLI::App* app, Options& o) {
  app->add_option("--l", o.l, "radial quantum number");
  app->add_option("--two-n", o.two_n, "twice the angular quantum number");
  app->add_option("--e1", o.e1, "x1 parity bit");
  app->add_option("--e2", o.e2, "x2 parity bit");
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--out", o.out_path, "output path");
  app->add_option("--quad-order", o.quad_order, "Gauss order (0: default rule)")->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar Dunkl-Coulomb system: spectra, states, Gram matrices and identity checks", "dcp"};
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "energy levels up to --max-level");
  add_params(spectrum, o);
  add_common(spectrum, o);
  spectrum->add_option("--max-level", o.max_level)->check(CLI::NonNegativeNumber);

  auto* state = app.add_subcommand("state", "sample a normalized eigenfunction on a grid");
  add_params(state, o);
  add_common(state, o);
  add_state(state, o);
  state->add_option("--grid", o.grid, "WxH");
  state->add_option("--box", o.box, "x0,x1,y0,y1");

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  add_params(verify, o);
  add_common(verify, o);
  verify->add_option("--seed", o.seed);
  verify->add_option("--suite", o.suites, "restrict to a check (repeatable)");
  verify->add_option("--mutate", o.mutate, "apply the documented mutation of a check");

  auto* gram = app.add_subcommand("gram", "Gram matrix by quadrature");
  add_params(gram, o);
  add_common(gram, o);
  add_state(gram, o);
  gram->add_option("--max-level", o.max_level, "two_n max (angular), l max (radial), level max (full)")
      ->check(CLI::NonNegativeNumber);
  gram->add_option("--kind", o.kind)->check(CLI::IsMember({"angular", "radial", "full", "state"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*spectrum) return cmd_spectrum(o, out);
    if (*state) return cmd_state(o, out);
    if (*verify) return cmd_verify(o, *verify, out);
    return cmd_gram(o, out);
  } catch (const UsageError& e) {
    err << "dcp: " << e.what() << '\n';
    return usage_error;
  }
}

}  // namespace dcp::cli
