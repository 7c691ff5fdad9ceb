#include "spinpair/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace spinpair {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

[[noreturn]] void config_error(const std::string& field, const std::string& what) {
  throw std::invalid_argument("config: " + field + ": " + what);
}

double get_number(const json& j, const std::string& field, const std::string& ctx) {
  if (!j.contains(field)) config_error(ctx + field, "missing");
  if (!j[field].is_number()) config_error(ctx + field, "must be a number");
  return j[field].get<double>();
}

double get_number_or(const json& j, const std::string& field, double fallback) {
  if (!j.contains(field)) return fallback;
  if (!j[field].is_number())
    config_error(field, "must be a number");
  return j[field].get<double>();
}

Model model_from_json(const json& p) {
  const std::string mode = p.value("mode", "scaled");
  if (mode == "scaled") {
    ScaledRates s;
    s.M0 = get_number(p, "M0", "params.");
    s.alpha = get_number(p, "alpha", "params.");
    s.kappa1_star = get_number_or(p, "kappa1_star", 0.0);
    s.kappa2_star = get_number_or(p, "kappa2_star", 0.0);
    s.kappa0_star = get_number_or(p, "kappa0_star", 0.0);
    s.delta_kappa1_star = get_number_or(p, "delta_kappa1_star", 0.0);
    s.delta_kappa2_star = get_number_or(p, "delta_kappa2_star", 0.0);
    s.omega_d0_star = get_number_or(p, "omega_d0_star", 0.0);
    s.delta_omega_star = get_number_or(p, "delta_omega_star", 0.0);
    return Model::from_scaled(s);
  }
  if (mode == "physical") {
    PhysicalParams ph;
    ph.J = get_number(p, "J", "params.");
    ph.delta_omega = get_number_or(p, "delta_omega", 0.0);
    ph.M0 = get_number(p, "M0", "params.");
    ph.alpha = get_number(p, "alpha", "params.");
    ph.omega0 = get_number_or(p, "omega0", 0.0);
    ph.tau_c = get_number(p, "tau_c", "params.");
    ph.omega_d = get_number(p, "omega_d", "params.");
    ph.ang.theta = get_number_or(p, "theta", 0.0);
    ph.ang.phi = get_number_or(p, "phi", 0.0);
    return Model::from_physical(ph);
  }
  config_error("params.mode", "must be \"scaled\" or \"physical\"");
}

InitialStatePreset preset_from_string(const std::string& s) {
  if (s == "singlet") return InitialStatePreset::Singlet;
  if (s == "triplet") return InitialStatePreset::Triplet;
  if (s == "dipolar_order") return InitialStatePreset::DipolarOrder;
  if (s == "zero") return InitialStatePreset::Zero;
  if (s == "thermal") return InitialStatePreset::Thermal;
  if (s == "custom") return InitialStatePreset::Custom;
  config_error("initial_state",
               "unknown preset \"" + s +
                   "\" (singlet|triplet|dipolar_order|zero|thermal|custom)");
}

ObservableVector observables_from_json(const json& j) {
  ObservableVector v;
  auto field = [&j](const char* n) { return j.value(n, 0.0); };
  v.Mx = field("Mx"); v.My = field("My"); v.Mz = field("Mz");
  v.Ax = field("Ax"); v.Ay = field("Ay"); v.Az = field("Az");
  v.Mxy = field("Mxy"); v.Mxz = field("Mxz"); v.Myz = field("Myz");
  v.Axy = field("Axy"); v.Axz = field("Axz"); v.Ayz = field("Ayz");
  v.Mzz = field("Mzz"); v.Mc = field("Mc"); v.Ac = field("Ac");
  return v;
}

SweepAxis axis_from_json(const json& j, const std::string& ctx) {
  SweepAxis a;
  if (!j.contains("param") || !j["param"].is_string())
    config_error(ctx + ".param", "missing or not a string");
  a.param = j["param"].get<std::string>();
  if (!is_sweep_param(a.param)) config_error(ctx + ".param", "not sweepable: " + a.param);
  a.min = get_number(j, "min", ctx + ".");
  a.max = get_number(j, "max", ctx + ".");
  const double cnt = get_number(j, "count", ctx + ".");
  a.count = static_cast<int>(cnt);
  if (a.count < 1) config_error(ctx + ".count", "must be >= 1");
  const std::string scale = j.value("scale", "linear");
  if (scale == "log") {
    a.log_scale = true;
    if (a.min <= 0.0) config_error(ctx + ".min", "log scale needs min > 0");
  } else if (scale != "linear") {
    config_error(ctx + ".scale", "must be \"linear\" or \"log\"");
  }
  return a;
}

}  // namespace

std::string to_string(InitialStatePreset p) {
  switch (p) {
    case InitialStatePreset::Singlet: return "singlet";
    case InitialStatePreset::Triplet: return "triplet";
    case InitialStatePreset::DipolarOrder: return "dipolar_order";
    case InitialStatePreset::Zero: return "zero";
    case InitialStatePreset::Thermal: return "thermal";
    case InitialStatePreset::Custom: return "custom";
  }
  return "?";
}

std::vector<double> SweepAxis::grid() const {
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    g.push_back(min);
    return g;
  }
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    if (log_scale) {
      g.push_back(std::pow(10.0, std::log10(min) + f * (std::log10(max) - std::log10(min))));
    } else {
      g.push_back(min + f * (max - min));
    }
  }
  g.back() = max;
  return g;
}

ObservableVector ScenarioConfig::initial_observables() const {
  switch (preset) {
    case InitialStatePreset::Singlet: return singlet_observables();
    case InitialStatePreset::Triplet: return triplet_observables();
    case InitialStatePreset::DipolarOrder: return dipolar_order_observables();
    case InitialStatePreset::Zero: return zero_observables();
    case InitialStatePreset::Thermal: return thermal_observables(model.M0);
    case InitialStatePreset::Custom: return custom_init;
  }
  return {};
}

IntegrateOptions ScenarioConfig::integrate_options() const {
  IntegrateOptions o;
  o.tol = tol;
  o.sample_count = sample_count;
  o.log_sampling = log_sampling;
  o.log_decades = log_decades;
  return o;
}

ScenarioConfig ScenarioConfig::from_json(const json& j) {
  ScenarioConfig c;
  if (!j.contains("params") || !j["params"].is_object())
    config_error("params", "missing object");
  c.model = model_from_json(j["params"]);
  if (j.contains("initial_state")) {
    if (!j["initial_state"].is_string()) config_error("initial_state", "must be a string");
    c.preset = preset_from_string(j["initial_state"].get<std::string>());
  }
  if (c.preset == InitialStatePreset::Custom) {
    if (!j.contains("custom_state") || !j["custom_state"].is_object())
      config_error("custom_state", "required for the custom preset");
    c.custom_init = observables_from_json(j["custom_state"]);
  }
  c.t_end = get_number_or(j, "t_end", c.t_end);
  if (!(c.t_end > 0.0)) config_error("t_end", "must be > 0");
  c.sample_count = static_cast<int>(get_number_or(j, "sample_count", c.sample_count));
  if (c.sample_count < 2) config_error("sample_count", "must be >= 2");
  const std::string sampling = j.value("sampling", "log");
  if (sampling == "linear") c.log_sampling = false;
  else if (sampling != "log") config_error("sampling", "must be \"log\" or \"linear\"");
  c.log_decades = get_number_or(j, "log_decades", c.log_decades);
  if (!(c.log_decades > 0.0)) config_error("log_decades", "must be > 0");
  c.tol = get_number_or(j, "tolerance", c.tol);
  if (!(c.tol > 1e-14 && c.tol < 1e-3))
    config_error("tolerance", "must lie in (1e-14, 1e-3)");
  const std::string rep = j.value("representation", "block");
  if (rep == "liouville") c.representation = Representation::Liouville;
  else if (rep != "block") config_error("representation", "must be \"block\" or \"liouville\"");
  const std::string tu = j.value("time_unit", "scaled");
  if (tu == "physical") c.scaled_time = false;
  else if (tu != "scaled") config_error("time_unit", "must be \"scaled\" or \"physical\"");
  if (j.contains("sweep")) {
    const json& s = j["sweep"];
    if (!s.contains("x") || !s.contains("y"))
      config_error("sweep", "needs axes \"x\" and \"y\"");
    c.sweep = std::make_pair(axis_from_json(s["x"], "sweep.x"),
                             axis_from_json(s["y"], "sweep.y"));
  }
  return c;
}

ScenarioConfig ScenarioConfig::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config: invalid JSON: " + std::string(e.what()));
  }
  return from_json(j);
}

bool is_sweep_param(const std::string& name) {
  static const char* names[] = {"alpha", "M0", "kappa0_star", "kappa1_star",
                                "kappa2_star", "delta_kappa1_star",
                                "delta_kappa2_star", "omega_d0_star",
                                "delta_omega_star"};
  for (const char* n : names) {
    if (name == n) return true;
  }
  return false;
}

Model with_param(const Model& m, const std::string& name, double value) {
  Model out = m;
  if (name == "alpha") out.alpha = value;
  else if (name == "M0") out.M0 = value;
  else if (name == "kappa0_star") out.rates.kappa[0] = value * m.J;
  else if (name == "kappa1_star") out.rates.kappa[1] = value * m.J;
  else if (name == "kappa2_star") out.rates.kappa[2] = value * m.J;
  else if (name == "delta_kappa1_star") out.rates.delta_kappa[1] = value * m.J;
  else if (name == "delta_kappa2_star") out.rates.delta_kappa[2] = value * m.J;
  else if (name == "omega_d0_star") out.rates.omega_d0 = value * m.J;
  else if (name == "delta_omega_star") out.delta_omega = value * m.J;
  else throw std::invalid_argument("with_param: unknown parameter " + name);
  out.validate();
  return out;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  ScenarioResult r;
  const ObservableVector init = cfg.initial_observables();
  if (cfg.representation == Representation::Block) {
    BlockSystem sys = build_block_system(cfg.model);
    if (cfg.scaled_time) sys = sys.scaled(cfg.model.J);
    r.trajectory = integrate(sys, init, cfg.t_end, cfg.integrate_options());
  } else {
    Superoperator gen = assemble_liouvillian(cfg.model);
    if (cfg.scaled_time) gen /= cfg.model.J;
    r.trajectory = integrate(gen, observables_to_rho(init), cfg.t_end,
                             cfg.integrate_options());
  }
  // general route: trajectories cross rank-deficient states where the two
  // routes only agree to the sqrt of the eigensolver noise, so the guard's
  // strict comparison is reserved for full-rank states (see its tests)
  r.concurrence.reserve(r.trajectory.states.size());
  for (const auto& s : r.trajectory.states) {
    r.concurrence.push_back(concurrence_wootters(observables_to_rho(s)).value);
  }
  r.steady = steady_state(cfg.model, init);
  return r;
}

ConcurrenceSummary summarize_concurrence(const std::vector<double>& times,
                                         const std::vector<double>& conc) {
  if (times.size() != conc.size() || times.empty()) {
    throw std::invalid_argument("summarize_concurrence: size mismatch");
  }
  ConcurrenceSummary s;
  std::size_t imax = 0;
  for (std::size_t i = 0; i < conc.size(); ++i) {
    if (conc[i] > s.max_value) {
      s.max_value = conc[i];
      imax = i;
    }
  }
  s.time_of_max = times[imax];
  const double threshold = s.max_value / std::numbers::e;
  s.decay_time = std::numeric_limits<double>::infinity();
  if (s.max_value <= 0.0) {
    s.decay_time = times[imax];
    return s;
  }
  for (std::size_t i = imax + 1; i < conc.size(); ++i) {
    if (conc[i] < threshold) {
      const double c0 = conc[i - 1], c1 = conc[i];
      const double t0 = times[i - 1], t1 = times[i];
      s.decay_time = t0 + (threshold - c0) / (c1 - c0) * (t1 - t0);
      break;
    }
  }
  return s;
}

SweepResult run_sweep(const ScenarioConfig& cfg, int workers) {
  if (!cfg.sweep) {
    throw std::invalid_argument("run_sweep: config has no sweep section");
  }
  SweepResult result;
  result.x_axis = cfg.sweep->first;
  result.y_axis = cfg.sweep->second;
  const std::vector<double> xs = result.x_axis.grid();
  const std::vector<double> ys = result.y_axis.grid();
  result.cells.resize(xs.size() * ys.size());

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= result.cells.size()) return;
      const std::size_t ix = k / ys.size();
      const std::size_t iy = k % ys.size();
      SweepCell& cell = result.cells[k];
      cell.x = xs[ix];
      cell.y = ys[iy];
      try {
        ScenarioConfig local = cfg;
        local.sweep.reset();
        local.model = with_param(local.model, result.x_axis.param, cell.x);
        local.model = with_param(local.model, result.y_axis.param, cell.y);
        const ScenarioResult r = run_scenario(local);
        const ConcurrenceSummary s =
            summarize_concurrence(r.trajectory.times, r.concurrence);
        cell.steady = r.steady;
        cell.max_concurrence = s.max_value;
        cell.time_of_max = s.time_of_max;
        cell.decay_time = s.decay_time;
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
    }
  };

  const int nw = std::max(1, workers);
  if (nw == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nw));
    for (int i = 0; i < nw; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return result;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const std::vector<double>& conc) {
  if (conc.size() != traj.states.size()) {
    throw std::invalid_argument("write_trajectory_csv: size mismatch");
  }
  os << "t,Mz,Mzz,Mc,Mx,My,Mxy,Mxz,Myz,Ax,Ay,Az,Axy,Axz,Ayz,Ac,concurrence\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const ObservableVector& v = traj.states[i];
    os << fmt(traj.times[i]) << ',' << fmt(v.Mz) << ',' << fmt(v.Mzz) << ','
       << fmt(v.Mc) << ',' << fmt(v.Mx) << ',' << fmt(v.My) << ',' << fmt(v.Mxy)
       << ',' << fmt(v.Mxz) << ',' << fmt(v.Myz) << ',' << fmt(v.Ax) << ','
       << fmt(v.Ay) << ',' << fmt(v.Az) << ',' << fmt(v.Axy) << ',' << fmt(v.Axz)
       << ',' << fmt(v.Ayz) << ',' << fmt(v.Ac) << ',' << fmt(conc[i]) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const SweepResult& r) {
  os << r.x_axis.param << ',' << r.y_axis.param
     << ",max_concurrence,time_of_max,decay_time,Mz_ss,Mzz_ss,Mc_ss,error\n";
  for (const SweepCell& c : r.cells) {
    os << fmt(c.x) << ',' << fmt(c.y) << ',' << fmt(c.max_concurrence) << ','
       << fmt(c.time_of_max) << ',' << fmt(c.decay_time) << ','
       << fmt(c.steady.values.Mz) << ',' << fmt(c.steady.values.Mzz) << ','
       << fmt(c.steady.values.Mc) << ',' << c.error << '\n';
  }
}

json model_json(const Model& m) {
  return json{{"J", m.J},
              {"delta_omega", m.delta_omega},
              {"M0", m.M0},
              {"alpha", m.alpha},
              {"kappa0", m.rates.kappa[0]},
              {"kappa1", m.rates.kappa[1]},
              {"kappa2", m.rates.kappa[2]},
              {"delta_kappa1", m.rates.delta_kappa[1]},
              {"delta_kappa2", m.rates.delta_kappa[2]},
              {"omega_d0", m.rates.omega_d0}};
}

json observables_json(const ObservableVector& v) {
  return json{{"Mz", v.Mz},   {"Mzz", v.Mzz}, {"Mc", v.Mc},  {"Mx", v.Mx},
              {"My", v.My},   {"Mxy", v.Mxy}, {"Mxz", v.Mxz}, {"Myz", v.Myz},
              {"Ax", v.Ax},   {"Ay", v.Ay},   {"Az", v.Az},  {"Axy", v.Axy},
              {"Axz", v.Axz}, {"Ayz", v.Ayz}, {"Ac", v.Ac}};
}

json steady_state_json(const Model& m, const SteadyState& s) {
  json j{{"params", model_json(m)},
         {"mode", s.mode == SteadyStateMode::Regular ? "regular" : "conserved_manifold"},
         {"values", observables_json(s.values)},
         {"residual", s.residual}};
  if (s.F) j["F"] = *s.F;
  if (s.near_singular_warning) j["near_singular_warning"] = true;
  return j;
}

json scenario_metadata(const ScenarioConfig& cfg, const ScenarioResult& r) {
  json j;
  j["params"] = model_json(cfg.model);
  j["initial_state"] = to_string(cfg.preset);
  j["initial_observables"] = observables_json(cfg.initial_observables());
  j["t_end"] = cfg.t_end;
  j["sample_count"] = cfg.sample_count;
  j["sampling"] = cfg.log_sampling ? "log" : "linear";
  j["log_decades"] = cfg.log_decades;
  j["tolerance"] = cfg.tol;
  j["representation"] =
      cfg.representation == Representation::Block ? "block" : "liouville";
  j["time_unit"] = cfg.scaled_time ? "1/J" : "physical";
  j["integrator"] = {{"method_used", r.trajectory.method_used},
                     {"stiffness_switch", r.trajectory.stiffness_switch}};
  return j;
}

void write_scenario_outputs(const ScenarioConfig& cfg, const ScenarioResult& r,
                            const std::filesystem::path& outdir,
                            const std::string& basename) {
  std::filesystem::create_directories(outdir);
  {
    std::ofstream csv(outdir / (basename + ".csv"));
    if (!csv) throw std::runtime_error("cannot write " + (outdir / (basename + ".csv")).string());
    write_trajectory_csv(csv, r.trajectory, r.concurrence);
  }
  {
    std::ofstream meta(outdir / (basename + "_meta.json"));
    meta << scenario_metadata(cfg, r).dump(2) << '\n';
  }
  {
    std::ofstream ss(outdir / (basename + "_steady.json"));
    ss << steady_state_json(cfg.model, r.steady).dump(2) << '\n';
  }
}

std::optional<Figure> figure_from_string(const std::string& name) {
  if (name == "fig1") return Figure::Fig1;
  if (name == "fig2a") return Figure::Fig2a;
  if (name == "fig2b") return Figure::Fig2b;
  if (name == "fig2c") return Figure::Fig2c;
  if (name == "fig3") return Figure::Fig3;
  return std::nullopt;
}

namespace {

ScenarioConfig curve_config(double kappa1_star, double alpha,
                            InitialStatePreset preset) {
  ScenarioConfig c;
  ScaledRates s;
  s.M0 = 0.9;
  s.alpha = alpha;
  s.kappa1_star = kappa1_star;
  s.kappa2_star = kappa1_star;  // curves fix kappa2* = kappa1*
  c.model = Model::from_scaled(s);
  c.preset = preset;
  c.t_end = 1e6;
  c.sample_count = 600;
  c.log_decades = 8.0;
  return c;
}

}  // namespace

void emit_figure_data(Figure which, const std::filesystem::path& outdir,
                      int workers, int grid_x, int grid_y) {
  std::filesystem::create_directories(outdir);

  if (which == Figure::Fig3) {
    ScenarioConfig c;
    ScaledRates s;
    s.M0 = 0.9;
    s.alpha = 1.0;
    c.model = Model::from_scaled(s);
    c.preset = InitialStatePreset::DipolarOrder;
    c.t_end = 1e5;
    c.sample_count = 400;
    c.log_decades = 7.0;
    SweepResult r;
    r.x_axis = SweepAxis{"kappa1_star", 1e-2, 1e2, grid_x, true};
    r.y_axis = SweepAxis{"alpha", 0.9, 1.0, grid_y, false};
    const std::vector<double> xs = r.x_axis.grid();
    const std::vector<double> ys = r.y_axis.grid();
    r.cells.resize(xs.size() * ys.size());

    // like run_sweep, but kappa2* tracks kappa1* cell by cell
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= r.cells.size()) return;
        SweepCell& cell = r.cells[k];
        cell.x = xs[k / ys.size()];
        cell.y = ys[k % ys.size()];
        try {
          ScenarioConfig local = c;
          local.model = with_param(local.model, "kappa1_star", cell.x);
          local.model = with_param(local.model, "kappa2_star", cell.x);
          local.model = with_param(local.model, "alpha", cell.y);
          const ScenarioResult rr = run_scenario(local);
          const ConcurrenceSummary sm =
              summarize_concurrence(rr.trajectory.times, rr.concurrence);
          cell.steady = rr.steady;
          cell.max_concurrence = sm.max_value;
          cell.time_of_max = sm.time_of_max;
          cell.decay_time = sm.decay_time;
        } catch (const std::exception& e) {
          cell.error = e.what();
        }
      }
    };
    const int nw = std::max(1, workers);
    if (nw == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < nw; ++i) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }

    std::ofstream csv(outdir / "fig3.csv");
    write_sweep_csv(csv, r);
    json manifest;
    manifest["figure"] = "fig3";
    manifest["files"] = {"fig3.csv"};
    manifest["protocol"] = {{"initial_state", "dipolar_order"},
                            {"initial_observables", observables_json(dipolar_order_observables())},
                            {"M0", 0.9},
                            {"kappa2_star", "= kappa1_star"},
                            {"t_end", c.t_end},
                            {"note", "grid ranges are repo defaults, not prescribed values"}};
    manifest["grid"] = {{"kappa1_star", {{"min", 1e-2}, {"max", 1e2}, {"count", grid_x}, {"scale", "log"}}},
                        {"alpha", {{"min", 0.9}, {"max", 1.0}, {"count", grid_y}, {"scale", "linear"}}}};
    std::ofstream mf(outdir / "fig3_manifest.json");
    mf << manifest.dump(2) << '\n';
    return;
  }

  const bool is_fig1 = which == Figure::Fig1;
  const std::vector<double> kappas =
      is_fig1 ? std::vector<double>{0.0, 0.01, 0.1, 1.0, 10.0, 100.0}
              : std::vector<double>{0.01, 0.1, 1.0, 10.0, 100.0};
  const std::vector<double> alphas{1.0, 0.9999};
  InitialStatePreset preset = InitialStatePreset::Zero;
  std::string tag = "fig1";
  if (which == Figure::Fig2a) { preset = InitialStatePreset::Singlet; tag = "fig2a"; }
  if (which == Figure::Fig2b) { preset = InitialStatePreset::Triplet; tag = "fig2b"; }
  if (which == Figure::Fig2c) { preset = InitialStatePreset::DipolarOrder; tag = "fig2c"; }

  json manifest;
  manifest["figure"] = tag;
  manifest["protocol"] = {{"initial_state", to_string(preset)},
                          {"M0", 0.9},
                          {"kappa2_star", "= kappa1_star"},
                          {"alphas", alphas},
                          {"kappa1_stars", kappas}};
  if (is_fig1) {
    manifest["protocol"]["note"] =
        "initial state defaults to all-zero observables (repo assumption)";
    manifest["observables"] = {"Mz", "Mc", "Mzz"};
  }
  json files = json::array();

  for (double alpha : alphas) {
    for (double k : kappas) {
      const ScenarioConfig c = curve_config(k, alpha, preset);
      const ScenarioResult r = run_scenario(c);
      char name[96];
      std::snprintf(name, sizeof(name), "%s_alpha%g_k%g.csv", tag.c_str(), alpha, k);
      std::ofstream csv(outdir / name);
      write_trajectory_csv(csv, r.trajectory, r.concurrence);
      json entry = {{"file", name}, {"alpha", alpha}, {"kappa1_star", k}};
      files.push_back(entry);
    }
  }
  manifest["files"] = files;
  std::ofstream mf(outdir / (tag + "_manifest.json"));
  mf << manifest.dump(2) << '\n';
}

}  // namespace spinpair
