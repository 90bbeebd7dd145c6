#include "swarmlab/harness/commands.hpp"

#include "swarmlab/harness/io.hpp"

#include <algorithm>
#include <cmath>

namespace swarmlab::harness {

using nlohmann::json;

RunResult execute_swarm(const SwarmExperiment& ex, std::uint64_t seed) {
  SwarmState s = init_population(ex.n, ex.params, ex.topology, seed);
  RunOptions opts;
  opts.thresholds = ex.thresholds;
  opts.injection = ex.injection;
  opts.densification = ex.densification;
  opts.peel = ex.peel;
  return run(s, ex.steps, opts);
}

roads::FleetResult execute_route(const RouteExperiment& ex, std::uint64_t seed) {
  roads::FleetScenario sc = ex.scenario;
  sc.seed = seed;
  roads::FleetSim sim(std::move(sc));
  return sim.run();
}

namespace {

std::string csv_header(const std::string& schema, const ExperimentConfig& cfg,
                       const std::string& seed_line) {
  std::string out;
  out += "# schema: " + schema + "\n";
  out += "# config: " + cfg.to_json().dump() + "\n";
  out += seed_line;
  return out;
}

json summary_to_json(const RunSummary& s) {
  json j;
  j["steps"] = s.steps;
  j["final_phase"] = to_string(s.final_phase);
  j["min_phi"] = s.min_phi;
  j["max_phi"] = s.max_phi;
  j["final_phi"] = s.final_phi;
  j["mean_phi_last_window"] = s.mean_phi_last_window;
  j["final_participation_ratio"] = s.final_participation_ratio;
  j["final_velocity_diameter"] = s.final_velocity_diameter;
  j["final_mean_degree_fraction"] = s.final_mean_degree_fraction;
  j["peeled_count"] = s.final_peeled;
  if (s.first_stampede_t)
    j["first_stampede_t"] = *s.first_stampede_t;
  else
    j["first_stampede_t"] = nullptr;
  j["n_regular"] = s.n_regular;
  j["n_injected"] = s.n_injected;
  return j;
}

json fleet_summary_to_json(const roads::FleetResult& r) {
  json j;
  j["spawned"] = r.counts.spawned;
  j["arrived"] = r.counts.arrived;
  j["destroyed"] = r.counts.destroyed;
  j["stalled"] = r.counts.stalled;
  j["en_route"] = r.counts.en_route;
  if (r.first_broadcast_time)
    j["first_broadcast_time"] = *r.first_broadcast_time;
  else
    j["first_broadcast_time"] = nullptr;
  if (r.time_to_reroute)
    j["time_to_reroute"] = *r.time_to_reroute;
  else
    j["time_to_reroute"] = nullptr;
  return j;
}

void require_kind(const ExperimentConfig& cfg, ExperimentKind kind, const std::string& command) {
  if (cfg.kind != kind)
    throw ConfigError(command + ": config kind does not match (expected " +
                      (kind == ExperimentKind::Swarm ? "swarm" : "route") + ")");
}

}  // namespace

void cmd_swarm_run(const ExperimentConfig& cfg, std::uint64_t seed,
                   const std::filesystem::path& out_dir) {
  require_kind(cfg, ExperimentKind::Swarm, "swarm-run");
  std::filesystem::create_directories(out_dir);
  const RunResult res = execute_swarm(cfg.swarm, seed);

  std::string csv =
      csv_header("swarm-timeseries/1", cfg, "# seed: " + std::to_string(seed) + "\n");
  csv += "t,phi,velocity_diameter,participation_ratio,mean_degree_fraction,phase,peeled_count\n";
  for (const auto& r : res.series) {
    csv += std::to_string(r.t) + ',' + fmt_double(r.phi) + ',' + fmt_double(r.velocity_diameter) +
           ',' + fmt_double(r.participation_ratio) + ',' + fmt_double(r.mean_degree_fraction) +
           ',' + to_string(r.phase) + ',' + std::to_string(r.peeled_count) + '\n';
  }
  write_text_file(out_dir / "timeseries.csv", csv);

  json summary;
  summary["schema_version"] = 1;
  summary["command"] = "swarm-run";
  summary["config"] = cfg.to_json();
  summary["seed"] = seed;
  summary["summary"] = summary_to_json(res.summary);
  write_text_file(out_dir / "summary.json", summary.dump(2) + "\n");
}

void cmd_route_run(const ExperimentConfig& cfg, std::uint64_t seed,
                   const std::filesystem::path& out_dir) {
  require_kind(cfg, ExperimentKind::Route, "route-run");
  std::filesystem::create_directories(out_dir);
  const roads::FleetResult res = execute_route(cfg.route, seed);

  std::string csv = csv_header("route-events/1", cfg, "# seed: " + std::to_string(seed) + "\n");
  csv += "t_seconds,event,edge_id,vehicle_id,detail\n";
  for (const auto& e : res.events) {
    csv += fmt_double(e.t) + ',' + e.event + ',' + std::to_string(e.edge_id) + ',' +
           std::to_string(e.vehicle_id) + ',' + e.detail + '\n';
  }
  write_text_file(out_dir / "events.csv", csv);

  json summary;
  summary["schema_version"] = 1;
  summary["command"] = "route-run";
  summary["config"] = cfg.to_json();
  summary["seed"] = seed;
  summary["summary"] = fleet_summary_to_json(res);
  write_text_file(out_dir / "summary.json", summary.dump(2) + "\n");
}

std::vector<std::string> sweep_param_names() {
  return {"n",  "sih_radius", "stiffness", "kernel_beta", "noise_eta",
          "dt", "v_max",      "density",   "tau"};
}

void apply_sweep_param(SwarmExperiment& ex, const std::string& name, double value) {
  if (name == "n") {
    ex.n = static_cast<int>(std::llround(value));
  } else if (name == "sih_radius") {
    ex.params.sih_radius = value;
  } else if (name == "stiffness") {
    ex.params.stiffness = value;
  } else if (name == "kernel_beta") {
    ex.params.kernel_beta = value;
  } else if (name == "noise_eta") {
    ex.params.noise_eta = value;
  } else if (name == "dt") {
    ex.params.dt = value;
  } else if (name == "v_max") {
    ex.params.v_max = value;
  } else if (name == "density") {
    ex.topology.density = value;
  } else if (name == "tau") {
    ex.topology.tau = value;
  } else {
    std::string known;
    for (const auto& k : sweep_param_names()) known += (known.empty() ? "" : ", ") + k;
    throw ConfigError("sweep: unknown parameter '" + name + "' (known: " + known + ")");
  }
}

void cmd_sweep(const ExperimentConfig& cfg, const SweepSpec& sweep,
               const std::vector<std::uint64_t>& seeds, const std::filesystem::path& out_dir,
               int jobs) {
  require_kind(cfg, ExperimentKind::Swarm, "sweep");
  if (sweep.steps < 1) throw ConfigError("sweep: steps must be >= 1");
  if (seeds.empty()) throw ConfigError("sweep: at least one seed required");
  {
    SwarmExperiment probe = cfg.swarm;
    apply_sweep_param(probe, sweep.param, sweep.from);  // rejects unknown names up front
  }
  std::filesystem::create_directories(out_dir);

  std::vector<double> values(sweep.steps);
  for (int i = 0; i < sweep.steps; ++i) {
    values[i] = sweep.steps == 1
                    ? sweep.from
                    : sweep.from + (sweep.to - sweep.from) * i / (sweep.steps - 1);
  }

  struct Row {
    double value;
    std::uint64_t seed;
    Phase final_phase;
    double mean_phi_last_window;
  };
  const int cells = sweep.steps * static_cast<int>(seeds.size());
  std::vector<Row> rows(cells);
  parallel_for(cells, jobs, [&](int idx) {
    const int vi = idx / static_cast<int>(seeds.size());
    const int si = idx % static_cast<int>(seeds.size());
    SwarmExperiment ex = cfg.swarm;
    apply_sweep_param(ex, sweep.param, values[vi]);
    const RunResult res = execute_swarm(ex, seeds[si]);
    rows[idx] = {values[vi], seeds[si], res.summary.final_phase,
                 res.summary.mean_phi_last_window};
  });

  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.seed < b.seed;
  });

  std::string seed_line = "# seeds:";
  for (auto s : seeds) seed_line += ' ' + std::to_string(s);
  seed_line += '\n';
  std::string csv = csv_header("sweep/1", cfg, seed_line);
  csv += "# param: " + sweep.param + "\n";
  csv += "param,value,seed,final_phase,mean_phi_last_window\n";
  for (const auto& r : rows) {
    csv += sweep.param + ',' + fmt_double(r.value) + ',' + std::to_string(r.seed) + ',' +
           to_string(r.final_phase) + ',' + fmt_double(r.mean_phi_last_window) + '\n';
  }
  write_text_file(out_dir / "sweep.csv", csv);

  json summary;
  summary["schema_version"] = 1;
  summary["command"] = "sweep";
  summary["config"] = cfg.to_json();
  summary["param"] = sweep.param;
  summary["from"] = sweep.from;
  summary["to"] = sweep.to;
  summary["steps"] = sweep.steps;
  summary["seeds"] = seeds;
  summary["rows"] = cells;
  write_text_file(out_dir / "summary.json", summary.dump(2) + "\n");
}

void cmd_compare(const ExperimentConfig& control, const ExperimentConfig& treatment,
                 const std::vector<std::uint64_t>& seeds, const std::filesystem::path& out_dir,
                 int jobs) {
  if (control.kind != treatment.kind)
    throw ConfigError("compare: control and treatment configs have different kinds");
  if (seeds.empty()) throw ConfigError("compare: at least one seed required");
  std::filesystem::create_directories(out_dir);

  const int cells = static_cast<int>(seeds.size());
  std::string seed_line = "# seeds:";
  for (auto s : seeds) seed_line += ' ' + std::to_string(s);
  seed_line += '\n';

  json summary;
  summary["schema_version"] = 1;
  summary["command"] = "compare";
  summary["control"] = control.to_json();
  summary["treatment"] = treatment.to_json();
  summary["seeds"] = seeds;

  if (control.kind == ExperimentKind::Swarm) {
    struct Row {
      RunSummary control, treatment;
    };
    std::vector<Row> rows(cells);
    parallel_for(cells, jobs, [&](int i) {
      rows[i].control = execute_swarm(control.swarm, seeds[i]).summary;
      rows[i].treatment = execute_swarm(treatment.swarm, seeds[i]).summary;
    });

    std::string csv = csv_header("compare-swarm/1", control, seed_line);
    csv += "# treatment: " + treatment.to_json().dump() + "\n";
    csv +=
        "seed,phi_control,phi_treatment,delta_phi,"
        "participation_ratio_control,participation_ratio_treatment,delta_participation_ratio,"
        "peeled_control,peeled_treatment,delta_peeled\n";
    std::vector<double> d_phi, d_pr, d_peeled;
    for (int i = 0; i < cells; ++i) {
      const auto& c = rows[i].control;
      const auto& t = rows[i].treatment;
      d_phi.push_back(t.final_phi - c.final_phi);
      d_pr.push_back(t.final_participation_ratio - c.final_participation_ratio);
      d_peeled.push_back(static_cast<double>(t.final_peeled - c.final_peeled));
      csv += std::to_string(seeds[i]) + ',' + fmt_double(c.final_phi) + ',' +
             fmt_double(t.final_phi) + ',' + fmt_double(d_phi.back()) + ',' +
             fmt_double(c.final_participation_ratio) + ',' +
             fmt_double(t.final_participation_ratio) + ',' + fmt_double(d_pr.back()) + ',' +
             std::to_string(c.final_peeled) + ',' + std::to_string(t.final_peeled) + ',' +
             fmt_double(d_peeled.back()) + '\n';
    }
    write_text_file(out_dir / "compare.csv", csv);

    summary["medians"] = {{"delta_phi", median(d_phi)},
                          {"delta_participation_ratio", median(d_pr)},
                          {"delta_peeled", median(d_peeled)}};
  } else {
    struct Row {
      roads::FleetResult control, treatment;
    };
    std::vector<Row> rows(cells);
    parallel_for(cells, jobs, [&](int i) {
      rows[i].control = execute_route(control.route, seeds[i]);
      rows[i].treatment = execute_route(treatment.route, seeds[i]);
    });

    std::string csv = csv_header("compare-route/1", control, seed_line);
    csv += "# treatment: " + treatment.to_json().dump() + "\n";
    csv +=
        "seed,destroyed_control,destroyed_treatment,delta_destroyed,"
        "arrived_control,arrived_treatment,stalled_control,stalled_treatment\n";
    std::vector<double> d_destroyed;
    for (int i = 0; i < cells; ++i) {
      const auto& c = rows[i].control.counts;
      const auto& t = rows[i].treatment.counts;
      d_destroyed.push_back(static_cast<double>(t.destroyed - c.destroyed));
      csv += std::to_string(seeds[i]) + ',' + std::to_string(c.destroyed) + ',' +
             std::to_string(t.destroyed) + ',' + fmt_double(d_destroyed.back()) + ',' +
             std::to_string(c.arrived) + ',' + std::to_string(t.arrived) + ',' +
             std::to_string(c.stalled) + ',' + std::to_string(t.stalled) + '\n';
    }
    write_text_file(out_dir / "compare.csv", csv);

    summary["medians"] = {{"delta_destroyed", median(d_destroyed)}};
  }

  write_text_file(out_dir / "summary.json", summary.dump(2) + "\n");
}

}  // namespace swarmlab::harness
