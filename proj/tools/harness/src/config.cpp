#include "swarmlab/harness/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace swarmlab::harness {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& ctx, const std::string& msg) {
  throw ConfigError(ctx + ": " + msg);
}

void check_keys(const json& obj, const std::string& ctx,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(ctx, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known) fail(ctx, "unknown key '" + it.key() + "'");
  }
}

const json& require_key(const json& obj, const std::string& ctx, const char* key) {
  if (!obj.contains(key)) fail(ctx, "missing required key '" + std::string(key) + "'");
  return obj.at(key);
}

double get_double(const json& obj, const std::string& ctx, const char* key, double dflt) {
  if (!obj.contains(key)) return dflt;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(ctx + "." + key, "expected a number");
  return v.get<double>();
}

double require_double(const json& obj, const std::string& ctx, const char* key) {
  const json& v = require_key(obj, ctx, key);
  if (!v.is_number()) fail(ctx + "." + key, "expected a number");
  return v.get<double>();
}

long get_long(const json& obj, const std::string& ctx, const char* key, long dflt) {
  if (!obj.contains(key)) return dflt;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(ctx + "." + key, "expected an integer");
  return v.get<long>();
}

long require_long(const json& obj, const std::string& ctx, const char* key) {
  const json& v = require_key(obj, ctx, key);
  if (!v.is_number_integer()) fail(ctx + "." + key, "expected an integer");
  return v.get<long>();
}

std::string get_string(const json& obj, const std::string& ctx, const char* key,
                       const std::string& dflt) {
  if (!obj.contains(key)) return dflt;
  const json& v = obj.at(key);
  if (!v.is_string()) fail(ctx + "." + key, "expected a string");
  return v.get<std::string>();
}

std::string require_string(const json& obj, const std::string& ctx, const char* key) {
  const json& v = require_key(obj, ctx, key);
  if (!v.is_string()) fail(ctx + "." + key, "expected a string");
  return v.get<std::string>();
}

Vec parse_vector(const json& v, const std::string& ctx, int expected_size) {
  if (!v.is_array()) fail(ctx, "expected an array of numbers");
  if (expected_size >= 0 && static_cast<int>(v.size()) != expected_size)
    fail(ctx, "expected " + std::to_string(expected_size) + " components, got " +
                  std::to_string(v.size()));
  Vec out(static_cast<int>(v.size()));
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (!v[i].is_number()) fail(ctx, "expected numbers");
    out[i] = v[i].get<double>();
  }
  return out;
}

Environment parse_env(const json& obj, const std::string& ctx, int k) {
  const std::string type = require_string(obj, ctx, "type");
  if (type == "none") {
    check_keys(obj, ctx, {"type"});
    return EnvNone{};
  }
  if (type == "attractor") {
    check_keys(obj, ctx, {"type", "goal", "gain"});
    EnvAttractor at;
    at.goal = parse_vector(require_key(obj, ctx, "goal"), ctx + ".goal", k);
    at.gain = get_double(obj, ctx, "gain", 1.0);
    return at;
  }
  if (type == "reflecting_box") {
    check_keys(obj, ctx, {"type", "half_width"});
    EnvReflectingBox box;
    box.half_width = get_double(obj, ctx, "half_width", 10.0);
    return box;
  }
  fail(ctx + ".type", "expected one of none|attractor|reflecting_box, got '" + type + "'");
}

json env_to_json(const Environment& env) {
  json j;
  if (std::holds_alternative<EnvNone>(env)) {
    j["type"] = "none";
  } else if (const auto* at = std::get_if<EnvAttractor>(&env)) {
    j["type"] = "attractor";
    j["goal"] = std::vector<double>(at->goal.begin(), at->goal.end());
    j["gain"] = at->gain;
  } else if (const auto* box = std::get_if<EnvReflectingBox>(&env)) {
    j["type"] = "reflecting_box";
    j["half_width"] = box->half_width;
  }
  return j;
}

Topology parse_topology(const json& obj, const std::string& ctx) {
  const std::string type = require_string(obj, ctx, "type");
  if (type == "complete") {
    check_keys(obj, ctx, {"type"});
    return Topology::complete();
  }
  if (type == "random_density") {
    check_keys(obj, ctx, {"type", "p"});
    return Topology::random_density(require_double(obj, ctx, "p"));
  }
  if (type == "similarity_threshold") {
    check_keys(obj, ctx, {"type", "tau"});
    return Topology::similarity_threshold(require_double(obj, ctx, "tau"));
  }
  fail(ctx + ".type", "expected one of complete|random_density|similarity_threshold, got '" + type + "'");
}

json topology_to_json(const Topology& t) {
  json j;
  switch (t.kind) {
    case TopologyKind::Complete: j["type"] = "complete"; break;
    case TopologyKind::RandomDensity:
      j["type"] = "random_density";
      j["p"] = t.density;
      break;
    case TopologyKind::SimilarityThreshold:
      j["type"] = "similarity_threshold";
      j["tau"] = t.tau;
      break;
  }
  return j;
}

InjectionSpec parse_injection(const json& obj, const std::string& ctx) {
  check_keys(obj, ctx, {"m", "strategy", "t_inject", "placement_spread", "velocity_mode"});
  InjectionSpec spec;
  spec.m = static_cast<int>(require_long(obj, ctx, "m"));
  spec.t_inject = require_long(obj, ctx, "t_inject");
  spec.placement_spread = get_double(obj, ctx, "placement_spread", 1.0);
  const std::string strategy = get_string(obj, ctx, "strategy", "feed");
  if (strategy == "feed")
    spec.strategy = InjectionStrategy::Feed;
  else if (strategy == "spatial")
    spec.strategy = InjectionStrategy::Spatial;
  else
    fail(ctx + ".strategy", "expected feed|spatial, got '" + strategy + "'");
  const std::string mode = get_string(obj, ctx, "velocity_mode", "antipodal");
  if (mode == "antipodal")
    spec.velocity_mode = VelocityMode::Antipodal;
  else if (mode == "random_unit")
    spec.velocity_mode = VelocityMode::RandomUnit;
  else
    fail(ctx + ".velocity_mode", "expected antipodal|random_unit, got '" + mode + "'");
  return spec;
}

json injection_to_json(const InjectionSpec& spec) {
  json j;
  j["m"] = spec.m;
  j["strategy"] = spec.strategy == InjectionStrategy::Feed ? "feed" : "spatial";
  j["t_inject"] = spec.t_inject;
  j["placement_spread"] = spec.placement_spread;
  j["velocity_mode"] = spec.velocity_mode == VelocityMode::Antipodal ? "antipodal" : "random_unit";
  return j;
}

ScheduledDensification parse_densification(const json& obj, const std::string& ctx) {
  check_keys(obj, ctx, {"t_apply", "similarity_tau", "added_edges", "push_gain"});
  ScheduledDensification d;
  d.t_apply = require_long(obj, ctx, "t_apply");
  d.spec.similarity_tau = require_double(obj, ctx, "similarity_tau");
  d.spec.added_edges = static_cast<int>(require_long(obj, ctx, "added_edges"));
  d.spec.push_gain = get_double(obj, ctx, "push_gain", 0.0);
  return d;
}

json densification_to_json(const ScheduledDensification& d) {
  json j;
  j["t_apply"] = d.t_apply;
  j["similarity_tau"] = d.spec.similarity_tau;
  j["added_edges"] = d.spec.added_edges;
  j["push_gain"] = d.spec.push_gain;
  return j;
}

PhaseThresholds parse_thresholds(const json& obj, const std::string& ctx) {
  check_keys(obj, ctx, {"phi_hi", "phi_lo", "density_hi", "window"});
  PhaseThresholds th;
  th.phi_hi = get_double(obj, ctx, "phi_hi", th.phi_hi);
  th.phi_lo = get_double(obj, ctx, "phi_lo", th.phi_lo);
  th.density_hi = get_double(obj, ctx, "density_hi", th.density_hi);
  th.window = static_cast<int>(get_long(obj, ctx, "window", th.window));
  return th;
}

json thresholds_to_json(const PhaseThresholds& th) {
  json j;
  j["phi_hi"] = th.phi_hi;
  j["phi_lo"] = th.phi_lo;
  j["density_hi"] = th.density_hi;
  j["window"] = th.window;
  return j;
}

PeelOptions parse_peel(const json& obj, const std::string& ctx) {
  check_keys(obj, ctx, {"theta_deg", "t_peel", "capture_t"});
  PeelOptions p;
  p.theta_peel_deg = get_double(obj, ctx, "theta_deg", p.theta_peel_deg);
  p.t_peel = static_cast<int>(get_long(obj, ctx, "t_peel", p.t_peel));
  if (obj.contains("capture_t")) p.capture_t = require_long(obj, ctx, "capture_t");
  return p;
}

json peel_to_json(const PeelOptions& p) {
  json j;
  j["theta_deg"] = p.theta_peel_deg;
  j["t_peel"] = p.t_peel;
  if (p.capture_t) j["capture_t"] = *p.capture_t;
  return j;
}

SwarmExperiment parse_swarm(const json& obj, const std::string& ctx) {
  check_keys(obj, ctx,
             {"n", "k", "sih_radius", "stiffness", "kernel_beta", "noise_eta", "dt", "v_max",
              "steps", "env", "topology", "thresholds", "injection", "densification", "peel"});
  SwarmExperiment ex;
  ex.n = static_cast<int>(get_long(obj, ctx, "n", ex.n));
  ex.params.k = static_cast<int>(get_long(obj, ctx, "k", ex.params.k));
  ex.params.sih_radius = get_double(obj, ctx, "sih_radius", ex.params.sih_radius);
  ex.params.stiffness = get_double(obj, ctx, "stiffness", ex.params.stiffness);
  ex.params.kernel_beta = get_double(obj, ctx, "kernel_beta", ex.params.kernel_beta);
  ex.params.noise_eta = get_double(obj, ctx, "noise_eta", ex.params.noise_eta);
  ex.params.dt = get_double(obj, ctx, "dt", ex.params.dt);
  ex.params.v_max = get_double(obj, ctx, "v_max", ex.params.v_max);
  ex.steps = get_long(obj, ctx, "steps", ex.steps);
  if (obj.contains("env")) ex.params.env = parse_env(obj.at("env"), ctx + ".env", ex.params.k);
  if (obj.contains("topology")) ex.topology = parse_topology(obj.at("topology"), ctx + ".topology");
  if (obj.contains("thresholds"))
    ex.thresholds = parse_thresholds(obj.at("thresholds"), ctx + ".thresholds");
  if (obj.contains("injection"))
    ex.injection = parse_injection(obj.at("injection"), ctx + ".injection");
  if (obj.contains("densification"))
    ex.densification = parse_densification(obj.at("densification"), ctx + ".densification");
  if (obj.contains("peel")) ex.peel = parse_peel(obj.at("peel"), ctx + ".peel");

  if (ex.n < 1) fail(ctx + ".n", "must be >= 1");
  if (ex.steps < 0) fail(ctx + ".steps", "must be >= 0");
  try {
    ex.params.validate();
    ex.thresholds.validate();
    if (ex.injection) ex.injection->validate();
    if (ex.densification) ex.densification->spec.validate();
    switch (ex.topology.kind) {
      case TopologyKind::RandomDensity:
        if (ex.topology.density < 0.0 || ex.topology.density > 1.0)
          throw std::invalid_argument("topology.p must be in [0, 1]");
        break;
      case TopologyKind::SimilarityThreshold:
        if (ex.topology.tau < 0.0) throw std::invalid_argument("topology.tau must be >= 0");
        break;
      default: break;
    }
  } catch (const std::invalid_argument& e) {
    fail(ctx, e.what());
  }
  return ex;
}

json swarm_to_json(const SwarmExperiment& ex) {
  json j;
  j["n"] = ex.n;
  j["k"] = ex.params.k;
  j["sih_radius"] = ex.params.sih_radius;
  j["stiffness"] = ex.params.stiffness;
  j["kernel_beta"] = ex.params.kernel_beta;
  j["noise_eta"] = ex.params.noise_eta;
  j["dt"] = ex.params.dt;
  j["v_max"] = ex.params.v_max;
  j["steps"] = ex.steps;
  j["env"] = env_to_json(ex.params.env);
  j["topology"] = topology_to_json(ex.topology);
  j["thresholds"] = thresholds_to_json(ex.thresholds);
  if (ex.injection) j["injection"] = injection_to_json(*ex.injection);
  if (ex.densification) j["densification"] = densification_to_json(*ex.densification);
  j["peel"] = peel_to_json(ex.peel);
  return j;
}

roads::HazardFront parse_hazard(const json& obj, const std::string& ctx) {
  check_keys(obj, ctx, {"origin", "direction", "speed", "t0"});
  roads::HazardFront h;
  const Vec origin = parse_vector(require_key(obj, ctx, "origin"), ctx + ".origin", 2);
  const Vec dir = parse_vector(require_key(obj, ctx, "direction"), ctx + ".direction", 2);
  h.origin_x = origin[0];
  h.origin_y = origin[1];
  h.dir_x = dir[0];
  h.dir_y = dir[1];
  h.speed = require_double(obj, ctx, "speed");
  h.t0 = get_double(obj, ctx, "t0", 0.0);
  return h;
}

json hazard_to_json(const roads::HazardFront& h) {
  json j;
  j["origin"] = {h.origin_x, h.origin_y};
  j["direction"] = {h.dir_x, h.dir_y};
  j["speed"] = h.speed;
  j["t0"] = h.t0;
  return j;
}

RouteExperiment parse_route(const json& obj, const std::string& ctx,
                            const std::filesystem::path& base_dir) {
  check_keys(obj, ctx,
             {"network_file", "source", "destination", "spawn_rate", "model_b_fraction",
              "p_block", "wreck_threshold", "vehicle_speed", "dt", "horizon", "hazard",
              "scripted_models"});
  RouteExperiment ex;
  ex.network_file = require_string(obj, ctx, "network_file");
  std::filesystem::path net_path(ex.network_file);
  if (net_path.is_relative()) net_path = base_dir / net_path;
  try {
    ex.scenario.network = roads::RoadNetwork::load_file(net_path.string());
  } catch (const std::exception& e) {
    fail(ctx + ".network_file", e.what());
  }
  ex.scenario.source = static_cast<int>(require_long(obj, ctx, "source"));
  ex.scenario.destination = static_cast<int>(require_long(obj, ctx, "destination"));
  ex.scenario.spawn_rate = get_double(obj, ctx, "spawn_rate", 1.0);
  ex.scenario.model_b_fraction = get_double(obj, ctx, "model_b_fraction", 0.0);
  ex.scenario.p_block = get_double(obj, ctx, "p_block", 0.5);
  ex.scenario.wreck_threshold = static_cast<int>(get_long(obj, ctx, "wreck_threshold", 20));
  ex.scenario.vehicle_speed = get_double(obj, ctx, "vehicle_speed", 1.0);
  ex.scenario.dt = get_double(obj, ctx, "dt", 0.1);
  ex.scenario.horizon = get_double(obj, ctx, "horizon", 60.0);
  ex.scenario.hazard = parse_hazard(require_key(obj, ctx, "hazard"), ctx + ".hazard");
  if (obj.contains("scripted_models")) {
    const json& arr = obj.at("scripted_models");
    if (!arr.is_array()) fail(ctx + ".scripted_models", "expected an array of \"A\"/\"B\"");
    for (const auto& m : arr) {
      if (!m.is_string() || (m != "A" && m != "B"))
        fail(ctx + ".scripted_models", "entries must be \"A\" or \"B\"");
      ex.scenario.scripted_models.push_back(m == "A" ? roads::VehicleModel::A
                                                     : roads::VehicleModel::B);
    }
  }
  try {
    ex.scenario.validate();
  } catch (const std::invalid_argument& e) {
    fail(ctx, e.what());
  }
  return ex;
}

json route_to_json(const RouteExperiment& ex) {
  json j;
  j["network_file"] = ex.network_file;
  j["source"] = ex.scenario.source;
  j["destination"] = ex.scenario.destination;
  j["spawn_rate"] = ex.scenario.spawn_rate;
  j["model_b_fraction"] = ex.scenario.model_b_fraction;
  j["p_block"] = ex.scenario.p_block;
  j["wreck_threshold"] = ex.scenario.wreck_threshold;
  j["vehicle_speed"] = ex.scenario.vehicle_speed;
  j["dt"] = ex.scenario.dt;
  j["horizon"] = ex.scenario.horizon;
  j["hazard"] = hazard_to_json(ex.scenario.hazard);
  if (!ex.scenario.scripted_models.empty()) {
    std::vector<std::string> models;
    for (auto m : ex.scenario.scripted_models) models.emplace_back(roads::to_string(m));
    j["scripted_models"] = models;
  }
  return j;
}

}  // namespace

nlohmann::json ExperimentConfig::to_json() const {
  json j;
  j["schema_version"] = schema_version;
  j["kind"] = kind == ExperimentKind::Swarm ? "swarm" : "route";
  j["seeds"] = seeds;
  if (!out_dir.empty()) j["out"] = out_dir;
  if (kind == ExperimentKind::Swarm)
    j["swarm"] = swarm_to_json(swarm);
  else
    j["route"] = route_to_json(route);
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j,
                                             const std::filesystem::path& base_dir) {
  const std::string ctx = "config";
  check_keys(j, ctx, {"schema_version", "kind", "seeds", "out", "swarm", "route"});

  ExperimentConfig cfg;
  cfg.schema_version = static_cast<int>(get_long(j, ctx, "schema_version", 1));
  if (cfg.schema_version != 1)
    fail(ctx + ".schema_version", "unsupported version " + std::to_string(cfg.schema_version));

  const std::string kind = require_string(j, ctx, "kind");
  if (kind == "swarm")
    cfg.kind = ExperimentKind::Swarm;
  else if (kind == "route")
    cfg.kind = ExperimentKind::Route;
  else
    fail(ctx + ".kind", "expected swarm|route, got '" + kind + "'");

  if (cfg.kind == ExperimentKind::Swarm) {
    if (j.contains("route")) fail(ctx, "key 'route' is not allowed when kind is 'swarm'");
    if (j.contains("swarm")) cfg.swarm = parse_swarm(j.at("swarm"), ctx + ".swarm");
  } else {
    if (j.contains("swarm")) fail(ctx, "key 'swarm' is not allowed when kind is 'route'");
    cfg.route = parse_route(require_key(j, ctx, "route"), ctx + ".route", base_dir);
  }

  if (j.contains("seeds")) {
    const json& arr = j.at("seeds");
    if (!arr.is_array() || arr.empty()) fail(ctx + ".seeds", "expected a non-empty array");
    cfg.seeds.clear();
    for (const auto& s : arr) {
      if (!s.is_number_integer() || s.get<long long>() < 0)
        fail(ctx + ".seeds", "seeds must be non-negative integers");
      cfg.seeds.push_back(s.get<std::uint64_t>());
    }
  }
  cfg.out_dir = get_string(j, ctx, "out", "");
  return cfg;
}

ExperimentConfig ExperimentConfig::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error in " + path.string() + ": " + e.what());
  }
  return from_json(j, path.parent_path());
}

}  // namespace swarmlab::harness
