// Copyright 2026 The ssyk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ssyk/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssyk/circuit.hpp"
#include "ssyk/pipeline.hpp"
#include "ssyk/resources.hpp"
#include "ssyk/syk_model.hpp"

namespace ssyk::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

void RunConfig::validate() const {
  static const std::set<std::string> commands{"generate", "compile", "count",
                                              "sweep",    "bound",   "verify"};
  if (!commands.count(command)) throw std::invalid_argument("unknown command '" + command + "'");
  if (instances.empty()) {
    if (N.empty()) throw std::invalid_argument("--N is required");
    if (k.empty() == p.empty()) throw std::invalid_argument("give exactly one of --k and --p");
    if (seeds.empty()) throw std::invalid_argument("no seeds selected");
  } else if (!N.empty() || !k.empty() || !p.empty()) {
    throw std::invalid_argument("--instance cannot be combined with --N, --k or --p");
  }
  for (int n : N) {
    if (n < 4 || n % 2) throw std::invalid_argument("N must be even and >= 4, got " + std::to_string(n));
  }
  for (double v : k) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("k must be > 0");
  }
  for (double v : p) {
    if (!(v > 0.0 && v <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
  }
  if (!(J > 0.0) || !std::isfinite(J)) throw std::invalid_argument("J must be > 0");
  if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("t must be > 0");
  if (r && *r < 1) throw std::invalid_argument("r must be >= 1");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1]");
  if (!(eps_rot > 0.0 && eps_rot < 0.5)) throw std::invalid_argument("eps_rot must lie in (0, 0.5)");
  if (bound != "exact" && bound != "pauli" && bound != "both") {
    throw std::invalid_argument("bound must be exact, pauli or both");
  }
}

std::string RunConfig::canonical_json() const {
  json j;
  j["command"] = command;
  j["N"] = N;
  j["k"] = k;
  j["p"] = p;
  j["J"] = J;
  j["seeds"] = seeds;
  j["instances"] = instances;
  j["order"] = order;
  j["t"] = t;
  j["r"] = r ? json(*r) : json(nullptr);
  j["epsilon"] = epsilon;
  j["eps_rot"] = eps_rot;
  j["coloring"] = std::string(to_string(coloring));
  j["bound"] = bound;
  j["coupling_prefactors"] = coupling_prefactors;
  return j.dump();
}

std::string RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_json()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::int64_t RunConfig::steps() const { return r ? *r : plan_steps(order, J * t, epsilon); }

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope fit needs at least two aligned points");
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw std::invalid_argument("log-log fit needs positive data");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) throw std::invalid_argument("slope fit needs distinct x values");
  return sxy / sxx;
}

namespace {

struct Extras {
  std::string coloring = "degree";
  std::int64_t r = 0;
  std::size_t seed_count = 10;
  std::uint64_t seed_start = 1;
  std::string config;
};

std::unique_ptr<CLI::App> build_app(RunConfig& cfg, Extras& ex) {
  auto app = std::make_unique<CLI::App>("Sparse SYK circuit compiler and resource estimator", "ssyk");
  app->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands{
      {"generate", "Sample instances and write them as JSON"},
      {"compile", "Compile instances into Trotter circuits (QASM 2.0)"},
      {"count", "Per-step gate counts averaged over seeds (CSV)"},
      {"sweep", "Counts over an N, k or p grid with log-log fits"},
      {"bound", "Trotter error bounds per instance"},
      {"verify", "Certify measured error <= exact bound <= analytic bound"}};
  for (const auto& [name, help] : commands) {
    CLI::App* s = app->add_subcommand(name, help);
    s->add_option("--config", ex.config, "JSON file of option values; flags override it");
    s->add_option("--N", cfg.N, "Majorana counts")->delimiter(',');
    s->add_option("--k", cfg.k, "Target average degrees")->delimiter(',');
    s->add_option("--p", cfg.p, "Retention probabilities")->delimiter(',');
    s->add_option("--J", cfg.J, "Coupling scale")->capture_default_str();
    s->add_option("--seeds", cfg.seeds, "Explicit seed list")->delimiter(',');
    s->add_option("--seed-count", ex.seed_count, "Seeds seed-start .. seed-start+count-1")
        ->capture_default_str();
    s->add_option("--seed-start", ex.seed_start, "First seed")->capture_default_str();
    s->add_option("--instance", cfg.instances, "Instance JSON files instead of sampling");
    s->add_option("--order", cfg.order, "Trotter order (1 or 2)")->capture_default_str();
    s->add_option("--t", cfg.t, "Evolution time")->capture_default_str();
    s->add_option("--r", ex.r, "Trotter steps (default from epsilon)");
    s->add_option("--epsilon", cfg.epsilon, "Target Trotter error")->capture_default_str();
    s->add_option("--eps-rot", cfg.eps_rot, "Per-rotation synthesis error")->capture_default_str();
    s->add_option("--coloring", ex.coloring, "Cluster coloring order")
        ->check(CLI::IsMember({"degree", "input", "dsatur"}))
        ->capture_default_str();
    s->add_option("--bound", cfg.bound, "Bound method: exact, pauli or both")
        ->check(CLI::IsMember({"exact", "pauli", "both"}))
        ->capture_default_str();
    s->add_flag("--coupling-prefactors", cfg.coupling_prefactors,
                "Scale bounds by J^2 (order 1) or J^3 (order 2)");
    s->add_option("--out", cfg.out, "Output directory (default runs/<UTC timestamp>)");
    s->add_option("--threads", cfg.threads, "Worker threads (0: all cores)")->capture_default_str();
  }
  return app;
}

std::vector<std::string> reversed(std::vector<std::string> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::vector<std::string> config_tokens(const json& value, const std::string& flag) {
  std::vector<std::string> out;
  auto scalar = [&flag](const json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    if (v.is_number()) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
      return buf;
    }
    throw ConfigError("unsupported config value for " + flag);
  };
  if (value.is_boolean()) {
    if (value.get<bool>()) out.push_back(flag);
  } else if (value.is_array()) {
    for (const auto& v : value) {
      out.push_back(flag);
      out.push_back(scalar(v));
    }
  } else {
    out.push_back(flag);
    out.push_back(scalar(value));
  }
  return out;
}

/// Two passes: the first finds the subcommand, the config path and the flags
/// given explicitly; the second reparses with config values spliced in ahead
/// of the command-line flags for every option the user did not set.
RunConfig parse_config(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                       int& exit_code) {
  exit_code = -1;
  RunConfig probe;
  Extras probe_ex;
  auto app1 = build_app(probe, probe_ex);
  try {
    app1->parse(reversed(args));
  } catch (const CLI::ParseError& e) {
    exit_code = app1->exit(e, out, err);
    if (exit_code != 0) exit_code = kExitConfig;
    return {};
  }
  CLI::App* sub = app1->get_subcommands().front();
  std::vector<std::string> spliced;
  if (!probe_ex.config.empty()) {
    std::ifstream in(probe_ex.config);
    if (!in) throw ConfigError("cannot read config file " + probe_ex.config);
    json file;
    try {
      file = json::parse(in);
    } catch (const json::exception& e) {
      throw ConfigError("config file " + probe_ex.config + ": " + e.what());
    }
    if (!file.is_object()) throw ConfigError("config file must hold a JSON object");
    for (const auto& [key, value] : file.items()) {
      std::string name = key;
      std::replace(name.begin(), name.end(), '_', '-');
      const std::string flag = "--" + name;
      if (name == "config" || name == "command") continue;
      const CLI::Option* opt = sub->get_option_no_throw(flag);
      if (!opt) throw ConfigError("unknown config key '" + key + "'");
      if (opt->count() > 0) continue;
      auto toks = config_tokens(value, flag);
      spliced.insert(spliced.end(), toks.begin(), toks.end());
    }
  }

  std::vector<std::string> full;
  bool inserted = false;
  for (const auto& a : args) {
    full.push_back(a);
    if (!inserted && a == sub->get_name()) {
      full.insert(full.end(), spliced.begin(), spliced.end());
      inserted = true;
    }
  }

  RunConfig cfg;
  Extras ex;
  auto app2 = build_app(cfg, ex);
  try {
    app2->parse(reversed(full));
  } catch (const CLI::ParseError& e) {
    exit_code = app2->exit(e, out, err);
    if (exit_code != 0) exit_code = kExitConfig;
    return {};
  }
  CLI::App* sub2 = app2->get_subcommands().front();
  cfg.command = sub2->get_name();
  cfg.coloring = parse_coloring_strategy(ex.coloring);
  if (sub2->get_option("--r")->count() > 0) cfg.r = ex.r;
  if (cfg.seeds.empty() && cfg.instances.empty()) {
    for (std::size_t i = 0; i < ex.seed_count; ++i) cfg.seeds.push_back(ex.seed_start + i);
  }
  if (!cfg.instances.empty()) cfg.seeds.clear();
  return cfg;
}

// ---------------------------------------------------------------- outputs

class Output {
 public:
  explicit Output(fs::path root) : root_(std::move(root)) {}

  const fs::path& root() const { return root_; }

  /// Writes via a temporary sibling and rename so readers never see a
  /// partial artifact.
  void write(const std::string& rel, const std::string& content) {
    const fs::path path = root_ / rel;
    fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) throw std::runtime_error("cannot write " + tmp.string());
      f << content;
      if (!f) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
    std::lock_guard<std::mutex> lock(mu_);
    artifacts_.insert(rel);
  }

  void write_manifest(const RunConfig& cfg) {
    json m;
    m["command"] = cfg.command;
    m["config"] = json::parse(cfg.canonical_json());
    m["config_hash"] = cfg.hash();
    m["seeds"] = cfg.seeds;
    m["artifacts"] = std::vector<std::string>(artifacts_.begin(), artifacts_.end());
    write("manifest.json", m.dump(1) + "\n");
  }

 private:
  fs::path root_;
  std::mutex mu_;
  std::set<std::string> artifacts_;
};

std::string default_out_dir() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
  return std::string("runs/") + buf;
}

// ------------------------------------------------------------------ jobs

/// One sparsity grid value, or a loaded instance file.
struct Point {
  int N = 0;
  std::optional<double> k;
  std::optional<double> p;
  std::string instance_file;

  Sparsity sparsity() const { return k ? Sparsity::degree(*k) : Sparsity::probability(*p); }
  std::string label() const {
    if (!instance_file.empty()) return fs::path(instance_file).stem().string();
    return "N" + std::to_string(N) + (k ? "_k" + fmt_g(*k) : "_p" + fmt_g(*p));
  }
};

struct Job {
  std::size_t point = 0;
  std::uint64_t seed = 0;
  std::string stem;
};

std::vector<Point> make_points(const RunConfig& cfg) {
  std::vector<Point> pts;
  for (const auto& f : cfg.instances) pts.push_back({0, std::nullopt, std::nullopt, f});
  for (int n : cfg.N) {
    for (double v : cfg.k) pts.push_back({n, v, std::nullopt, {}});
    for (double v : cfg.p) pts.push_back({n, std::nullopt, v, {}});
  }
  return pts;
}

std::vector<Job> make_jobs(const RunConfig& cfg, const std::vector<Point>& pts) {
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].instance_file.empty()) {
      jobs.push_back({i, 0, pts[i].label()});
      continue;
    }
    for (auto s : cfg.seeds) jobs.push_back({i, s, pts[i].label() + "_s" + std::to_string(s)});
  }
  return jobs;
}

SykInstance load_instance(const Point& pt, const Job& job, const RunConfig& cfg) {
  if (pt.instance_file.empty()) return sample_instance(pt.N, cfg.J, pt.sparsity(), job.seed);
  std::ifstream in(pt.instance_file, std::ios::binary);
  if (!in) throw ConfigError("cannot read instance file " + pt.instance_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return instance_from_json(ss.str());
}

/// Runs fn(i) for i < n on a worker pool; results land in caller-owned slots
/// indexed by i, so output order never depends on scheduling. The first
/// failure (by index) is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// -------------------------------------------------------------- commands

int cmd_generate(const RunConfig& cfg, Output& o, std::ostream& out) {
  const auto pts = make_points(cfg);
  const auto jobs = make_jobs(cfg, pts);
  std::vector<std::string> lines(jobs.size());
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
    const SykInstance inst = load_instance(pts[jobs[i].point], jobs[i], cfg);
    const std::string rel = "instances/" + jobs[i].stem + ".json";
    o.write(rel, instance_to_json(inst));
    lines[i] = rel + " terms=" + std::to_string(inst.terms.size()) + " p=" + num(inst.p);
  });
  for (const auto& l : lines) out << l << "\n";
  return kExitOk;
}

int cmd_compile(const RunConfig& cfg, Output& o, std::ostream& out) {
  const auto pts = make_points(cfg);
  const auto jobs = make_jobs(cfg, pts);
  const std::int64_t r = cfg.steps();
  std::vector<std::string> rows(jobs.size());
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
    const SykInstance inst = load_instance(pts[jobs[i].point], jobs[i], cfg);
    const auto compiled = compile_hamiltonian(inst, cfg.coloring);
    const Circuit c = compile_trotter(compiled, cfg.order, cfg.t, r);
    if (pts[jobs[i].point].instance_file.empty()) {
      o.write("instances/" + jobs[i].stem + ".json", instance_to_json(inst));
    }
    o.write("qasm/" + jobs[i].stem + ".qasm", emit_qasm(c));
    const ResourceReport rep = count_gates(c);
    rows[i] = jobs[i].stem + "," + std::to_string(inst.N) + "," + std::to_string(inst.seed) + "," +
              std::to_string(compiled.hamiltonian.size()) + "," +
              std::to_string(compiled.clusters.size()) + "," + std::to_string(cfg.order) + "," +
              std::to_string(r) + "," + std::to_string(c.size()) + "," +
              std::to_string(rep.cnot_count()) + "\n";
  });
  std::string csv = "instance,N,seed,terms,clusters,order,r,gates,cnot\n";
  for (const auto& row : rows) csv += row;
  o.write("reports/compile.csv", csv);
  out << csv;
  return kExitOk;
}

std::vector<ResourceSummary> collect_counts(const RunConfig& cfg, const std::vector<Point>& pts) {
  const auto jobs = make_jobs(cfg, pts);
  struct Sample {
    ResourceReport rep;
    std::size_t terms = 0, clusters = 0;
    double p = 1.0;
    int N = 0;
  };
  std::vector<Sample> samples(jobs.size());
  const RotationCostModel model{cfg.eps_rot};
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
    const SykInstance inst = load_instance(pts[jobs[i].point], jobs[i], cfg);
    const auto compiled = compile_hamiltonian(inst, cfg.coloring);
    samples[i] = {step_resources(compiled, cfg.order, model), compiled.hamiltonian.size(),
                  compiled.clusters.size(), inst.p, inst.N};
  });
  std::vector<ResourceSummary> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out[i].k = pts[i].k;
    out[i].order = cfg.order;
  }
  std::vector<bool> started(pts.size(), false);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto& s = out[jobs[i].point];
    if (!started[jobs[i].point]) {
      s.N = samples[i].N;
      s.p = samples[i].p;
      started[jobs[i].point] = true;
    }
    s.add_sample(jobs[i].seed, samples[i].rep, samples[i].terms, samples[i].clusters);
  }
  return out;
}

std::string counts_csv(const std::vector<ResourceSummary>& rows) {
  std::string csv = resource_csv_header();
  for (const auto& r : rows) csv += resource_csv_row(r);
  return csv;
}

int cmd_count(const RunConfig& cfg, Output& o, std::ostream& out) {
  const auto rows = collect_counts(cfg, make_points(cfg));
  const std::string csv = counts_csv(rows);
  o.write("reports/counts.csv", csv);
  out << csv;
  return kExitOk;
}

json fit_entry(const std::vector<double>& x, const std::vector<const ResourceSummary*>& rows) {
  std::vector<double> cnot, cliff, t;
  for (const auto* r : rows) {
    cnot.push_back(r->cnot.mean());
    cliff.push_back(r->clifford_plus_t.mean());
    t.push_back(r->t.mean());
  }
  json e;
  e["x"] = x;
  e["cnot_mean"] = cnot;
  e["cnot_slope"] = loglog_slope(x, cnot);
  e["cliffT_slope"] = loglog_slope(x, cliff);
  e["t_slope"] = loglog_slope(x, t);
  return e;
}

int cmd_sweep(const RunConfig& cfg, Output& o, std::ostream& out) {
  if (!cfg.instances.empty()) throw ConfigError("sweep needs an N grid, not instance files");
  const auto pts = make_points(cfg);
  const auto rows = collect_counts(cfg, pts);
  const std::string csv = counts_csv(rows);
  o.write("reports/sweep.csv", csv);
  out << csv;

  json fits;
  fits["order"] = cfg.order;
  fits["vs_N"] = json::array();
  fits["vs_k"] = json::array();
  fits["vs_p"] = json::array();
  // Slope against N at every fixed sparsity value.
  const auto& svals = cfg.k.empty() ? cfg.p : cfg.k;
  const std::string skey = cfg.k.empty() ? "p" : "k";
  if (cfg.N.size() >= 2) {
    for (std::size_t s = 0; s < svals.size(); ++s) {
      std::vector<double> x;
      std::vector<const ResourceSummary*> sel;
      for (std::size_t n = 0; n < cfg.N.size(); ++n) {
        x.push_back(cfg.N[n]);
        sel.push_back(&rows[n * svals.size() + s]);
      }
      json e = fit_entry(x, sel);
      e[skey] = svals[s];
      fits["vs_N"].push_back(e);
    }
  }
  // Slope against the sparsity parameter at every fixed N.
  if (svals.size() >= 2) {
    for (std::size_t n = 0; n < cfg.N.size(); ++n) {
      std::vector<double> x;
      std::vector<const ResourceSummary*> sel;
      for (std::size_t s = 0; s < svals.size(); ++s) {
        x.push_back(skey == "k" ? svals[s] : rows[n * svals.size() + s].p);
        sel.push_back(&rows[n * svals.size() + s]);
      }
      json e = fit_entry(x, sel);
      e["N"] = cfg.N[n];
      if (skey == "k") e["sublinear"] = e["cnot_slope"].get<double>() < 1.0;
      fits["vs_" + skey].push_back(e);
    }
  }
  const std::string text = fits.dump(1) + "\n";
  o.write("reports/fits.json", text);
  for (const auto& e : fits["vs_N"]) {
    out << "fit vs N (" << skey << "=" << num(e[skey].get<double>())
        << "): cnot slope " << num(e["cnot_slope"].get<double>()) << "\n";
  }
  for (const auto& e : fits["vs_" + skey]) {
    out << "fit vs " << skey << " (N=" << e["N"].get<int>()
        << "): cnot slope " << num(e["cnot_slope"].get<double>()) << "\n";
  }
  return kExitOk;
}

struct BoundRow {
  std::string stem;
  int N = 0;
  std::uint64_t seed = 0;
  std::optional<ErrorBound> exact;
  std::optional<ErrorBound> pauli;
  std::optional<double> measured;
  bool skipped = false;
  bool pass = true;
};

BoundRow evaluate(const RunConfig& cfg, const Point& pt, const Job& job, bool measure) {
  const SykInstance inst = load_instance(pt, job, cfg);
  BoundRow row{job.stem, inst.N, inst.seed, {}, {}, {}, false, true};
  const PauliHamiltonian h = jordan_wigner(inst);
  const auto clusters = partition_commuting(h, cfg.coloring);
  const std::int64_t r = cfg.steps();
  const BoundOptions bopts{cfg.coupling_prefactors, cfg.J};
  const bool small = h.n <= kBoundQubitCap;
  if (cfg.bound != "exact") row.pauli = bound_error_pauli(h, clusters, cfg.order, cfg.t, r, bopts);
  if (cfg.bound != "pauli" && small) {
    row.exact = bound_error_exact(h, clusters, cfg.order, cfg.t, r, bopts);
  }
  if (measure) {
    if (!small) {
      row.skipped = true;
      return row;
    }
    TrotterPlan plan;
    plan.order = cfg.order;
    plan.t = cfg.t;
    plan.r = r;
    plan.epsilon = cfg.epsilon;
    plan.clusters = clusters;
    row.measured = measure_trotter_error(h, plan);
    // Relative slack for rounding in the dense products.
    auto leq = [](double a, double b) { return a <= b * (1.0 + 1e-9) + 1e-12; };
    if (row.exact) row.pass = row.pass && leq(*row.measured, row.exact->value);
    if (row.exact && row.pauli) row.pass = row.pass && leq(row.exact->value, row.pauli->value);
    if (!row.exact && row.pauli) row.pass = row.pass && leq(*row.measured, row.pauli->value);
  }
  return row;
}

json row_json(const BoundRow& b, const RunConfig& cfg) {
  json e;
  e["instance"] = b.stem;
  e["N"] = b.N;
  e["seed"] = b.seed;
  e["order"] = cfg.order;
  e["t"] = cfg.t;
  e["r"] = cfg.steps();
  e["exact"] = b.exact ? json::parse(bound_to_json(*b.exact)) : json(nullptr);
  e["pauli"] = b.pauli ? json::parse(bound_to_json(*b.pauli)) : json(nullptr);
  return e;
}

int cmd_bound(const RunConfig& cfg, Output& o, std::ostream& out) {
  const auto pts = make_points(cfg);
  const auto jobs = make_jobs(cfg, pts);
  std::vector<BoundRow> rows(jobs.size());
  parallel_for(jobs.size(), cfg.threads,
               [&](std::size_t i) { rows[i] = evaluate(cfg, pts[jobs[i].point], jobs[i], false); });
  json all = json::array();
  for (const auto& b : rows) {
    all.push_back(row_json(b, cfg));
    out << b.stem << " exact=" << (b.exact ? num(b.exact->value) : std::string("n/a"))
        << " pauli=" << (b.pauli ? num(b.pauli->value) : std::string("n/a")) << "\n";
  }
  o.write("reports/bounds.json", all.dump(1) + "\n");
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, Output& o, std::ostream& out) {
  const auto pts = make_points(cfg);
  const auto jobs = make_jobs(cfg, pts);
  std::vector<BoundRow> rows(jobs.size());
  parallel_for(jobs.size(), cfg.threads,
               [&](std::size_t i) { rows[i] = evaluate(cfg, pts[jobs[i].point], jobs[i], true); });
  json all = json::array();
  std::size_t failed = 0, skipped = 0;
  for (const auto& b : rows) {
    json e = row_json(b, cfg);
    e["measured"] = b.measured ? json(*b.measured) : json(nullptr);
    e["status"] = b.skipped ? "skipped" : (b.pass ? "pass" : "fail");
    all.push_back(e);
    if (b.skipped) {
      ++skipped;
      out << b.stem << " skipped (more than " << kBoundQubitCap << " qubits)\n";
      continue;
    }
    if (!b.pass) ++failed;
    out << b.stem << " measured=" << num(*b.measured)
        << " exact=" << (b.exact ? num(b.exact->value) : std::string("n/a"))
        << " pauli=" << (b.pauli ? num(b.pauli->value) : std::string("n/a")) << " "
        << (b.pass ? "PASS" : "FAIL") << "\n";
  }
  o.write("reports/verify.json", all.dump(1) + "\n");
  out << (rows.size() - skipped - failed) << " passed, " << failed << " failed, " << skipped
      << " skipped\n";
  return failed ? kExitCertification : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    int code = -1;
    RunConfig cfg = parse_config(args, out, err, code);
    if (code >= 0) return code;
    cfg.validate();
    if (cfg.out.empty()) cfg.out = default_out_dir();
    Output o{fs::path(cfg.out)};
    int rc = kExitOk;
    if (cfg.command == "generate") rc = cmd_generate(cfg, o, out);
    if (cfg.command == "compile") rc = cmd_compile(cfg, o, out);
    if (cfg.command == "count") rc = cmd_count(cfg, o, out);
    if (cfg.command == "sweep") rc = cmd_sweep(cfg, o, out);
    if (cfg.command == "bound") rc = cmd_bound(cfg, o, out);
    if (cfg.command == "verify") rc = cmd_verify(cfg, o, out);
    o.write_manifest(cfg);
    return rc;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::length_error& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace ssyk::cli
