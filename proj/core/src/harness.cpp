// Copyright 2026 The cmikit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cmikit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "json.hpp"

namespace cmikit {

namespace {

using nlohmann::json;

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key()))
      throw std::invalid_argument(where + ": unknown key '" + item.key() + "'");
  }
}

std::string fmt_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

uint64_t derive_seed(uint64_t master_seed, const std::string& task_key) {
  // FNV-1a over the key bytes with a master-keyed basis, splitmix finalizer.
  uint64_t h = 0xcbf29ce484222325ULL ^ splitmix64(master_seed);
  for (unsigned char c : task_key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h);
}

std::string sweep_task_key(const std::string& experiment, size_t depth, size_t k,
                           size_t replicate) {
  std::ostringstream os;
  os << experiment << "|t=" << depth << "|k=" << k << "|r=" << replicate;
  return os.str();
}

namespace {

json sweep_to_json(const SweepConfig& s) {
  return json{{"n_a", s.n_a},     {"n_b", s.n_b},   {"n_c", s.n_c},
              {"depths", s.depths}, {"ks", s.ks},
              {"channel", channel_name(s.channel)}, {"seeds", s.seeds}};
}

SweepConfig sweep_from_json(const json& j) {
  reject_unknown(j, {"n_a", "n_b", "n_c", "depths", "ks", "channel", "seeds"}, "sweep");
  SweepConfig s;
  s.n_a = j.at("n_a").get<size_t>();
  s.n_b = j.at("n_b").get<size_t>();
  s.n_c = j.at("n_c").get<size_t>();
  s.depths = j.at("depths").get<std::vector<size_t>>();
  s.ks = j.at("ks").get<std::vector<size_t>>();
  s.channel = channel_from_name(j.at("channel").get<std::string>());
  if (j.contains("seeds")) s.seeds = j.at("seeds").get<size_t>();
  return s;
}

}  // namespace

std::string config_to_json(const ExperimentConfig& cfg) {
  json j{{"experiment", cfg.experiment},
         {"master_seed", cfg.master_seed},
         {"workers", cfg.workers},
         {"output", cfg.output},
         {"sweep", sweep_to_json(cfg.sweep)},
         {"scaling",
          {{"n_b", cfg.scaling.n_b},
           {"epsilon", cfg.scaling.epsilon},
           {"model", cfg.scaling.model == ScalingModel::kLog ? "log" : "power"}}},
         {"meanfield",
          {{"couplings", cfg.meanfield.couplings},
           {"h_b", cfg.meanfield.h_b},
           {"h_ac", cfg.meanfield.h_ac}}}};
  return j.dump(2);
}

ExperimentConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  reject_unknown(j, {"experiment", "master_seed", "workers", "output", "sweep",
                     "scaling", "meanfield"},
                 "config");
  ExperimentConfig cfg;
  cfg.experiment = j.at("experiment").get<std::string>();
  if (j.contains("master_seed")) cfg.master_seed = j.at("master_seed").get<uint64_t>();
  if (j.contains("workers")) cfg.workers = j.at("workers").get<size_t>();
  if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
  if (j.contains("sweep")) {
    cfg.sweep = sweep_from_json(j.at("sweep"));
    cfg.sweep.master_seed = cfg.master_seed;
  }
  if (j.contains("scaling")) {
    const json& s = j.at("scaling");
    reject_unknown(s, {"n_b", "epsilon", "model"}, "scaling");
    if (s.contains("n_b")) cfg.scaling.n_b = s.at("n_b").get<std::vector<size_t>>();
    if (s.contains("epsilon")) cfg.scaling.epsilon = s.at("epsilon").get<double>();
    if (s.contains("model")) {
      const std::string m = s.at("model").get<std::string>();
      if (m == "log") cfg.scaling.model = ScalingModel::kLog;
      else if (m == "power") cfg.scaling.model = ScalingModel::kPower;
      else throw std::invalid_argument("scaling: unknown model '" + m + "'");
    }
  }
  if (j.contains("meanfield")) {
    const json& m = j.at("meanfield");
    reject_unknown(m, {"couplings", "h_b", "h_ac"}, "meanfield");
    if (m.contains("couplings"))
      cfg.meanfield.couplings = m.at("couplings").get<std::vector<double>>();
    if (m.contains("h_b")) cfg.meanfield.h_b = m.at("h_b").get<std::vector<double>>();
    if (m.contains("h_ac")) cfg.meanfield.h_ac = m.at("h_ac").get<double>();
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return config_from_json(os.str());
}

namespace {

void append_param(std::ostringstream& os, const std::string& k, double v) {
  os << "|" << k << "=";
  if (v == std::floor(v) && std::abs(v) < 1e15)
    os << static_cast<long long>(v);
  else
    os << fmt_double(v);
}

}  // namespace

std::string ExperimentRecord::key() const {
  std::ostringstream os;
  os << experiment;
  // Canonical order t, k, r first so keys line up with sweep_task_key;
  // any extra parameters follow alphabetically.
  for (const char* name : {"t", "k", "r"}) {
    const auto it = params.find(name);
    if (it != params.end()) append_param(os, name, it->second);
  }
  for (const auto& [k, v] : params) {
    if (k == "t" || k == "k" || k == "r") continue;
    append_param(os, k, v);
  }
  return os.str();
}

namespace {

json report_to_json(const EntropyReport& r) {
  return json{{"s_ab", r.s_ab}, {"s_bc", r.s_bc}, {"s_b", r.s_b},
              {"s_abc", r.s_abc}, {"s_a", r.s_a}, {"s_c", r.s_c},
              {"s_ac", r.s_ac}, {"s_e", r.s_e}, {"cmi", r.cmi},
              {"backend", r.backend}};
}

EntropyReport report_from_json(const json& j) {
  reject_unknown(j, {"s_ab", "s_bc", "s_b", "s_abc", "s_a", "s_c", "s_ac", "s_e",
                     "cmi", "backend"},
                 "entropy report");
  EntropyReport r;
  r.s_ab = j.at("s_ab").get<double>();
  r.s_bc = j.at("s_bc").get<double>();
  r.s_b = j.at("s_b").get<double>();
  r.s_abc = j.at("s_abc").get<double>();
  r.s_a = j.at("s_a").get<double>();
  r.s_c = j.at("s_c").get<double>();
  r.s_ac = j.at("s_ac").get<double>();
  r.s_e = j.at("s_e").get<double>();
  r.cmi = j.at("cmi").get<double>();
  r.backend = j.at("backend").get<std::string>();
  return r;
}

void validate_record(const ExperimentRecord& r) {
  const auto identity = [](const EntropyReport& e) {
    return std::abs(e.cmi - (e.s_ab + e.s_bc - e.s_b - e.s_abc)) <= 1e-6;
  };
  if (!identity(r.before) || !identity(r.after))
    throw std::invalid_argument("CMI identity violated");
  if (std::abs(r.delta_i - (r.after.cmi - r.before.cmi)) > 1e-6)
    throw std::invalid_argument("delta_i inconsistent with reports");
  if (std::abs(r.bound_margin - (r.bound - r.delta_i)) > 1e-6)
    throw std::invalid_argument("bound margin inconsistent");
  if (r.bound_margin < -1e-9) throw std::invalid_argument("bound violated");
}

}  // namespace

std::string record_to_json(const ExperimentRecord& rec) {
  json j{{"experiment", rec.experiment}, {"params", rec.params}, {"seed", rec.seed},
         {"before", report_to_json(rec.before)}, {"after", report_to_json(rec.after)},
         {"delta_i", rec.delta_i}, {"bound", rec.bound},
         {"bound_margin", rec.bound_margin},
         {"wall_time_s", rec.wall_time_s}, {"version", rec.version}};
  return j.dump();
}

ExperimentRecord record_from_json(const std::string& line) {
  json j = json::parse(line);
  reject_unknown(j, {"experiment", "params", "seed", "before", "after", "delta_i",
                     "bound", "bound_margin", "wall_time_s", "version"},
                 "record");
  ExperimentRecord r;
  r.experiment = j.at("experiment").get<std::string>();
  r.params = j.at("params").get<std::map<std::string, double>>();
  r.seed = j.at("seed").get<uint64_t>();
  r.before = report_from_json(j.at("before"));
  r.after = report_from_json(j.at("after"));
  r.delta_i = j.at("delta_i").get<double>();
  r.bound = j.at("bound").get<double>();
  r.bound_margin = j.at("bound_margin").get<double>();
  r.wall_time_s = j.at("wall_time_s").get<double>();
  r.version = j.at("version").get<std::string>();
  validate_record(r);
  return r;
}

JsonlReadReport read_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open records: " + path);
  JsonlReadReport out;
  std::string line;
  size_t idx = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) {
      try {
        out.records.push_back(record_from_json(line));
      } catch (const std::exception&) {
        out.corrupt_rows.push_back(idx);
      }
    }
    ++idx;
  }
  return out;
}

void write_records(const std::string& path, std::vector<ExperimentRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const ExperimentRecord& a, const ExperimentRecord& b) {
              return a.key() < b.key();
            });
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write records: " + path);
  for (ExperimentRecord& r : records) {
    // Wall time is normalized on write so published JSONL regenerates
    // byte-identically from the same config and master seed.
    r.wall_time_s = 0.0;
    out << record_to_json(r) << "\n";
  }
}

void write_sweep_csv(const std::string& path, const SweepGrid& grid) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write csv: " + path);
  out << "channel,depth,k,n_samples,delta_i_mean,delta_i_stderr\n";
  for (const SweepCell& c : grid.cells) {
    out << channel_name(grid.config.channel) << "," << c.depth << "," << c.k << ","
        << c.n_samples << "," << fmt_double(c.delta_i_mean) << ","
        << fmt_double(c.delta_i_stderr) << "\n";
  }
}

void write_scaling_csv(const std::string& path, const std::vector<double>& n_b,
                       const std::vector<double>& t_c, const std::string& estimator) {
  if (n_b.size() != t_c.size()) throw std::invalid_argument("size mismatch");
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write csv: " + path);
  out << "n_b,t_c,estimator\n";
  for (size_t i = 0; i < n_b.size(); ++i)
    out << fmt_double(n_b[i]) << "," << fmt_double(t_c[i]) << "," << estimator << "\n";
}

void write_landscape_csv(const std::string& path, const MeanFieldLandscape& l) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write csv: " + path);
  out << "channel,J,h_B,n_samples,delta_i_mean,delta_i_stderr\n";
  for (size_t ji = 0; ji < l.couplings.size(); ++ji)
    for (size_t hi = 0; hi < l.h_b.size(); ++hi)
      out << "meanfield," << fmt_double(l.couplings[ji]) << "," << fmt_double(l.h_b[hi])
          << ",1," << fmt_double(l.at(ji, hi)) << ",0\n";
}

void read_scaling_csv(const std::string& path, std::vector<double>& n_b,
                      std::vector<double>& t_c) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open csv: " + path);
  n_b.clear();
  t_c.clear();
  std::string line;
  bool first = true;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.rfind("n_b", 0) == 0 || line.rfind("N", 0) == 0) continue;
    }
    std::istringstream is(line);
    std::string a, b;
    if (!std::getline(is, a, ',') || !std::getline(is, b, ','))
      throw std::invalid_argument("csv line " + std::to_string(lineno) + ": need n_b,t_c");
    try {
      n_b.push_back(std::stod(a));
      t_c.push_back(std::stod(b));
    } catch (const std::exception&) {
      throw std::invalid_argument("csv line " + std::to_string(lineno) + ": bad number");
    }
  }
}

size_t resolve_workers(size_t requested) {
  if (const char* env = std::getenv("CMIKIT_WORKERS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<size_t>(v);
  }
  if (requested >= 1) return requested;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc >= 1 ? hc : 1;
}

SweepRunResult run_sweep_experiment(const ExperimentConfig& cfg,
                                    const std::vector<ExperimentRecord>& existing) {
  cfg.sweep.validate();
  const SweepConfig& sw = cfg.sweep;

  std::unordered_set<std::string> have;
  for (const ExperimentRecord& r : existing) have.insert(r.key());

  struct Task {
    size_t depth, k, replicate;
    std::string key;
  };
  std::vector<Task> tasks;
  std::vector<const ExperimentRecord*> reused;
  std::unordered_set<uint64_t> seeds_seen;
  for (size_t r = 0; r < sw.seeds; ++r)
    for (size_t depth : sw.depths)
      for (size_t k : sw.ks) {
        const std::string key = sweep_task_key(cfg.experiment, depth, k, r);
        if (have.count(key)) continue;
        if (!seeds_seen.insert(derive_seed(cfg.master_seed, key)).second)
          throw std::runtime_error("seed collision for key: " + key);
        tasks.push_back({depth, k, r, key});
      }
  for (const ExperimentRecord& r : existing) reused.push_back(&r);

  std::vector<ExperimentRecord> fresh(tasks.size());
  const size_t workers = std::min(resolve_workers(cfg.workers),
                                  std::max<size_t>(tasks.size(), 1));
  std::atomic<size_t> next{0};
  const auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      const auto t0 = std::chrono::steady_clock::now();
      const CellReports cr = sweep_cell_reports(sw, t.depth, t.k, t.replicate);
      ExperimentRecord rec;
      rec.experiment = cfg.experiment;
      rec.params = {{"t", static_cast<double>(t.depth)},
                    {"k", static_cast<double>(t.k)},
                    {"r", static_cast<double>(t.replicate)}};
      rec.seed = derive_seed(cfg.master_seed, t.key);
      rec.before = cr.before;
      rec.after = cr.after;
      rec.delta_i = cr.delta_i;
      rec.bound = cr.bound;
      rec.bound_margin = cr.bound - cr.delta_i;
      rec.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      fresh[i] = std::move(rec);
    }
  };
  std::vector<std::thread> pool;
  for (size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  SweepRunResult out;
  out.reused = reused.size();
  out.records = std::move(fresh);
  for (const ExperimentRecord* r : reused) out.records.push_back(*r);
  std::sort(out.records.begin(), out.records.end(),
            [](const ExperimentRecord& a, const ExperimentRecord& b) {
              return a.key() < b.key();
            });

  // Single-threaded aggregation into the grid, keyed so ordering of record
  // production cannot matter.
  out.grid.config = sw;
  out.grid.cells.resize(sw.depths.size() * sw.ks.size());
  for (size_t di = 0; di < sw.depths.size(); ++di)
    for (size_t ki = 0; ki < sw.ks.size(); ++ki) {
      SweepCell& c = out.grid.cells[di * sw.ks.size() + ki];
      c.depth = sw.depths[di];
      c.k = sw.ks[ki];
      double s1 = 0, s2 = 0;
      size_t n = 0;
      for (const ExperimentRecord& r : out.records) {
        const auto t_it = r.params.find("t");
        const auto k_it = r.params.find("k");
        if (t_it == r.params.end() || k_it == r.params.end()) continue;
        if (t_it->second != static_cast<double>(c.depth) ||
            k_it->second != static_cast<double>(c.k))
          continue;
        s1 += r.delta_i;
        s2 += r.delta_i * r.delta_i;
        ++n;
      }
      c.n_samples = n;
      if (n > 0) c.delta_i_mean = s1 / static_cast<double>(n);
      if (n > 1) {
        const double nn = static_cast<double>(n);
        const double var = std::max(0.0, (s2 - nn * c.delta_i_mean * c.delta_i_mean) / (nn - 1.0));
        c.delta_i_stderr = std::sqrt(var / nn);
      }
    }
  return out;
}

}  // namespace cmikit
