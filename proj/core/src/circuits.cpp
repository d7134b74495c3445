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

#include "cmikit/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cmikit {

std::string channel_name(Channel c) {
  return c == Channel::kMeasurement ? "measurement" : "erasure";
}

Channel channel_from_name(const std::string& name) {
  if (name == "measurement") return Channel::kMeasurement;
  if (name == "erasure") return Channel::kErasure;
  throw std::invalid_argument("unknown channel: " + name);
}

std::vector<BrickworkGate> build_brickwork(size_t n, size_t t, Rng& rng) {
  if (n < 2) throw std::invalid_argument("chain needs at least 2 qubits");
  std::vector<BrickworkGate> gates;
  for (size_t layer = 0; layer < t; ++layer) {
    for (size_t i = layer % 2; i + 1 < n; i += 2) {
      gates.push_back({static_cast<int>(i), static_cast<int>(i + 1), CliffordUnitary::random(2, rng)});
    }
  }
  return gates;
}

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void apply_layer(CliffordTableau& t, size_t layer, Rng& rng) {
  const size_t n = t.num_qubits();
  for (size_t i = layer % 2; i + 1 < n; i += 2) {
    CliffordUnitary::random(2, rng).apply_to(t, {static_cast<int>(i), static_cast<int>(i + 1)});
  }
}

// Uniform k-subset of B (partial Fisher-Yates); chosen elements come first.
std::vector<int> choose_subset(const std::vector<int>& src, size_t k, Rng& rng) {
  std::vector<int> b = src;
  for (size_t i = 0; i < k; ++i) {
    const size_t j = i + rng.below(b.size() - i);
    std::swap(b[i], b[j]);
  }
  return b;
}

// Channel application for one cell; returns delta_i relative to before_cmi.
double apply_cell(const CliffordTableau& state, const Partition& part, double before_cmi,
                  Channel channel, size_t k, Rng& cell_rng) {
  const std::vector<int> b = choose_subset(part.B, k, cell_rng);
  if (channel == Channel::kMeasurement) {
    CliffordTableau t = state;
    for (size_t i = 0; i < k; ++i) {
      PauliString z = PauliString::identity(t.num_qubits());
      z.set_z(static_cast<size_t>(b[i]), true);
      t.measure_pauli(z, cell_rng);
    }
    // All measurement branches of a stabilizer state differ only by signs, so
    // one trajectory realizes the Born-averaged conditional CMI exactly.
    TableauEntropy src(t);
    return cmi(src, part) - before_cmi;
  }
  Partition after = part;
  for (size_t i = 0; i < k; ++i) after.erase_from_b(b[i]);
  TableauEntropy src(state);
  return cmi(src, after) - before_cmi;
}

}  // namespace

uint64_t combine_seed(uint64_t master, std::initializer_list<uint64_t> parts) {
  uint64_t h = splitmix64(master ^ 0x463b55d05b6e7b7fULL);
  for (uint64_t p : parts) h = splitmix64(h ^ p);
  return h;
}

void SweepConfig::validate() const {
  if (n_a < 1 || n_b < 1 || n_c < 1) throw std::invalid_argument("block sizes must be >= 1");
  if (depths.empty()) throw std::invalid_argument("depth grid is empty");
  if (ks.empty()) throw std::invalid_argument("k grid is empty");
  for (size_t k : ks) {
    if (k > n_b) throw std::invalid_argument("k exceeds n_b");
  }
  if (seeds < 1) throw std::invalid_argument("seeds must be >= 1");
}

const SweepCell& SweepGrid::at(size_t depth_idx, size_t k_idx) const {
  return cells.at(depth_idx * config.ks.size() + k_idx);
}

namespace {

constexpr uint64_t kLayerStream = 0x6c61796572ULL;  // gate stream tag
constexpr uint64_t kCellStream = 0x63656c6cULL;     // channel stream tag

}  // namespace

SweepGrid run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const size_t n = cfg.n_total();
  const Partition part = Partition::contiguous(cfg.n_a, cfg.n_b, cfg.n_c);

  std::vector<size_t> order(cfg.depths.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return cfg.depths[a] < cfg.depths[b]; });

  std::vector<double> s1(cfg.depths.size() * cfg.ks.size(), 0.0), s2 = s1;
  for (size_t r = 0; r < cfg.seeds; ++r) {
    CliffordTableau state(n);
    size_t layer = 0;
    for (size_t oi : order) {
      const size_t depth = cfg.depths[oi];
      for (; layer < depth; ++layer) {
        Rng layer_rng(combine_seed(cfg.master_seed, {kLayerStream, r, layer}));
        apply_layer(state, layer, layer_rng);
      }
      TableauEntropy src(state);
      const double before = cmi(src, part);
      for (size_t ki = 0; ki < cfg.ks.size(); ++ki) {
        Rng cell_rng(combine_seed(cfg.master_seed,
                                  {kCellStream, r, depth, cfg.ks[ki],
                                   static_cast<uint64_t>(cfg.channel)}));
        const double d = apply_cell(state, part, before, cfg.channel, cfg.ks[ki], cell_rng);
        s1[oi * cfg.ks.size() + ki] += d;
        s2[oi * cfg.ks.size() + ki] += d * d;
      }
    }
  }

  SweepGrid grid;
  grid.config = cfg;
  grid.cells.resize(s1.size());
  const double ns = static_cast<double>(cfg.seeds);
  for (size_t di = 0; di < cfg.depths.size(); ++di) {
    for (size_t ki = 0; ki < cfg.ks.size(); ++ki) {
      SweepCell& c = grid.cells[di * cfg.ks.size() + ki];
      c.depth = cfg.depths[di];
      c.k = cfg.ks[ki];
      c.n_samples = cfg.seeds;
      const double mean = s1[di * cfg.ks.size() + ki] / ns;
      c.delta_i_mean = mean;
      if (cfg.seeds > 1) {
        const double var =
            std::max(0.0, (s2[di * cfg.ks.size() + ki] - ns * mean * mean) / (ns - 1.0));
        c.delta_i_stderr = std::sqrt(var / ns);
      }
    }
  }
  return grid;
}

double sweep_cell_delta_i(const SweepConfig& cfg, size_t depth, size_t k, size_t replicate) {
  cfg.validate();
  CliffordTableau state(cfg.n_total());
  for (size_t layer = 0; layer < depth; ++layer) {
    Rng layer_rng(combine_seed(cfg.master_seed, {kLayerStream, replicate, layer}));
    apply_layer(state, layer, layer_rng);
  }
  const Partition part = Partition::contiguous(cfg.n_a, cfg.n_b, cfg.n_c);
  TableauEntropy src(state);
  const double before = cmi(src, part);
  Rng cell_rng(combine_seed(cfg.master_seed,
                            {kCellStream, replicate, depth, k,
                             static_cast<uint64_t>(cfg.channel)}));
  return apply_cell(state, part, before, cfg.channel, k, cell_rng);
}

CellReports sweep_cell_reports(const SweepConfig& cfg, size_t depth, size_t k, size_t replicate) {
  cfg.validate();
  CliffordTableau state(cfg.n_total());
  for (size_t layer = 0; layer < depth; ++layer) {
    Rng layer_rng(combine_seed(cfg.master_seed, {kLayerStream, replicate, layer}));
    apply_layer(state, layer, layer_rng);
  }
  const Partition part = Partition::contiguous(cfg.n_a, cfg.n_b, cfg.n_c);
  CellReports out;
  {
    TableauEntropy src(state);
    out.before = entropy_report(src, part);
  }
  Rng cell_rng(combine_seed(cfg.master_seed,
                            {kCellStream, replicate, depth, k,
                             static_cast<uint64_t>(cfg.channel)}));
  const std::vector<int> b = choose_subset(part.B, k, cell_rng);
  if (cfg.channel == Channel::kMeasurement) {
    CliffordTableau t = state;
    size_t random_bits = 0;
    for (size_t i = 0; i < k; ++i) {
      PauliString z = PauliString::identity(t.num_qubits());
      z.set_z(static_cast<size_t>(b[i]), true);
      if (t.measure_pauli(z, cell_rng).was_random) ++random_bits;
    }
    TableauEntropy src(t);
    out.after = entropy_report(src, part);
    out.bound = static_cast<double>(random_bits);
  } else {
    Partition after = part;
    for (size_t i = 0; i < k; ++i) after.erase_from_b(b[i]);
    TableauEntropy src(state);
    out.after = entropy_report(src, after);
    out.bound = 2.0 * out.after.s_abc;
  }
  out.delta_i = out.after.cmi - out.before.cmi;
  return out;
}

namespace {

double mincut_entropy(size_t subset, size_t total) {
  return static_cast<double>(std::min(subset, total - subset));
}

// CMI of the contiguous partition from min-cut entropies, with n_e erased
// qubits excluded from B but still counted in the purifying total.
double mincut_cmi(size_t n_a, size_t n_b_kept, size_t n_c, size_t n_total) {
  const double s_ab = mincut_entropy(n_a + n_b_kept, n_total);
  const double s_bc = mincut_entropy(n_b_kept + n_c, n_total);
  const double s_b = mincut_entropy(n_b_kept, n_total);
  const double s_abc = mincut_entropy(n_a + n_b_kept + n_c, n_total);
  return s_ab + s_bc - s_b - s_abc;
}

}  // namespace

double page_prediction(size_t n_a, size_t n_b, size_t n_c, size_t k, Channel channel) {
  if (k > n_b) throw std::invalid_argument("k exceeds n_b");
  if (channel == Channel::kMeasurement) {
    const auto excess = [&](size_t kept) {
      return std::max(0.0, static_cast<double>(n_a + n_c) - static_cast<double>(kept));
    };
    return excess(n_b - k) - excess(n_b);
  }
  const size_t total = n_a + n_b + n_c;
  return mincut_cmi(n_a, n_b - k, n_c, total) - mincut_cmi(n_a, n_b, n_c, total);
}

std::vector<CrossSection> cross_sections(const SweepConfig& cfg,
                                         const std::vector<size_t>& depths) {
  SweepConfig sub = cfg;
  sub.depths = depths;
  const SweepGrid grid = run_sweep(sub);

  std::vector<CrossSection> out;
  for (size_t di = 0; di < depths.size(); ++di) {
    CrossSection cs;
    cs.depth = depths[di];
    for (size_t ki = 0; ki < sub.ks.size(); ++ki) cs.curve.push_back(grid.at(di, ki));

    // Sub-threshold tail: cells with 0 < mean < 0.5 before the first crossing
    // of 0.5 bits. Slope taken against the number of surviving B qubits, where
    // the tail decays exponentially.
    std::vector<double> xs, ys;
    for (const SweepCell& c : cs.curve) {
      if (c.delta_i_mean >= 0.5) break;
      if (c.delta_i_mean > 1e-12) {
        xs.push_back(static_cast<double>(sub.n_b - c.k));
        ys.push_back(std::log(c.delta_i_mean));
      }
    }
    if (xs.size() >= 2) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
      }
      const double m = static_cast<double>(xs.size());
      const double denom = m * sxx - sx * sx;
      if (std::abs(denom) > 1e-12) cs.log_slope = (m * sxy - sx * sy) / denom;
    }
    out.push_back(std::move(cs));
  }
  return out;
}

CriticalDepth extract_critical_depth(const std::vector<double>& depths,
                                     const std::vector<double>& delta_i, double epsilon) {
  if (depths.size() != delta_i.size()) throw std::invalid_argument("size mismatch");
  CriticalDepth out;
  for (size_t i = 0; i < depths.size(); ++i) {
    if (delta_i[i] < epsilon) continue;
    out.found = true;
    if (i == 0) {
      out.t_interpolated = depths[0];
      out.t_extrapolated = depths[0];
      return out;
    }
    const double t0 = depths[i - 1], t1 = depths[i];
    const double d0 = delta_i[i - 1], d1 = delta_i[i];
    out.t_interpolated = t0 + (epsilon - d0) * (t1 - t0) / (d1 - d0);
    out.t_extrapolated = t0 + (0.0 - d0) * (t1 - t0) / (d1 - d0);
    return out;
  }
  return out;
}

ScalingFit fit_scaling(const std::vector<double>& n, const std::vector<double>& t_c,
                       ScalingModel model) {
  if (n.size() != t_c.size()) throw std::invalid_argument("size mismatch");
  if (n.size() < 4) throw std::invalid_argument("need at least 4 points");
  std::vector<double> xs(n.size()), ys(n.size());
  for (size_t i = 0; i < n.size(); ++i) {
    if (n[i] <= 0) throw std::invalid_argument("abscissae must be positive");
    xs[i] = std::log(n[i]);
    if (model == ScalingModel::kPower) {
      if (t_c[i] <= 0) throw std::invalid_argument("power model needs positive t_c");
      ys[i] = std::log(t_c[i]);
    } else {
      ys[i] = t_c[i];
    }
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-12) throw std::invalid_argument("degenerate abscissae");
  const double slope = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / m;

  double ss_res = 0, ss_tot = 0;
  const double ybar = sy / m;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double fit = intercept + slope * xs[i];
    ss_res += (ys[i] - fit) * (ys[i] - fit);
    ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
  }

  ScalingFit out;
  out.model = model;
  out.n = n;
  out.t_c = t_c;
  out.b = slope;
  out.a = model == ScalingModel::kPower ? std::exp(intercept) : intercept;
  out.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return out;
}

}  // namespace cmikit
