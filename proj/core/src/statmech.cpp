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

#include "cmikit/statmech.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cmikit {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double config_exponent(const MeanFieldParams& p, int sa, int sb, int sc) {
  return p.h_a * sa + p.h_b * sb + p.h_c * sc - p.j * sa * sb - p.j * sb * sc;
}

MeanFieldParams conditioned(double coupling, double h_ac, double h_b,
                            const FieldCondition& cond, bool flip_a, bool flip_c) {
  if (coupling < 0) throw std::invalid_argument("coupling must be nonnegative");
  MeanFieldParams p;
  p.h_a = h_ac * cond.sigma_a * (flip_a ? -1 : 1);
  p.h_c = h_ac * cond.sigma_c * (flip_c ? -1 : 1);
  p.h_b = h_b;
  p.j = -coupling;
  return p;
}

}  // namespace

double log_partition_function(const MeanFieldParams& p) {
  double exps[8];
  int idx = 0;
  double m = -std::numeric_limits<double>::infinity();
  for (int sa : {-1, 1})
    for (int sb : {-1, 1})
      for (int sc : {-1, 1}) {
        exps[idx] = config_exponent(p, sa, sb, sc);
        m = std::max(m, exps[idx]);
        ++idx;
      }
  double acc = 0;
  for (double e : exps) acc += std::exp(e - m);
  return m + std::log(acc);
}

double partition_function(const MeanFieldParams& p) {
  return std::exp(log_partition_function(p));
}

double free_energy(const MeanFieldParams& p) { return -log_partition_function(p); }

std::array<int, 3> dominant_config(const MeanFieldParams& p) {
  std::array<int, 3> best = {1, 1, 1};
  double best_e = -std::numeric_limits<double>::infinity();
  for (int sa : {-1, 1})
    for (int sb : {-1, 1})
      for (int sc : {-1, 1}) {
        const double e = config_exponent(p, sa, sb, sc);
        if (e > best_e) {
          best_e = e;
          best = {sa, sb, sc};
        }
      }
  return best;
}

double mf_entropy(MfRegion region, double coupling, double h_ac, double h_b,
                  const FieldCondition& cond) {
  const bool flip_a = region == MfRegion::kA || region == MfRegion::kAC;
  const bool flip_c = region == MfRegion::kC || region == MfRegion::kAC;
  const double f_ref = free_energy(conditioned(coupling, h_ac, h_b, cond, false, false));
  const double f_flip = free_energy(conditioned(coupling, h_ac, h_b, cond, flip_a, flip_c));
  return (f_flip - f_ref) / kLn2;
}

double mf_delta_i(double coupling, double h_ac, double h_b, const FieldCondition& cond) {
  return mf_entropy(MfRegion::kA, coupling, h_ac, h_b, cond) +
         mf_entropy(MfRegion::kC, coupling, h_ac, h_b, cond) -
         mf_entropy(MfRegion::kAC, coupling, h_ac, h_b, cond);
}

double MeanFieldLandscape::at(size_t coupling_idx, size_t h_b_idx) const {
  if (coupling_idx >= couplings.size() || h_b_idx >= h_b.size())
    throw std::out_of_range("landscape index");
  return delta_i[coupling_idx * h_b.size() + h_b_idx];
}

MeanFieldLandscape mf_landscape(const std::vector<double>& couplings,
                                const std::vector<double>& h_b, double h_ac) {
  if (couplings.empty() || h_b.empty()) throw std::invalid_argument("empty grid");
  MeanFieldLandscape l;
  l.couplings = couplings;
  l.h_b = h_b;
  l.h_ac = h_ac;
  l.delta_i.reserve(couplings.size() * h_b.size());
  for (double j : couplings)
    for (double h : h_b) l.delta_i.push_back(mf_delta_i(j, h_ac, h));
  return l;
}

double mf_crossover_coupling(const std::vector<double>& couplings, double h_ac,
                             double h_b) {
  if (couplings.size() < 3) throw std::invalid_argument("need >= 3 couplings");
  std::vector<double> f(couplings.size());
  for (size_t i = 0; i < couplings.size(); ++i)
    f[i] = free_energy(conditioned(couplings[i], h_ac, h_b, {}, true, false));
  double best = 0, best_j = couplings[1];
  for (size_t i = 1; i + 1 < couplings.size(); ++i) {
    const double dl = couplings[i] - couplings[i - 1];
    const double dr = couplings[i + 1] - couplings[i];
    const double d2 = ((f[i + 1] - f[i]) / dr - (f[i] - f[i - 1]) / dl) / (0.5 * (dl + dr));
    if (std::abs(d2) > best) {
      best = std::abs(d2);
      best_j = couplings[i];
    }
  }
  return best_j;
}

double mf_onset_coupling(const std::vector<double>& couplings, double h_ac,
                         double h_b, double fraction) {
  if (couplings.empty()) throw std::invalid_argument("empty grid");
  const double target = fraction * mf_delta_i(couplings.back(), h_ac, h_b);
  for (double j : couplings)
    if (mf_delta_i(j, h_ac, h_b) >= target && target > 0) return j;
  return couplings.back();
}

bool mf_bistable(double coupling, double h_ac, double h_b, double tol) {
  // Conditional ln-weights of the two S_B branches under the AC-flipped
  // condition (ordering pulled against the B field); near-degeneracy marks
  // the hysteretic regime.
  const MeanFieldParams p = conditioned(coupling, h_ac, h_b, {}, true, true);
  double branch[2];
  int bi = 0;
  for (int sb : {-1, 1}) {
    double m = -std::numeric_limits<double>::infinity();
    double exps[4];
    int idx = 0;
    for (int sa : {-1, 1})
      for (int sc : {-1, 1}) {
        exps[idx] = config_exponent(p, sa, sb, sc);
        m = std::max(m, exps[idx]);
        ++idx;
      }
    double acc = 0;
    for (double e : exps) acc += std::exp(e - m);
    branch[bi++] = m + std::log(acc);
  }
  return std::abs(branch[0] - branch[1]) <= tol;
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
  const size_t n = v.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    const double r = 0.5 * (i + j) + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("spearman_rho needs equal sizes >= 2");
  const std::vector<double> rx = average_ranks(x), ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace cmikit
