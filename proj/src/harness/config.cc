// Copyright 2026 The contamdp Authors
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

#include "contamdp/harness/config.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "contamdp/error.h"

namespace contamdp {
namespace {

using Json = nlohmann::json;

// Reads known keys from one JSON object and rejects everything else.
class Section {
 public:
  Section(const Json& json, std::string path)
      : json_(json), path_(std::move(path)) {
    if (!json_.is_object()) {
      throw Error(ErrorKind::kConfig, Where() + " must be an object");
    }
  }

  template <typename T>
  void Read(const std::string& key, T& out) {
    seen_.insert(key);
    const auto it = json_.find(key);
    if (it == json_.end()) return;
    try {
      out = it->template get<T>();
    } catch (const Json::exception&) {
      throw Error(ErrorKind::kConfig, Where(key) + " has the wrong type");
    }
  }

  void Read(const std::string& key, std::optional<double>& out) {
    double v = 0.0;
    if (Has(key)) {
      Read(key, v);
      out = v;
    } else {
      seen_.insert(key);
    }
  }

  bool Has(const std::string& key) const { return json_.contains(key); }

  std::optional<Section> Child(const std::string& key) {
    seen_.insert(key);
    const auto it = json_.find(key);
    if (it == json_.end()) return std::nullopt;
    return Section(*it, Where(key));
  }

  void Finish() const {
    for (const auto& item : json_.items()) {
      if (!seen_.count(item.key())) {
        throw Error(ErrorKind::kConfig, "unknown key " + Where(item.key()));
      }
    }
  }

 private:
  std::string Where(const std::string& key = "") const {
    std::string out = path_;
    if (!key.empty()) out += (out.empty() ? "" : ".") + key;
    return out.empty() ? "config" : out;
  }

  const Json& json_;
  std::string path_;
  std::set<std::string> seen_;
};

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
std::string List(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    if constexpr (std::is_same_v<T, std::string>) {
      out += v[i];
    } else if constexpr (std::is_same_v<T, bool>) {
      out += v[i] ? "true" : "false";
    } else {
      out += Num(static_cast<double>(v[i]));
    }
  }
  return out + "]";
}

void ReadMeanModel(Section& s, MeanModelConfig& m) {
  s.Read("theta_star", m.theta_star);
  s.Read("sigma", m.sigma);
  s.Read("lower", m.lower);
  s.Read("upper", m.upper);
  s.Read("nu", m.nu);
  s.Read("contamination_scale", m.contamination_scale);
  s.Read("prior_mean", m.prior_mean);
  s.Read("prior_sd", m.prior_sd);
  s.Finish();
  if (!(m.lower < m.upper) || !(m.sigma > 0.0) || !(m.nu > 0.0) ||
      !(m.contamination_scale > 0.0) || !(m.prior_sd > 0.0)) {
    throw Error(ErrorKind::kConfig, "invalid mean_model settings");
  }
  if (!(m.theta_star > m.lower && m.theta_star < m.upper)) {
    throw Error(ErrorKind::kConfig, "theta_star must lie inside the bounds");
  }
}

void ReadMeanBench(Section& s, MeanBenchConfig& b) {
  s.Read("datasets", b.datasets);
  s.Read("repeats", b.repeats);
  s.Read("methods", b.methods);
  s.Read("epsilon_source", b.epsilon_source);
  s.Read("bayes_burn_in", b.bayes_burn_in);
  s.Read("coinpress_center", b.coinpress_center);
  s.Read("coinpress_radius", b.coinpress_radius);
  s.Read("coinpress_beta", b.coinpress_beta);
  s.Read("coinpress_last_share", b.coinpress_last_share);
  s.Read("clipped_low", b.clipped_low);
  s.Read("clipped_high", b.clipped_high);
  s.Read("clipped_widen", b.clipped_widen);
  s.Finish();
}

void ReadRegression(Section& s, RegressionConfig& r) {
  s.Read("models", r.models);
  s.Read("dims", r.dims);
  s.Read("contaminated", r.contaminated);
  s.Read("theta_magnitude", r.theta_magnitude);
  s.Read("prior_sd", r.prior_sd);
  s.Read("noise_scale", r.noise_scale);
  s.Read("contamination_scale", r.contamination_scale);
  s.Read("nu", r.nu);
  s.Read("extrapolate", r.extrapolate);
  s.Finish();
}

void ReadFisher(Section& s, FisherConfig& f) {
  s.Read("p_grid", f.p_grid);
  s.Read("theta", f.theta);
  s.Read("sigma", f.sigma);
  s.Read("nu", f.nu);
  s.Read("contamination_scale", f.contamination_scale);
  s.Finish();
}

void ReadProp1(Section& s, Prop1Config& p) {
  s.Read("n", p.n);
  s.Read("trials", p.trials);
  s.Read("sets", p.sets);
  s.Read("theta_star", p.theta_star);
  s.Read("sigma", p.sigma);
  s.Read("prior_mean", p.prior_mean);
  s.Read("prior_sd", p.prior_sd);
  s.Read("nu", p.nu);
  s.Read("contamination_scale", p.contamination_scale);
  s.Read("p", p.p);
  s.Read("theta_grid", p.theta_grid);
  s.Read("x_grid", p.x_grid);
  s.Read("phi_min", p.phi_min);
  s.Read("phi_max", p.phi_max);
  s.Finish();
}

void Validate(const ExperimentConfig& c) {
  const bool needs_n = c.kind == ExperimentKind::kTable1 ||
                       c.kind == ExperimentKind::kMeanBench ||
                       c.kind == ExperimentKind::kRegressionDecay;
  if (needs_n && c.n_grid.empty()) {
    throw Error(ErrorKind::kConfig, "n_grid must be nonempty");
  }
  for (int n : c.n_grid) {
    if (n < 2) throw Error(ErrorKind::kConfig, "every n must be at least 2");
    const double p = c.RateFor(n);
    if (!(p > 0.0 && p < 1.0)) {
      throw Error(ErrorKind::kConfig, "p rule must give p in (0, 1)");
    }
  }
  if (!(c.p_exponent > 0.0)) {
    throw Error(ErrorKind::kConfig, "p_exponent must be positive");
  }
  if (!(c.delta_factor > 0.0)) {
    throw Error(ErrorKind::kConfig, "delta_factor must be positive");
  }
  if (c.workers < 0) throw Error(ErrorKind::kConfig, "workers must be >= 0");
  if (c.particles < 100) {
    throw Error(ErrorKind::kConfig, "particles must be at least 100");
  }
  if (c.repeats < 10 && (c.kind == ExperimentKind::kTable1 ||
                         c.kind == ExperimentKind::kRegressionDecay)) {
    throw Error(ErrorKind::kConfig, "repeats must be at least 10");
  }
  if (!(c.quantile > 0.0 && c.quantile < 100.0)) {
    throw Error(ErrorKind::kConfig, "quantile must lie in (0, 100)");
  }
  if (c.search.grid_points < 3 || c.search.random_starts < 0 ||
      !(c.search.widen > 0.0) || !(c.search.escalation_log_ratio > 0.0)) {
    throw Error(ErrorKind::kConfig, "invalid search settings");
  }
  if (c.kind == ExperimentKind::kMeanBench) {
    const auto& b = c.mean_bench;
    if (b.datasets < 1 || b.repeats < 2 || b.methods.empty() ||
        b.bayes_burn_in < 0) {
      throw Error(ErrorKind::kConfig, "invalid mean_bench settings");
    }
    for (const auto& m : b.methods) {
      if (m != "bayes" && m != "coinpress3" && m != "coinpress10" &&
          m != "clipped" && m != "gaussian") {
        throw Error(ErrorKind::kConfig, "unknown mean-bench method " + m);
      }
    }
  }
  if (c.kind == ExperimentKind::kRegressionDecay) {
    const auto& r = c.regression;
    if (r.models.empty() || r.dims.empty() || r.contaminated.empty()) {
      throw Error(ErrorKind::kConfig, "regression grids must be nonempty");
    }
    for (int d : r.dims) {
      if (d < 1 || d > 12) {
        throw Error(ErrorKind::kConfig, "regression dims must lie in [1, 12]");
      }
    }
    if (c.n_grid.size() < 3) {
      throw Error(ErrorKind::kConfig, "decay fit needs at least 3 n values");
    }
  }
  if (c.kind == ExperimentKind::kFisherCheck) {
    if (c.fisher.p_grid.empty()) {
      throw Error(ErrorKind::kConfig, "p_grid must be nonempty");
    }
    for (double p : c.fisher.p_grid) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::kConfig, "p_grid values must lie in [0, 1]");
      }
    }
  }
}

}  // namespace

std::string_view ExperimentKindName(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kTable1:
      return "table1";
    case ExperimentKind::kMeanBench:
      return "mean-bench";
    case ExperimentKind::kRegressionDecay:
      return "regression-decay";
    case ExperimentKind::kFisherCheck:
      return "fisher-check";
    case ExperimentKind::kVerifyProp1:
      return "verify-prop1";
  }
  return "unknown";
}

ExperimentKind ParseExperimentKind(std::string_view name) {
  for (auto k : {ExperimentKind::kTable1, ExperimentKind::kMeanBench,
                 ExperimentKind::kRegressionDecay, ExperimentKind::kFisherCheck,
                 ExperimentKind::kVerifyProp1}) {
    if (ExperimentKindName(k) == name) return k;
  }
  throw Error(ErrorKind::kConfig,
              "unknown experiment kind '" + std::string(name) + "'");
}

double ExperimentConfig::RateFor(int n) const {
  return std::pow(static_cast<double>(n), -p_exponent);
}

double ExperimentConfig::DeltaFor(int n) const {
  return 1.0 / (delta_factor * n);
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::Resolved()
    const {
  std::vector<std::pair<std::string, std::string>> r;
  r.emplace_back("experiment", std::string(ExperimentKindName(kind)));
  r.emplace_back("seed", std::to_string(seed));
  r.emplace_back("p_rule", "n^-" + Num(p_exponent));
  r.emplace_back("delta_rule", "1/(" + Num(delta_factor) + "n)");
  switch (kind) {
    case ExperimentKind::kTable1:
    case ExperimentKind::kMeanBench: {
      const auto& m = mean_model;
      r.emplace_back("n_grid", List(n_grid));
      r.emplace_back("theta_star", Num(m.theta_star));
      r.emplace_back("sigma", Num(m.sigma));
      r.emplace_back("bounds", "[" + Num(m.lower) + " " + Num(m.upper) + "]");
      r.emplace_back("contamination", "truncated-t nu=" + Num(m.nu) +
                                          " scale=" +
                                          Num(m.contamination_scale) +
                                          " location=theta_star");
      r.emplace_back("prior", "N(" + Num(m.prior_mean) + ", " +
                                  Num(m.prior_sd) + "^2)");
      break;
    }
    case ExperimentKind::kRegressionDecay: {
      const auto& g = regression;
      r.emplace_back("n_grid", List(n_grid));
      r.emplace_back("models", List(g.models));
      r.emplace_back("dims", List(g.dims));
      r.emplace_back("contaminated", List(g.contaminated));
      r.emplace_back("theta_star", "theta_magnitude * (-1)^j, magnitude " +
                                       Num(g.theta_magnitude));
      r.emplace_back("prior", "N(0, " + Num(g.prior_sd) + "^2) per coordinate");
      r.emplace_back("noise_scale", Num(g.noise_scale));
      r.emplace_back("contamination_scale", Num(g.contamination_scale));
      r.emplace_back("nu", Num(g.nu));
      r.emplace_back("covariates", "intercept + Uniform[-1,1]");
      r.emplace_back("extrapolate", List(g.extrapolate));
      break;
    }
    case ExperimentKind::kFisherCheck: {
      const auto& f = fisher;
      r.emplace_back("p_grid", List(f.p_grid));
      r.emplace_back("model", "N(theta, " + Num(f.sigma) + "^2) at theta=" +
                                  Num(f.theta));
      r.emplace_back("contamination", "t nu=" + Num(f.nu) + " scale=" +
                                          Num(f.contamination_scale) +
                                          " location=theta");
      break;
    }
    case ExperimentKind::kVerifyProp1: {
      const auto& p = prop1;
      r.emplace_back("n", std::to_string(p.n));
      r.emplace_back("trials", std::to_string(p.trials));
      r.emplace_back("sets", std::to_string(p.sets));
      r.emplace_back("model", "N(theta, " + Num(p.sigma) + "^2), theta_star=" +
                                  Num(p.theta_star));
      r.emplace_back("contamination", "t nu=" + Num(p.nu) + " scale=" +
                                          Num(p.contamination_scale));
      r.emplace_back("p", Num(p.p.value_or(RateFor(p.n))));
      r.emplace_back("prior", "N(" + Num(p.prior_mean) + ", " +
                                  Num(p.prior_sd) + "^2)");
      r.emplace_back("eta_grid", std::to_string(p.theta_grid) + "x" +
                                     std::to_string(p.x_grid));
      r.emplace_back("phi_range",
                     "[" + Num(p.phi_min) + " " + Num(p.phi_max) + "]");
      r.emplace_back("quadrature_tolerance", "1e-10");
      break;
    }
  }
  if (kind == ExperimentKind::kTable1 ||
      kind == ExperimentKind::kRegressionDecay) {
    r.emplace_back("particles", std::to_string(particles));
    r.emplace_back("repeats", std::to_string(repeats));
    r.emplace_back("quantile", Num(quantile));
    r.emplace_back("center", center_at_truth ? "theta_star" : "map");
    r.emplace_back("search",
                   "grid_points=" + std::to_string(search.grid_points) +
                       " random_starts=" + std::to_string(search.random_starts) +
                       " widen=" + Num(search.widen) +
                       " escalation_log_ratio=" +
                       Num(search.escalation_log_ratio));
  }
  if (kind == ExperimentKind::kMeanBench) {
    const auto& b = mean_bench;
    r.emplace_back("datasets", std::to_string(b.datasets));
    r.emplace_back("repeats_per_dataset", std::to_string(b.repeats));
    r.emplace_back("methods", List(b.methods));
    r.emplace_back("epsilon_source", b.epsilon_source);
    r.emplace_back("budget", "rho = eps^2 / (2 ln(1/delta))");
    r.emplace_back("bayes_burn_in", std::to_string(b.bayes_burn_in));
    r.emplace_back(
        "coinpress",
        "center=" + Num(b.coinpress_center) + " radius=" +
            Num(b.coinpress_radius.value_or(mean_model.upper -
                                             mean_model.lower)) +
            " beta=" + Num(b.coinpress_beta) +
            " split=earlier rounds share " + Num(1.0 - b.coinpress_last_share) +
            ", last round " + Num(b.coinpress_last_share));
    r.emplace_back("clipped", "quantiles=" + Num(b.clipped_low) + "/" +
                                  Num(b.clipped_high) + " widen=" +
                                  Num(b.clipped_widen) +
                                  " split=rho/4 rho/4 rho/2");
    r.emplace_back("gaussian", "sd=((u-l)/n)/sqrt(2 rho)");
  }
  return r;
}

std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorKind::kNumerical, "SHA-256 computation failed");
  }
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

ExperimentConfig ParseConfig(const std::string& text) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kConfig, std::string("invalid JSON: ") + e.what());
  }
  ExperimentConfig c;
  Section root(json, "");
  std::string kind;
  root.Read("experiment", kind);
  if (kind.empty()) throw Error(ErrorKind::kConfig, "missing 'experiment'");
  c.kind = ParseExperimentKind(kind);
  root.Read("seed", c.seed);
  root.Read("workers", c.workers);
  root.Read("output_dir", c.output_dir);
  root.Read("n_grid", c.n_grid);
  root.Read("p_exponent", c.p_exponent);
  root.Read("delta_factor", c.delta_factor);
  root.Read("particles", c.particles);
  root.Read("repeats", c.repeats);
  root.Read("quantile", c.quantile);
  std::string center = "truth";
  root.Read("center", center);
  if (center != "truth" && center != "map") {
    throw Error(ErrorKind::kConfig, "center must be 'truth' or 'map'");
  }
  c.center_at_truth = center == "truth";
  if (auto s = root.Child("search")) {
    s->Read("grid_points", c.search.grid_points);
    s->Read("random_starts", c.search.random_starts);
    s->Read("widen", c.search.widen);
    s->Read("escalation_log_ratio", c.search.escalation_log_ratio);
    s->Finish();
  }
  if (auto s = root.Child("mean_model")) ReadMeanModel(*s, c.mean_model);
  if (auto s = root.Child("mean_bench")) ReadMeanBench(*s, c.mean_bench);
  if (auto s = root.Child("regression")) ReadRegression(*s, c.regression);
  if (auto s = root.Child("fisher")) ReadFisher(*s, c.fisher);
  if (auto s = root.Child("prop1")) ReadProp1(*s, c.prop1);
  root.Finish();
  Validate(c);
  c.digest = Sha256Hex(text);
  return c;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kConfig, "cannot read config " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

}  // namespace contamdp
