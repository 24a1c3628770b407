// Copyright 2026 The qmix Authors
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


#include "qmix/commands.hpp"

#include "qmix/catalog.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>

namespace qmix {

namespace {

double parse_number(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
    throw Error(ErrorKind::ValidationError, what + ": cannot parse '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

json input_record(const std::string& name, const std::string& bytes) {
  json j;
  j["name"] = name;
  j["sha256"] = sha256_hex(bytes);
  return j;
}

json envelope(const std::string& command, const json& inputs, const json& results) {
  json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["inputs"] = inputs;
  j["results"] = results;
  return j;
}

json eigenvalues_json(const std::vector<cplx>& ev) {
  json arr = json::array();
  for (const cplx& l : ev) arr.push_back(json::array({l.real(), l.imag()}));
  return arr;
}

}  // namespace

LoadedChannel load_channel(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    const std::string bytes = read_file(spec);
    return {channel_from_json(parse_json_text(bytes, spec)), input_record(spec, bytes)};
  }
  const auto parts = split(spec, ':');
  const std::string& name = parts[0];
  if (name == "paper-qubit" && parts.size() == 1) return {paper_qubit_channel(), input_record(spec, spec)};
  if (name == "depolarizing" && parts.size() == 2) {
    const double p = parse_number(parts[1], "depolarizing");
    if (p < 0.0 || p > 1.0) throw Error(ErrorKind::ValidationError, "depolarizing: p must be in [0, 1]");
    return {depolarizing_channel(2, p), input_record(spec, spec)};
  }
  if (name == "identity" && parts.size() == 2) {
    const double d = parse_number(parts[1], "identity");
    if (d < 1 || d != std::floor(d) || d > 32) throw Error(ErrorKind::ValidationError, "identity: bad dimension");
    return {QuantumChannel::identity(static_cast<Index>(d)), input_record(spec, spec)};
  }
  if (name == "classical" && parts.size() >= 2) {
    const std::string path = spec.substr(name.size() + 1);
    const std::string bytes = read_file(path);
    return {classical_embed(stochastic_from_json(parse_json_text(bytes, path))), input_record(spec, bytes)};
  }
  throw Error(ErrorKind::ValidationError, "'" + spec + "' is neither a readable file nor a known channel name");
}

LoadedGenerator load_generator(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    const std::string bytes = read_file(spec);
    return {liouvillian_from_json(parse_json_text(bytes, spec)), input_record(spec, bytes)};
  }
  const auto parts = split(spec, ':');
  if (parts[0] == "damped-qubit" && parts.size() == 3) {
    const double gamma = parse_number(parts[1], "damped-qubit gamma");
    const double kappa = parse_number(parts[2], "damped-qubit kappa");
    if (gamma < 0.0 || kappa < 0.0) throw Error(ErrorKind::ValidationError, "damped-qubit: rates must be >= 0");
    return {damped_qubit_generator(gamma, kappa), input_record(spec, spec)};
  }
  throw Error(ErrorKind::ValidationError, "'" + spec + "' is neither a readable file nor a known generator name");
}

DensityMatrix load_state(const std::string& spec, Index dim, const std::optional<DensityMatrix>& reference) {
  if (spec == "maxmixed") return DensityMatrix::maximally_mixed(dim);
  if (spec == "pure0") return DensityMatrix::basis_state(dim, 0);
  if (spec == "fixed") {
    if (!reference) throw Error(ErrorKind::NotPrimitive, "no fixed point available");
    return *reference;
  }
  if (!std::filesystem::is_regular_file(spec))
    throw Error(ErrorKind::ValidationError, "state '" + spec + "' is not maxmixed, pure0, fixed or a file");
  const json j = parse_json_text(read_file(spec), spec);
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      (void)value;
      if (key != "rho") throw Error(ErrorKind::ValidationError, key + ": unknown key");
    }
    if (!j.contains("rho")) throw Error(ErrorKind::ValidationError, "rho: missing required key");
    return DensityMatrix(matrix_from_json(j.at("rho"), "rho", dim));
  }
  return DensityMatrix(matrix_from_json(j, "rho", dim));
}

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::InvariantViolation ? kExitInternal : kExitValidation;
}

CommandOutput cmd_inspect(const std::string& channel) {
  const LoadedChannel lc = load_channel(channel);
  const QuantumChannel& t = lc.channel;
  json r;
  r["dim"] = t.dim();
  r["kraus_count"] = t.kraus().size();
  r["completeness_residual"] = t.completeness_residual();
  r["choi_min_eigenvalue"] = eigh(choi(t.superop())).values.minCoeff();
  const json cls = classification_to_json(t);
  for (const auto& [key, value] : cls.items()) r[key] = value;
  if (t.cached_fixed_point())
    r["fixed_point"] = density_to_json(*t.cached_fixed_point());
  else
    r["fixed_point"] = nullptr;
  r["eigenvalues"] = eigenvalues_json(t.eigenvalues());
  return {dump_json(envelope("inspect", json::array({lc.input}), r)), kExitOk, {}};
}

CommandOutput cmd_mix(const MixOptions& o) {
  const LoadedChannel lc = load_channel(o.channel);
  const KFunction k = kfunction_from_string(o.k);
  const DensityMatrix rho0 = load_state(o.rho0, lc.channel.dim(), lc.channel.cached_fixed_point());
  const MixingReport report = mixing_bound(lc.channel, rho0, k, o.n, o.eps);
  json r = mixing_report_to_json(report);
  r["k"] = kfunction_to_json(k);
  CommandOutput out{dump_json(envelope("mix", json::array({lc.input}), r)),
                    report.violations == 0 ? kExitOk : kExitProperty,
                    {}};
  if (o.csv) out.files.emplace_back(*o.csv, mixing_report_to_csv(report));
  return out;
}

CommandOutput cmd_verify(const VerifyOptions& o) {
  const auto results = run_verify(o);
  const json r = verify_to_json(o, results);
  return {dump_json(envelope("verify", json::array(), r)), r["passed"].get<bool>() ? kExitOk : kExitProperty, {}};
}

CommandOutput cmd_db(const DbOptions& o) {
  const LoadedChannel lc = load_channel(o.channel);
  const DensityMatrix sigma = load_state(o.sigma, lc.channel.dim(), lc.channel.cached_fixed_point());
  std::vector<KFunction> ks;
  if (o.ks.empty())
    ks = standard_k_functions();
  else
    for (const std::string& s : o.ks) ks.push_back(kfunction_from_string(s));
  json table = json::array();
  for (const KFunction& k : ks) {
    json row = db_report_to_json(db_residual(lc.channel, sigma, k, o.tol), o.include_matrix);
    row["fixed_point_check"] = db_fixed_point_check(lc.channel, sigma, k);
    table.push_back(row);
  }
  json r;
  r["sigma"] = density_to_json(sigma);
  r["table"] = table;
  return {dump_json(envelope("db-check", json::array({lc.input}), r)), kExitOk, {}};
}

CommandOutput cmd_symmetrize(const std::string& channel, const std::string& sigma_spec) {
  const LoadedChannel lc = load_channel(channel);
  const DensityMatrix sigma = load_state(sigma_spec, lc.channel.dim(), lc.channel.cached_fixed_point());
  return {dump_json(channel_to_json(symmetrize(lc.channel, sigma))), kExitOk, {}};
}

CommandOutput cmd_cheeger(const std::string& channel, bool use_map_directly) {
  const LoadedChannel lc = load_channel(channel);
  CheegerOptions opts;
  opts.use_map_directly = use_map_directly;
  const CheegerReport report = cheeger_constant(lc.channel, opts);
  json r = cheeger_report_to_json(report);
  if (lc.channel.dim() == 2) r["qubit_closed_form"] = qubit_cheeger(lc.channel);
  return {dump_json(envelope("cheeger", json::array({lc.input}), r)), report.bounds_ok ? kExitOk : kExitProperty,
          {}};
}

CommandOutput cmd_contraction(const ContractionOptions& o) {
  const LoadedChannel lc = load_channel(o.channel);
  const QuantumChannel& t = lc.channel;
  json r;
  r["eta_tr"] = estimate_to_json(eta_tr(t, o.trials, o.seed));
  r["eta_chi"] = estimate_to_json(eta_chi(t, o.alpha, o.trials, o.seed));
  r["eta_chi"]["alpha"] = o.alpha;
  r["eta_bar_tr"] = estimate_to_json(eta_bar_tr(t, o.trials, o.seed));
  if (t.classification().primitive) {
    const KFunction half = KFunction::mean_alpha(0.5);
    const Discriminant d = discriminant(t, half);
    json bar;
    bar["value"] = eta_bar(t, half);
    bar["kind"] = to_string(EstimateKind::ExactFixedPoint);
    bar["s1"] = d.s1;
    bar["s1_squared"] = d.s1 * d.s1;
    r["eta_bar_chi"] = bar;
  } else {
    r["eta_bar_chi"] = nullptr;
  }
  return {dump_json(envelope("contraction", json::array({lc.input}), r)), kExitOk, {}};
}

CommandOutput cmd_continuous(const ContinuousOptions& o) {
  if (!(o.dt > 0.0) || o.t_max < 0.0) throw Error(ErrorKind::ValidationError, "need dt > 0 and t-max >= 0");
  const LoadedGenerator lg = load_generator(o.generator);
  const KFunction k = kfunction_from_string(o.k);
  const DensityMatrix sigma = stationary_state(lg.generator, true);
  const DensityMatrix rho0 = load_state(o.rho0, lg.generator.dim(), sigma);
  std::vector<double> grid;
  const long steps = static_cast<long>(std::floor(o.t_max / o.dt + 1e-9));
  for (long i = 0; i <= steps; ++i) grid.push_back(static_cast<double>(i) * o.dt);
  const MixingReport report = continuous_bound(lg.generator, rho0, k, grid);
  json r = mixing_report_to_json(report);
  r["k"] = kfunction_to_json(k);
  CommandOutput out{dump_json(envelope("continuous", json::array({lg.input}), r)),
                    report.violations == 0 ? kExitOk : kExitProperty,
                    {}};
  if (o.csv) out.files.emplace_back(*o.csv, mixing_report_to_csv(report));
  return out;
}

}  // namespace qmix
