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


// Acceptance runner: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1).

#include "qmix/balance.hpp"
#include "qmix/catalog.hpp"
#include "qmix/channel.hpp"
#include "qmix/contraction.hpp"
#include "qmix/geometry.hpp"
#include "qmix/metric.hpp"
#include "qmix/mixing.hpp"
#include "qmix/random.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

using namespace qmix;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  std::printf("%s %s %s: %s [%.2fs]\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double max_abs(const Matrix& a) { return a.cwiseAbs().maxCoeff(); }

Matrix m2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

DensityMatrix output_state(const QuantumChannel& t, const DensityMatrix& rho) {
  return DensityMatrix::normalized(t.apply(rho.matrix()));
}

struct Pair {
  DensityMatrix rho, sigma;
};

std::vector<Pair> sample_pairs(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Pair> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const Index d = 2 + i % 3;
    out.push_back({random_density(d, rng, 1 + (i / 3) % d), random_density(d, rng)});
  }
  return out;
}

Outcome example_regression() {
  const QuantumChannel t = paper_qubit_channel();
  const DensityMatrix sigma = fixed_point(t);
  const double fp_err = max_abs(sigma.matrix() - m2(5, 1, 1, 1) / 6.0);
  const QuantumChannel ts = symmetrize(t, sigma);
  const double r2 = std::sqrt(2.0);
  const std::vector<Matrix> b{0.6 * m2(1, 1, 0.5, 0.5), r2 / 5.0 * m2(1, -1, 0.5, -0.5),
                              r2 / 20.0 * m2(3, 3, -1, -1), 0.2 * m2(3, -3, -1, 1)};
  double b_err = ts.kraus().size() == 4 ? 0.0 : 1.0;
  for (std::size_t i = 0; i < std::min<std::size_t>(4, ts.kraus().size()); ++i)
    b_err = std::max(b_err, max_abs(ts.kraus()[i] - b[i]));
  const double half = db_residual(ts, sigma, KFunction::mean_alpha(0.5)).residual_norm;
  const Matrix y = m2(0, -1, 1, 0), id = Matrix::Identity(2, 2);
  const double bures_err =
      max_abs(db_residual(ts, sigma, KFunction::bures()).residual_matrix - 7.0 / 600.0 * (kron(id, y) + kron(y, id)));
  const bool ok = fp_err <= 1e-10 && b_err <= 1e-10 && half <= 1e-10 && bures_err <= 1e-10;
  return {ok, "fixed point " + fmt("%.1e", fp_err) + ", B_ij " + fmt("%.1e", b_err) + ", db(1/2) " +
                  fmt("%.1e", half) + ", bures residual " + fmt("%.1e", bures_err)};
}

Outcome trace_distance_bound(const std::vector<Pair>& pairs) {
  double worst = -1e300;
  for (const auto& p : pairs) {
    const double td = trace_distance(p.rho.matrix(), p.sigma.matrix());
    for (const auto& k : standard_k_functions()) worst = std::max(worst, td * td - chi2(p.rho, p.sigma, k).value());
  }
  return {worst <= 1e-9, fmt("max(||rho-sigma||_1^2 - chi2) = %.3e over %g pairs", worst, double(pairs.size()))};
}

Outcome entropy_bound(const std::vector<Pair>& pairs) {
  double worst = -1e300;
  for (const auto& p : pairs) {
    const double s = relative_entropy(p.rho, p.sigma).value();
    for (const auto& k : standard_k_functions()) worst = std::max(worst, s - chi2(p.rho, p.sigma, k).value());
  }
  return {worst <= 1e-9, fmt("max(S - chi2) = %.3e", worst)};
}

Outcome monotonicity() {
  Rng rng(4004);
  double worst = -1e300;
  const auto ks = standard_k_functions();
  for (int i = 0; i < 1000; ++i) {
    const Index d = 2 + i % 3;
    const QuantumChannel t = random_channel(d, 1 + (i / 3) % 3, rng);
    const DensityMatrix rho = random_density(d, rng), sigma = random_density(d, rng);
    const DensityMatrix trho = output_state(t, rho), tsigma = output_state(t, sigma);
    for (const auto& k : ks) worst = std::max(worst, chi2(trho, tsigma, k).value() - chi2(rho, sigma, k).value());
  }
  return {worst <= 1e-9, fmt("max(chi2(T rho, T sigma) - chi2(rho, sigma)) = %.3e", worst)};
}

Outcome hierarchy(const std::vector<Pair>& pairs) {
  double worst = -1e300;
  for (const auto& p : pairs) {
    const double lo = chi2(p.rho, p.sigma, KFunction::bures()).value();
    const double hi = chi2(p.rho, p.sigma, KFunction::maximal()).value();
    for (const auto& k : standard_k_functions()) {
      const double c = chi2(p.rho, p.sigma, k).value();
      worst = std::max({worst, lo - c, c - hi});
    }
  }
  return {worst <= 1e-10, fmt("max violation = %.3e", worst)};
}

std::vector<QuantumChannel> primitive_channels() {
  Rng rng(6006);
  std::vector<QuantumChannel> out{paper_qubit_channel()};
  for (int i = 0; i < 100; ++i) out.push_back(random_channel(2 + i % 2, 2 + (i / 2) % 2, rng));
  return out;
}

Outcome trajectory(const std::vector<QuantumChannel>& channels) {
  Rng rng(6007);
  double worst = -1e300;
  for (const auto& t : channels) {
    const DensityMatrix rho0 = DensityMatrix::pure(random_unit_vector(t.dim(), rng));
    for (const auto& k : standard_k_functions())
      for (const auto& row : mixing_bound(t, rho0, k, 50).rows) worst = std::max(worst, row.actual - row.bound);
  }
  return {worst <= 1e-9, fmt("max(actual - bound) = %.3e over %g channels, n = 0..50", worst, double(channels.size()))};
}

Outcome spectral_interval(const std::vector<QuantumChannel>& channels) {
  double lo = 1e300, hi = -1e300;
  for (const auto& t : channels)
    for (const auto& k : standard_k_functions()) {
      const RealVector ev = s_k_eigenvalues(t, k);
      lo = std::min(lo, ev.minCoeff());
      hi = std::max(hi, ev.maxCoeff());
    }
  return {lo >= -1e-9 && hi <= 1.0 + 1e-9, fmt("eigenvalues in [%.3e, 1 + %.3e]", lo, hi - 1.0)};
}

Outcome asymptotics() {
  std::string detail;
  bool ok = true;
  const std::pair<const char*, QuantumChannel> cases[] = {{"paper-qubit", paper_qubit_channel()},
                                                          {"defective", defective_qubit_channel()}};
  for (const auto& [name, t] : cases) {
    const AsymptoticsTable tab = singular_value_asymptotics(t, KFunction::mean_alpha(0.5), {1, 32});
    const double d1 = tab.rows[0].max_deviation, d32 = tab.rows[1].max_deviation;
    ok = ok && d32 * 4.0 <= d1;
    detail += std::string(detail.empty() ? "" : "; ") + name + fmt(" dev(1) = %.3e, dev(32) = %.3e", d1, d32);
  }
  return {ok, detail};
}

Outcome continuous() {
  const Liouvillian l = damped_qubit_generator(1.0, 0.5);
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(0.25 * i);
  double worst = -1e300, l1 = -1e300, top = 0.0;
  for (const auto& k : standard_k_functions()) {
    const MixingReport r = continuous_bound(l, DensityMatrix::basis_state(2, 1), k, grid);
    for (const auto& row : r.rows) worst = std::max(worst, row.actual - row.bound);
    l1 = std::max(l1, *r.l1);
    top = std::max(top, std::abs(*r.lambda_top));
  }
  return {worst <= 1e-8 && l1 <= 1e-10 && top <= 1e-8,
          fmt("max(actual - bound) = %.3e, max l1 = %.3e", worst, l1) + fmt(", |top| = %.1e", top)};
}

Outcome inequality_chain() {
  Rng rng(1010);
  const double slack = 2e-3;
  double t13 = -1e300, t12 = -1e300, chain = -1e300;
  for (int i = 0; i < 100; ++i) {
    const QuantumChannel t = random_channel(2, 2 + i % 2, rng);
    const std::uint64_t seed = rng();
    const double tr = eta_tr(t, 64, seed).value;
    const double chi = eta_chi(t, 0.5, 64, seed).value;
    const double bar_tr = eta_bar_tr(t, 64, seed).value;
    const double bar_chi = eta_bar(t, KFunction::mean_alpha(0.5));
    t13 = std::max(t13, chi - tr - slack);
    t12 = std::max(t12, tr - std::sqrt(chi) - slack);
    chain = std::max({chain, bar_chi - bar_tr - slack, bar_tr - tr - slack, tr - 1.0 - 1e-9});
  }
  return {t13 <= 0.0 && t12 <= 0.0 && chain <= 0.0,
          fmt("margins: chi<=tr %.3e, tr<=sqrt(chi) %.3e", t13, t12) + fmt(", etabar chain %.3e", chain)};
}

// The closed-form clause is reported separately so its outcome is visible.
struct CheegerData {
  double bound_worst = -1e300;
  double closed_worst = 0.0;
  double half_worst = 0.0;
  int qubits = 0;
};

CheegerData cheeger_sweep() {
  Rng rng(1111);
  CheegerData out;
  for (int i = 0; i < 500; ++i) {
    const Index d = 2 + i % 3;
    const QuantumChannel t = random_unital_channel(d, 2 + (i / 3) % 3, rng);
    const CheegerReport r = cheeger_constant(t);
    out.bound_worst = std::max({out.bound_worst, r.lower() - r.lambda1, r.lambda1 - r.upper()});
    if (d == 2) {
      Eigen::JacobiSVD<Eigen::Matrix3d> svd(bloch(t).l);
      const double s1 = svd.singularValues()(0);
      out.closed_worst = std::max(out.closed_worst, std::abs(r.h - (1.0 - s1 * s1)));
      out.half_worst = std::max(out.half_worst, std::abs(r.h - 0.5 * (1.0 - s1 * s1)));
      ++out.qubits;
    }
  }
  return out;
}

Outcome classical_reduction() {
  Rng rng(1212);
  double db = 0.0, chi = 0.0, bound = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Index n = 2 + i % 4;
    RealVector pi;
    const RealMatrix p = random_reversible_chain(n, rng, &pi);
    const QuantumChannel t = classical_embed(p);
    const DensityMatrix sigma = DensityMatrix::diagonal(pi);
    for (const auto& k : standard_k_functions()) db = std::max(db, db_residual(t, sigma, k).residual_norm);

    std::uniform_real_distribution<double> unit(0.05, 1.0);
    RealVector q(n);
    for (Index j = 0; j < n; ++j) q(j) = unit(rng);
    q /= q.sum();
    const double classical_chi2 = ((q - pi).array().square() / pi.array()).sum();
    for (const auto& k : standard_k_functions())
      chi = std::max(chi, std::abs(chi2(DensityMatrix::diagonal(q), sigma, k).value() - classical_chi2));

    // Classical discriminant D^{-1/2} P D^{1/2}, deflated along sqrt(pi).
    const RealVector sq = pi.cwiseSqrt();
    const RealMatrix disc = sq.cwiseInverse().asDiagonal() * p * sq.asDiagonal();
    const RealMatrix defl = disc * (RealMatrix::Identity(n, n) - sq * sq.transpose());
    const double s1 = Eigen::JacobiSVD<RealMatrix>(defl).singularValues()(0);
    const MixingReport r = mixing_bound(t, DensityMatrix::diagonal(q), KFunction::mean_alpha(0.5), 50);
    for (const auto& row : r.rows)
      bound = std::max(bound, std::abs(row.bound - std::pow(s1, row.step) * std::sqrt(classical_chi2)));
  }
  return {db <= 1e-9 && chi <= 1e-10 && bound <= 1e-9,
          fmt("db residual %.3e, chi2 mismatch %.3e", db, chi) + fmt(", bound mismatch %.3e", bound)};
}

Outcome schwarz() {
  Rng rng(1313);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst = -1e300;
  for (int i = 0; i < 1000; ++i) {
    const Index d = 2 + i % 3;
    const QuantumChannel t = random_channel(d, 1 + (i / 3) % 3, rng);
    const DensityMatrix rho = random_density(d, rng), sigma = random_density(d, rng);
    const SchwarzResult r = schwarz_check(t, rho, sigma, ginibre(d, d, rng), std::exp(u(rng)));
    worst = std::max(worst, r.rhs - r.lhs);
  }
  return {worst <= 1e-9, fmt("max(rhs - lhs) = %.3e", worst)};
}

Outcome alpha_family() {
  const std::vector<Pair> pairs = sample_pairs(200, 1414);
  double convex = -1e300, minimum = -1e300, endpoint = 0.0;
  for (const auto& p : pairs) {
    std::vector<double> v;
    for (int j = 0; j <= 20; ++j) v.push_back(chi2(p.rho, p.sigma, KFunction::mean_alpha(j / 20.0)).value());
    const double scale = std::max(1.0, *std::max_element(v.begin(), v.end()));
    for (std::size_t j = 1; j + 1 < v.size(); ++j) convex = std::max(convex, (2 * v[j] - v[j - 1] - v[j + 1]) / scale);
    for (double x : v) minimum = std::max(minimum, (v[10] - x) / scale);
    endpoint = std::max(endpoint, std::abs(v.front() - v.back()));
  }
  return {convex <= 1e-9 && minimum <= 1e-9 && endpoint <= 1e-10,
          fmt("convexity %.3e, minimum at 1/2 %.3e", convex, minimum) + fmt(", |chi2(0) - chi2(1)| = %.3e", endpoint)};
}

}  // namespace

int main() {
  criterion("AC01", "example qubit regression", example_regression);
  const std::vector<Pair> pairs = sample_pairs(1000, 2002);
  criterion("AC02", "trace distance bounded by chi2", [&] { return trace_distance_bound(pairs); });
  criterion("AC03", "relative entropy bounded by chi2", [&] { return entropy_bound(pairs); });
  criterion("AC04", "chi2 monotone under channels", monotonicity);
  criterion("AC05", "Bures <= chi2_k <= maximal", [&] { return hierarchy(pairs); });
  const std::vector<QuantumChannel> channels = primitive_channels();
  criterion("AC06", "discrete trajectory bound", [&] { return trajectory(channels); });
  criterion("AC07", "S_k spectrum in [0, 1]", [&] { return spectral_interval(channels); });
  criterion("AC08", "singular value roots approach eigenvalue moduli", asymptotics);
  criterion("AC09", "continuous-time bound", continuous);
  criterion("AC10", "contraction coefficient chain", inequality_chain);

  CheegerData cd;
  criterion("AC11a", "conductance bounds 1-2h <= lambda1 <= 1-h^2/2", [&] {
    cd = cheeger_sweep();
    return Outcome{cd.bound_worst <= 1e-8, fmt("max violation = %.3e over 500 channels", cd.bound_worst)};
  });
  criterion("AC11b", "qubit h equals 1 - s1(L)^2", [&] {
    return Outcome{cd.closed_worst <= 1e-9, fmt("max |h - (1 - s1^2)| = %.3e over %g qubit channels", cd.closed_worst,
                                                double(cd.qubits))};
  });
  std::printf("INFO AC11b qubit h against 1/2 (1 - s1(L)^2): max deviation %.3e\n", cd.half_worst);

  criterion("AC12", "classical reduction", classical_reduction);
  criterion("AC13", "operator Schwarz inequality", schwarz);
  criterion("AC14", "mean-alpha convexity and symmetry", alpha_family);

  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
