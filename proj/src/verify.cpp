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


#include "qmix/verify.hpp"

#include "qmix/catalog.hpp"
#include "qmix/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace qmix {

namespace {

// Accumulates one property over many cases. `margin` is the signed amount by
// which a case violates the property; the property passes while every
// margin is <= 0.
class Property {
 public:
  Property(std::string suite, std::string name) {
    r_.suite = std::move(suite);
    r_.name = std::move(name);
  }

  void record(double margin, const std::string& context = {}) {
    ++r_.cases;
    if (std::isnan(margin)) margin = std::numeric_limits<double>::infinity();
    if (margin > r_.worst) r_.worst = margin;
    if (margin > 0.0 && r_.passed) {
      r_.passed = false;
      std::ostringstream os;
      os << "violated by " << margin;
      if (!context.empty()) os << " (" << context << ")";
      r_.detail = os.str();
    }
  }
  void require(bool ok, const std::string& context = {}) { record(ok ? -1.0 : 1.0, context); }
  void fail(const std::string& what) {
    ++r_.cases;
    r_.passed = false;
    if (r_.detail.empty()) r_.detail = what;
  }

  PropertyResult result() const { return r_; }

 private:
  PropertyResult r_;
};

class Suite {
 public:
  Suite(std::string name, const VerifyOptions& opts) : name_(std::move(name)), opts_(opts) {
    std::seed_seq seq(name_.begin(), name_.end());
    std::vector<std::uint32_t> words(2);
    seq.generate(words.begin(), words.end());
    rng_.seed(opts.seed ^ (static_cast<std::uint64_t>(words[0]) << 32 | words[1]));
  }

  Property& prop(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      index_[name] = props_.size();
      props_.emplace_back(name_, name);
      return props_.back();
    }
    return props_[it->second];
  }

  // Runs `body`, turning library exceptions into a property failure.
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      prop(name).fail(std::string("exception: ") + e.what());
    }
  }

  Rng& rng() { return rng_; }
  int trials() const { return std::max(1, opts_.trials); }
  bool fault(const std::string& f) const { return opts_.fault == f; }
  Index dim_for(int i) const { return 2 + i % 3; }

  std::vector<PropertyResult> results() const {
    std::vector<PropertyResult> out;
    for (const Property& p : props_) out.push_back(p.result());
    return out;
  }

 private:
  std::string name_;
  const VerifyOptions& opts_;
  Rng rng_;
  std::vector<Property> props_;
  std::map<std::string, std::size_t> index_;
};

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Closest pairing of two equally sized eigenvalue lists; returns the largest
// distance over pairs.
double match_eigenvalues(std::vector<cplx> a, std::vector<cplx> b) {
  double worst = 0.0;
  while (!a.empty()) {
    std::size_t bi = 0, bj = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (std::abs(a[i] - b[j]) < best) {
          best = std::abs(a[i] - b[j]);
          bi = i;
          bj = j;
        }
    worst = std::max(worst, best);
    a.erase(a.begin() + static_cast<long>(bi));
    b.erase(b.begin() + static_cast<long>(bj));
  }
  return worst;
}

std::vector<cplx> eigenvalues_of(const Matrix& m) {
  Eigen::ComplexEigenSolver<Matrix> solver(m, false);
  return {solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size()};
}

double second_modulus(const QuantumChannel& t) {
  const auto& ev = t.eigenvalues();
  return ev.size() > 1 ? std::abs(ev[1]) : 0.0;
}

// --- metric -----------------------------------------------------------------

void metric_suite(Suite& s) {
  const auto ks = standard_k_functions();
  const int n = s.trials();
  auto value = [&](const DensityMatrix& rho, const DensityMatrix& sigma, const KFunction& k) {
    const double v = chi2(rho, sigma, k).value();
    return s.fault("omega-sign") ? -v : v;
  };

  s.guard("k-normalization-and-symmetry", [&] {
    for (const KFunction& k : ks) {
      s.prop("k-normalization-and-symmetry").record(std::abs(k_eval(k, 1.0) - 1.0) - 1e-12, k.name());
      for (int i = 0; i < n; ++i) {
        const double w = std::exp(uniform(s.rng(), std::log(1e-3), std::log(100.0)));
        const double kw = k_eval(k, w);
        s.prop("k-normalization-and-symmetry").record(std::abs(k_eval(k, 1.0 / w) - w * kw) - 1e-10 * (1.0 + w * kw),
                                                      k.name());
        s.prop("k-positivity").require(kw > 0.0, k.name());
      }
    }
  });

  s.guard("hierarchy", [&] {
    for (int i = 0; i < n; ++i) {
      const Index d = s.dim_for(i);
      const DensityMatrix rho = random_density(d, s.rng());
      const DensityMatrix sigma = random_density(d, s.rng());
      const double bures = value(rho, sigma, KFunction::bures());
      const double maximal = value(rho, sigma, KFunction::maximal());
      const double td = trace_distance(rho.matrix(), sigma.matrix());
      const double rel = relative_entropy(rho, sigma).value();
      for (const KFunction& k : ks) {
        const double c = value(rho, sigma, k);
        s.prop("hierarchy").record(std::max(bures - c, c - maximal) - 1e-10, k.name());
        s.prop("trace-distance-bound").record(td * td - c - 1e-9, k.name());
        s.prop("relative-entropy-bound").record(rel - c - 1e-9, k.name());
      }
    }
  });

  s.guard("monotonicity", [&] {
    for (int i = 0; i < n; ++i) {
      const Index d = s.dim_for(i);
      const QuantumChannel t = random_channel(d, 2 + i % 2, s.rng());
      const DensityMatrix rho = random_density(d, s.rng());
      const DensityMatrix sigma = random_density(d, s.rng());
      const DensityMatrix trho = t.apply(rho);
      const DensityMatrix tsigma = t.apply(sigma);
      for (const KFunction& k : ks) {
        const ExtendedReal after = chi2(trho, tsigma, k);
        if (after.is_infinite()) continue;
        s.prop("monotonicity").record(value(trho, tsigma, k) - value(rho, sigma, k) - 1e-9, k.name());
      }
    }
  });

  s.guard("alpha-convexity", [&] {
    for (int i = 0; i < n; ++i) {
      const Index d = s.dim_for(i);
      const DensityMatrix rho = random_density(d, s.rng());
      const DensityMatrix sigma = random_density(d, s.rng());
      std::vector<double> grid;
      for (int a = 0; a <= 10; ++a) grid.push_back(value(rho, sigma, KFunction::mean_alpha(a / 10.0)));
      for (int a = 1; a < 10; ++a)
        s.prop("alpha-convexity").record(grid[a] - 0.5 * (grid[a - 1] + grid[a + 1]) - 1e-9);
      const double lowest = *std::min_element(grid.begin(), grid.end());
      s.prop("alpha-minimum-at-half").record(grid[5] - lowest - 1e-12);
      s.prop("alpha-endpoint-symmetry").record(std::abs(grid[0] - grid[10]) - 1e-10);
    }
  });

  s.guard("joint-convexity", [&] {
    for (int i = 0; i < n; ++i) {
      const Index d = s.dim_for(i);
      const DensityMatrix r1 = random_density(d, s.rng()), s1 = random_density(d, s.rng());
      const DensityMatrix r2 = random_density(d, s.rng()), s2 = random_density(d, s.rng());
      const double lam = uniform(s.rng(), 0.05, 0.95);
      const DensityMatrix rm(lam * r1.matrix() + (1 - lam) * r2.matrix());
      const DensityMatrix sm(lam * s1.matrix() + (1 - lam) * s2.matrix());
      const KFunction k = KFunction::mean_alpha(uniform(s.rng(), 0.0, 1.0));
      s.prop("joint-convexity")
          .record(value(rm, sm, k) - lam * value(r1, s1, k) - (1 - lam) * value(r2, s2, k) - 1e-9, k.name());
    }
  });

  s.guard("omega-positivity", [&] {
    for (int i = 0; i < n; ++i) {
      const Index d = s.dim_for(i);
      const DensityMatrix sigma = random_density(d, s.rng());
      const KFunction& k = ks[static_cast<std::size_t>(i) % ks.size()];
      const InversionOperator om(sigma, k);
      s.prop("omega-positivity").require(om.weights().minCoeff() > 0.0, k.name());
      const Matrix half = om.power(0.5).matrix();
      const Matrix full = om.power(1.0).matrix();
      s.prop("omega-square-root").record((half * half - full).norm() - 1e-11 * std::max(1.0, full.norm()), k.name());
    }
  });

  s.guard("schwarz-inequality", [&] {
    for (int i = 0; i < n; ++i) {
      const Index d = 2 + i % 2;
      const QuantumChannel t = random_channel(d, 2 + i % 2, s.rng());
      const DensityMatrix rho = random_density(d, s.rng());
      const DensityMatrix sigma = random_density(d, s.rng());
      const Matrix a = ginibre(d, d, s.rng());
      const SchwarzResult r = schwarz_check(t, rho, sigma, a, uniform(s.rng(), 0.0, 10.0));
      s.prop("schwarz-inequality").record(r.rhs - r.lhs - 1e-9);
    }
  });
}

// --- mixing -----------------------------------------------------------------

void mixing_suite(Suite& s) {
  const auto ks = standard_k_functions();
  const int n = s.trials();

  s.guard("similarity", [&] {
    for (int i = 0; i < n; ++i) {
      const Index d = 2 + i % 2;
      const QuantumChannel t = i == 0 ? paper_qubit_channel() : random_channel(d, 2 + i % 2, s.rng());
      const KFunction& k = ks[static_cast<std::size_t>(i) % ks.size()];
      const Discriminant q = discriminant(t, k);
      s.prop("similarity").record(match_eigenvalues(eigenvalues_of(q.q.matrix()), t.eigenvalues()) - 1e-8, k.name());
      const RealVector ev = eigh(q.s_k().matrix()).values;
      s.prop("spectral-interval").record(std::max(-1e-9 - ev.minCoeff(), ev.maxCoeff() - 1.0 - 1e-9), k.name());
      s.prop("eigenvalue-below-singular-value").record(second_modulus(t) - q.s1 - 1e-9, k.name());
      const QuantumChannel t2 = QuantumChannel::from_superoperator(t.superop() * t.superop());
      const Discriminant q2 = discriminant(t2, k, q.sigma);
      s.prop("blocking").record(q2.s1 - q.s1 * q.s1 - 1e-9, k.name());
    }
  });

  s.guard("trajectory-bound", [&] {
    for (int i = 0; i < n; ++i) {
      const Index d = 2 + i % 2;
      const QuantumChannel t = i == 0 ? paper_qubit_channel() : random_channel(d, 2 + i % 2, s.rng());
      const DensityMatrix rho0 = DensityMatrix::pure(random_unit_vector(d, s.rng()));
      const KFunction& k = ks[static_cast<std::size_t>(i) % ks.size()];
      const MixingReport r = mixing_bound(t, rho0, k, 50);
      double worst = -1.0;
      double mono = -1.0;
      for (std::size_t j = 0; j < r.rows.size(); ++j) {
        worst = std::max(worst, r.rows[j].actual - r.rows[j].bound - 1e-9);
        if (j > 0) mono = std::max(mono, r.rows[j].bound - r.rows[j - 1].bound - 1e-15);
      }
      s.prop("trajectory-bound").record(worst, k.name());
      s.prop("bound-monotonicity").record(mono, k.name());
    }
  });

  s.guard("generator-form", [&] {
    for (int i = 0; i < std::max(1, n / 4); ++i) {
      const Index d = 2 + i % 2;
      std::vector<Matrix> jumps{ginibre(d, d, s.rng()), ginibre(d, d, s.rng())};
      const Liouvillian l(random_hermitian(d, s.rng()), jumps);
      const KFunction& k = ks[static_cast<std::size_t>(i) % ks.size()];
      const GeneratorForm g = generator_form(l, k);
      s.prop("generator-form-hermitian").record(g.hermiticity_residual - 1e-10, k.name());
      s.prop("generator-form-top-eigenvector").record(1.0 - 1e-8 - g.top_overlap, k.name());
      s.prop("generator-form-top-zero").record(std::abs(g.top) - 1e-8, k.name());
    }
  });
}

// --- contraction ------------------------------------------------------------

void contraction_suite(Suite& s) {
  const int channels = std::min(s.trials(), 25);
  const double slack = 2e-3;
  SearchOptions opts;
  for (int i = 0; i < channels; ++i) {
    s.guard("inequality-chain", [&] {
      const QuantumChannel t = random_channel(2, 2 + i % 2, s.rng());
      const std::uint64_t seed = s.rng()();
      const ContractionEstimate tr = eta_tr(t, 16, seed, opts);
      const ContractionEstimate chi = eta_chi(t, 0.5, 16, seed, opts);
      const ContractionEstimate bar_tr = eta_bar_tr(t, 16, seed, opts);
      const double bar_chi = eta_bar(t, KFunction::mean_alpha(0.5));
      s.prop("chi-below-trace").record(chi.value - tr.value - slack);
      s.prop("trace-below-sqrt-chi").record(tr.value - std::sqrt(chi.value) - slack);
      s.prop("etabar-chain")
          .record(std::max({bar_chi - bar_tr.value - slack, bar_tr.value - tr.value - slack, tr.value - 1.0 - 1e-9}));
      for (double v : {tr.value, chi.value, bar_tr.value, bar_chi})
        s.prop("estimates-in-unit-interval").record(std::max(-v, v - 1.0 - 1e-9));
      s.prop("witness-reproduces-value")
          .record(std::abs(trace_pair_value(t, tr.witness[0].col(0), tr.witness[1].col(0)) - tr.value) - 1e-10);
      const ContractionEstimate more = eta_tr(t, 32, seed, opts);
      s.prop("monotone-in-trials").record(tr.value - more.value);
    });
    s.guard("gamma-fixes-p", [&] {
      const Index d = 2 + i % 2;
      const QuantumChannel t = random_channel(d, 2, s.rng());
      const DensityMatrix p = random_density(d, s.rng());
      const Superoperator g = gamma_map(t, p);
      s.prop("gamma-fixes-p").record((g.apply(p.matrix()) - p.matrix()).norm() - 1e-9);
      const double l1 = lambda1(t, p);
      for (int j = 0; j < 10; ++j) {
        Matrix nmat = random_hermitian(d, s.rng());
        nmat -= (nmat.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
        s.prop("lambda1-rayleigh").record(lambda1_rayleigh(t, p, nmat) - l1 - 1e-8);
      }
    });
  }
}

// --- balance ----------------------------------------------------------------

void balance_suite(Suite& s) {
  const auto ks = standard_k_functions();
  const int n = s.trials();

  s.guard("example-bures-residual", [&] {
    const QuantumChannel t = paper_qubit_channel();
    const DensityMatrix sigma(paper_qubit_fixed_point());
    const QuantumChannel ts = symmetrize(t, sigma);
    Matrix y(2, 2);
    y << 0.0, -1.0, 1.0, 0.0;
    const Matrix id = Matrix::Identity(2, 2);
    const Matrix expected = (7.0 / 600.0) * (kron(id, y) + kron(y, id));
    const DetailedBalanceReport bures = db_residual(ts, sigma, KFunction::bures());
    s.prop("example-bures-residual").record((bures.residual_matrix - expected).cwiseAbs().maxCoeff() - 1e-10);
    const DetailedBalanceReport half = db_residual(ts, sigma, KFunction::mean_alpha(0.5));
    s.prop("example-symmetrized-balanced").record(half.residual_norm - 1e-10);
    s.prop("family-non-equivalent").require(!bures.holds);
  });

  s.guard("detailed-balance-consequences", [&] {
    for (int i = 0; i < n; ++i) {
      const Index d = 2 + i % 3;
      QuantumChannel t = QuantumChannel::identity(d);
      DensityMatrix sigma = DensityMatrix::maximally_mixed(d);
      std::vector<KFunction> balanced_for;
      if (i % 2 == 0) {
        RealVector pi;
        const RealMatrix p = random_reversible_chain(d, s.rng(), &pi);
        t = classical_embed(p);
        sigma = DensityMatrix::diagonal(pi);
        balanced_for = ks;
      } else {
        const QuantumChannel base = random_channel(d, 2, s.rng());
        sigma = fixed_point(base);
        t = symmetrize(base, sigma);
        balanced_for = {KFunction::mean_alpha(0.5)};
      }
      for (const KFunction& k : balanced_for) {
        const DetailedBalanceReport r = db_residual(t, sigma, k);
        s.prop("db-holds-by-construction").record(r.residual_norm - 1e-9, k.name());
        s.prop("balance-implies-steady-state").record((t.apply(sigma.matrix()) - sigma.matrix()).norm() - 1e-8, k.name());
        double imag = 0.0;
        for (const cplx& l : t.eigenvalues()) imag = std::max(imag, std::abs(l.imag()));
        s.prop("real-spectrum").record(imag - 1e-8, k.name());
        const Discriminant q = discriminant(t, k, sigma);
        s.prop("singular-value-equals-eigenvalue").record(std::abs(q.s1 - second_modulus(t)) - 1e-8, k.name());
      }
    }
  });

  s.guard("elementwise-agrees", [&] {
    for (int i = 0; i < n; ++i) {
      const Index d = 2 + i % 2;
      const KFunction& k = ks[static_cast<std::size_t>(i) % ks.size()];
      const QuantumChannel base = random_channel(d, 2, s.rng());
      const DensityMatrix sigma = fixed_point(base);
      const QuantumChannel t = (i % 2 == 0) ? symmetrize(base, sigma) : base;
      const HermitianEigen e = eigh(sigma.matrix());
      const RealVector mu = e.values / e.values.sum();
      const bool full = db_residual(t, sigma, k).holds;
      const bool elem = db_elementwise(t, mu, e.vectors, k).holds;
      s.prop("elementwise-agrees").require(full == elem, k.name());
    }
  });
}

// --- geometry ---------------------------------------------------------------

void geometry_suite(Suite& s) {
  const auto ks = standard_k_functions();
  const int n = s.trials();

  s.guard("cheeger-bounds", [&] {
    for (int i = 0; i < n; ++i) {
      const Index d = s.dim_for(i);
      const QuantumChannel t = random_unital_channel(d, 1 + i % 4, s.rng());
      CheegerOptions opts;
      opts.random_restarts = 64;
      const CheegerReport r = cheeger_constant(t, opts);
      s.prop("cheeger-bounds").record(std::max(r.lower() - r.lambda1, r.lambda1 - r.upper()) - 1e-8);
      if (d == 2) s.prop("qubit-closed-form").record(std::abs(qubit_cheeger(t) - r.h) - 1e-9);

      double spread_lo = std::numeric_limits<double>::infinity(), spread_hi = -spread_lo;
      for (const KFunction& k : ks) {
        const double g = variational_gap(t, k);
        spread_lo = std::min(spread_lo, g);
        spread_hi = std::max(spread_hi, g);
      }
      s.prop("gap-k-independent").record(spread_hi - spread_lo - 1e-9);

      const RealMatrix p = mihail_matrix(t, Matrix::Identity(d, d));
      const double row = (p.rowwise().sum().array() - 1.0).abs().maxCoeff();
      const double col = (p.colwise().sum().array() - 1.0).abs().maxCoeff();
      s.prop("mihail-doubly-stochastic").record(std::max({row, col, -p.minCoeff()}) - 1e-10);
    }
  });

  s.guard("variational-ratio", [&] {
    for (int i = 0; i < std::max(1, n / 4); ++i) {
      const Index d = 2 + i % 2;
      const QuantumChannel t = random_channel(d, 2, s.rng());
      const KFunction& k = ks[static_cast<std::size_t>(i) % ks.size()];
      const double gap = variational_gap(t, k);
      for (int j = 0; j < 10; ++j)
        s.prop("variational-ratio").record(gap - 1e-8 - variational_ratio(t, k, ginibre(d, d, s.rng())), k.name());
    }
  });
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all{{"metric", &metric_suite},
                                                                {"mixing", &mixing_suite},
                                                                {"contraction", &contraction_suite},
                                                                {"balance", &balance_suite},
                                                                {"geometry", &geometry_suite}};
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"metric", "mixing", "contraction", "balance", "geometry", "all"};
  return names;
}

std::vector<PropertyResult> run_verify(const VerifyOptions& opts) {
  if (std::find(suite_names().begin(), suite_names().end(), opts.suite) == suite_names().end())
    throw Error(ErrorKind::UnknownSuite, "unknown suite '" + opts.suite + "'");
  std::vector<PropertyResult> out;
  for (const auto& [name, fn] : suites()) {
    if (opts.suite != "all" && opts.suite != name) continue;
    Suite suite(name, opts);
    fn(suite);
    for (PropertyResult& r : suite.results()) out.push_back(std::move(r));
  }
  return out;
}

json verify_to_json(const VerifyOptions& opts, const std::vector<PropertyResult>& results) {
  json j;
  j["suite"] = opts.suite;
  j["trials"] = opts.trials;
  j["seed"] = opts.seed;
  bool passed = true;
  json failures = json::array();
  json props = json::array();
  for (const PropertyResult& r : results) {
    json p;
    p["suite"] = r.suite;
    p["name"] = r.name;
    p["passed"] = r.passed;
    p["cases"] = r.cases;
    p["worst"] = std::isfinite(r.worst) ? json(r.worst) : json(nullptr);
    props.push_back(p);
    if (!r.passed) {
      passed = false;
      json f;
      f["suite"] = r.suite;
      f["name"] = r.name;
      f["detail"] = r.detail;
      failures.push_back(f);
    }
  }
  j["passed"] = passed;
  j["failures"] = failures;
  j["properties"] = props;
  return j;
}

}  // namespace qmix
