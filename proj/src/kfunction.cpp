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


#include "qmix/kfunction.hpp"

#include "qmix/error.hpp"

#include <cmath>
#include <sstream>

namespace qmix {

namespace {

constexpr double kSeriesRadius = 1e-6;

void require_range(double x, double lo, double hi, const char* what) {
  if (!(x >= lo && x <= hi)) {
    std::ostringstream os;
    os << what << " parameter " << x << " outside [" << lo << ", " << hi << "]";
    throw Error(ErrorKind::ParameterOutOfRange, os.str());
  }
}

}  // namespace

KFunction KFunction::mean_alpha(double alpha) {
  require_range(alpha, 0.0, 1.0, "mean-alpha");
  return {KFamily::MeanAlpha, alpha};
}

KFunction KFunction::bures() { return {KFamily::Bures, std::nullopt}; }

KFunction KFunction::maximal() { return {KFamily::Maximal, std::nullopt}; }

KFunction KFunction::log() { return {KFamily::Log, std::nullopt}; }

KFunction KFunction::wyd(double alpha) {
  require_range(alpha, -1.0, 2.0, "wyd");
  if (alpha == 0.0 || alpha == 1.0)
    throw Error(ErrorKind::ParameterOutOfRange, "wyd parameter must not be 0 or 1 (use the log family)");
  return {KFamily::WYD, alpha};
}

KFunction KFunction::hansen(double a) {
  require_range(a, 0.0, 1.0, "hansen");
  return {KFamily::Hansen, a};
}

KFunction KFunction::from_family(const std::string& family, std::optional<double> param) {
  const bool takes_param = family == "mean-alpha" || family == "wyd" || family == "hansen";
  const bool known = takes_param || family == "bures" || family == "maximal" || family == "log";
  if (!known) throw Error(ErrorKind::ValidationError, "unknown k family '" + family + "'");
  if (takes_param && !param)
    throw Error(ErrorKind::ValidationError, "k family '" + family + "' requires a param");
  if (!takes_param && param)
    throw Error(ErrorKind::ValidationError, "k family '" + family + "' takes no param");
  if (family == "mean-alpha") return mean_alpha(*param);
  if (family == "wyd") return wyd(*param);
  if (family == "hansen") return hansen(*param);
  if (family == "bures") return bures();
  if (family == "maximal") return maximal();
  return log();
}

std::string KFunction::family_name() const {
  switch (family_) {
    case KFamily::MeanAlpha: return "mean-alpha";
    case KFamily::Bures: return "bures";
    case KFamily::Maximal: return "maximal";
    case KFamily::Log: return "log";
    case KFamily::WYD: return "wyd";
    case KFamily::Hansen: return "hansen";
  }
  return "unknown";
}

std::string KFunction::name() const {
  if (!param_) return family_name();
  std::ostringstream os;
  os << family_name() << '(' << *param_ << ')';
  return os.str();
}

double KFunction::operator()(double w) const { return k_eval(*this, w); }

double k_eval(const KFunction& k, double w) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    std::ostringstream os;
    os << "k(w) requires finite w > 0, got " << w;
    throw Error(ErrorKind::DomainError, os.str());
  }
  const double e = w - 1.0;
  switch (k.family()) {
    case KFamily::MeanAlpha: {
      const double a = *k.param();
      return 0.5 * (std::pow(w, -a) + std::pow(w, a - 1.0));
    }
    case KFamily::Bures:
      return 2.0 / (1.0 + w);
    case KFamily::Maximal:
      return (1.0 + w) / (2.0 * w);
    case KFamily::Log:
      if (std::abs(e) < kSeriesRadius) return 1.0 - e / 2.0 + e * e / 3.0;
      return std::log(w) / e;
    case KFamily::WYD: {
      const double a = *k.param();
      if (std::abs(e) < kSeriesRadius) return 1.0 - e / 2.0 + (1.0 / 3.0 + (a * a - a) / 12.0) * e * e;
      // 1 - w^a computed as -expm1(a log w) to keep precision near w = 1.
      const double lw = std::log(w);
      const double num = std::expm1(a * lw) * std::expm1((1.0 - a) * lw);
      return num / (a * (1.0 - a) * e * e);
    }
    case KFamily::Hansen: {
      const double a = *k.param();
      return std::pow(w, -a) * std::pow(0.5 * (1.0 + w), 2.0 * a - 1.0);
    }
  }
  return 0.0;
}

std::vector<KFunction> standard_k_functions() {
  std::vector<KFunction> ks;
  for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) ks.push_back(KFunction::mean_alpha(a));
  ks.push_back(KFunction::bures());
  ks.push_back(KFunction::maximal());
  ks.push_back(KFunction::log());
  for (double a : {-1.0, -0.5, 0.5, 1.5, 2.0}) ks.push_back(KFunction::wyd(a));
  for (double a : {0.0, 0.3, 0.7, 1.0}) ks.push_back(KFunction::hansen(a));
  return ks;
}

}  // namespace qmix
