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


#include "qmix/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace qmix {

namespace {

[[noreturn]] void parse_error(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::ParseError, path + ": " + msg);
}

[[noreturn]] void validation_error(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::ValidationError, path + ": " + msg);
}

void require_object(const json& j, const std::string& path, const std::set<std::string>& allowed) {
  if (!j.is_object()) parse_error(path.empty() ? "<root>" : path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) validation_error(path.empty() ? key : path + "." + key, "unknown key");
  }
}

const json& require_key(const json& j, const std::string& key) {
  if (!j.contains(key)) validation_error(key, "missing required key");
  return j.at(key);
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) parse_error(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) parse_error(path, "non-finite number");
  return v;
}

Index dimension(const json& j) {
  const json& d = require_key(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) validation_error("dim", "expected a positive integer");
  return static_cast<Index>(d.get<long long>());
}

std::string format_double(double v) {
  if (v == 0.0) return std::signbit(v) ? "-0.0" : "0.0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void dump_string(const std::string& s, std::string& out) {
  out += json(s).dump();
}

void dump_value(const json& j, int indent, int level, std::string& out) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (level + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * level), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        dump_string(key, out);
        out += indent > 0 ? ": " : ":";
        dump_value(value, indent, level + 1, out);
      }
      out += nl;
      out += close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line to keep matrices readable.
      bool flat = true;
      for (const auto& v : j)
        if (v.is_structured() && !(v.is_array() && v.size() == 2 && v[0].is_number())) flat = false;
      out += "[";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat ? (indent > 0 ? ", " : ",") : ",";
        if (!flat) {
          out += nl;
          out += pad;
        }
        first = false;
        dump_value(v, flat ? 0 : indent, level + 1, out);
      }
      if (!flat) {
        out += nl;
        out += close_pad;
      }
      out += "]";
      return;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

json real_matrix_to_json(const RealMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const std::string& path, Index dim) {
  if (!j.is_array() || j.empty()) parse_error(path, "expected a non-empty array of rows");
  const Index rows = static_cast<Index>(j.size());
  const json& first = j[0];
  if (!first.is_array()) parse_error(path, "expected rows to be arrays");
  const Index cols = static_cast<Index>(first.size());
  if (rows != cols)
    parse_error(path, "matrix is " + std::to_string(rows) + "x" + std::to_string(cols) + ", expected square");
  if (dim > 0 && rows != dim)
    parse_error(path, "matrix is " + std::to_string(rows) + "x" + std::to_string(cols) + ", expected " +
                          std::to_string(dim) + "x" + std::to_string(dim));
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      parse_error(rpath, "row has " + std::to_string(row.is_array() ? row.size() : 0) + " entries, expected " +
                             std::to_string(cols));
    for (Index c = 0; c < cols; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      const std::string epath = rpath + "[" + std::to_string(c) + "]";
      if (e.is_number()) {
        m(r, c) = number(e, epath);
      } else if (e.is_array() && e.size() == 2) {
        m(r, c) = cplx(number(e[0], epath + "[0]"), number(e[1], epath + "[1]"));
      } else {
        parse_error(epath, "expected [re, im]");
      }
    }
  }
  return m;
}

json channel_to_json(const QuantumChannel& t) {
  json j;
  j["dim"] = t.dim();
  json kraus = json::array();
  for (const Matrix& a : t.kraus()) kraus.push_back(matrix_to_json(a));
  j["kraus"] = kraus;
  return j;
}

QuantumChannel channel_from_json(const json& j) {
  require_object(j, "", {"dim", "kraus"});
  const Index d = dimension(j);
  const json& kraus = require_key(j, "kraus");
  if (!kraus.is_array() || kraus.empty()) parse_error("kraus", "expected a non-empty array of matrices");
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < kraus.size(); ++i)
    ops.push_back(matrix_from_json(kraus[i], "kraus[" + std::to_string(i) + "]", d));
  return QuantumChannel::from_kraus(std::move(ops));
}

json liouvillian_to_json(const Liouvillian& l) {
  json j;
  j["dim"] = l.dim();
  j["hamiltonian"] = matrix_to_json(l.hamiltonian());
  json jumps = json::array();
  for (const Matrix& v : l.jumps()) jumps.push_back(matrix_to_json(v));
  j["jumps"] = jumps;
  return j;
}

Liouvillian liouvillian_from_json(const json& j) {
  require_object(j, "", {"dim", "hamiltonian", "jumps"});
  const Index d = dimension(j);
  Matrix h = matrix_from_json(require_key(j, "hamiltonian"), "hamiltonian", d);
  std::vector<Matrix> jumps;
  if (j.contains("jumps")) {
    const json& arr = j.at("jumps");
    if (!arr.is_array()) parse_error("jumps", "expected an array of matrices");
    for (std::size_t i = 0; i < arr.size(); ++i)
      jumps.push_back(matrix_from_json(arr[i], "jumps[" + std::to_string(i) + "]", d));
  }
  return Liouvillian(std::move(h), std::move(jumps));
}

json kfunction_to_json(const KFunction& k) {
  json j;
  j["family"] = k.family_name();
  if (k.param()) j["param"] = *k.param();
  return j;
}

KFunction kfunction_from_json(const json& j) {
  require_object(j, "k", {"family", "param"});
  const json& fam = require_key(j, "family");
  if (!fam.is_string()) parse_error("k.family", "expected a string");
  std::optional<double> param;
  if (j.contains("param")) param = number(j.at("param"), "k.param");
  return KFunction::from_family(fam.get<std::string>(), param);
}

KFunction kfunction_from_string(const std::string& s) {
  if (!s.empty() && s.front() == '{') return kfunction_from_json(parse_json_text(s, "--k"));
  const auto colon = s.find(':');
  if (colon == std::string::npos) return KFunction::from_family(s, std::nullopt);
  const std::string num = s.substr(colon + 1);
  double v = 0.0;
  const auto res = std::from_chars(num.data(), num.data() + num.size(), v);
  if (res.ec != std::errc() || res.ptr != num.data() + num.size())
    throw Error(ErrorKind::ValidationError, "--k: cannot parse parameter '" + num + "'");
  return KFunction::from_family(s.substr(0, colon), v);
}

json density_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

RealMatrix stochastic_from_json(const json& j) {
  const json* rows = &j;
  if (j.is_object()) {
    require_object(j, "", {"P"});
    rows = &require_key(j, "P");
  }
  if (!rows->is_array() || rows->empty()) parse_error("P", "expected a non-empty array of rows");
  const Index n = static_cast<Index>(rows->size());
  RealMatrix p(n, n);
  for (Index i = 0; i < n; ++i) {
    const json& row = (*rows)[static_cast<std::size_t>(i)];
    const std::string rpath = "P[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != n) parse_error(rpath, "expected a square matrix");
    for (Index c = 0; c < n; ++c)
      p(i, c) = number(row[static_cast<std::size_t>(c)], rpath + "[" + std::to_string(c) + "]");
  }
  return p;
}

json extended_to_json(const ExtendedReal& x) {
  if (x.is_infinite()) return "+inf";
  return x.value();
}

json mixing_report_to_json(const MixingReport& r) {
  json j;
  j["s1"] = r.s1;
  j["chi2"] = r.chi2_initial;
  if (r.l1) j["l1"] = *r.l1;
  if (r.lambda_top) j["lambda_top"] = *r.lambda_top;
  if (r.mixing_time_estimate)
    j["mixing_time_estimate"] = *r.mixing_time_estimate;
  else
    j["mixing_time_estimate"] = nullptr;
  j["violations"] = r.violations;
  json rows = json::array();
  for (const MixingRow& row : r.rows) {
    json x;
    x["n_or_t"] = row.step;
    x["bound"] = row.bound;
    x["actual"] = row.actual;
    rows.push_back(x);
  }
  j["rows"] = rows;
  return j;
}

std::string mixing_report_to_csv(const MixingReport& r) {
  std::string out = "step,bound,actual\n";
  for (const MixingRow& row : r.rows) {
    out += format_double(row.step) + "," + format_double(row.bound) + "," + format_double(row.actual) + "\n";
  }
  return out;
}

json db_report_to_json(const DetailedBalanceReport& r, bool include_matrix) {
  json j;
  j["k"] = kfunction_to_json(r.k);
  j["residual_norm"] = r.residual_norm;
  j["holds"] = r.holds;
  if (include_matrix) j["residual_matrix"] = matrix_to_json(r.residual_matrix);
  return j;
}

json cheeger_report_to_json(const CheegerReport& r) {
  json j;
  j["h"] = r.h;
  j["lambda1"] = r.lambda1;
  j["lower"] = r.lower();
  j["upper"] = r.upper();
  j["bounds_ok"] = r.bounds_ok;
  j["subset"] = r.subset;
  j["projector"] = matrix_to_json(r.minimizing_projector);
  return j;
}

json estimate_to_json(const ContractionEstimate& e) {
  json j;
  j["value"] = e.value;
  j["kind"] = to_string(e.kind);
  j["trials"] = e.trials;
  json w = json::array();
  for (const Matrix& m : e.witness) {
    if (m.cols() == 1) {
      json v = json::array();
      for (Index i = 0; i < m.rows(); ++i) v.push_back(json::array({m(i, 0).real(), m(i, 0).imag()}));
      w.push_back(v);
    } else {
      w.push_back(matrix_to_json(m));
    }
  }
  j["witness"] = w;
  return j;
}

json classification_to_json(const QuantumChannel& t) {
  const ChannelClass& c = t.classification();
  json j;
  j["unital"] = c.unital;
  j["primitive"] = c.primitive;
  json per = json::array();
  for (const cplx& l : c.peripheral_eigenvalues) per.push_back(json::array({l.real(), l.imag()}));
  j["peripheral_eigenvalues"] = per;
  return j;
}

std::string dump_json(const json& j, int indent) {
  std::string out;
  dump_value(j, indent, 0, out);
  out += "\n";
  return out;
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, source + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ValidationError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::ValidationError, "cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw Error(ErrorKind::ValidationError, "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorKind::ValidationError, "cannot move output into place at '" + path + "'");
  }
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

}  // namespace qmix
