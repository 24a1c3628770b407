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


#include "qmix/catalog.hpp"
#include "qmix/commands.hpp"
#include "qmix/io.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

namespace qmix {
namespace {

using testing::max_abs_diff;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

TEST(Json, ChannelRoundTrip) {
  const QuantumChannel t = paper_qubit_channel();
  const QuantumChannel back = channel_from_json(parse_json_text(dump_json(channel_to_json(t)), "test"));
  EXPECT_LT(max_abs_diff(back.superop().matrix(), t.superop().matrix()), 1e-15);
}

TEST(Json, GeneratorRoundTrip) {
  const Liouvillian l = damped_qubit_generator(1.0, 0.3);
  const Liouvillian back = liouvillian_from_json(liouvillian_to_json(l));
  EXPECT_LT(max_abs_diff(back.superop().matrix(), l.superop().matrix()), 1e-15);
}

TEST(Json, StrictParsing) {
  const json extra = json::parse(R"({"dim": 1, "kraus": [[[[1, 0]]]], "extra": 1})");
  EXPECT_EQ(kind_of([&] { channel_from_json(extra); }), ErrorKind::ValidationError);
  const json ragged = json::parse(R"({"dim": 2, "kraus": [[[[1, 0]], [[0, 0], [1, 0]]]]})");
  try {
    channel_from_json(ragged);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("kraus[0]"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([] { parse_json_text("{", "inline"); }), ErrorKind::ParseError);
}

TEST(Json, KFunctionStrings) {
  EXPECT_EQ(kfunction_from_string("bures"), KFunction::bures());
  EXPECT_EQ(kfunction_from_string("mean-alpha:0.25"), KFunction::mean_alpha(0.25));
  EXPECT_EQ(kfunction_from_string(R"({"family": "wyd", "param": 0.5})"), KFunction::wyd(0.5));
  EXPECT_EQ(kfunction_from_json(kfunction_to_json(KFunction::hansen(0.3))), KFunction::hansen(0.3));
  EXPECT_THROW(kfunction_from_string("mean-alpha:x"), Error);
}

TEST(Json, NumberFormatting) {
  json j = json::object();
  j["one"] = 1.0;
  j["third"] = 1.0 / 3.0;
  j["inf"] = extended_to_json(ExtendedReal::infinity());
  const std::string s = dump_json(j, -1);
  EXPECT_NE(s.find("1.0"), std::string::npos) << s;
  EXPECT_NE(s.find("0.33333333333333331"), std::string::npos) << s;
  EXPECT_NE(s.find("\"+inf\""), std::string::npos) << s;
}

TEST(Json, StochasticForms) {
  const RealMatrix a = stochastic_from_json(json::parse("[[0.9, 0.2], [0.1, 0.8]]"));
  const RealMatrix b = stochastic_from_json(json::parse(R"({"P": [[0.9, 0.2], [0.1, 0.8]]})"));
  EXPECT_EQ(a, b);
  EXPECT_DOUBLE_EQ(a(1, 0), 0.1);
}

TEST(Io, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Io, AtomicWrite) {
  const auto path = std::filesystem::temp_directory_path() / "qmix_io_test.txt";
  write_file_atomic(path.string(), "hello");
  EXPECT_EQ(read_file(path.string()), "hello");
  std::filesystem::remove(path);
  EXPECT_EQ(kind_of([&] { read_file(path.string()); }), ErrorKind::ValidationError);
}

TEST(Io, CsvHeader) {
  const MixingReport r =
      mixing_bound(paper_qubit_channel(), DensityMatrix::basis_state(2, 0), KFunction::bures(), 3);
  const std::string csv = mixing_report_to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "step,bound,actual");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(Commands, NamedChannels) {
  EXPECT_EQ(load_channel("paper-qubit").channel.dim(), 2);
  EXPECT_EQ(load_channel("identity:3").channel.dim(), 3);
  const QuantumChannel dep = load_channel("depolarizing:0.25").channel;
  EXPECT_LT(max_abs_diff(dep.superop().matrix(), depolarizing_channel(2, 0.25).superop().matrix()), 1e-15);
  EXPECT_EQ(kind_of([] { load_channel("depolarizing:abc"); }), ErrorKind::ValidationError);
  EXPECT_EQ(load_generator("damped-qubit:1:0.5").generator.dim(), 2);
}

TEST(Commands, MixIsDeterministic) {
  MixOptions o;
  o.channel = "paper-qubit";
  o.n = 10;
  const CommandOutput a = cmd_mix(o), b = cmd_mix(o);
  EXPECT_EQ(a.text, b.text);
  EXPECT_EQ(a.exit_code, kExitOk);
  const json j = json::parse(a.text);
  EXPECT_EQ(j["command"], "mix");
  EXPECT_EQ(j["results"]["rows"].size(), 11u);
}

TEST(Commands, VerifyFaultInjectionFails) {
  VerifyOptions o;
  o.suite = "metric";
  o.trials = 5;
  EXPECT_EQ(cmd_verify(o).exit_code, kExitOk);
  o.fault = "omega-sign";
  const CommandOutput out = cmd_verify(o);
  EXPECT_EQ(out.exit_code, kExitProperty);
  EXPECT_FALSE(json::parse(out.text)["results"]["passed"].get<bool>());
  o.suite = "nope";
  EXPECT_EQ(kind_of([&] { cmd_verify(o); }), ErrorKind::UnknownSuite);
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(exit_code_for(Error(ErrorKind::ParseError, "x")), kExitValidation);
  EXPECT_EQ(exit_code_for(Error(ErrorKind::InvariantViolation, "x")), kExitInternal);
}

}  // namespace
}  // namespace qmix
