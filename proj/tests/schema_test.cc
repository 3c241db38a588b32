// Copyright 2026 The xkit Authors
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

#include "xkit/schema.h"

#include <gtest/gtest.h>

#include <functional>

#include "test_util.h"
#include "xkit/error.h"

namespace xkit {
namespace {

ErrorKind kind_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an xkit::Error";
  return ErrorKind::InvalidArgument;
}

std::string message_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.what();
  }
  return {};
}

TEST(schema, povm_round_trip_is_exact) {
  Povm m = random_povm(3, 4, 1);
  Json doc = parse_document(to_document(m).dump(), "povm");
  Povm back = povm_from_document(doc);
  for (size_t a = 0; a < 4; ++a) {
    EXPECT_EQ(back[a].matrix(), m[a].matrix());
  }
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["kind"], "povm");
}

TEST(schema, ensemble_round_trip) {
  Ensemble e = random_ensemble(2, 3, 2);
  Ensemble back = ensemble_from_document(parse_document(to_document(e).dump()));
  EXPECT_EQ(back.priors(), e.priors());
  EXPECT_EQ(back.state(2).matrix(), e.state(2).matrix());
}

TEST(schema, stochastic_map_round_trip) {
  StochasticMap q = random_stochastic_map(3, 2, 3);
  Json doc = to_document(q);
  EXPECT_EQ(doc["kind"], "stochastic_map");
  EXPECT_EQ(stochastic_map_from_document(doc).table(), q.table());
}

TEST(schema, extended_real_encoding) {
  EXPECT_EQ(extended_to_json(ExtendedReal::infinity()), Json({{"inf", true}}));
  EXPECT_EQ(extended_to_json(ExtendedReal::finite(1.5)), Json({{"finite", 1.5}}));
  EXPECT_TRUE(extended_from_json(Json({{"inf", true}})).is_infinite());
  EXPECT_EQ(extended_from_json(Json({{"finite", 2.0}})).value(), 2.0);
  EXPECT_EQ(kind_of([] { extended_from_json(Json(3.0)); }), ErrorKind::ParseError);
}

TEST(schema, header_checks) {
  EXPECT_EQ(kind_of([] { parse_document("not json"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_document(R"({"schema_version": 2, "kind": "povm"})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_document(R"({"kind": "povm"})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_document(R"({"schema_version": 1, "kind": "ensemble"})", "povm"); }),
            ErrorKind::ParseError);
}

TEST(schema, structural_errors_carry_field_paths) {
  Json doc = to_document(testing::qubit_z());
  doc["effects"][1][0][1] = "oops";
  std::string msg = message_of([&] { povm_from_document(doc); });
  EXPECT_NE(msg.find("effects[1][0][1]"), std::string::npos) << msg;

  Json wrong_dim = to_document(testing::qubit_z());
  wrong_dim["dim"] = 3;
  EXPECT_EQ(kind_of([&] { povm_from_document(wrong_dim); }), ErrorKind::ParseError);
}

TEST(schema, invariant_failures_are_validation_errors) {
  Json doc = to_document(testing::qubit_z());
  doc["effects"][1] = doc["effects"][0];
  EXPECT_EQ(kind_of([&] { povm_from_document(doc); }), ErrorKind::ValidationError);

  Json neg = to_document(testing::qubit_z());
  neg["effects"][0] = matrix_to_json(HermitianOperator::diagonal({1.1, 0.0}).matrix());
  neg["effects"][1] = matrix_to_json(HermitianOperator::diagonal({-0.1, 1.0}).matrix());
  std::string msg = message_of([&] { povm_from_document(neg); });
  EXPECT_NE(msg.find("effects[1]"), std::string::npos) << msg;
  EXPECT_NE(msg.find("NotPsd"), std::string::npos) << msg;

  Json e = to_document(testing::orthogonal_pair());
  e["priors"] = Json::array({0.7, 0.7});
  EXPECT_EQ(kind_of([&] { ensemble_from_document(e); }), ErrorKind::ValidationError);
}

TEST(schema, report_round_trip) {
  Report r;
  r.command = "woi";
  r.inputs["povm"] = Json{{"path", "p.json"}, {"sha256", "00"}};
  r.results["woi"] = 0.25;
  r.diagnostics["timing"] = Json{{"elapsed_seconds", 0.1}};
  Report back = Report::from_document(parse_document(r.to_document().dump(), "report"));
  EXPECT_EQ(back, r);
}

TEST(schema, sha256_known_vectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(schema, load_missing_file) {
  EXPECT_EQ(kind_of([] { load_document("/nonexistent/xkit.json"); }), ErrorKind::ParseError);
}

}  // namespace
}  // namespace xkit
