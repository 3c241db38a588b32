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

#include "xkit/cli.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.h"
#include "xkit/weight.h"

namespace xkit::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("xkit_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    unsetenv("XKIT_SEED");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string &name, const Json &doc) {
    std::string path = (dir_ / name).string();
    std::ofstream(path) << doc.dump(2);
    return path;
  }

  int invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "xkit");
    std::vector<const char *> argv;
    for (const auto &a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    out_ = out.str();
    err_ = err.str();
    return code;
  }

  Json report() const { return Json::parse(out_); }

  fs::path dir_;
  std::string out_;
  std::string err_;
};

TEST_F(CliTest, woi_examples) {
  ASSERT_EQ(invoke({"woi", write("z.json", to_document(testing::qubit_z()))}), kSuccess) << err_;
  EXPECT_NEAR(report()["results"]["woi"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(report()["kind"], "report");
  EXPECT_EQ(report()["inputs"]["povm"]["sha256"].get<std::string>().size(), 64u);
  EXPECT_TRUE(report()["diagnostics"]["timing"].contains("elapsed_seconds"));

  ASSERT_EQ(invoke({"woi", write("u.json", to_document(testing::uninformative(2, {0.3, 0.7})))}), kSuccess);
  EXPECT_NEAR(report()["results"]["woi"].get<double>(), 0.0, 1e-12);
  EXPECT_FALSE(report()["results"]["uninformative_distribution"].is_null());

  ASSERT_EQ(invoke({"woi", write("d.json", to_document(testing::diagonal_woi_06()))}), kSuccess);
  EXPECT_NEAR(report()["results"]["woi"].get<double>(), 0.6, 1e-12);
}

TEST_F(CliTest, game_examples) {
  std::string pair = write("pair.json", to_document(testing::orthogonal_pair()));
  ASSERT_EQ(invoke({"game", pair, write("z.json", to_document(testing::qubit_z()))}), kSuccess) << err_;
  EXPECT_NEAR(report()["results"]["p_err_quantum"].get<double>(), 0.0, 1e-15);

  std::string e = write("e.json", to_document(random_ensemble(2, 3, 4)));
  ASSERT_EQ(invoke({"game", e, write("u.json", to_document(testing::uninformative(2, {0.5, 0.5})))}), kSuccess);
  EXPECT_NEAR(report()["results"]["ratio"].get<double>(), 1.0, 1e-12);
}

TEST_F(CliTest, degenerate_game_reports_null_ratio) {
  Ensemble e = Ensemble::validate({testing::proj({1, 0}), testing::proj({0, 1})}, {1.0, 0.0});
  ASSERT_EQ(invoke({"game", write("e.json", to_document(e)), write("z.json", to_document(testing::qubit_z()))}),
            kSuccess);
  EXPECT_TRUE(report()["results"]["ratio"].is_null());
  EXPECT_TRUE(report()["results"]["degenerate_game"].get<bool>());
}

TEST_F(CliTest, optimal_game_examples) {
  std::string out = (dir_ / "game.json").string();
  ASSERT_EQ(invoke({"optimal-game", write("z.json", to_document(testing::qubit_z())), out}), kSuccess);
  EXPECT_NEAR(report()["results"]["ratio"].get<double>(), 0.0, 1e-12);
  std::ifstream in(out);
  Ensemble g = ensemble_from_document(Json::parse(in));
  EXPECT_NEAR(g.state(0)(1, 1).real(), 1.0, 1e-12);
  EXPECT_NEAR(g.state(1)(0, 0).real(), 1.0, 1e-12);

  ASSERT_EQ(invoke({"optimal-game", write("u.json", to_document(testing::uninformative(2, {0.5, 0.5})))}),
            kSuccess);
  EXPECT_NEAR(report()["results"]["ratio"].get<double>(), 1.0, 1e-12);

  Povm m = random_povm(3, 3, 11);
  ASSERT_EQ(invoke({"optimal-game", write("m.json", to_document(m))}), kSuccess);
  EXPECT_LE(report()["results"]["equality_gap"].get<double>(), 1e-7);
}

TEST_F(CliTest, simulable_examples) {
  Povm m = random_povm(2, 3, 5);
  std::string mp = write("m.json", to_document(m));
  std::string np = write("n.json", to_document(apply_postprocessing(m, StochasticMap::deterministic({0, 0, 1}, 2))));
  ASSERT_EQ(invoke({"simulable", mp, np}), kSuccess);
  EXPECT_TRUE(report()["results"]["simulable"].get<bool>());
  EXPECT_EQ(report()["results"]["map"]["kind"], "stochastic_map");

  ASSERT_EQ(invoke({"simulable", mp, mp}), kSuccess);
  StochasticMap id = stochastic_map_from_document(report()["results"]["map"]);
  EXPECT_LE(max_abs(apply_postprocessing(m, id)[0].matrix() - m[0].matrix()), 1e-6);

  std::string z = write("z.json", to_document(testing::qubit_z()));
  std::string x = write("x.json", to_document(testing::qubit_x()));
  ASSERT_EQ(invoke({"simulable", z, x, "--witness"}), kSuccess);
  EXPECT_FALSE(report()["results"]["simulable"].get<bool>());
  EXPECT_GE(report()["results"]["violation"].get<double>(), 0.1);
  EXPECT_NO_THROW(ensemble_from_document(report()["results"]["witness"]));
}

TEST_F(CliTest, info_examples) {
  ASSERT_EQ(invoke({"info", write("z.json", to_document(testing::qubit_z()))}), kSuccess);
  EXPECT_EQ(report()["results"]["excludible_information"], Json({{"inf", true}}));

  ASSERT_EQ(invoke({"info", write("u.json", to_document(testing::uninformative(2, {0.5, 0.5})))}), kSuccess);
  EXPECT_NEAR(report()["results"]["excludible_information"]["finite"].get<double>(), 0.0, 1e-12);

  ASSERT_EQ(invoke({"info", write("d.json", to_document(testing::diagonal_woi_06())), "--direct", "--trials", "20"}),
            kSuccess);
  EXPECT_NEAR(report()["results"]["excludible_information"]["finite"].get<double>(), 1.321928, 1e-6);
  EXPECT_LE(report()["results"]["gap"]["finite"].get<double>(), 1e-6);
}

TEST_F(CliTest, verify_small_run) {
  ASSERT_EQ(invoke({"verify", "result1", "--trials", "10", "--dims", "2,3", "--jobs", "2"}), kSuccess) << err_;
  EXPECT_TRUE(report()["results"]["all_passed"].get<bool>());
  for (const auto &p : report()["results"]["properties"]) {
    EXPECT_TRUE(p["ok"].get<bool>()) << p.dump();
    EXPECT_GE(p["worst_margin"].get<double>(), 0.0) << p.dump();
  }
}

TEST_F(CliTest, random_is_deterministic_and_valid) {
  std::string a = (dir_ / "a.json").string();
  std::string b = (dir_ / "b.json").string();
  ASSERT_EQ(invoke({"random", "povm", "-d", "3", "-o", "4", "--seed", "9", a}), kSuccess);
  ASSERT_EQ(invoke({"random", "povm", "-d", "3", "-o", "4", "--seed", "9", b}), kSuccess);
  std::ifstream fa(a);
  std::ifstream fb(b);
  std::string sa((std::istreambuf_iterator<char>(fa)), {});
  std::string sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_EQ(sa, sb);
  EXPECT_NO_THROW(povm_from_document(Json::parse(sa)));

  ASSERT_EQ(invoke({"random", "ensemble", "-d", "2", "-k", "5", "--seed", "3"}), kSuccess);
  Ensemble e = ensemble_from_document(Json::parse(out_));
  for (double p : e.priors()) {
    EXPECT_GE(p, 1e-3 / (1 + 5 * 1e-3) - 1e-15);
  }
}

TEST_F(CliTest, seed_environment_override) {
  setenv("XKIT_SEED", "9", 1);
  ASSERT_EQ(invoke({"random", "povm", "-d", "2", "-o", "2", "--seed", "1"}), kSuccess);
  std::string with_env = out_;
  unsetenv("XKIT_SEED");
  ASSERT_EQ(invoke({"random", "povm", "-d", "2", "-o", "2", "--seed", "9"}), kSuccess);
  EXPECT_EQ(with_env, out_);
  setenv("XKIT_SEED", "abc", 1);
  EXPECT_EQ(invoke({"random", "povm", "-d", "2", "-o", "2"}), kInputFailure);
  unsetenv("XKIT_SEED");
}

TEST_F(CliTest, exit_codes) {
  EXPECT_EQ(invoke({}), kInputFailure);
  EXPECT_EQ(invoke({"woi"}), kInputFailure);
  EXPECT_EQ(invoke({"woi", (dir_ / "missing.json").string()}), kInputFailure);
  EXPECT_NE(err_.find("ParseError"), std::string::npos) << err_;

  Json bad = to_document(testing::qubit_z());
  bad["effects"][1] = bad["effects"][0];
  EXPECT_EQ(invoke({"woi", write("bad.json", bad)}), kInputFailure);
  EXPECT_NE(err_.find("ValidationError"), std::string::npos) << err_;

  EXPECT_EQ(invoke({"verify", "bogus"}), kInputFailure);
  EXPECT_EQ(invoke({"random", "povm", "-d", "2"}), kInputFailure);
  EXPECT_EQ(invoke({"woi", "--help"}), kSuccess);

  EXPECT_EQ(exit_code_for(ErrorKind::NoConvergence), kNumericalFailure);
  EXPECT_EQ(exit_code_for(ErrorKind::NumericalInstability), kNumericalFailure);
  EXPECT_EQ(exit_code_for(ErrorKind::NotPsd), kInputFailure);
}

TEST_F(CliTest, tolerance_flags_apply) {
  Json slightly_off = to_document(testing::qubit_z());
  slightly_off["effects"][0] = matrix_to_json(HermitianOperator::diagonal({1.0 + 1e-5, 0.0}).matrix());
  slightly_off["effects"][1] = matrix_to_json(HermitianOperator::diagonal({-1e-5, 1.0}).matrix());
  std::string p = write("off.json", slightly_off);
  EXPECT_EQ(invoke({"woi", p}), kInputFailure);
  EXPECT_EQ(invoke({"--psd-tol", "1e-4", "woi", p}), kSuccess) << err_;
}

TEST_F(CliTest, binary_smoke) {
  std::string p = write("z.json", to_document(testing::qubit_z()));
  std::string cmd = std::string(XKIT_BINARY) + " woi " + p + " > " + (dir_ / "out.json").string() + " 2>/dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(dir_ / "out.json");
  EXPECT_NEAR(Json::parse(in)["results"]["woi"].get<double>(), 1.0, 1e-12);
  std::string fail = std::string(XKIT_BINARY) + " woi /nonexistent.json 2>/dev/null >/dev/null";
  int status = std::system(fail.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 1);
}

}  // namespace
}  // namespace xkit::cli
