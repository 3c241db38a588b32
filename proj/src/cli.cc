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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "xkit/error.h"
#include "xkit/games.h"
#include "xkit/information.h"
#include "xkit/simulability.h"
#include "xkit/weight.h"

namespace xkit::cli {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json tolerances_json(const Tolerances &tol) {
  return Json{{"herm_tol", tol.herm_tol}, {"psd_tol", tol.psd_tol}, {"feas_tol", tol.feas_tol}};
}

Report make_report(std::string command, const Tolerances &tol) {
  Report r;
  r.command = std::move(command);
  r.diagnostics["tolerances"] = tolerances_json(tol);
  return r;
}

void add_input(Report &r, const std::string &name, const std::string &path, const LoadedDocument &doc) {
  r.inputs[name] = Json{{"path", path}, {"sha256", doc.sha256}};
}

void finish(Report &r, const Stopwatch &clock) {
  r.diagnostics["timing"] = Json{{"elapsed_seconds", clock.seconds()}};
}

Json doubles(const std::vector<double> &v) {
  return Json(v);
}

Json optional_number(std::optional<double> v) {
  return v ? Json(*v) : Json(nullptr);
}

Povm load_povm(Report &r, const std::string &name, const std::string &path, const Tolerances &tol) {
  LoadedDocument doc = load_document(path, "povm");
  add_input(r, name, path, doc);
  return povm_from_document(doc.doc, tol);
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoConvergence:
    case ErrorKind::NumericalInstability:
    case ErrorKind::SingularNormalization:
      return kNumericalFailure;
    default:
      return kInputFailure;
  }
}

std::optional<uint64_t> seed_from_environment() {
  const char *env = std::getenv("XKIT_SEED");
  if (env == nullptr || *env == '\0') {
    return std::nullopt;
  }
  char *end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw Error(ErrorKind::InvalidArgument, "XKIT_SEED must be a nonnegative integer");
  }
  return static_cast<uint64_t>(v);
}

Report woi_command(const std::string &povm_path, const Tolerances &tol) {
  Stopwatch clock;
  Report r = make_report("woi", tol);
  Povm m = load_povm(r, "povm", povm_path, tol);

  PrimalSolution primal = woi_primal(m, tol);
  WeightDecomposition dec = woi_decomposition(m, tol);
  DualStates dual = dual_optimal_states(m);
  Json dual_states = Json::array();
  for (const auto &rho : dual.states) {
    dual_states.push_back(matrix_to_json(rho.matrix()));
  }
  auto uninformative = is_uninformative(m, 1e-6);

  r.results["woi"] = woi(m);
  r.results["primal"] = Json{{"woi", primal.woi}, {"weights", doubles(primal.weights)}};
  r.results["decomposition"] = Json{{"w_star", dec.w_star},
                                    {"q_star", doubles(dec.q_star)},
                                    {"n_star", to_document(dec.n_star)},
                                    {"residual", dec.residual(m)}};
  r.results["dual"] = Json{{"value", dual.value}, {"states", std::move(dual_states)}};
  r.results["uninformative_distribution"] = uninformative ? Json(*uninformative) : Json(nullptr);
  finish(r, clock);
  return r;
}

Report game_command(const std::string &ensemble_path, const std::string &povm_path, const Tolerances &tol) {
  Stopwatch clock;
  Report r = make_report("game", tol);
  LoadedDocument edoc = load_document(ensemble_path, "ensemble");
  add_input(r, "ensemble", ensemble_path, edoc);
  Ensemble e = ensemble_from_document(edoc.doc, tol);
  Povm m = load_povm(r, "povm", povm_path, tol);

  GameReport game = quantum_error(e, m);
  double w = woi(m);
  r.results["p_err_classical"] = game.p_err_classical;
  r.results["p_err_quantum"] = game.p_err_quantum;
  r.results["optimal_assignment"] = game.optimal_assignment;
  r.results["ratio"] = optional_number(game.ratio);
  r.results["degenerate_game"] = !game.ratio.has_value();
  r.results["woi"] = w;
  r.results["ratio_lower_bound"] = 1.0 - w;
  finish(r, clock);
  return r;
}

OptimalGameOutput optimal_game_command(const std::string &povm_path, const Tolerances &tol) {
  Stopwatch clock;
  Report r = make_report("optimal-game", tol);
  Povm m = load_povm(r, "povm", povm_path, tol);

  Ensemble game = optimal_exclusion_game(m);
  double ratio = advantage_ratio(game, m);
  double w = woi(m);
  Json ensemble = to_document(game);
  r.results["ensemble"] = ensemble;
  r.results["ratio"] = ratio;
  r.results["woi"] = w;
  r.results["equality_gap"] = std::abs(ratio - (1.0 - w));
  finish(r, clock);
  return {std::move(ensemble), std::move(r)};
}

Report simulable_command(const std::string &from_path, const std::string &to_path, const SimulableOptions &options,
                         const Tolerances &tol) {
  Stopwatch clock;
  Report r = make_report("simulable", tol);
  Povm m = load_povm(r, "from", from_path, tol);
  Povm n = load_povm(r, "to", to_path, tol);

  SimulabilityResult verdict = check_simulable(m, n, tol);
  r.results["simulable"] = verdict.simulable();
  r.results["lp"] = Json{{"infeasibility", verdict.infeasibility}, {"pivots", verdict.pivots}};
  if (const auto *ok = std::get_if<Simulable>(&verdict.verdict)) {
    r.results["map"] = to_document(ok->map);
    r.results["residual"] = ok->residual;
  } else if (options.witness) {
    WitnessSearchOptions search;
    search.restarts = options.restarts;
    search.seed = options.seed;
    auto witness = find_violating_ensemble(m, n, search, tol);
    r.results["witness"] = witness ? to_document(witness->ensemble) : Json(nullptr);
    r.results["violation"] = witness ? Json(witness->violation) : Json(nullptr);
    r.diagnostics["seed"] = options.seed;
    r.diagnostics["restarts"] = options.restarts;
  }
  finish(r, clock);
  return r;
}

Report info_command(const std::string &povm_path, const InfoOptions &options, const Tolerances &tol) {
  Stopwatch clock;
  Report r = make_report("info", tol);
  Povm m = load_povm(r, "povm", povm_path, tol);

  ExtendedReal formula = excludible_information(m, tol);
  r.results["woi"] = woi(m);
  r.results["excludible_information"] = extended_to_json(formula);
  if (options.direct) {
    DirectSearchResult direct = excludible_information_direct(m, {options.trials, options.seed, 2}, tol);
    r.results["direct"] = extended_to_json(direct.best);
    r.results["direct_constructed"] = extended_to_json(direct.constructed);
    r.results["direct_sampled"] = extended_to_json(direct.sampled);
    ExtendedReal gap = ExtendedReal::infinity();
    if (formula.is_infinite() && direct.best.is_infinite()) {
      gap = ExtendedReal::finite(0.0);
    } else if (formula.is_finite() && direct.best.is_finite()) {
      gap = ExtendedReal::finite(std::abs(formula.value() - direct.best.value()));
    }
    r.results["gap"] = extended_to_json(gap);
    r.diagnostics["seed"] = options.seed;
    r.diagnostics["trials"] = options.trials;
  }
  finish(r, clock);
  return r;
}

VerifyOutput verify_command(VerifyTarget target, const VerifyConfig &config) {
  Stopwatch clock;
  Report r = make_report("verify", config.tol);
  VerifyReport vr = run_verify(target, config);
  Json props = Json::array();
  for (const auto &p : vr.properties) {
    props.push_back(Json{{"name", p.name},
                         {"passed", p.passed},
                         {"total", p.total},
                         {"required", p.required},
                         {"ok", p.ok()},
                         {"worst_margin", p.total ? Json(p.worst_margin) : Json(nullptr)}});
  }
  r.results["target"] = to_string(target);
  r.results["all_passed"] = vr.all_passed();
  r.results["properties"] = std::move(props);
  r.diagnostics["seed"] = config.seed;
  r.diagnostics["trials"] = config.trials;
  r.diagnostics["dims"] = config.dims;
  r.diagnostics["outcomes"] = config.outcomes;
  finish(r, clock);
  return {std::move(r), vr.all_passed()};
}

Json random_command(RandomKind kind, size_t dim, size_t count, uint64_t seed) {
  if (kind == RandomKind::Povm) {
    return to_document(random_povm(dim, count, seed));
  }
  return to_document(random_ensemble(dim, count, seed));
}

namespace {

void write_json(std::ostream &os, const Json &doc) {
  os << doc.dump(2) << '\n';
}

void write_file(const std::string &path, const Json &doc) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  }
  write_json(f, doc);
}

std::string describe(const ExtendedReal &x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"xkit: weight of informativeness, state exclusion and measurement simulability"};
  app.require_subcommand(1);

  Tolerances tol;
  app.add_option("--herm-tol", tol.herm_tol, "Hermiticity tolerance")->capture_default_str();
  app.add_option("--psd-tol", tol.psd_tol, "positivity tolerance")->capture_default_str();
  app.add_option("--feas-tol", tol.feas_tol, "simulation-map reconstruction tolerance")->capture_default_str();

  std::string povm_path;
  std::string ensemble_path;
  std::string from_path;
  std::string to_path;
  std::string output_path;
  uint64_t seed = 1;

  auto *woi_cmd = app.add_subcommand("woi", "weight of informativeness, decomposition and dual states");
  woi_cmd->add_option("povm", povm_path, "POVM document")->required();

  auto *game_cmd = app.add_subcommand("game", "classical and quantum exclusion errors of a game");
  game_cmd->add_option("ensemble", ensemble_path, "ensemble document")->required();
  game_cmd->add_option("povm", povm_path, "POVM document")->required();

  auto *opt_cmd = app.add_subcommand("optimal-game", "exclusion game attaining the optimal advantage");
  opt_cmd->add_option("povm", povm_path, "POVM document")->required();
  opt_cmd->add_option("output", output_path, "file for the ensemble document");

  SimulableOptions sim_options;
  auto *sim_cmd = app.add_subcommand("simulable", "decide whether TO is a post-processing of FROM");
  sim_cmd->add_option("from", from_path, "simulating POVM")->required();
  sim_cmd->add_option("to", to_path, "target POVM")->required();
  sim_cmd->add_flag("--witness", sim_options.witness, "search for a violating game when not simulable");
  sim_cmd->add_option("--restarts", sim_options.restarts, "witness search restarts")->capture_default_str();
  sim_cmd->add_option("--seed", seed, "random seed")->capture_default_str();

  InfoOptions info_options;
  auto *info_cmd = app.add_subcommand("info", "single-shot excludible information");
  info_cmd->add_option("povm", povm_path, "POVM document")->required();
  info_cmd->add_flag("--direct", info_options.direct, "also maximize over encodings directly");
  info_cmd->add_option("--trials", info_options.trials, "random encodings for --direct")->capture_default_str();
  info_cmd->add_option("--seed", seed, "random seed")->capture_default_str();

  VerifyConfig verify_config;
  std::string target_name;
  auto *verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("target", target_name, "lemma | result1 | result2 | result3 | all")->required();
  verify_cmd->add_option("--trials", verify_config.trials, "instances per suite")->capture_default_str();
  verify_cmd->add_option("--dims", verify_config.dims, "Hilbert-space dimensions")->delimiter(',');
  verify_cmd->add_option("--outcomes", verify_config.outcomes, "POVM outcome counts")->delimiter(',');
  verify_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--jobs", verify_config.jobs, "worker threads (0 = all cores)")->capture_default_str();

  std::string random_kind;
  size_t random_dim = 2;
  size_t random_outcomes = 0;
  size_t random_states = 0;
  auto *random_cmd = app.add_subcommand("random", "generate a random POVM or ensemble");
  random_cmd->add_option("kind", random_kind, "povm | ensemble")->required()->check(CLI::IsMember({"povm", "ensemble"}));
  random_cmd->add_option("-d", random_dim, "dimension")->capture_default_str();
  random_cmd->add_option("-o", random_outcomes, "outcomes (povm)");
  random_cmd->add_option("-k", random_states, "states (ensemble)");
  random_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  random_cmd->add_option("output", output_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputFailure;
  }

  try {
    if (auto env = seed_from_environment()) {
      seed = *env;
    }
    if (app.got_subcommand(woi_cmd)) {
      Report r = woi_command(povm_path, tol);
      write_json(out, r.to_document());
      err << "woi = " << r.results["woi"].get<double>() << '\n';
    } else if (app.got_subcommand(game_cmd)) {
      Report r = game_command(ensemble_path, povm_path, tol);
      write_json(out, r.to_document());
      err << "P_err classical = " << r.results["p_err_classical"].get<double>()
          << ", quantum = " << r.results["p_err_quantum"].get<double>();
      if (r.results["degenerate_game"].get<bool>()) {
        err << ", ratio undefined (DegenerateGame)\n";
      } else {
        err << ", ratio = " << r.results["ratio"].get<double>() << '\n';
      }
    } else if (app.got_subcommand(opt_cmd)) {
      OptimalGameOutput o = optimal_game_command(povm_path, tol);
      if (!output_path.empty()) {
        write_file(output_path, o.ensemble);
      }
      write_json(out, o.report.to_document());
      err << "optimal game ratio = " << o.report.results["ratio"].get<double>()
          << " (1 - woi = " << 1.0 - o.report.results["woi"].get<double>() << ")\n";
    } else if (app.got_subcommand(sim_cmd)) {
      sim_options.seed = seed;
      Report r = simulable_command(from_path, to_path, sim_options, tol);
      write_json(out, r.to_document());
      if (r.results["simulable"].get<bool>()) {
        err << "simulable (residual " << r.results["residual"].get<double>() << ")\n";
      } else if (r.results.contains("violation") && !r.results["violation"].is_null()) {
        err << "not simulable; witness violation " << r.results["violation"].get<double>() << '\n';
      } else {
        err << "not simulable\n";
      }
    } else if (app.got_subcommand(info_cmd)) {
      info_options.seed = seed;
      Report r = info_command(povm_path, info_options, tol);
      write_json(out, r.to_document());
      err << "excludible information = " << describe(extended_from_json(r.results["excludible_information"]))
          << " bits\n";
    } else if (app.got_subcommand(verify_cmd)) {
      verify_config.seed = seed;
      verify_config.tol = tol;
      VerifyOutput v = verify_command(parse_verify_target(target_name), verify_config);
      write_json(out, v.report.to_document());
      for (const auto &p : v.report.results["properties"]) {
        err << (p["ok"].get<bool>() ? "PASS " : "FAIL ") << p["name"].get<std::string>() << " "
            << p["passed"].get<size_t>() << "/" << p["total"].get<size_t>() << '\n';
      }
      return v.all_passed ? kSuccess : kVerificationFailure;
    } else if (app.got_subcommand(random_cmd)) {
      bool is_povm = random_kind == "povm";
      size_t count = is_povm ? random_outcomes : random_states;
      if (count == 0) {
        throw Error(ErrorKind::InvalidArgument, is_povm ? "random povm needs -o" : "random ensemble needs -k");
      }
      Json doc = random_command(is_povm ? RandomKind::Povm : RandomKind::Ensemble, random_dim, count, seed);
      if (output_path.empty()) {
        write_json(out, doc);
      } else {
        write_file(output_path, doc);
      }
    }
  } catch (const Error &e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kSuccess;
}

}  // namespace xkit::cli
