#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "zkqbc/analysis.hpp"
#include "zkqbc/batch.hpp"
#include "zkqbc/dimacs.hpp"
#include "zkqbc/graph.hpp"
#include "zkqbc/protocol.hpp"

namespace zkqbc::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  bool json = false;
  std::uint64_t seed = 1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::optional<double> phi;
  std::optional<double> theta;
  std::optional<double> mean_photons;
  std::optional<double> efficiency;
  std::optional<double> dark_rate;
  std::vector<double> branch_weights;
  std::string policy = "impossibility";
};

struct AnalyzeOptions {
  double escape = analysis::kNominalEscape;
  std::vector<std::uint64_t> m_values{3, 6, 10, 15, 30, 100};
  std::string objective = "average";
};

struct GraphRunOptions {
  std::string graph_path;
  std::optional<std::uint64_t> rounds;
  std::uint64_t trials = 10000;
  std::string mode = "physical";
  double escape = analysis::kNominalEscape;
  std::optional<double> pb_override;
};

void add_common(CLI::App& cmd, CommonOptions& o) {
  cmd.add_flag("--json", o.json, "Emit a single JSON document on stdout");
  cmd.add_option("--seed", o.seed, "Random seed");
  cmd.add_option("--threads", o.threads, "Worker threads for batched executions")->check(CLI::PositiveNumber);
  cmd.add_option("--phi", o.phi, "Base polarization angle (rad)");
  cmd.add_option("--theta", o.theta, "Angular step between protocol states (rad)");
  cmd.add_option("--mean-photons", o.mean_photons, "Mean photon number alpha^2");
  cmd.add_option("--efficiency", o.efficiency, "Detector efficiency in [0, 1]");
  cmd.add_option("--dark-rate", o.dark_rate, "Mean dark counts per detector per shot");
  cmd.add_option("--branch-weights", o.branch_weights, "Three splitter branch fractions")->expected(3);
  cmd.add_option("--policy", o.policy, "Unveil verification policy")
      ->check(CLI::IsMember({"impossibility", "strict"}));
}

optics::ApparatusParams make_params(const CommonOptions& o) {
  optics::ApparatusParams p;
  if (o.phi) p.phi = *o.phi;
  if (o.theta) p.theta = *o.theta;
  if (o.mean_photons) p.mean_photon = *o.mean_photons;
  if (o.efficiency) p.efficiency = *o.efficiency;
  if (o.dark_rate) p.dark_rate = *o.dark_rate;
  if (!o.branch_weights.empty()) {
    for (std::size_t k = 0; k < 3; ++k) p.branch_weights[k] = o.branch_weights[k];
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return p;
}

qbc::VerificationPolicy make_policy(const CommonOptions& o) {
  return o.policy == "strict" ? qbc::VerificationPolicy::StrictHorizontal
                              : qbc::VerificationPolicy::ImpossibilityOnly;
}

json params_json(const optics::ApparatusParams& p, const CommonOptions& o) {
  return json{{"phi", p.phi},
              {"theta", p.theta},
              {"mean_photons", p.mean_photon},
              {"branch_weights", p.branch_weights},
              {"efficiency", p.efficiency},
              {"dark_rate", p.dark_rate},
              {"policy", o.policy}};
}

graph::Graph load_graph(const std::string& path) {
  try {
    return dimacs::load(path);
  } catch (const dimacs::ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

json graph_json(const std::string& path, const graph::Graph& g) {
  return json{{"path", std::filesystem::path(path).filename().string()},
              {"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"connected", g.is_connected()}};
}

void warn(const graph::Graph& g, std::ostream& err) {
  for (const auto& w : g.validation_warnings()) fmt::print(err, "warning: {}\n", w);
}

std::uint64_t rounds_for(const graph::Graph& g, const std::optional<std::uint64_t>& override) {
  protocol::ProtocolConfig cfg;
  cfg.rounds = override;
  try {
    return cfg.resolved_rounds(g);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

double standard_error(double p, std::uint64_t n) { return std::sqrt(p * (1.0 - p) / static_cast<double>(n)); }

json z_score(double observed, double predicted, std::uint64_t n) {
  const double se = standard_error(predicted, n);
  if (se == 0.0) return observed == predicted ? json(0.0) : json(nullptr);
  return (observed - predicted) / se;
}

std::string clicks_string(const optics::ClickRecord& r) {
  std::string s = "h=";
  for (bool b : r.h_click) s.push_back(b ? '1' : '0');
  s += " v=";
  for (bool b : r.v_click) s.push_back(b ? '1' : '0');
  return s;
}

std::string fmt_number(const json& v) {
  if (v.is_null()) return "n/a";
  if (v.is_number_float()) return fmt::format("{:.6g}", v.get<double>());
  return v.dump();
}

// ---------------------------------------------------------------------------

json cmd_analyze(const CommonOptions& co, const AnalyzeOptions& ao) {
  const auto params = make_params(co);
  const auto policy = make_policy(co);
  if (!(ao.escape >= 0.0 && ao.escape <= 1.0)) throw InputError("--escape must lie in [0, 1]");

  json report;
  report["command"] = "analyze";
  json config = params_json(params, co);
  config["escape"] = ao.escape;
  config["objective"] = ao.objective;
  report["config"] = config;

  if (params.dark_rate == 0.0) {
    report["pb"] = analysis::analytic_pb(params);
    json id = json::array();
    for (int j = 0; j < 3; ++j) id.push_back(analysis::identification_probability(j, params));
    report["identification"] = id;
  } else {
    report["pb"] = nullptr;
    report["identification"] = nullptr;
  }

  json matrix = json::array();
  for (int j = 0; j < 3; ++j) {
    json row = json::array();
    for (int k = 0; k < 3; ++k) row.push_back(analysis::analytic_escape(j, k, params, policy));
    matrix.push_back(row);
  }
  report["escape_matrix"] = matrix;

  analysis::CheatSearchOptions search;
  search.objective =
      ao.objective == "maxmin" ? analysis::CheatObjective::MaxMin : analysis::CheatObjective::Average;
  json cheats = json::array();
  for (auto targets : {std::array{0, 1}, std::array{0, 2}, std::array{1, 2}}) {
    const auto rep = analysis::optimal_cheat_state(targets, params, search);
    cheats.push_back(json{{"targets", rep.targets},
                          {"psi", rep.psi},
                          {"h_amp", rep.best_state.h_amp},
                          {"v_amp", rep.best_state.v_amp},
                          {"escape_probs", rep.escape_probs},
                          {"objective", rep.objective}});
  }
  report["cheat_states"] = cheats;

  json table = json::array();
  for (std::uint64_t m : ao.m_values) {
    if (m == 0) throw InputError("--m must be >= 1");
    table.push_back(json{{"m", m},
                         {"rounds", m * m},
                         {"p_escape", ao.escape},
                         {"round_probability", analysis::round_cheat_probability(m, ao.escape)},
                         {"total_probability", analysis::total_cheat_probability(m, ao.escape, m * m)},
                         {"exp_approx", analysis::exponential_soundness_approx(m, ao.escape)},
                         {"exponent_gap", analysis::soundness_exponent_gap(m, ao.escape)}});
  }
  report["soundness_table"] = table;
  return report;
}

void print_analyze(const json& r, std::ostream& out) {
  fmt::print(out, "P_B (unaided identification): {}\n", fmt_number(r["pb"]));
  if (!r["identification"].is_null()) {
    const auto& id = r["identification"];
    fmt::print(out, "  per state: {:.6f} {:.6f} {:.6f}\n", id[0].get<double>(), id[1].get<double>(),
               id[2].get<double>());
  }
  fmt::print(out, "\nEscape probability (row = sent, column = claimed):\n");
  for (const auto& row : r["escape_matrix"]) {
    fmt::print(out, "  {:.6f} {:.6f} {:.6f}\n", row[0].get<double>(), row[1].get<double>(),
               row[2].get<double>());
  }
  fmt::print(out, "\nBest single-state cheat on the honest-energy circle:\n");
  for (const auto& c : r["cheat_states"]) {
    fmt::print(out, "  targets ({},{})  psi={:.7f}  escapes=({:.6f}, {:.6f}, {:.6f})  objective={:.6f}\n",
               c["targets"][0].get<int>(), c["targets"][1].get<int>(), c["psi"].get<double>(),
               c["escape_probs"][0].get<double>(), c["escape_probs"][1].get<double>(),
               c["escape_probs"][2].get<double>(), c["objective"].get<double>());
  }
  fmt::print(out, "\nSoundness (p_escape = {}):\n", fmt_number(r["config"]["escape"]));
  fmt::print(out, "  {:>6} {:>8} {:>12} {:>14} {:>14} {:>10}\n", "m", "rounds", "per-round", "total",
             "exp approx", "log gap");
  for (const auto& row : r["soundness_table"]) {
    fmt::print(out, "  {:>6} {:>8} {:>12.6g} {:>14.6g} {:>14.6g} {:>10.5f}\n", row["m"].get<std::uint64_t>(),
               row["rounds"].get<std::uint64_t>(), row["round_probability"].get<double>(),
               row["total_probability"].get<double>(), row["exp_approx"].get<double>(),
               row["exponent_gap"].get<double>());
  }
}

// ---------------------------------------------------------------------------

struct RunOutcome {
  json report;
  int exit_code = kSuccess;
};

RunOutcome cmd_run(const CommonOptions& co, const GraphRunOptions& go, std::ostream& err) {
  const auto params = make_params(co);
  const auto g = load_graph(go.graph_path);
  warn(g, err);
  if (g.vertex_count() > graph::kMaxExhaustiveVertices) {
    throw PreconditionError("graph too large for the exhaustive coloring oracle");
  }
  const auto coloring = graph::brute_force_3color(g);
  if (!coloring) throw PreconditionError("graph is not 3-colorable; try the 'soundness' subcommand");

  protocol::ProtocolConfig cfg;
  cfg.rounds = rounds_for(g, go.rounds);
  cfg.seed = co.seed;
  cfg.policy = make_policy(co);
  cfg.params = params;

  protocol::HonestProver prover(g, *coloring);
  protocol::Verifier verifier;
  const auto res = protocol::run_protocol(g, prover, verifier, cfg);

  json report;
  report["command"] = "run";
  json config = params_json(params, co);
  config["graph"] = graph_json(go.graph_path, g);
  config["seed"] = co.seed;
  config["rounds"] = res.rounds;
  report["config"] = config;
  report["coloring"] = coloring->to_string();
  report["accepted"] = res.accepted;
  report["rounds"] = res.rounds;
  report["rejected_rounds"] = res.rejected_rounds;

  json rounds = json::array();
  for (std::size_t i = 0; i < res.transcripts.size(); ++i) {
    const auto& t = res.transcripts[i];
    json row;
    row["round"] = i;
    if (t.challenge) {
      const auto& e = g.edge(t.challenge->edge_index);
      row["edge"] = json::array({e.u + 1, e.v + 1});
      row["claims"] = json::array({t.unveil->claim_u.state_index, t.unveil->claim_v.state_index});
    } else {
      row["edge"] = nullptr;
      row["claims"] = nullptr;
    }
    row["verdict"] = t.verdict.accepted ? "accept" : "reject";
    row["reason"] = t.verdict.reason ? json(std::string(protocol::to_string(*t.verdict.reason))) : json(nullptr);
    json clicks = json::array();
    for (const auto& c : t.click_records) clicks.push_back(clicks_string(c));
    row["clicks"] = clicks;
    rounds.push_back(row);
  }
  report["transcript"] = rounds;
  return {report, res.accepted ? kSuccess : kProofRejected};
}

void print_run(const json& r, std::ostream& out) {
  const auto& g = r["config"]["graph"];
  fmt::print(out, "graph {} (n={}, m={}), coloring {}\n", g["path"].get<std::string>(),
             g["vertices"].get<std::uint64_t>(), g["edges"].get<std::uint64_t>(),
             r["coloring"].get<std::string>());
  fmt::print(out, "{:>6}  {:>9}  {:>7}  {}\n", "round", "edge", "claims", "verdict");
  for (const auto& row : r["transcript"]) {
    std::string edge = "-";
    std::string claims = "-";
    if (!row["edge"].is_null()) {
      edge = fmt::format("{}-{}", row["edge"][0].get<int>(), row["edge"][1].get<int>());
      claims = fmt::format("{},{}", row["claims"][0].get<int>(), row["claims"][1].get<int>());
    }
    std::string verdict = row["verdict"].get<std::string>();
    if (!row["reason"].is_null()) verdict += " (" + row["reason"].get<std::string>() + ")";
    fmt::print(out, "{:>6}  {:>9}  {:>7}  {}\n", row["round"].get<std::uint64_t>(), edge, claims, verdict);
  }
  fmt::print(out, "{} after {} rounds ({} rejected)\n", r["accepted"].get<bool>() ? "ACCEPTED" : "REJECTED",
             r["rounds"].get<std::uint64_t>(), r["rejected_rounds"].get<std::uint64_t>());
}

// ---------------------------------------------------------------------------

json cmd_soundness(const CommonOptions& co, const GraphRunOptions& go, std::ostream& err) {
  const auto params = make_params(co);
  const auto policy = make_policy(co);
  if (go.trials == 0) throw InputError("--trials must be >= 1");
  if (!(go.escape >= 0.0 && go.escape <= 1.0)) throw InputError("--escape must lie in [0, 1]");
  const auto g = load_graph(go.graph_path);
  warn(g, err);
  if (g.vertex_count() > graph::kMaxExhaustiveVertices) {
    throw PreconditionError("graph too large for the exhaustive coloring oracle");
  }
  auto near = graph::best_near_coloring(g);
  if (near.bad_edges.empty()) throw PreconditionError("graph is 3-colorable; soundness needs a non-colorable graph");

  const bool synthetic = go.mode == "synthetic";
  protocol::ProtocolConfig cfg;
  cfg.rounds = rounds_for(g, go.rounds);
  cfg.seed = co.seed;
  cfg.policy = policy;
  cfg.params = params;
  if (synthetic) cfg.synthetic_escape = go.escape;

  const auto tally = protocol::run_batch(
      g, [&] { return std::make_unique<protocol::CheatingProver>(g, near); }, cfg, go.trials, co.threads);

  const std::uint64_t m = g.edge_count();
  const std::uint64_t rounds = *cfg.rounds;
  const double p_escape = synthetic ? go.escape : protocol::CheatingProver::expected_escape(params, policy);
  const double predicted = analysis::total_cheat_probability(m, p_escape, rounds, near.bad_edges.size());
  const double rate = static_cast<double>(tally.accepted) / static_cast<double>(tally.executions);

  json report;
  report["command"] = "soundness";
  json config = params_json(params, co);
  config["graph"] = graph_json(go.graph_path, g);
  config["seed"] = co.seed;
  config["rounds"] = rounds;
  config["trials"] = go.trials;
  config["mode"] = go.mode;
  report["config"] = config;
  report["near_coloring"] = near.coloring.to_string();
  report["bad_edges"] = near.bad_edges.size();
  report["trials"] = tally.executions;
  report["accepted"] = tally.accepted;
  report["acceptance_rate"] = rate;
  report["standard_error"] = standard_error(rate, tally.executions);
  report["p_escape"] = p_escape;
  report["round_probability"] = analysis::round_cheat_probability(m, p_escape, near.bad_edges.size());
  report["predicted"] = predicted;
  report["exp_approx"] =
      rounds == m * m && near.bad_edges.size() == 1 ? json(analysis::exponential_soundness_approx(m, p_escape))
                                                    : json(nullptr);
  report["z_score"] = z_score(rate, predicted, tally.executions);
  return report;
}

void print_soundness(const json& r, std::ostream& out) {
  const auto& c = r["config"];
  fmt::print(out, "graph {} (m={}), {} mode, {} rounds, {} trials\n", c["graph"]["path"].get<std::string>(),
             c["graph"]["edges"].get<std::uint64_t>(), c["mode"].get<std::string>(),
             c["rounds"].get<std::uint64_t>(), r["trials"].get<std::uint64_t>());
  fmt::print(out, "near-coloring {} with {} bad edge(s), p_escape = {:.6f}\n", r["near_coloring"].get<std::string>(),
             r["bad_edges"].get<std::uint64_t>(), r["p_escape"].get<double>());
  fmt::print(out, "empirical acceptance  {:.6f} +/- {:.6f}\n", r["acceptance_rate"].get<double>(),
             r["standard_error"].get<double>());
  fmt::print(out, "predicted             {:.6f}  (per round {:.6f})\n", r["predicted"].get<double>(),
             r["round_probability"].get<double>());
  fmt::print(out, "exp approximation     {}\n", fmt_number(r["exp_approx"]));
  fmt::print(out, "z-score               {}\n", fmt_number(r["z_score"]));
}

// ---------------------------------------------------------------------------

json cmd_hiding(const CommonOptions& co, const GraphRunOptions& go, std::ostream& err) {
  const auto params = make_params(co);
  if (go.trials == 0) throw InputError("--trials must be >= 1");
  if (go.pb_override && !(*go.pb_override >= 0.0 && *go.pb_override <= 1.0)) {
    throw InputError("--pb-override must lie in [0, 1]");
  }
  const auto g = load_graph(go.graph_path);
  warn(g, err);
  if (g.vertex_count() > graph::kMaxExhaustiveVertices) {
    throw PreconditionError("graph too large for the exhaustive coloring oracle");
  }
  const auto coloring = graph::brute_force_3color(g);
  if (!coloring) throw PreconditionError("graph is not 3-colorable; hiding needs an honest prover");
  if (params.dark_rate > 0.0 && !go.pb_override) {
    throw PreconditionError("analytic P_B needs dark_rate = 0; pass --pb-override");
  }

  protocol::ProtocolConfig cfg;
  cfg.rounds = rounds_for(g, go.rounds);
  cfg.seed = co.seed;
  cfg.policy = make_policy(co);
  cfg.params = params;

  const auto tally = protocol::run_batch(
      g, [&] { return std::make_unique<protocol::HonestProver>(g, *coloring); }, cfg, go.trials, co.threads);

  const std::uint64_t n = g.vertex_count();
  const std::uint64_t rounds = *cfg.rounds;
  const double pb = go.pb_override ? *go.pb_override : analysis::analytic_pb(params);
  const double formula = analysis::hiding_probability(n, pb, rounds);
  const double rate = static_cast<double>(tally.fully_identified) / static_cast<double>(tally.executions);

  json report;
  report["command"] = "hiding";
  json config = params_json(params, co);
  config["graph"] = graph_json(go.graph_path, g);
  config["seed"] = co.seed;
  config["rounds"] = rounds;
  config["trials"] = go.trials;
  report["config"] = config;
  report["coloring"] = coloring->to_string();
  report["trials"] = tally.executions;
  report["successes"] = tally.fully_identified;
  report["rate"] = rate;
  report["standard_error"] = standard_error(rate, tally.executions);
  report["pb"] = pb;
  report["pb_source"] = go.pb_override ? "override" : "analytic";
  report["per_round_formula"] = std::pow(pb, static_cast<double>(n));
  report["formula"] = formula;
  report["z_score"] = z_score(rate, formula, tally.executions);
  if (params.dark_rate == 0.0) {
    const double exact = analysis::hiding_probability_exact(coloring->class_sizes(), params, rounds);
    report["exact_prediction"] = exact;
    report["z_score_exact"] = z_score(rate, exact, tally.executions);
  } else {
    report["exact_prediction"] = nullptr;
    report["z_score_exact"] = nullptr;
  }
  return report;
}

void print_hiding(const json& r, std::ostream& out) {
  const auto& c = r["config"];
  fmt::print(out, "graph {} (n={}), {} rounds, {} trials, coloring {}\n", c["graph"]["path"].get<std::string>(),
             c["graph"]["vertices"].get<std::uint64_t>(), c["rounds"].get<std::uint64_t>(),
             r["trials"].get<std::uint64_t>(), r["coloring"].get<std::string>());
  fmt::print(out, "empirical full identification  {:.6f} +/- {:.6f}\n", r["rate"].get<double>(),
             r["standard_error"].get<double>());
  fmt::print(out, "pb ({})                   {:.6f}   pb^n = {:.6g}\n", r["pb_source"].get<std::string>(),
             r["pb"].get<double>(), r["per_round_formula"].get<double>());
  fmt::print(out, "1-(1-pb^n)^rounds              {:.6f}   z = {}\n", r["formula"].get<double>(),
             fmt_number(r["z_score"]));
  fmt::print(out, "per-state exact prediction     {}   z = {}\n", fmt_number(r["exact_prediction"]),
             fmt_number(r["z_score_exact"]));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent-state commitment zero-knowledge protocol simulator", "zkqbc"};
  app.require_subcommand(1);

  CommonOptions common;
  AnalyzeOptions analyze_opts;
  GraphRunOptions graph_opts;

  auto* analyze = app.add_subcommand("analyze", "Closed-form probabilities and soundness tables");
  add_common(*analyze, common);
  analyze->add_option("--escape", analyze_opts.escape, "Lie-escape probability for the soundness table");
  analyze->add_option("--m", analyze_opts.m_values, "Edge counts for the soundness table");
  analyze->add_option("--objective", analyze_opts.objective, "Cheat objective")
      ->check(CLI::IsMember({"average", "maxmin"}));

  auto add_graph = [&](CLI::App& cmd) {
    add_common(cmd, common);
    cmd.add_option("--graph", graph_opts.graph_path, "DIMACS .col graph file")->required();
    cmd.add_option("--rounds", graph_opts.rounds, "Rounds per execution (default m^2)");
  };

  auto* run_cmd = app.add_subcommand("run", "One honest execution with full transcript");
  add_graph(*run_cmd);

  auto* soundness = app.add_subcommand("soundness", "Cheating-prover acceptance rate vs prediction");
  add_graph(*soundness);
  soundness->add_option("--trials", graph_opts.trials, "Number of executions");
  soundness->add_option("--mode", graph_opts.mode, "physical: lies judged by clicks; synthetic: Bernoulli(escape)")
      ->check(CLI::IsMember({"physical", "synthetic"}));
  soundness->add_option("--escape", graph_opts.escape, "Lie-escape probability in synthetic mode");

  auto* hiding = app.add_subcommand("hiding", "Curious-verifier identification rate vs prediction");
  add_graph(*hiding);
  hiding->add_option("--trials", graph_opts.trials, "Number of executions");
  hiding->add_option("--pb-override", graph_opts.pb_override, "Use this P_B in the formula column");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    json report;
    int code = kSuccess;
    if (analyze->parsed()) {
      report = cmd_analyze(common, analyze_opts);
    } else if (run_cmd->parsed()) {
      auto outcome = cmd_run(common, graph_opts, err);
      report = std::move(outcome.report);
      code = outcome.exit_code;
    } else if (soundness->parsed()) {
      report = cmd_soundness(common, graph_opts, err);
    } else {
      report = cmd_hiding(common, graph_opts, err);
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (common.json) {
      report["wall_clock_seconds"] = elapsed;
      out << report.dump(2) << "\n";
    } else {
      const auto& cmd = report["command"];
      if (cmd == "analyze") print_analyze(report, out);
      else if (cmd == "run") print_run(report, out);
      else if (cmd == "soundness") print_soundness(report, out);
      else print_hiding(report, out);
      fmt::print(out, "({:.3f} s)\n", elapsed);
    }
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPreconditionViolation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace zkqbc::cli
