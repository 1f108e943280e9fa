// Copyright 2026 The subentropy Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "criteria.hpp"
#include "subentropy/error.hpp"
#include "subentropy/fixtures.hpp"
#include "subentropy/index.hpp"
#include "subentropy/io.hpp"
#include "subentropy/markov.hpp"
#include "subentropy/projection.hpp"

namespace subentropy::cli {

namespace {

struct Options {
  std::string inclusion;
  std::string state;
  std::string generator;
  std::string output = "-";
  std::string format = "json";
  std::string p = "2";
  std::string p_list = "0.5,1,2,inf";
  double epsilon = defaults::kEpsilon;
  double t_max = 0.0;  // 0: kGridRelaxationTimes/gap
  int points = defaults::kGridPoints;
  int amplify = 1;
  int steps = defaults::kDiscreteSteps;
  int starts = defaults::kStarts;
  int max_iterations = defaults::kMaxIterations;
  double tolerance = defaults::kStationarityTolerance;
  std::uint64_t seed = 0;
  bool bits = false;
  std::string name;
  std::string generator_name;
  double pure_state = -1.0;
  bool list = false;
};

double parse_order_value(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, "cannot parse order '" + text + "'");
  }
  if (used != text.size()) fail(ErrorKind::InvalidArgument, "cannot parse order '" + text + "'");
  return v;
}

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) fail(ErrorKind::InvalidArgument, "cannot read " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  file << text;
}

Json read_json(const std::string& path, const char* what, std::istream& in) {
  if (path.empty()) fail(ErrorKind::InvalidArgument, std::string("missing --") + what);
  return parse_json_text(read_text(path, in));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SolverBudget budget_of(const Options& o) {
  return {o.starts, o.max_iterations, o.tolerance, o.seed};
}

void validate(const Options& o) {
  if (o.starts < 1) fail(ErrorKind::InvalidArgument, "--starts must be at least 1");
  if (o.max_iterations < 1) fail(ErrorKind::InvalidArgument, "--max-iterations must be at least 1");
  if (!(o.tolerance > 0.0)) fail(ErrorKind::InvalidArgument, "--tolerance must be positive");
  if (o.points < 2) fail(ErrorKind::InvalidArgument, "--points must be at least 2");
  if (o.amplify < 1) fail(ErrorKind::InvalidArgument, "--amplify must be at least 1");
  if (o.steps < 0) fail(ErrorKind::InvalidArgument, "--steps must be nonnegative");
  if (!(o.epsilon > 0.0 && o.epsilon < 2.0)) fail(ErrorKind::InvalidArgument, "--epsilon must lie in (0, 2)");
  if (!(o.t_max >= 0.0) || !std::isfinite(o.t_max)) fail(ErrorKind::InvalidArgument, "--t-max must be finite and nonnegative");
  if (o.format != "json" && o.format != "csv") fail(ErrorKind::InvalidArgument, "--format must be json or csv");
}

double scale_of(const Options& o) { return o.bits ? 1.0 / std::log(2.0) : 1.0; }

Inclusion load_inclusion(const Options& o, std::istream& in) {
  return validate_inclusion(parse_inclusion(read_json(o.inclusion, "inclusion", in)));
}

// States given on the subalgebra are embedded.
Density load_state(const Options& o, const Inclusion& inc, std::istream& in) {
  const Json j = read_json(o.state, "state", in);
  const AlgebraElement x = parse_state(j, inc);
  if (j.value("algebra", std::string("amb")) == "sub") return Density(embed(inc, x));
  return Density(x);
}

Density load_state(const Options& o, const DirectSumAlgebra& alg, std::istream& in) {
  return Density(parse_state(read_json(o.state, "state", in), alg));
}

std::string cmd_index(const Options& o, std::istream& in) {
  return dump(index_report_to_json(index_report(load_inclusion(o, in)), scale_of(o)));
}

std::string cmd_entropy(const Options& o, std::istream& in) {
  const RenyiOrder order(parse_order_value(o.p));
  const Inclusion inc = load_inclusion(o, in);
  const Density rho = load_state(o, inc, in);
  const SubalgebraDivergenceResult r = divergence_to_subalgebra(rho, inc, order, budget_of(o));
  return dump({{"p", json_number(order.p())},
               {"divergence", json_number(r.value.value() * scale_of(o))},
               {"minimizer", state_to_json(r.minimizer.element(), "sub")},
               {"iterations", r.report.iterations},
               {"residual", json_number(r.report.residual)},
               {"starts_used", r.report.starts_used}});
}

std::string cmd_sweep(const Options& o, std::istream& in, std::ostream& err) {
  std::vector<double> ps;
  std::stringstream list(o.p_list);
  for (std::string item; std::getline(list, item, ',');) {
    if (item.empty()) continue;
    const double p = parse_order_value(item);
    RenyiOrder check(p);
    if (std::find(ps.begin(), ps.end(), p) != ps.end()) {
      err << "warning: duplicate p value " << format_number(p) << " removed\n";
      continue;
    }
    ps.push_back(p);
  }
  if (ps.empty()) fail(ErrorKind::InvalidArgument, "--p-list is empty");
  std::sort(ps.begin(), ps.end());
  const Inclusion inc = load_inclusion(o, in);
  const Density rho = load_state(o, inc, in);
  std::vector<double> values;
  for (double p : ps) values.push_back(divergence_to_subalgebra(rho, inc, RenyiOrder(p), budget_of(o)).value.value());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1] - 1e-7) {
      fail(ErrorKind::Internal, "divergence decreased between p = " + format_number(ps[i - 1]) + " and p = " +
                                    format_number(ps[i]));
    }
  }
  std::ostringstream csv;
  csv << "p,divergence\n";
  for (std::size_t i = 0; i < ps.size(); ++i) csv << format_number(ps[i]) << ',' << format_number(values[i] * scale_of(o)) << '\n';
  return csv.str();
}

std::string report_text(const Options& o, const DecayReport& r) {
  return o.format == "csv" ? decay_report_csv(r, scale_of(o)) : dump(decay_report_to_json(r, scale_of(o)));
}

std::string cmd_semigroup(const Options& o, std::istream& in) {
  const GeneratorInput g = parse_generator(read_json(o.generator, "generator", in));
  std::shared_ptr<const Semigroup> sg;
  if (g.schur) {
    sg = schur_semigroup(*g.schur);
  } else if (g.general) {
    sg = general_semigroup(*g.general);
  } else {
    fail(ErrorKind::InvalidArgument, "semigroup needs a schur or superop generator");
  }
  const auto lifted = sg->amplify(o.amplify);
  const Density rho = load_state(o, lifted->algebra(), in);
  const double t_max = o.t_max > 0.0 ? o.t_max : defaults::kGridRelaxationTimes / sg->spectral_gap();
  std::vector<double> grid;
  for (int i = 0; i < o.points; ++i) grid.push_back(t_max * i / (o.points - 1));
  return report_text(o, decay_experiment(*sg, rho, grid, o.amplify, budget_of(o)));
}

std::string cmd_discrete(const Options& o, std::istream& in) {
  const GeneratorInput g = parse_generator(read_json(o.generator, "generator", in));
  if (!g.map) fail(ErrorKind::InvalidArgument, "discrete needs a schur_map generator");
  const Density rho = load_state(o, DirectSumAlgebra::matrix_algebra(g.map->dim() * o.amplify), in);
  return report_text(o, discrete_decay_experiment(*g.map, rho, o.steps, o.amplify, o.epsilon, budget_of(o)));
}

int trailing_int(const std::string& name, const std::string& prefix) {
  const std::string rest = name.substr(prefix.size());
  if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
    fail(ErrorKind::InvalidArgument, "unknown generator fixture " + name);
  return std::stoi(rest);
}

GeneratorInput generator_fixture(const std::string& name) {
  GeneratorInput g;
  if (name == "block4") {
    g.type = "schur";
    g.schur = block_dephasing_generator();
  } else if (name == "commutator112") {
    g.type = "superop";
    g.general = double_commutator_generator(RealVector{{1.0, 1.0, 2.0}});
  } else if (name.rfind("dephasing", 0) == 0) {
    g.type = "schur";
    g.schur = dephasing_generator(trailing_int(name, "dephasing"));
  } else if (name.rfind("sqdist", 0) == 0) {
    g.type = "schur";
    g.schur = squared_distance_generator(trailing_int(name, "sqdist"));
  } else if (name.rfind("depolarizing", 0) == 0) {
    g.type = "superop";
    g.general = depolarizing_generator(trailing_int(name, "depolarizing"));
  } else {
    fail(ErrorKind::InvalidArgument, "unknown generator fixture " + name);
  }
  return g;
}

std::string cmd_fixtures(const Options& o) {
  const int chosen = (o.list ? 1 : 0) + (o.name.empty() ? 0 : 1) + (o.generator_name.empty() ? 0 : 1) +
                     (o.pure_state >= 0.0 ? 1 : 0);
  if (chosen != 1) fail(ErrorKind::InvalidArgument, "fixtures takes exactly one of --list, --name, --generator, --pure-state");
  if (o.list) {
    Json gens = Json::array();
    for (const NamedGenerator& g : shipped_generators()) gens.push_back(g.name);
    return dump({{"inclusions", inclusion_fixture_names()}, {"generators", gens}});
  }
  if (!o.name.empty()) return dump(inclusion_to_json(fixture_inclusion(o.name)));
  if (!o.generator_name.empty()) return dump(generator_to_json(generator_fixture(o.generator_name)));
  if (!(o.pure_state <= 1.0)) fail(ErrorKind::InvalidArgument, "--pure-state must lie in [0, 1]");
  return dump(state_to_json(pure_state_fixture(o.pure_state).element(), "amb"));
}

int cmd_selftest(std::ostream& out) {
  bool ok = true;
  acceptance::run_all([&](const acceptance::Outcome& r) {
    out << acceptance::format(r) << '\n' << std::flush;
    ok = ok && r.passed;
  });
  return ok ? kExitOk : kExitSelftestFailed;
}

void report_error(std::ostream& err, std::string_view kind, const std::string& message,
                  const std::vector<double>& witness = {}) {
  Json j = {{"error", std::string(kind)}, {"message", message}};
  if (!witness.empty()) {
    Json w = Json::array();
    for (double v : witness) w.push_back(json_number(v));
    j["witness"] = w;
  }
  err << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Divergences to subalgebras, Pimsner-Popa indices and decoherence of quantum Markov semigroups",
               "subentropy"};
  app.require_subcommand(1);

  const auto add_budget = [&](CLI::App* c) {
    c->add_option("--starts", o.starts, "solver starts");
    c->add_option("--max-iterations", o.max_iterations, "iterations per start");
    c->add_option("--tolerance", o.tolerance, "stationarity tolerance");
    c->add_option("--seed", o.seed, "base seed");
  };
  const auto add_common = [&](CLI::App* c) {
    c->add_option("-o,--output", o.output, "output path, - for stdout");
    c->add_flag("--bits", o.bits, "report divergences in bits");
  };

  CLI::App* index = app.add_subcommand("index", "index report of an inclusion");
  index->add_option("--inclusion", o.inclusion, "inclusion JSON, - for stdin")->required();
  add_common(index);

  CLI::App* entropy = app.add_subcommand("entropy", "D_p(rho||N) with its minimizer");
  entropy->add_option("--inclusion", o.inclusion, "inclusion JSON")->required();
  entropy->add_option("--state", o.state, "state JSON")->required();
  entropy->add_option("-p,--p", o.p, "order in [0.5, inf]");
  add_budget(entropy);
  add_common(entropy);

  CLI::App* sweep = app.add_subcommand("sweep-p", "D_p(rho||N) over a list of orders, CSV");
  sweep->add_option("--inclusion", o.inclusion, "inclusion JSON")->required();
  sweep->add_option("--state", o.state, "state JSON")->required();
  sweep->add_option("--p-list", o.p_list, "comma separated orders");
  add_budget(sweep);
  add_common(sweep);

  CLI::App* semigroup = app.add_subcommand("semigroup", "decay report of a continuous semigroup");
  semigroup->add_option("--generator", o.generator, "generator JSON (schur or superop)")->required();
  semigroup->add_option("--state", o.state, "state JSON on the amplified algebra")->required();
  semigroup->add_option("--t-max", o.t_max, "grid end, default 5/gap");
  semigroup->add_option("--points", o.points, "grid points");
  semigroup->add_option("--amplify", o.amplify, "amplification level n");
  semigroup->add_option("--format", o.format, "json or csv");
  add_budget(semigroup);
  add_common(semigroup);

  CLI::App* discrete = app.add_subcommand("discrete", "decay report of an iterated Schur map");
  discrete->add_option("--generator", o.generator, "generator JSON (schur_map)")->required();
  discrete->add_option("--state", o.state, "state JSON on M_{n m}")->required();
  discrete->add_option("--steps", o.steps, "iterations");
  discrete->add_option("--amplify", o.amplify, "amplification level n");
  discrete->add_option("--epsilon", o.epsilon, "trace-distance target");
  discrete->add_option("--format", o.format, "json or csv");
  add_budget(discrete);
  add_common(discrete);

  CLI::App* fixtures = app.add_subcommand("fixtures", "emit fixture JSON");
  fixtures->add_option("--name", o.name, "inclusion fixture");
  fixtures->add_option("--generator", o.generator_name, "generator fixture");
  fixtures->add_option("--pure-state", o.pure_state, "pure state (sqrt a, sqrt(1-a)) on M_2");
  fixtures->add_flag("--list", o.list, "list fixture names");
  fixtures->add_option("-o,--output", o.output, "output path, - for stdout");

  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  std::vector<const char*> argv{"subentropy"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, to_string(ErrorKind::InvalidArgument), e.what());
    return kExitValidation;
  }

  try {
    validate(o);
    if (selftest->parsed()) return cmd_selftest(out);
    std::string text;
    if (index->parsed()) text = cmd_index(o, in);
    if (entropy->parsed()) text = cmd_entropy(o, in);
    if (sweep->parsed()) text = cmd_sweep(o, in, err);
    if (semigroup->parsed()) text = cmd_semigroup(o, in);
    if (discrete->parsed()) text = cmd_discrete(o, in);
    if (fixtures->parsed()) text = cmd_fixtures(o);
    write_text(o.output, text, out);
    return kExitOk;
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.what(), e.witness());
    if (e.kind() == ErrorKind::SolverBudgetExceeded) return kExitSolver;
    if (e.kind() == ErrorKind::Internal) return kExitInternal;
    return kExitValidation;
  } catch (const std::exception& e) {
    report_error(err, to_string(ErrorKind::Internal), e.what());
    return kExitInternal;
  }
}

}  // namespace subentropy::cli
