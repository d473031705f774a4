// Copyright 2026 The entrosep authors
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

#include "entrosep/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "entrosep/io.hpp"
#include "entrosep/reproduce.hpp"
#include "entrosep/setups.hpp"

namespace entrosep {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct CommonFlags {
  std::string format = "csv";
  unsigned long seed = 42;  // fixed default keeps random suites reproducible
};

void write_file_or_stream(const std::string& path, const std::string& content,
                          std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write file: " + path);
  file << content;
}

std::optional<MeasurementSetup> load_setup(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return setup_from_json(load_json_file(path));
}

double parse_order(const std::string& text, const char* flag) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": cannot parse '" + text + "' as an entropic order");
  }
}

int run_check(const std::string& state_path, const std::string& measurements_path,
              const std::string& criterion, const CriterionOptions& defaults,
              const CommonFlags& common, std::ostream& out) {
  const DensityMatrix rho = state_from_json(load_json_file(state_path));
  if (!rho.subsystem_dims()) throw InputError("check: state must declare subsystem dims");
  const auto [da, db] = *rho.subsystem_dims();

  const std::optional<MeasurementSetup> custom = load_setup(measurements_path);
  std::vector<CriterionSetup> setups;
  if (criterion == "all") {
    if (custom) {
      throw UsageError("check: --measurements requires a single --criterion");
    }
    setups = criterion_battery(da, db, defaults);
  } else {
    CriterionOptions options = defaults;
    options.name = criterion;
    setups.push_back(make_criterion_setup(options, da, db, custom ? &*custom : nullptr));
  }

  std::vector<CriterionReport> reports;
  reports.reserve(setups.size());
  for (const CriterionSetup& setup : setups) reports.push_back(setup.evaluate(rho));
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CriterionReport& x, const CriterionReport& y) {
                     return x.criterion_id < y.criterion_id;
                   });

  if (common.format == "json") {
    json arr = json::array();
    for (const CriterionReport& r : reports) arr.push_back(report_to_json(r));
    out << arr.dump(2) << '\n';
  } else {
    out << reports_csv_header() << '\n';
    for (const CriterionReport& r : reports) out << report_to_csv_row(r) << '\n';
  }

  const bool any_violation =
      std::any_of(reports.begin(), reports.end(),
                  [](const CriterionReport& r) { return r.violated; });
  return any_violation ? kExitViolation : kExitOk;
}

int run_scan(const std::string& family_name, const std::string& criterion,
             const CriterionOptions& defaults, const std::string& curve_path,
             const CommonFlags& common, std::ostream& out) {
  const StateFamily& family = find_family(family_name);
  CriterionOptions options = defaults;
  options.name = criterion;
  const CriterionSetup setup =
      make_criterion_setup(options, family.dims.first, family.dims.second);
  const ThresholdResult result = scan_threshold(family, setup);

  if (!curve_path.empty()) {
    const auto curve = margin_curve(family, setup);
    write_file_or_stream(curve_path, curve_to_csv(curve), out);
  }

  if (common.format == "json") {
    out << threshold_to_json(result).dump(2) << '\n';
  } else {
    out << threshold_csv_header() << '\n' << threshold_to_csv_row(result) << '\n';
  }
  return kExitOk;
}

int run_profile(const std::string& measurements_path, double theta, const std::string& side,
                std::ostream& out) {
  RankOnePovm first = computational_basis(2);
  RankOnePovm second = rotated_qubit_basis(theta > 0.0 ? theta : std::numbers::pi / 4.0);
  if (!measurements_path.empty()) {
    const MeasurementSetup setup = setup_from_json(load_json_file(measurements_path));
    const std::vector<LocalMeasurement>& list =
        (side == "b") ? setup.side_b : setup.side_a;
    if (list.size() < 2) {
      throw UsageError("profile: need two measurements on the chosen side");
    }
    const RankOnePovm* f = as_rank_one(list[0]);
    const RankOnePovm* g = as_rank_one(list[1]);
    if (f == nullptr || g == nullptr) {
      throw UsageError("profile: the s-value profile is defined for rank-one POVMs");
    }
    first = *f;
    second = *g;
  }
  const SValueProfile profile = s_values(overlap_matrix(first, second));
  out << profile_to_json(profile).dump(2) << '\n';
  return kExitOk;
}

int run_construct(const std::string& kind, std::size_t d, const CriterionOptions& options,
                  const std::string& out_path, std::ostream& out) {
  MeasurementSetup setup;
  if (kind == "rotated") {
    if (d != 2) throw UsageError("construct: rotated bases are a qubit construction");
    for (const LocalMeasurement& m : default_measurement_pair(2, options.theta)) {
      setup.side_a.push_back(m);
      setup.side_b.push_back(m);
    }
  } else if (kind == "mub") {
    for (const RankOnePovm& b : prime_pauli_mubs(d)) {
      if (setup.side_a.size() == options.k) break;
      setup.side_a.emplace_back(b);
      setup.side_b.emplace_back(b);
    }
    if (setup.side_a.size() != options.k) {
      throw UsageError("construct: k exceeds the number of available MUBs");
    }
  } else if (kind == "sic") {
    const RankOnePovm sic = sic_povm(d);
    setup.side_a.emplace_back(sic);
    setup.side_b.emplace_back(sic);
  } else if (kind == "mum") {
    std::vector<RankOnePovm> bases = prime_pauli_mubs(d);
    if (options.k > bases.size()) {
      throw UsageError("construct: k exceeds the number of available MUBs");
    }
    bases.resize(options.k, bases.front());
    const MumSet mums = mum_from_mubs(bases, options.kappa_t);
    for (const GeneralPovm& p : mums.povms) {
      setup.side_a.emplace_back(p);
      setup.side_b.emplace_back(p);
    }
  } else if (kind == "gsic") {
    const GeneralSic gsic = gsic_from_sic(sic_povm(d), options.gsic_t);
    setup.side_a.emplace_back(gsic.povm);
    setup.side_b.emplace_back(gsic.povm);
  } else {
    throw UsageError("construct: unknown kind " + kind);
  }
  write_file_or_stream(out_path, setup_to_json(setup).dump(2) + "\n", out);
  return kExitOk;
}

int run_validate(const std::string& path, std::ostream& out) {
  const json j = load_json_file(path);
  json result;
  bool pass = true;

  auto povm_report = [&pass](const json& pj) {
    const RawPovm raw = raw_povm_from_json(pj);
    ValidationReport report = raw.rank_one
                                  ? validate_rank_one_povm(raw.dim, raw.vectors)
                                  : validate_general_povm(raw.dim, raw.elements);
    pass = pass && report.pass;
    json cj = json::array();
    for (const ValidationCondition& c : report.conditions) {
      cj.push_back({{"condition", c.name},
                    {"deviation", c.deviation},
                    {"tolerance", c.tolerance},
                    {"pass", c.pass}});
    }
    return json{{"pass", report.pass}, {"conditions", cj}};
  };

  if (j.is_object() && j.contains("matrix")) {
    result["kind"] = "state";
    try {
      state_from_json(j);
      result["pass"] = true;
    } catch (const InputError& e) {
      result["pass"] = false;
      result["error"] = e.what();
      pass = false;
    }
  } else if (j.is_object() && (j.contains("vectors") || j.contains("elements"))) {
    result["kind"] = "povm";
    result["report"] = povm_report(j);
  } else if (j.is_object() && j.contains("a") && j.contains("b")) {
    result["kind"] = "measurement setup";
    json sides = json::object();
    for (const char* side : {"a", "b"}) {
      json list = json::array();
      for (const json& pj : j[side]) list.push_back(povm_report(pj));
      sides[side] = std::move(list);
    }
    result["report"] = std::move(sides);
  } else {
    throw InputError("validate: unrecognized document; expected a state, POVM, or setup");
  }
  result["pass"] = pass;
  out << result.dump(2) << '\n';
  return pass ? kExitOk : kExitInput;
}

int run_reproduce_cmd(const std::string& case_name, const CommonFlags& common,
                      std::ostream& out) {
  const std::optional<std::string> filter =
      case_name.empty() ? std::nullopt : std::optional<std::string>(case_name);
  const std::vector<ReproduceCase> cases = run_reproduce(filter);
  bool all_pass = true;
  if (common.format == "json") {
    json arr = json::array();
    for (const ReproduceCase& c : cases) {
      json checks = json::array();
      for (const ReproduceCheck& check : c.checks) {
        checks.push_back({{"label", check.label},
                          {"expected", check.expected},
                          {"actual", check.actual},
                          {"tolerance", check.tolerance},
                          {"pass", check.pass}});
      }
      arr.push_back({{"case", c.name}, {"pass", c.pass}, {"checks", checks}});
      all_pass = all_pass && c.pass;
    }
    out << arr.dump(2) << '\n';
  } else {
    out << "case,check,expected,actual,tolerance,status\n";
    for (const ReproduceCase& c : cases) {
      for (const ReproduceCheck& check : c.checks) {
        out << c.name << ',' << check.label << ',' << format_double(check.expected) << ','
            << format_double(check.actual) << ',' << format_double(check.tolerance) << ','
            << (check.pass ? "PASS" : "FAIL") << '\n';
      }
      all_pass = all_pass && c.pass;
    }
  }
  return all_pass ? kExitOk : kExitInput;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"entrosep: entropic separability tests for bipartite states"};
  app.require_subcommand(1);

  CommonFlags common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", common.seed, "Random seed for randomized suites")
      ->capture_default_str();

  CriterionOptions options;
  std::string state_path, measurements_path, criterion = "all", family, curve_path;
  std::string construct_kind, validate_path, case_name, out_path, side = "a";
  std::string alpha_flag, beta_flag;
  std::size_t construct_dim = 2;

  auto add_criterion_flags = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha_flag, "Entropic order alpha ('inf' allowed)");
    cmd->add_option("--beta", beta_flag, "Entropic order beta (default: conjugate of alpha)");
    cmd->add_option("--theta", options.theta, "Rotation angle of the second qubit basis");
    cmd->add_option("--k", options.k, "Number of MUB/MUM measurements");
    cmd->add_option("--kappa-t", options.kappa_t, "Projector mixing weight for MUMs");
    cmd->add_option("--gsic-t", options.gsic_t, "Projector mixing weight for general SICs");
  };

  CLI::App* check = app.add_subcommand("check", "Evaluate criteria on a state file");
  check->fallthrough();
  check->add_option("--state", state_path, "State JSON file")->required();
  check->add_option("--measurements", measurements_path, "Measurement setup JSON file");
  check->add_option("--criterion", criterion, "Criterion name or 'all'");
  add_criterion_flags(check);

  CLI::App* scan = app.add_subcommand("scan", "Scan a family for its violation threshold");
  scan->fallthrough();
  scan->add_option("--family", family, "State family name")->required();
  scan->add_option("--criterion", criterion, "Criterion name")->required();
  scan->add_option("--emit-curve", curve_path, "Write (c, margin) samples to this CSV file");
  add_criterion_flags(scan);

  CLI::App* profile = app.add_subcommand("profile", "Dump the s-value profile of a basis pair");
  profile->fallthrough();
  profile->add_option("--measurements", measurements_path, "Measurement setup JSON file");
  profile->add_option("--theta", options.theta, "Rotation angle of the second qubit basis");
  profile->add_option("--side", side, "Side of the setup to profile")
      ->check(CLI::IsMember({"a", "b"}));

  CLI::App* construct = app.add_subcommand("construct", "Emit a measurement setup as JSON");
  construct->fallthrough();
  construct->add_option("--kind", construct_kind, "rotated|mub|sic|mum|gsic")->required();
  construct->add_option("--d", construct_dim, "Local dimension");
  construct->add_option("--out", out_path, "Output file (default: stdout)");
  add_criterion_flags(construct);

  CLI::App* validate = app.add_subcommand("validate", "Validate a state or measurement file");
  validate->fallthrough();
  validate->add_option("--file", validate_path, "JSON file to validate")->required();

  CLI::App* reproduce = app.add_subcommand("reproduce", "Regenerate the threshold table");
  reproduce->fallthrough();
  reproduce->add_option("--case", case_name, "Run a single named case");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (!alpha_flag.empty()) options.alpha = parse_order(alpha_flag, "--alpha");
    if (!beta_flag.empty()) options.beta = parse_order(beta_flag, "--beta");
    if (check->parsed()) {
      return run_check(state_path, measurements_path, criterion, options, common, out);
    }
    if (scan->parsed()) {
      return run_scan(family, criterion, options, curve_path, common, out);
    }
    if (profile->parsed()) {
      return run_profile(measurements_path, options.theta, side, out);
    }
    if (construct->parsed()) {
      return run_construct(construct_kind, construct_dim, options, out_path, out);
    }
    if (validate->parsed()) {
      return run_validate(validate_path, out);
    }
    if (reproduce->parsed()) {
      return run_reproduce_cmd(case_name, common, out);
    }
    err << "usage error: no subcommand given\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace entrosep
