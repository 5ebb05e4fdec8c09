#include "dgkit/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "dgkit/report.hpp"
#include "dgkit/structure.hpp"

namespace dgkit::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "json";
  std::string field = "q";
  std::string caps_path;
  Caps caps;
};

Caps load_caps(const std::string& flag_path, std::ostream& err) {
  Caps caps;
  std::string path = flag_path;
  if (const char* env = std::getenv("DGKIT_CAPS"); env != nullptr && *env)
    path = env;  // the environment variable overrides the caps file flag
  if (path.empty()) return caps;
  std::ifstream in(path);
  if (!in) {
    err << "cannot read caps file: " << path << "\n";
    throw CLI::RuntimeError(kUsage);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    err << "caps file is not valid JSON: " << e.what() << "\n";
    throw CLI::RuntimeError(kUsage);
  }
  if (j.contains("max_total_dim")) caps.max_total_dim = j["max_total_dim"];
  if (j.contains("max_prime")) caps.max_prime = j["max_prime"];
  if (j.contains("oracle_total_dim"))
    caps.oracle_total_dim = j["oracle_total_dim"];
  if (j.contains("sweep_limit")) caps.sweep_limit = j["sweep_limit"];
  if (j.contains("lattice_limit")) caps.lattice_limit = j["lattice_limit"];
  if (j.contains("hom_grid")) caps.hom_grid = j["hom_grid"];
  if (j.contains("root_scan_limit")) caps.root_scan_limit = j["root_scan_limit"];
  if (j.contains("max_hom_enum")) caps.max_hom_enum = j["max_hom_enum"];
  return caps;
}

struct Instance {
  std::shared_ptr<const DgAlgebra> algebra;
  std::string id;
};

Instance load_instance(const std::string& arg, const Options& opts,
                       std::ostream& err) {
  if (fs::exists(arg)) {
    std::ifstream in(arg);
    if (!in) {
      err << "cannot read " << arg << "\n";
      throw CLI::RuntimeError(kUsage);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      auto doc = ingest::parse_document(buffer.str(), opts.caps);
      return {doc.algebra, fs::path(arg).filename().string()};
    } catch (const ingest::DocumentError& e) {
      err << "schema error in " << arg << ": " << e.what() << "\n";
      throw CLI::RuntimeError(kUsage);
    }
  }
  const auto names = ingest::builtin_fixture_names();
  if (std::find(names.begin(), names.end(), arg) != names.end())
    return {ingest::builtin_fixture(arg, FieldSpec::from_name(opts.field)),
            "fixture:" + arg};
  err << "no such file or fixture: " << arg << "\n";
  throw CLI::RuntimeError(kUsage);
}

void render(const json& j, const Options& opts, std::ostream& out) {
  if (opts.format == "json") {
    out << report::dump_block(j);
    return;
  }
  // text: a thin line rendering of the same JSON, never a second source of
  // truth
  std::function<void(const json&, const std::string&)> walk =
      [&](const json& node, const std::string& prefix) {
        if (node.is_object()) {
          for (const auto& [key, value] : node.items())
            walk(value, prefix.empty() ? key : prefix + "." + key);
        } else {
          out << prefix << ": " << node.dump() << "\n";
        }
      };
  walk(j, "");
}

int require_valid(const Instance& inst, const Options& opts, std::ostream& out,
                  std::ostream& err) {
  ValidationReport report = validate_algebra(inst.algebra->algebra());
  report.merge(validate_differential(inst.algebra->algebra(),
                                     inst.algebra->differential()));
  if (!report.ok()) {
    render(report::validation(report), opts, out);
    err << inst.id << ": instance fails validation\n";
    return kViolation;
  }
  return kOk;
}

ingest::GeneratorRecipe recipe_for_index(std::size_t index,
                                         const FieldSpec& field) {
  const auto names = ingest::recipe_names();
  ingest::GeneratorRecipe recipe;
  recipe.kind = ingest::recipe_from_name(names[index % names.size()]);
  recipe.field = field;
  return recipe;
}

struct SuiteRun {
  std::size_t instances = 0;
  std::size_t verdicts = 0;
  std::size_t falsified = 0;
  std::size_t skipped = 0;
  std::size_t dead_ends = 0;
};

void run_suite_on(const std::string& suite, const DgAlgebra& a,
                  const std::string& instance_id, const Caps& caps,
                  std::uint64_t seed, SuiteRun& stats, std::ostream& out) {
  const auto verdicts = run_suite(suite, a, instance_id, caps, seed);
  ++stats.instances;
  for (const auto& v : verdicts) {
    ++stats.verdicts;
    if (v.falsified()) ++stats.falsified;
    if (v.skipped) ++stats.skipped;
    out << report::dump_line(report::verdict_line(suite, v)) << "\n";
  }
}

}  // namespace

std::shared_ptr<const DgAlgebra> shrink_instance(
    const ingest::GeneratorRecipe& recipe, std::uint64_t seed,
    const std::function<bool(const DgAlgebra&)>& falsifies, const Caps& caps) {
  std::shared_ptr<const DgAlgebra> best;
  try {
    best = ingest::generate(recipe, seed, caps);
  } catch (const ingest::GeneratorDeadEnd&) {
    return nullptr;
  }
  if (!falsifies(*best)) return nullptr;
  for (std::size_t size = 4; size >= 2; --size) {
    ingest::GeneratorRecipe smaller = recipe;
    smaller.size = size;
    try {
      const auto candidate = ingest::generate(smaller, seed, caps);
      if (candidate->dim() < best->dim() && falsifies(*candidate))
        best = candidate;
    } catch (const ingest::GeneratorDeadEnd&) {
      continue;
    }
  }
  return best;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact workbench for finite-dimensional dg-algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--format", opts.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--field", opts.field,
                 "base field for fixtures and fuzzing: q or f<p>");
  app.add_option("--caps", opts.caps_path, "caps JSON file");
  std::optional<std::size_t> max_dim_flag, oracle_dim_flag;
  app.add_option("--max-dim", max_dim_flag, "total dimension cap");
  app.add_option("--oracle-dim", oracle_dim_flag,
                 "exhaustive-oracle dimension cap");

  // check
  std::string check_path;
  auto* cmd_check = app.add_subcommand("check", "validate a .dga.json document");
  cmd_check->add_option("path", check_path, "document or fixture name")
      ->required();

  // homology / radical / series / simples
  std::string target_path;
  auto* cmd_homology =
      app.add_subcommand("homology", "homology report of an instance");
  cmd_homology->add_option("path", target_path)->required();
  auto* cmd_radical = app.add_subcommand("radical", "dg-radical report");
  cmd_radical->add_option("path", target_path)->required();
  std::string radical_method = "both";
  cmd_radical->add_option("--method", radical_method, "envelope|oracle|both")
      ->check(CLI::IsMember({"envelope", "oracle", "both"}));
  auto* cmd_series =
      app.add_subcommand("series", "composition series of the regular module");
  cmd_series->add_option("path", target_path)->required();
  auto* cmd_simples = app.add_subcommand(
      "simples", "maximal dg-submodules of the regular module");
  cmd_simples->add_option("path", target_path)->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a theorem suite");
  std::string suite;
  std::vector<std::string> verify_paths;
  bool use_fixtures = false;
  std::size_t fuzz_count = 0;
  std::optional<std::uint64_t> seed_flag;
  cmd_verify->add_option("--suite", suite, "suite id or 'all'")->required();
  cmd_verify->add_option("paths", verify_paths, "instances to verify");
  cmd_verify->add_flag("--fixtures", use_fixtures, "run on built-in fixtures");
  cmd_verify->add_option("--fuzz", fuzz_count,
                         "generate this many instances to verify");
  cmd_verify->add_option("--seed", seed_flag, "seed (mandatory when fuzzing)");

  // fuzz
  auto* cmd_fuzz = app.add_subcommand("fuzz", "generator-driven campaign");
  std::string recipe_name;
  std::size_t count = 0;
  std::string fuzz_suite;
  std::string artifact_dir = "fuzz-artifacts";
  cmd_fuzz->add_option("--recipe", recipe_name, "generator recipe")
      ->required()
      ->check(CLI::IsMember(ingest::recipe_names()));
  cmd_fuzz->add_option("--count", count, "number of instances")->required();
  cmd_fuzz->add_option("--seed", seed_flag, "deterministic seed")->required();
  cmd_fuzz->add_option("--suite", fuzz_suite, "suite to run on each instance");
  cmd_fuzz->add_option("--out", artifact_dir,
                       "directory for falsifying artifacts");

  // fixtures
  auto* cmd_fixtures =
      app.add_subcommand("fixtures", "emit built-in fixture documents");
  std::string fixture_name;
  cmd_fixtures->add_option("--name", fixture_name, "fixture to emit");

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) {
      err << e.what() << "\n";
      return kUsage;
    }
    // --help and friends
    out << app.help();
    return kOk;
  }

  try {
    opts.caps = load_caps(opts.caps_path, err);
    if (max_dim_flag.has_value()) opts.caps.max_total_dim = *max_dim_flag;
    if (oracle_dim_flag.has_value())
      opts.caps.oracle_total_dim = *oracle_dim_flag;
    FieldSpec::from_name(opts.field);  // validate early

    if (cmd_check->parsed()) {
      const auto inst = load_instance(check_path, opts, err);
      ValidationReport report = validate_algebra(inst.algebra->algebra());
      report.merge(validate_differential(inst.algebra->algebra(),
                                         inst.algebra->differential()));
      render(report::validation(report), opts, out);
      return report.ok() ? kOk : kViolation;
    }

    if (cmd_homology->parsed()) {
      const auto inst = load_instance(target_path, opts, err);
      if (int rc = require_valid(inst, opts, out, err); rc != kOk) return rc;
      render(report::homology(homology(*inst.algebra)), opts, out);
      return kOk;
    }

    if (cmd_radical->parsed()) {
      const auto inst = load_instance(target_path, opts, err);
      if (int rc = require_valid(inst, opts, out, err); rc != kOk) return rc;
      const RadicalMethod method = radical_method == "envelope"
                                       ? RadicalMethod::Envelope
                                       : radical_method == "oracle"
                                             ? RadicalMethod::Oracle
                                             : RadicalMethod::Both;
      render(report::radical(dg_radical(*inst.algebra, method, opts.caps)),
             opts, out);
      return kOk;
    }

    if (cmd_series->parsed()) {
      const auto inst = load_instance(target_path, opts, err);
      if (int rc = require_valid(inst, opts, out, err); rc != kOk) return rc;
      const auto series =
          composition_series(regular_module(inst.algebra), opts.caps);
      render(report::composition_series(series), opts, out);
      return kOk;
    }

    if (cmd_simples->parsed()) {
      const auto inst = load_instance(target_path, opts, err);
      if (int rc = require_valid(inst, opts, out, err); rc != kOk) return rc;
      const auto maximals =
          maximal_dg_submodules(regular_module(inst.algebra), opts.caps);
      render(report::maximal_submodules(maximals), opts, out);
      return kOk;
    }

    if (cmd_verify->parsed()) {
      std::vector<std::string> suites;
      if (suite == "all")
        suites = suite_names();
      else
        suites.push_back(suite);
      for (const auto& s : suites) {
        const auto known = suite_names();
        if (std::find(known.begin(), known.end(), s) == known.end()) {
          err << "unknown suite: " << s << "\n";
          return kUsage;
        }
      }
      if (fuzz_count > 0 && !seed_flag.has_value()) {
        err << "--seed is mandatory when fuzzing\n";
        return kUsage;
      }
      const std::uint64_t seed = seed_flag.value_or(1);

      std::vector<Instance> instances;
      for (const auto& p : verify_paths)
        instances.push_back(load_instance(p, opts, err));
      if (use_fixtures)
        for (const auto& name : ingest::builtin_fixture_names())
          instances.push_back(
              {ingest::builtin_fixture(name, FieldSpec::from_name(opts.field)),
               "fixture:" + name});

      SuiteRun stats;
      for (std::size_t i = 0; i < fuzz_count; ++i) {
        const auto recipe =
            recipe_for_index(i, FieldSpec::from_name(opts.field));
        try {
          const auto algebra =
              ingest::generate(recipe, seed + i, opts.caps);
          instances.push_back(
              {algebra, "gen:" + ingest::recipe_name(recipe.kind) + ":" +
                            std::to_string(seed + i)});
        } catch (const ingest::GeneratorDeadEnd& e) {
          ++stats.dead_ends;
          err << "generation dead end at seed " << seed + i << ": "
              << e.what() << "\n";
        }
      }
      if (instances.empty()) {
        err << "nothing to verify: pass paths, --fixtures or --fuzz N\n";
        return kUsage;
      }

      for (const auto& s : suites)
        for (std::size_t i = 0; i < instances.size(); ++i)
          run_suite_on(s, *instances[i].algebra, instances[i].id, opts.caps,
                       seed + i, stats, out);

      out << report::dump_line(json{{"summary",
                                     {{"instances", stats.instances},
                                      {"verdicts", stats.verdicts},
                                      {"falsified", stats.falsified},
                                      {"skipped", stats.skipped},
                                      {"dead_ends", stats.dead_ends}}}})
          << "\n";
      return stats.falsified == 0 ? kOk : kViolation;
    }

    if (cmd_fuzz->parsed()) {
      const std::uint64_t seed = *seed_flag;
      ingest::GeneratorRecipe recipe;
      recipe.kind = ingest::recipe_from_name(recipe_name);
      recipe.field = FieldSpec::from_name(opts.field);

      SuiteRun stats;
      std::vector<std::string> artifacts;
      for (std::size_t i = 0; i < count; ++i) {
        std::shared_ptr<const DgAlgebra> algebra;
        try {
          algebra = ingest::generate(recipe, seed + i, opts.caps);
        } catch (const ingest::GeneratorDeadEnd& e) {
          ++stats.dead_ends;
          err << "generation dead end at seed " << seed + i << ": "
              << e.what() << "\n";
          continue;
        }
        const std::string id =
            "gen:" + recipe_name + ":" + std::to_string(seed + i);
        if (fuzz_suite.empty()) {
          ++stats.instances;
          continue;
        }
        const std::size_t before = stats.falsified;
        run_suite_on(fuzz_suite, *algebra, id, opts.caps, seed + i, stats,
                     out);
        if (stats.falsified > before) {
          // shrink by generator-parameter descent and store the artifact
          auto falsifies = [&](const DgAlgebra& candidate) {
            const auto verdicts = run_suite(fuzz_suite, candidate, "shrink",
                                            opts.caps, seed + i);
            for (const auto& v : verdicts)
              if (v.falsified()) return true;
            return false;
          };
          auto smallest =
              shrink_instance(recipe, seed + i, falsifies, opts.caps);
          if (smallest == nullptr) smallest = algebra;
          fs::create_directories(artifact_dir);
          const std::string path =
              artifact_dir + "/falsified-" + recipe_name + "-" +
              std::to_string(seed + i) + ".dga.json";
          std::ofstream file(path);
          file << ingest::emit_document(*smallest);
          artifacts.push_back(path);
        }
      }
      json summary{{"summary",
                    {{"instances", stats.instances},
                     {"verdicts", stats.verdicts},
                     {"falsified", stats.falsified},
                     {"skipped", stats.skipped},
                     {"dead_ends", stats.dead_ends},
                     {"artifacts", artifacts}}}};
      out << report::dump_line(summary) << "\n";
      return stats.falsified == 0 ? kOk : kViolation;
    }

    if (cmd_fixtures->parsed()) {
      if (fixture_name.empty()) {
        json names = ingest::builtin_fixture_names();
        render(json{{"fixtures", names}}, opts, out);
        return kOk;
      }
      const auto algebra = ingest::builtin_fixture(
          fixture_name, FieldSpec::from_name(opts.field));
      out << ingest::emit_document(*algebra);
      return kOk;
    }

    err << "no subcommand\n";
    return kUsage;
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  } catch (const InvalidField& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const ingest::DocumentError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const Undecidable& e) {
    err << "undecidable at desk scale: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kViolation;
  }
}

}  // namespace dgkit::cli
