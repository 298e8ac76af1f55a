#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "matrixx/af.hpp"
#include "matrixx/oracle.hpp"
#include "matrixx/random_af.hpp"
#include "matrixx/render.hpp"
#include "matrixx/solver.hpp"

namespace {

// Distinct failure classes get distinct exit codes so scripts can tell
// them apart.
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnknownArgument = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int usage_error(const std::string& message) {
  std::cerr << "usage error: " << message << "\n";
  return kExitUsage;
}

matrixx::ArgId resolve_query(const matrixx::ArgumentationFramework& af,
                             const std::string& name) {
  auto id = af.id_of(name);
  if (!id) throw matrixx::UnknownArgumentError(name);
  return *id;
}

matrixx::SolveResult solve_via_oracle(const matrixx::ArgumentationFramework& af,
                                      const matrixx::TaskSpec& task,
                                      std::optional<std::size_t> limit) {
  using matrixx::oracle::SemanticsKind;
  auto kind = task.semantics == matrixx::Semantics::Stable
                  ? SemanticsKind::Stable
                  : SemanticsKind::Complete;
  auto extensions = matrixx::oracle::enumerate_brute(af, kind);

  matrixx::SolveResult result;
  switch (task.task) {
    case matrixx::Task::SE:
      if (!extensions.empty()) result.extensions = {extensions.front()};
      break;
    case matrixx::Task::EE:
      result.extensions = std::move(extensions);
      if (limit && result.extensions.size() > *limit) {
        result.extensions.resize(*limit);
      }
      break;
    case matrixx::Task::DC: {
      matrixx::ArgId q = resolve_query(af, *task.query);
      result.decision = false;
      for (const auto& ext : extensions) {
        if (ext.contains(q)) {
          result.decision = true;
          break;
        }
      }
      break;
    }
    case matrixx::Task::DS: {
      matrixx::ArgId q = resolve_query(af, *task.query);
      result.decision = true;
      for (const auto& ext : extensions) {
        if (!ext.contains(q)) {
          result.decision = false;
          break;
        }
      }
      break;
    }
  }
  return result;
}

struct SolveCommand {
  std::string problem;
  std::string file;
  std::string query;
  std::string format;
  std::size_t limit = 0;
  bool limit_set = false;
  bool trace = false;
  bool use_oracle = false;
};

int run_solve(const SolveCommand& cmd) {
  matrixx::TaskSpec task;
  try {
    task = matrixx::TaskSpec::parse(
        cmd.problem, cmd.query.empty()
                         ? std::nullopt
                         : std::optional<std::string>(cmd.query));
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  bool is_decision =
      task.task == matrixx::Task::DC || task.task == matrixx::Task::DS;
  if (is_decision && cmd.query.empty()) {
    return usage_error("problem " + matrixx::problem_code(task) +
                       " requires --arg");
  }
  if (!is_decision && !cmd.query.empty()) {
    return usage_error("--arg is only valid for DC/DS problems");
  }

  std::string text;
  try {
    text = read_file(cmd.file);
  } catch (const std::runtime_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }

  matrixx::InstanceFormat format;
  if (cmd.format.empty()) {
    format = matrixx::detect_format(text);
  } else if (cmd.format == "apx") {
    format = matrixx::InstanceFormat::Apx;
  } else if (cmd.format == "iccma") {
    format = matrixx::InstanceFormat::Iccma;
  } else {
    return usage_error("unknown format '" + cmd.format + "'");
  }

  matrixx::ArgumentationFramework af;
  try {
    af = matrixx::parse_af(text, format);
  } catch (const std::exception& e) {
    std::cerr << "parse error in '" << cmd.file << "': " << e.what() << "\n";
    return kExitParse;
  }

  matrixx::SearchOptions options;
  if (cmd.limit_set) options.limit = cmd.limit;
  if (cmd.trace) {
    options.trace = [](const matrixx::MatrixState& s) {
      std::cerr << s.render_matrix() << "\n";
    };
  }

  matrixx::SolveResult result;
  try {
    result = cmd.use_oracle ? solve_via_oracle(af, task, options.limit)
                            : matrixx::solve(af, task, options);
  } catch (const matrixx::UnknownArgumentError& e) {
    std::cerr << e.what() << "\n";
    return kExitUnknownArgument;
  } catch (const matrixx::TooLargeError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  auto order = format == matrixx::InstanceFormat::Iccma
                   ? matrixx::NameOrder::Numeric
                   : matrixx::NameOrder::Lexicographic;
  switch (task.task) {
    case matrixx::Task::SE:
      if (result.extensions.empty()) {
        std::cout << "NO\n";
      } else {
        std::cout << matrixx::render_extension(af, result.extensions.front(),
                                               order)
                  << "\n";
      }
      break;
    case matrixx::Task::EE:
      std::cout << matrixx::render_extension_list(af, result.extensions, order)
                << "\n";
      break;
    case matrixx::Task::DC:
    case matrixx::Task::DS:
      std::cout << matrixx::render_decision(*result.decision) << "\n";
      break;
  }
  return 0;
}

struct GenCommand {
  matrixx::RandomAfParams params;
};

int run_gen(const GenCommand& cmd) {
  try {
    std::cout << matrixx::to_apx(matrixx::random_framework(cmd.params));
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  return 0;
}

int run_supports() {
  for (const char* problem : {"SE-ST", "SE-CO", "EE-ST", "EE-CO", "DC-ST",
                              "DC-CO", "DS-ST", "DS-CO"}) {
    std::cout << problem << "\n";
  }
  return 0;
}

struct BenchCommand {
  matrixx::RandomAfParams params;
  std::string problem = "EE-ST";
};

int run_bench(const BenchCommand& cmd) {
  matrixx::TaskSpec task;
  try {
    task = matrixx::TaskSpec::parse(cmd.problem);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  if (task.task != matrixx::Task::SE && task.task != matrixx::Task::EE) {
    return usage_error("bench supports SE and EE problems only");
  }

  matrixx::ArgumentationFramework af;
  try {
    af = matrixx::random_framework(cmd.params);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }

  auto start = std::chrono::steady_clock::now();
  matrixx::SolveResult result = matrixx::solve(af, task);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  std::cout << "problem=" << cmd.problem << " n=" << cmd.params.n
            << " p=" << cmd.params.attack_probability
            << " self_p=" << cmd.params.self_attack_probability
            << " seed=" << cmd.params.seed
            << " extensions=" << result.extensions.size()
            << " elapsed_ms=" << elapsed
            << " states_expanded=" << result.stats.states_expanded
            << " states_abandoned=" << result.stats.states_abandoned
            << " duplicates_suppressed=" << result.stats.duplicates_suppressed
            << " peak_frontier=" << result.stats.peak_frontier << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "matrixx — enumerates and decides stable and complete extensions of "
      "abstract argumentation frameworks by matrix row/column reduction"};
  app.require_subcommand(0, 1);

  SolveCommand solve_cmd;
  app.add_option("--problem", solve_cmd.problem,
                 "problem to solve: {SE,EE,DC,DS}-{ST,CO}");
  app.add_option("--file,-f", solve_cmd.file, "instance file");
  app.add_option("--arg", solve_cmd.query, "query argument for DC/DS");
  app.add_option("--format", solve_cmd.format,
                 "instance format: apx or iccma (default: auto-detect)");
  auto* limit_opt = app.add_option("--limit", solve_cmd.limit,
                                   "stop after this many extensions (EE)");
  app.add_flag("--trace", solve_cmd.trace,
               "dump every visited matrix state to stderr");
  app.add_flag("--oracle", solve_cmd.use_oracle)->group("");  // debug only

  GenCommand gen_cmd;
  auto* gen = app.add_subcommand(
      "gen", "emit a seeded pseudo-random apx instance on stdout");
  gen->add_option("--n", gen_cmd.params.n, "number of arguments")->required();
  gen->add_option("--p", gen_cmd.params.attack_probability,
                  "attack probability per ordered pair");
  gen->add_option("--self-p", gen_cmd.params.self_attack_probability,
                  "self-attack probability per node");
  gen->add_option("--seed", gen_cmd.params.seed, "generator seed");

  auto* supports =
      app.add_subcommand("supports", "list the supported problem strings");

  BenchCommand bench_cmd;
  auto* bench = app.add_subcommand(
      "bench", "time the solver on a seeded pseudo-random instance");
  bench->add_option("--n", bench_cmd.params.n, "number of arguments")
      ->required();
  bench->add_option("--p", bench_cmd.params.attack_probability,
                    "attack probability per ordered pair");
  bench->add_option("--self-p", bench_cmd.params.self_attack_probability,
                    "self-attack probability per node");
  bench->add_option("--seed", bench_cmd.params.seed, "generator seed");
  bench->add_option("--problem", bench_cmd.problem, "SE/EE problem to time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (gen->parsed()) return run_gen(gen_cmd);
  if (supports->parsed()) return run_supports();
  if (bench->parsed()) return run_bench(bench_cmd);

  if (solve_cmd.problem.empty() || solve_cmd.file.empty()) {
    return usage_error("--problem and --file are required (see --help)");
  }
  solve_cmd.limit_set = limit_opt->count() > 0;
  return run_solve(solve_cmd);
}
