#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polyrep/container.hpp"
#include "polyrep/suites.hpp"
#include "polyrep/teletype.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int teletype_echo(std::size_t n) {
  try {
    polyrep::run_console(polyrep::echo_n(n), std::cin, std::cout);
  } catch (polyrep::EndOfInput const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_ok;
}

int teletype_replay(std::string const& script_path, std::optional<std::string> const& log_path,
                    std::optional<std::size_t> n) {
  auto const script = polyrep::parse_script(read_file(script_path));
  try {
    auto const run = polyrep::run_replay(polyrep::echo_n(n.value_or(script.size())), script);
    auto const log = polyrep::format_log(run.log);
    if (log_path) {
      write_file(*log_path, log);
      std::cout << polyrep::encode_utf8(polyrep::output_of(run.log));
    } else {
      std::cout << log;
    }
  } catch (polyrep::ScriptExhausted const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_ok;
}

int teletype_log(std::size_t n, std::string const& log_path) {
  auto const run = polyrep::run_logging(polyrep::echo_n(n), std::cin, std::cout);
  write_file(log_path, polyrep::format_log(run.log));
  if (!run.result) {
    std::cerr << "error: " << polyrep::EndOfInput().what() << '\n';
    return exit_failure;
  }
  return exit_ok;
}

int laws(std::optional<std::string> const& suite, polyrep::CheckConfig const& cfg, bool list) {
  if (list) {
    for (auto const& s : polyrep::law_suites()) std::cout << s.name << '\n';
    return exit_ok;
  }
  std::vector<polyrep::CheckResult> results;
  try {
    results = polyrep::run_law_suites(suite, cfg);
  } catch (polyrep::UnknownSuite const& e) {
    throw UsageError(e.what());
  }
  for (auto const& r : results) std::cout << polyrep::format_result(r) << '\n';
  return polyrep::all_passed(results) ? exit_ok : exit_failure;
}

template <class T>
void print_container(T const& traversable, std::size_t size) {
  auto const c = polyrep::extract_container(traversable, size);
  for (auto const& s : c.shapes.values())
    std::cout << "shape=" << traversable.render(s) << " arity=" << c.arity(s) << '\n';
}

int container_analyze(std::string const& instance, std::size_t size) {
  if (instance == "list") {
    print_container(polyrep::list_traversable(), size);
  } else if (instance == "pair") {
    print_container(polyrep::pair_traversable(), size);
  } else if (instance == "tree") {
    print_container(polyrep::tree_traversable(), size);
  } else if (instance.rfind("vec:", 0) == 0) {
    std::size_t length = 0;
    std::istringstream digits(instance.substr(4));
    if (!(digits >> length) || !digits.eof()) throw UsageError("bad vector length in " + instance);
    print_container(polyrep::vec_traversable(length), size);
  } else {
    throw UsageError("unknown instance " + instance + " (expected list, pair, vec:N or tree)");
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation theorems for second-order functionals, as executable law checks."};
  app.require_subcommand(1);

  auto* teletype = app.add_subcommand("teletype", "Teletype effect demo")->require_subcommand(1);

  std::size_t echo_count = 0;
  auto* echo = teletype->add_subcommand("echo", "Echo N characters from stdin");
  echo->add_option("--n", echo_count, "Number of characters")->required();

  std::string script_path;
  std::optional<std::string> replay_log;
  std::optional<std::size_t> replay_count;
  auto* replay = teletype->add_subcommand("replay", "Run echo against a script and write the log");
  replay->add_option("--script", script_path, "Script file, one character per line")->required();
  replay->add_option("--log", replay_log, "Log file (default: stdout)");
  replay->add_option("--n", replay_count, "Number of characters (default: script length)");

  std::size_t log_count = 0;
  std::string log_path;
  auto* log = teletype->add_subcommand("log", "Echo N characters from stdin, logging every operation");
  log->add_option("--n", log_count, "Number of characters")->required();
  log->add_option("--log", log_path, "Log file")->required();

  std::optional<std::string> suite;
  polyrep::CheckConfig cfg;
  bool list_suites = false;
  auto* laws_cmd = app.add_subcommand("laws", "Run the law suites");
  laws_cmd->add_option("--suite", suite, "Only this suite");
  laws_cmd->add_option("--seed", cfg.seed, "Seed for sampled laws");
  laws_cmd->add_option("--budget", cfg.budget, "Largest case count checked exhaustively");
  laws_cmd->add_flag("--list", list_suites, "List the registered suites");

  auto* container = app.add_subcommand("container", "Finitary containers")->require_subcommand(1);
  std::string instance;
  std::size_t size = 3;
  auto* analyze = container->add_subcommand("analyze", "Print the shapes and arities of a traversable instance");
  analyze->add_option("--instance", instance, "list, pair, vec:N or tree")->required();
  analyze->add_option("--size", size, "Largest shape size");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (echo->parsed()) return teletype_echo(echo_count);
    if (replay->parsed()) return teletype_replay(script_path, replay_log, replay_count);
    if (log->parsed()) return teletype_log(log_count, log_path);
    if (laws_cmd->parsed()) return laws(suite, cfg, list_suites);
    if (analyze->parsed()) return container_analyze(instance, size);
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (polyrep::FormatError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
