#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rwkit/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rwkit::input_error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct cli_state {
  rwkit::analysis_config config;
  std::size_t fuel_arg = 0;  // staging for the optional --fuel
  bool allow_fresh_consts = false;
  std::string file;
  std::string term_arg;
  std::string term_arg2;
  int exit_code = 0;

  void emit(const rwkit::command_output& out) {
    if (config.output_format == "json") {
      std::cout << out.report.dump(2) << '\n';
    } else {
      std::cout << out.text;
    }
    exit_code = out.exit_code;
  }

  rwkit::trs load_trs() {
    rwkit::term_limits::set(rwkit::default_max_term_height, config.max_term_size);
    return rwkit::parse_trs(read_file(file));
  }
};

void add_shared_options(CLI::App* cmd, cli_state& state) {
  cmd->add_option("--fuel", state.fuel_arg,
                  "search bound: node expansions for reachability (default 10000), steps for "
                  "normalize (default 1000)")
      ->check(CLI::PositiveNumber)
      ->each([&state](const std::string&) { state.config.fuel = state.fuel_arg; });
  cmd->add_option("--max-term-size", state.config.max_term_size,
                  "largest term (in nodes) any operation may build")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--assume-terminating", state.config.assume_terminating,
                "assert termination so joinable critical pairs imply confluence");
  cmd->add_option("--format", state.config.output_format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_flag("--dedupe-cps", state.config.dedupe_symmetric_cps,
                "list one critical pair per mirrored duplicate");
  cmd->add_flag("--allow-fresh-consts", state.allow_fresh_consts,
                "treat unknown nullary identifiers in command-line terms as fresh constants");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rwkit: confluence and rewriting analyses for first-order term rewriting systems"};
  app.require_subcommand(1);
  cli_state state;

  CLI::App* check = app.add_subcommand("check", "decide confluence of a TRS file");
  check->add_option("file", state.file, "TRS file")->required();
  add_shared_options(check, state);
  check->callback([&] { state.emit(rwkit::run_check(state.load_trs(), state.file, state.config)); });

  CLI::App* cps = app.add_subcommand("cps", "list critical pairs and their joinability");
  cps->add_option("file", state.file, "TRS file")->required();
  add_shared_options(cps, state);
  cps->callback([&] { state.emit(rwkit::run_cps(state.load_trs(), state.file, state.config)); });

  CLI::App* ortho = app.add_subcommand("orthogonal", "report left-linearity and overlaps");
  ortho->add_option("file", state.file, "TRS file")->required();
  add_shared_options(ortho, state);
  ortho->callback(
      [&] { state.emit(rwkit::run_orthogonal(state.load_trs(), state.file, state.config)); });

  CLI::App* normalize = app.add_subcommand("normalize", "reduce a term to normal form");
  normalize->add_option("file", state.file, "TRS file")->required();
  normalize->add_option("term", state.term_arg, "term to normalize")->required();
  add_shared_options(normalize, state);
  normalize->callback([&] {
    state.emit(rwkit::run_normalize(state.load_trs(), state.file, state.term_arg,
                                    state.allow_fresh_consts, state.config));
  });

  CLI::App* joinable = app.add_subcommand("joinable", "search for a common reduct of two terms");
  joinable->add_option("file", state.file, "TRS file")->required();
  joinable->add_option("left", state.term_arg, "first term")->required();
  joinable->add_option("right", state.term_arg2, "second term")->required();
  add_shared_options(joinable, state);
  joinable->callback([&] {
    state.emit(rwkit::run_joinable(state.load_trs(), state.file, state.term_arg, state.term_arg2,
                                   state.allow_fresh_consts, state.config));
  });

  CLI::App* par = app.add_subcommand("parallel", "enumerate the parallel reducts of a term");
  par->add_option("file", state.file, "TRS file")->required();
  par->add_option("term", state.term_arg, "subject term")->required();
  add_shared_options(par, state);
  par->callback([&] {
    state.emit(rwkit::run_parallel(state.load_trs(), state.file, state.term_arg,
                                   state.allow_fresh_consts, state.config));
  });

  CLI::App* ars = app.add_subcommand("ars", "analyze a finite abstract reduction system");
  ars->add_option("file", state.file, "edge list file, one 'x -> y' per line")->required();
  add_shared_options(ars, state);
  ars->callback([&] {
    state.emit(rwkit::run_ars(rwkit::parse_ars(read_file(state.file)), state.file, state.config));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const rwkit::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const rwkit::resource_error& e) {
    std::cerr << "error: resource limit exceeded: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return state.exit_code;
}
