// flagcycles: command-line front end.
//
//   flagcycles [--session FILE] <command...>     run one command
//   flagcycles [--session FILE] --script FILE    run a script (batch mode)
//   flagcycles [--session FILE]                  read commands from stdin
//
// With --session the file is loaded first (if it exists) and written back
// after every successful run.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flagcycles/errors.hpp"
#include "flagcycles/shell.hpp"

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const flagcycles::CommandResult& r) {
  if (!r.out.empty()) std::cout << r.out << '\n';
  if (!r.err.empty()) std::cerr << "error: " << r.err << '\n';
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy monoids of flagged cycles: words, pairing trees, abelian tower, plane oracle"};
  std::string session_path;
  std::string script_path;
  bool transcript = false;
  std::vector<std::string> command;
  app.add_option("--session", session_path, "Session file to load and update");
  app.add_option("--script", script_path, "Run commands from a file")->check(CLI::ExistingFile);
  app.add_flag("--transcript", transcript, "Echo commands and exit codes (script/stdin mode)");
  app.footer("Anything after the options is run as a single command, e.g. `flagcycles inv \"a+ b+\"`.");
  app.prefix_command();
  CLI11_PARSE(app, argc, argv);
  command = app.remaining();

  flagcycles::Session session;
  if (!session_path.empty() && std::filesystem::exists(session_path)) {
    std::ifstream in(session_path, std::ios::binary);
    try {
      session = flagcycles::load_session(slurp(in));
    } catch (const flagcycles::SyntaxError& e) {
      std::cerr << "error: " << session_path << ": " << e.what() << '\n';
      return 2;
    } catch (const flagcycles::Error& e) {
      std::cerr << "error: " << session_path << ": " << e.what() << '\n';
      return 1;
    }
  }

  std::filesystem::path workdir = ".";
  if (!script_path.empty()) workdir = std::filesystem::path(script_path).parent_path();
  if (workdir.empty()) workdir = ".";
  flagcycles::Shell shell(std::move(session), workdir);

  int code = 0;
  if (!command.empty()) {
    code = emit(shell.run(command));
  } else {
    std::string script;
    if (!script_path.empty()) {
      std::ifstream in(script_path, std::ios::binary);
      script = slurp(in);
    } else {
      script = slurp(std::cin);
    }
    if (transcript) {
      std::cout << shell.run_script(script);
    } else {
      std::istringstream lines(script);
      for (std::string line; std::getline(lines, line);) {
        const auto r = shell.run_line(line);
        if (const int c = emit(r); c != 0 && code == 0) code = c;
      }
    }
  }

  if (!session_path.empty()) {
    std::ofstream out(session_path, std::ios::binary);
    out << flagcycles::save_session(shell.session());
  }
  return code;
}
