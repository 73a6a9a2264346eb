#pragma once

// Line-oriented command language over the library. One command per line;
// arguments are whitespace-separated, double quotes group words and trees
// containing spaces, and `#` starts a comment.
//
// Exit codes: 0 success, 1 domain error, 2 syntax error.

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flagcycles/abelian.hpp"
#include "flagcycles/pairing_tree.hpp"
#include "flagcycles/plane.hpp"
#include "flagcycles/word.hpp"

namespace flagcycles {

using Binding = std::variant<Word, RootedPresentation, FlaggedLoop>;

struct Session {
  Generators generators;  // null until `gens` runs
  CanonicalPolicy policy = CanonicalPolicy::lex_least();
  std::optional<RelationLattice> lattice;
  std::optional<PuncturedPlane> plane;
  std::map<std::string, Binding> bindings;
};

/// Line-oriented text mirroring the literal grammars; lossless.
std::string save_session(const Session& session);
Session load_session(std::string_view text);

using Expression = std::variant<Word, RootedPresentation>;

/// A word literal, a rooted tree `[<r> <tree>]`, or a bare tree (root +).
Expression parse_expression(const Generators& gens, std::string_view text);

std::vector<std::string> tokenize(std::string_view line);

struct CommandResult {
  std::string out;
  std::string err;
  int exit_code = 0;
};

class Shell {
 public:
  explicit Shell(Session session = {}, std::filesystem::path working_directory = ".");

  const Session& session() const noexcept { return session_; }

  /// Runs one command. The session is left untouched when the command fails.
  CommandResult run(const std::vector<std::string>& argv);
  CommandResult run_line(std::string_view line);

  /// Runs every line of `script` and returns the transcript: each command is
  /// echoed as `> line`, followed by its output, `error: ...` lines and, on
  /// failure, `[exit N]`.
  std::string run_script(std::string_view script);

 private:
  std::filesystem::path resolve(const std::string& path) const;

  Session session_;
  std::filesystem::path working_directory_;
};

}  // namespace flagcycles
