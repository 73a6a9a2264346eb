#include "flagcycles/shell.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "flagcycles/errors.hpp"
#include "flagcycles/suites.hpp"
#include "scanner.hpp"

namespace flagcycles {

namespace {

/// Wrong command shape; reported like a syntax error.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path.string() + "'");
  out << text;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::pair<Sign, Sign> parse_sign_pair(std::string_view text) {
  auto sign = [](char c) -> std::optional<Sign> {
    if (c == '+') return Sign::kPlus;
    if (c == '-') return Sign::kMinus;
    return std::nullopt;
  };
  if (text.size() == 2) {
    const auto s = sign(text[0]);
    const auto t = sign(text[1]);
    if (s && t) return {*s, *t};
  }
  throw SyntaxError("malformed sign pair '" + std::string(text) + "'", 1, 1,
                    {"'++'", "'+-'", "'-+'", "'--'"});
}

std::size_t parse_count(std::string_view text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw SyntaxError(std::string("malformed ") + what + " '" + std::string(text) + "'", 1, 1,
                      {"nonnegative integer"});
  }
  try {
    return std::stoull(std::string(text));
  } catch (const std::out_of_range&) {
    throw DomainError(std::string(what) + " out of range");
  }
}

void check_name(const std::string& name) {
  if (!is_identifier(name)) throw UsageError("invalid binding name '" + name + "'");
}

std::string print_binding(const Generators& gens, const Binding& b) {
  return std::visit(
      [&](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, Word>) {
          return to_string(value);
        } else if constexpr (std::is_same_v<T, RootedPresentation>) {
          return to_string(gens, value);
        } else {
          return to_string(value);
        }
      },
      b);
}

}  // namespace

Expression parse_expression(const Generators& gens, std::string_view text) {
  if (!gens) throw DomainError("no generators declared; run `gens` first");
  const auto body = trim(text);
  if (starts_with(body, "[")) return parse_rooted(gens, text);
  if (starts_with(body, "(") || starts_with(body, "leaf:")) {
    return RootedPresentation{parse_tree(gens, text), Sign::kPlus};
  }
  return parse_word(gens, text);
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  detail::Scanner in(line);
  while (true) {
    in.skip_space();
    if (in.at_end() || in.peek() == '#') break;
    std::string token;
    while (!in.at_end() && !std::isspace(static_cast<unsigned char>(in.peek()))) {
      if (in.peek() == '"') {
        in.advance();
        while (!in.at_end() && in.peek() != '"') token.push_back(in.advance());
        if (in.at_end()) in.fail("unterminated quote", {"'\"'"});
        in.advance();
      } else {
        token.push_back(in.advance());
      }
    }
    out.push_back(std::move(token));
  }
  return out;
}

std::string save_session(const Session& s) {
  std::ostringstream os;
  os << "# flagcycles session\n";
  if (s.generators) {
    os << "gens";
    for (const auto& n : s.generators->names()) os << ' ' << n;
    os << '\n';
    switch (s.policy.mode()) {
      case CanonicalPolicy::Mode::kLexLeast:
        os << "policy lex\n";
        break;
      case CanonicalPolicy::Mode::kAsComputed:
        os << "policy computed\n";
        break;
      case CanonicalPolicy::Mode::kExplicit:
        os << "policy explicit\n";
        for (const auto& letters : s.policy.overrides()) {
          os << "override " << to_string(Word(s.generators, letters)) << '\n';
        }
        break;
    }
  }
  if (s.lattice) {
    os << "lattice " << s.lattice->dimension() << '\n';
    for (const auto& row : s.lattice->rows()) {
      os << "row";
      for (auto x : row) os << ' ' << x;
      os << '\n';
    }
  }
  if (s.plane) {
    os << "plane";
    for (const auto& p : s.plane->punctures()) os << ' ' << to_string(p);
    os << '\n';
  }
  for (const auto& [name, value] : s.bindings) {
    const char* kind = std::holds_alternative<Word>(value)                 ? "word"
                       : std::holds_alternative<RootedPresentation>(value) ? "tree"
                                                                           : "loop";
    os << "bind " << name << ' ' << kind << ' ';
    if (std::holds_alternative<FlaggedLoop>(value)) {
      os << to_string(std::get<FlaggedLoop>(value)) << '\n';
    } else {
      os << print_binding(s.generators, value) << '\n';
    }
  }
  return os.str();
}

Session load_session(std::string_view text) {
  Session s;
  std::optional<std::size_t> lattice_dimension;
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t line_no = 0;
  for (auto raw : split_lines(text)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto space = line.find(' ');
    const auto keyword = line.substr(0, space);
    const auto rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    try {
      if (keyword == "gens") {
        std::vector<std::string> names;
        std::istringstream is{std::string(rest)};
        for (std::string n; is >> n;) names.push_back(n);
        s.generators = make_generators(std::move(names));
      } else if (keyword == "policy") {
        if (rest == "lex" || rest == "explicit") {
          s.policy = CanonicalPolicy::lex_least();
        } else if (rest == "computed") {
          s.policy = CanonicalPolicy::as_computed();
        } else {
          throw SyntaxError("unknown policy", line_no, 8, {"lex", "computed", "explicit"});
        }
      } else if (keyword == "override") {
        if (!s.generators) throw DomainError("override before gens");
        s.policy = s.policy.with_override(parse_word(s.generators, rest));
      } else if (keyword == "lattice") {
        lattice_dimension = parse_count(rest, "lattice dimension");
      } else if (keyword == "row") {
        if (!lattice_dimension) throw DomainError("row before lattice");
        std::string joined;
        for (const auto& token : tokenize(rest)) joined += (joined.empty() ? "" : ",") + token;
        const auto v = parse_vector("(" + joined + ")");
        rows.emplace_back(v.entries().begin(), v.entries().end());
      } else if (keyword == "plane") {
        std::vector<Point> punctures;
        for (const auto& token : tokenize(rest)) punctures.push_back(parse_point(token));
        s.plane.emplace(std::move(punctures));
      } else if (keyword == "bind") {
        const auto a = rest.find(' ');
        const auto name = std::string(rest.substr(0, a));
        check_name(name);
        const auto after = trim(rest.substr(a == std::string_view::npos ? rest.size() : a));
        const auto b = after.find(' ');
        const auto kind = after.substr(0, b);
        const auto body = b == std::string_view::npos ? std::string_view{} : trim(after.substr(b));
        if (kind == "word") {
          if (!s.generators) throw DomainError("word binding before gens");
          s.bindings.insert_or_assign(name, parse_word(s.generators, body));
        } else if (kind == "tree") {
          if (!s.generators) throw DomainError("tree binding before gens");
          s.bindings.insert_or_assign(name, parse_rooted(s.generators, body));
        } else if (kind == "loop") {
          auto loop = parse_loop(body);
          if (s.plane) check_avoids(loop, *s.plane);
          s.bindings.insert_or_assign(name, std::move(loop));
        } else {
          throw SyntaxError("unknown binding kind", line_no, 1, {"word", "tree", "loop"});
        }
      } else {
        throw SyntaxError("unknown session entry '" + std::string(keyword) + "'", line_no, 1);
      }
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.message(), line_no, e.column(), e.expected());
    } catch (const UsageError& e) {
      throw SyntaxError(e.what(), line_no, 1);
    } catch (const DomainError& e) {
      throw DomainError("session line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (lattice_dimension) s.lattice.emplace(*lattice_dimension, std::move(rows));
  return s;
}

Shell::Shell(Session session, std::filesystem::path working_directory)
    : session_(std::move(session)), working_directory_(std::move(working_directory)) {}

std::filesystem::path Shell::resolve(const std::string& path) const {
  std::filesystem::path p(path);
  return p.is_absolute() ? p : working_directory_ / p;
}

namespace {

class Command {
 public:
  Command(Session& session, const std::vector<std::string>& argv) : s_(session), argv_(argv) {}

  const Generators& gens() const {
    if (!s_.generators) throw DomainError("no generators declared; run `gens` first");
    return s_.generators;
  }

  const PuncturedPlane& plane() const {
    if (!s_.plane) throw DomainError("no plane loaded; run `plane load <file>` first");
    return *s_.plane;
  }

  void arity(std::size_t n, const char* usage) const {
    if (argv_.size() != n) throw UsageError(std::string("usage: ") + usage);
  }

  const Binding& binding(const std::string& name) const {
    const auto it = s_.bindings.find(name);
    if (it == s_.bindings.end()) throw DomainError("unbound name '" + name + "'");
    return it->second;
  }

  Word word(const std::string& text) const {
    if (starts_with(text, "$")) {
      const auto& b = binding(text.substr(1));
      if (const auto* w = std::get_if<Word>(&b)) return *w;
      if (const auto* r = std::get_if<RootedPresentation>(&b)) return eval_tree(gens(), *r);
      throw DomainError("'" + text.substr(1) + "' is a loop, not a word");
    }
    return parse_word(gens(), text);
  }

  RootedPresentation tree(const std::string& text) const {
    if (starts_with(text, "$")) {
      const auto& b = binding(text.substr(1));
      if (const auto* r = std::get_if<RootedPresentation>(&b)) return *r;
      throw DomainError("'" + text.substr(1) + "' is not a tree");
    }
    const auto e = parse_expression(gens(), text);
    if (const auto* r = std::get_if<RootedPresentation>(&e)) return *r;
    throw DomainError("expected a tree, got the word '" + text + "'");
  }

  const FlaggedLoop& loop(const std::string& name) const {
    const auto& b = binding(starts_with(name, "$") ? name.substr(1) : name);
    if (const auto* l = std::get_if<FlaggedLoop>(&b)) return *l;
    throw DomainError("'" + name + "' is not a loop");
  }

  /// Value of `--flag value`, if present.
  std::optional<std::string> option(const std::string& flag, std::size_t from) const {
    for (std::size_t i = from; i < argv_.size(); ++i) {
      if (argv_[i] == flag) {
        if (i + 1 >= argv_.size()) throw UsageError("missing value for " + flag);
        return argv_[i + 1];
      }
    }
    return std::nullopt;
  }

  void only_options(std::size_t from, std::initializer_list<std::string_view> allowed,
                    const char* usage) const {
    for (std::size_t i = from; i < argv_.size(); i += 2) {
      if (std::find(allowed.begin(), allowed.end(), argv_[i]) == allowed.end() ||
          i + 1 >= argv_.size()) {
        throw UsageError(std::string("usage: ") + usage);
      }
    }
  }

  std::string fresh_name(const std::string& stem) const {
    for (std::size_t k = 1;; ++k) {
      auto name = stem + std::to_string(k);
      if (!s_.bindings.contains(name)) return name;
    }
  }

  Session& s_;
  const std::vector<std::string>& argv_;
};

std::string help_text() {
  return "commands:\n"
         "  gens <n1> <n2> ...            declare generators\n"
         "  policy lex|computed           canonical-presentation rule\n"
         "  policy override <word>        declare <word> canonical in its class\n"
         "  let <name> <word|tree>        bind a value; refer to it as $name\n"
         "  show <name>\n"
         "  inv <word> | class <word> | pair <st> <word> <word>\n"
         "  eval <tree> | word2tree <word> | orbit <tree> [--cap K]\n"
         "  ms <word> | ab <word> | coset <vector> | lattice load <file>\n"
         "  plane load <file> | wind <loop> | fgword <loop>\n"
         "  sum <st> <loop> <loop> [--base (x,y)] [--as <name>]\n"
         "  oracle sweep --samples K --seed S\n"
         "  check <suite|all> | save <file> | load <file>";
}

}  // namespace

CommandResult Shell::run(const std::vector<std::string>& argv) {
  CommandResult result;
  if (argv.empty()) return result;
  Session next = session_;
  Command cmd(next, argv);
  std::ostringstream out;
  const auto& verb = argv[0];
  try {
    if (verb == "help") {
      out << help_text();
    } else if (verb == "gens") {
      if (argv.size() < 2) throw UsageError("usage: gens <n1> <n2> ...");
      next.generators = make_generators({argv.begin() + 1, argv.end()});
      next.policy = CanonicalPolicy::lex_least();
      next.lattice.reset();
      std::erase_if(next.bindings,
                    [](const auto& kv) { return !std::holds_alternative<FlaggedLoop>(kv.second); });
      out << "generators:";
      for (const auto& n : next.generators->names()) out << ' ' << n;
    } else if (verb == "policy") {
      if (argv.size() == 2 && argv[1] == "lex") {
        next.policy = CanonicalPolicy::lex_least();
      } else if (argv.size() == 2 && argv[1] == "computed") {
        next.policy = CanonicalPolicy::as_computed();
      } else if (argv.size() == 3 && argv[1] == "override") {
        next.policy = next.policy.with_override(cmd.word(argv[2]));
      } else {
        throw UsageError("usage: policy lex|computed|override <word>");
      }
      out << "policy: " << (next.policy.mode() == CanonicalPolicy::Mode::kLexLeast     ? "lex"
                            : next.policy.mode() == CanonicalPolicy::Mode::kAsComputed ? "computed"
                                                                                       : "explicit");
    } else if (verb == "let") {
      cmd.arity(3, "let <name> <word|tree>");
      check_name(argv[1]);
      auto value = parse_expression(cmd.gens(), argv[2]);
      Binding b = std::visit([](auto v) -> Binding { return v; }, std::move(value));
      out << argv[1] << " = " << print_binding(next.generators, b);
      next.bindings.insert_or_assign(argv[1], std::move(b));
    } else if (verb == "show") {
      cmd.arity(2, "show <name>");
      out << print_binding(next.generators, cmd.binding(argv[1]));
    } else if (verb == "inv") {
      cmd.arity(2, "inv <word>");
      out << to_string(involution(cmd.word(argv[1])));
    } else if (verb == "class") {
      cmd.arity(2, "class <word>");
      out << to_string(class_of(cmd.word(argv[1]), next.policy));
    } else if (verb == "pair") {
      cmd.arity(4, "pair <st> <word> <word>");
      const auto [s, t] = parse_sign_pair(argv[1]);
      const auto a = PresentationClass::with_canonical(cmd.word(argv[2]));
      const auto b = PresentationClass::with_canonical(cmd.word(argv[3]));
      out << to_string(pair(a, s, t, b));
    } else if (verb == "eval") {
      cmd.arity(2, "eval <tree>");
      out << to_string(eval_tree(cmd.gens(), cmd.tree(argv[1])));
    } else if (verb == "word2tree") {
      cmd.arity(2, "word2tree <word>");
      out << to_string(cmd.gens(), word_to_tree(cmd.word(argv[1])));
    } else if (verb == "orbit") {
      if (argv.size() < 2) throw UsageError("usage: orbit <tree> [--cap K]");
      cmd.only_options(2, {"--cap"}, "orbit <tree> [--cap K]");
      const auto cap_text = cmd.option("--cap", 2);
      const auto cap = cap_text ? parse_count(*cap_text, "cap") : kDefaultClosureCap;
      const auto root = cmd.tree(argv[1]);
      const auto orbit = move_closure(root, cap);
      out << "orbit of " << orbit.size() << " presentations, class "
          << to_string(class_of(eval_tree(cmd.gens(), root), next.policy));
      for (const auto& member : orbit) out << "\n  " << to_string(cmd.gens(), member);
    } else if (verb == "ms") {
      cmd.arity(2, "ms <word>");
      out << to_string(multiset_quotient(cmd.word(argv[1])), *cmd.gens());
    } else if (verb == "ab") {
      cmd.arity(2, "ab <word>");
      out << to_string(abelianize(cmd.word(argv[1])));
    } else if (verb == "coset") {
      cmd.arity(2, "coset <vector>");
      const auto v = parse_vector(argv[1]);
      const auto lattice = next.lattice ? *next.lattice : RelationLattice(v.dimension());
      out << to_string(reduce_coset(v, lattice).rep());
    } else if (verb == "lattice") {
      cmd.arity(3, "lattice load <file>");
      if (argv[1] != "load") throw UsageError("usage: lattice load <file>");
      auto lattice = parse_lattice(read_file(resolve(argv[2])), cmd.gens()->size());
      out << "lattice: " << lattice.rows().size() << " relations, hermite basis";
      if (lattice.hermite_basis().empty()) out << " (none)";
      for (const auto& row : lattice.hermite_basis()) out << ' ' << to_string(AbelianVector(row));
      next.lattice = std::move(lattice);
    } else if (verb == "plane") {
      cmd.arity(3, "plane load <file>");
      if (argv[1] != "load") throw UsageError("usage: plane load <file>");
      auto file = parse_loop_file(read_file(resolve(argv[2])));
      std::erase_if(next.bindings,
                    [](const auto& kv) { return std::holds_alternative<FlaggedLoop>(kv.second); });
      out << "plane: " << file.plane.size() << " punctures; loops";
      for (std::size_t i = 0; i < file.loops.size(); ++i) {
        const auto name = "l" + std::to_string(i + 1);
        out << ' ' << name;
        next.bindings.insert_or_assign(name, std::move(file.loops[i]));
      }
      next.plane = std::move(file.plane);
    } else if (verb == "wind") {
      cmd.arity(2, "wind <loop>");
      out << to_string(AbelianVector(winding_profile(cmd.loop(argv[1]), cmd.plane())));
    } else if (verb == "fgword") {
      cmd.arity(2, "fgword <loop>");
      out << to_string(crossing_word(cmd.loop(argv[1]), cmd.plane()));
    } else if (verb == "sum") {
      constexpr const char* kUsage = "sum <st> <loop> <loop> [--base (x,y)] [--as <name>]";
      if (argv.size() < 4) throw UsageError(std::string("usage: ") + kUsage);
      cmd.only_options(4, {"--base", "--as"}, kUsage);
      const auto [s, t] = parse_sign_pair(argv[1]);
      const auto& plane = cmd.plane();
      const auto base_text = cmd.option("--base", 4);
      const auto base = base_text ? parse_point(*base_text) : plane.default_base();
      auto result = connected_sum(cmd.loop(argv[2]), s, t, cmd.loop(argv[3]), base, plane);
      const auto name = cmd.option("--as", 4).value_or(cmd.fresh_name("sum"));
      check_name(name);
      out << name << " = " << to_string(result) << "\nwinding "
          << to_string(AbelianVector(winding_profile(result, plane)));
      next.bindings.insert_or_assign(name, std::move(result));
    } else if (verb == "oracle") {
      constexpr const char* kUsage = "oracle sweep --samples K --seed S";
      if (argv.size() < 2 || argv[1] != "sweep") throw UsageError(std::string("usage: ") + kUsage);
      cmd.only_options(2, {"--samples", "--seed"}, kUsage);
      const auto seed = cmd.option("--seed", 2);
      if (!seed) throw UsageError("oracle sweep requires --seed");
      const auto samples = parse_count(cmd.option("--samples", 2).value_or("50"), "sample count");
      const auto plane = next.plane && next.plane->size() == 1
                             ? *next.plane
                             : PuncturedPlane({{Rational(0), Rational(0)}});
      const auto report = verify_group_law(plane, samples, parse_count(*seed, "seed"));
      out << to_string(report);
      if (!report.passed()) result.exit_code = 1;
    } else if (verb == "check") {
      cmd.arity(2, "check <suite|all>");
      const auto& gens = cmd.gens();
      std::vector<std::string> names;
      if (argv[1] == "all") {
        names = suite_names();
      } else {
        names.push_back(argv[1]);
      }
      std::size_t failed = 0;
      for (std::size_t i = 0; i < names.size(); ++i) {
        const auto r = run_suite(names[i], gens);
        if (!r.passed()) ++failed;
        out << (i ? "\n" : "") << to_string(r);
      }
      if (names.size() > 1) {
        out << "\n" << (failed ? std::to_string(failed) + " suites failed" : "all suites passed");
      }
      if (failed) result.exit_code = 1;
    } else if (verb == "save") {
      cmd.arity(2, "save <file>");
      write_file(resolve(argv[1]), save_session(next));
      out << "saved " << argv[1];
    } else if (verb == "load") {
      cmd.arity(2, "load <file>");
      next = load_session(read_file(resolve(argv[1])));
      out << "loaded " << argv[1];
    } else {
      throw UsageError("unknown command '" + verb + "'");
    }
  } catch (const SyntaxError& e) {
    result.err = std::string("syntax error: ") + e.what();
    result.exit_code = 2;
    return result;
  } catch (const UsageError& e) {
    result.err = e.what();
    result.exit_code = 2;
    return result;
  } catch (const Error& e) {
    result.err = e.what();
    result.exit_code = 1;
    return result;
  }
  result.out = out.str();
  if (result.exit_code == 0) session_ = std::move(next);
  return result;
}

CommandResult Shell::run_line(std::string_view line) {
  try {
    return run(tokenize(line));
  } catch (const SyntaxError& e) {
    return {"", std::string("syntax error: ") + e.what(), 2};
  }
}

std::string Shell::run_script(std::string_view script) {
  std::string transcript;
  for (auto raw : split_lines(script)) {
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    transcript += "> " + std::string(line) + "\n";
    const auto r = run_line(line);
    if (!r.out.empty()) transcript += r.out + "\n";
    if (!r.err.empty()) transcript += "error: " + r.err + "\n";
    if (r.exit_code != 0) transcript += "[exit " + std::to_string(r.exit_code) + "]\n";
  }
  return transcript;
}

}  // namespace flagcycles
