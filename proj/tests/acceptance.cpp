// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Every check is exact; the only floating point is the angle-sum cross-check
// in criterion 7, which is rounded to the nearest integer.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "angle_oracle.hpp"
#include "brute_lattice.hpp"
#include "flagcycles/abelian.hpp"
#include "flagcycles/enumerate.hpp"
#include "flagcycles/pairing_tree.hpp"
#include "flagcycles/plane.hpp"
#include "flagcycles/word.hpp"

using namespace flagcycles;

namespace {

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first;
  std::string detail;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
};

bool report(int number, const char* name, const Tally& t, double seconds) {
  const bool pass = t.failures == 0 && t.checks > 0;
  std::printf("criterion %d %-14s %s  %llu checks, %llu failures%s%s  [%.2fs]\n", number, name,
              pass ? "PASS" : "FAIL", static_cast<unsigned long long>(t.checks),
              static_cast<unsigned long long>(t.failures), t.detail.empty() ? "" : ", ",
              t.detail.c_str(), seconds);
  if (!t.first.empty()) std::printf("    first failure: %s\n", t.first.c_str());
  return pass;
}

Tally involution_suite() {
  Tally t;
  const auto gens = make_generators({"a", "b", "c"});
  const auto words = enumerate_words(gens, 0, 4);
  t.detail = std::to_string(words.size()) + " words";
  t.expect(words.size() == 1 + 6 + 36 + 216 + 1296, [&] { return "word count " + std::to_string(words.size()); });
  std::vector<Word> inv;
  inv.reserve(words.size());
  for (const auto& w : words) inv.push_back(involution(w));
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    t.expect(involution(inv[i]) == w, [&] { return "inv(inv(" + to_string(w) + "))"; });
    t.expect(class_of(w) == class_of(inv[i]), [&] { return "class of " + to_string(w); });
  }
  // inv(uv) = inv(v) inv(u) over every ordered pair.
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      const auto lhs = involution(concat(words[i], words[j]));
      const auto rhs = concat(inv[j], inv[i]);
      t.expect(lhs == rhs, [&] { return "inv(uv) for u=" + to_string(words[i]) + ", v=" + to_string(words[j]); });
    }
  }
  return t;
}

Tally four_laws_suite() {
  Tally t;
  const auto gens = make_generators({"a", "b", "c", "d"});
  for (std::size_t i = 0; i < gens->size(); ++i) {
    for (std::size_t j = 0; j < gens->size(); ++j) {
      const auto a = generator_class(gens, i);
      const auto b = generator_class(gens, j);
      for (Sign s : kBothSigns) {
        for (Sign u : kBothSigns) {
          const auto where = [&] {
            return gens->name(i) + std::string(1, sign_char(s)) + "#" + sign_char(u) + gens->name(j);
          };
          t.expect(check_commutation_law(a, s, u, b), where);
          t.expect(involution(pair(a, s, u, b)) == pair(b, u, s, a), where);
        }
      }
    }
  }
  return t;
}

Tally tree_suite() {
  Tally t;
  const auto gens = make_generators({"a", "b"});
  std::uint64_t trees = 0;
  for (std::size_t leaves = 2; leaves <= 5; ++leaves) {
    for (const auto& n : enumerate_trees(leaves, 2)) {
      ++trees;
      t.expect(eval_tree(gens, flip(n)) == involution(eval_tree(gens, n)),
               [&] { return "flip law at " + to_string(gens, n); });
    }
  }
  for (const auto& w : enumerate_words(gens, 1, 5)) {
    t.expect(eval_tree(gens, word_to_tree(w)) == w, [&] { return "round trip of " + to_string(w); });
  }
  // Orbits partition the presentations, so each is closed once.
  std::set<RootedPresentation> seen;
  std::uint64_t orbits = 0;
  for (std::size_t leaves = 1; leaves <= 4; ++leaves) {
    for (const auto& tree : enumerate_trees(leaves, 2)) {
      for (Sign root : kBothSigns) {
        const RootedPresentation r{tree, root};
        if (seen.contains(r)) continue;
        ++orbits;
        const auto expected = class_of(eval_tree(gens, r));
        const auto orbit = move_closure(r);
        for (const auto& m : orbit) {
          t.expect(class_of(eval_tree(gens, m)) == expected,
                   [&] { return "orbit of " + to_string(gens, r) + " reaches " + to_string(gens, m); });
          seen.insert(m);
        }
        t.expect(move_closure(*orbit.rbegin()) == orbit,
                 [&] { return "moves are not symmetric on the orbit of " + to_string(gens, r); });
      }
    }
  }
  t.detail = std::to_string(trees) + " trees flipped, " + std::to_string(seen.size()) +
             " presentations in " + std::to_string(orbits) + " orbits";
  return t;
}

Tally associativity_suite() {
  Tally t;
  const auto gens = make_generators({"a", "b", "c"});
  const auto policy = CanonicalPolicy::as_computed();
  const auto lex = CanonicalPolicy::lex_least();
  std::uint64_t lex_disagreements = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        const auto a = generator_class(gens, i);
        const auto b = generator_class(gens, j);
        const auto c = generator_class(gens, k);
        const auto product = [&](const CanonicalPolicy& p, bool left) {
          if (left) return pair(class_of(pair(a, Sign::kPlus, Sign::kMinus, b), p), Sign::kPlus, Sign::kMinus, c);
          return pair(a, Sign::kPlus, Sign::kMinus, class_of(pair(b, Sign::kPlus, Sign::kMinus, c), p));
        };
        const auto l = product(policy, true);
        const auto r = product(policy, false);
        t.expect(l == r, [&] { return "(ab)c = " + to_string(l) + " but a(bc) = " + to_string(r); });
        if (product(lex, true) != product(lex, false)) ++lex_disagreements;
      }
    }
  }
  t.detail = "27 triples as computed; lex-least sections would disagree on " +
             std::to_string(lex_disagreements);
  return t;
}

Tally monoid_suite() {
  Tally t;
  const auto gens = make_generators({"a", "b", "c"});
  for (const auto& w : enumerate_words(gens, 1, 3)) {
    const auto ww = concat(w, involution(w));
    t.expect(!ww.empty(), [&] { return "w inv(w) empty for " + to_string(w); });
    t.expect(abelianize(ww).is_zero(), [&] { return "abelian image of " + to_string(ww); });
  }
  return t;
}

Tally homology_suite() {
  Tally t;
  const auto gens = make_generators({"a", "b"});
  const RelationLattice two(2, {{2, 0}});
  const auto words = enumerate_words(gens, 0, 3);
  for (const auto& u : words) {
    for (const auto& v : words) {
      const auto uv = concat(u, v);
      const auto where = [&] { return "u=" + to_string(u) + ", v=" + to_string(v); };
      t.expect(multiset_quotient(uv) == multiset_quotient(u) + multiset_quotient(v), where);
      t.expect(abelianize(uv) == abelianize(u) + abelianize(v), where);
      t.expect(diagram_check(u, v, two), where);
    }
  }

  // Membership on the whole box [-4,4]^3 against enumeration of integer
  // combinations with coefficients in [-10,10]. That enumeration is sound but
  // not complete for these lattices: some members need larger coefficients.
  // Each such miss must come with an explicit integer combination, found by a
  // wider search in test code, that really does exceed the bound.
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  std::uint64_t members = 0;
  std::uint64_t agreed = 0;
  std::uint64_t beyond = 0;
  std::int64_t widest = 0;
  for (int lattice = 0; lattice < 100; ++lattice) {
    std::vector<std::vector<std::int64_t>> rows(1 + rng() % 3, std::vector<std::int64_t>(3));
    for (auto& row : rows) {
      for (auto& x : row) x = entry(rng);
    }
    const RelationLattice l(3, rows);
    const testing_support::BruteLattice brute(3, rows, 10);
    const auto where = [&](const std::vector<std::int64_t>& v, const char* what) {
      std::ostringstream os;
      os << "lattice " << lattice << " rows";
      for (const auto& row : rows) os << ' ' << to_string(AbelianVector(row));
      os << ": " << to_string(AbelianVector(v)) << ' ' << what;
      return os.str();
    };
    for (std::int64_t x = -4; x <= 4; ++x) {
      for (std::int64_t y = -4; y <= 4; ++y) {
        for (std::int64_t z = -4; z <= 4; ++z) {
          const std::vector<std::int64_t> v{x, y, z};
          const auto h = reduce_coset(AbelianVector(v), l);
          t.expect(reduce_coset(h.rep(), l) == h, [&] { return where(v, "reduces twice differently"); });
          const bool hnf = h.is_zero();
          const bool enumerated = brute.contains(v);
          members += hnf;
          if (hnf == enumerated) {
            ++t.checks;
            ++agreed;
            continue;
          }
          t.expect(hnf, [&] { return where(v, "is enumerated but does not reduce to zero"); });
          const auto c = testing_support::BruteLattice::witness(rows, v, 100);
          std::int64_t reach = 0;
          if (c) {
            for (auto k : *c) reach = std::max(reach, k < 0 ? -k : k);
          }
          t.expect(c && reach > 10, [&] { return where(v, "reduces to zero without a witness"); });
          ++beyond;
          widest = std::max(widest, reach);
        }
      }
    }
  }
  t.detail = "100 lattices, " + std::to_string(members) + " members, " + std::to_string(agreed) +
             " targets agree with the [-10,10] enumeration, " + std::to_string(beyond) +
             " members need coefficients up to " + std::to_string(widest);
  return t;
}

std::int64_t s(Sign x) { return sign_value(x); }

Tally oracle_suite() {
  Tally t;
  const PuncturedPlane one({{0, 0}});
  const auto report = verify_group_law(one, 50, 1);
  t.expect(report.samples == 50, [] { return "sample count"; });
  for (const auto* tally : {&report.composition, &report.identity, &report.inverse, &report.associativity}) {
    t.checks += tally->checks;
    t.failures += tally->failures;
    if (tally->checks == 0) t.expect(false, [] { return "a group check did not run"; });
  }
  if (!report.counterexamples.empty() && t.first.empty()) t.first = report.counterexamples.front();

  LoopSampler sampler(one, one.default_base(), 5);
  const Point origin{0, 0};
  for (int i = 0; i < 50; ++i) {
    const auto l1 = sampler.any(3);
    const auto l2 = sampler.any(3);
    const auto w1 = winding_number(l1, origin);
    const auto w2 = winding_number(l2, origin);
    t.expect(w1 == testing_support::angle_winding(l1, origin), [&] { return "angle oracle on " + to_string(l1); });
    t.expect(w2 == testing_support::angle_winding(l2, origin), [&] { return "angle oracle on " + to_string(l2); });
    for (Sign a : kBothSigns) {
      for (Sign b : kBothSigns) {
        const auto sum = connected_sum(l1, a, b, l2, sampler.base(), one);
        const auto w = winding_number(sum, origin);
        t.expect(w == s(a) * w1 + s(-b) * w2, [&] {
          return "winding " + std::to_string(w) + " from " + std::to_string(w1) + " and " + std::to_string(w2);
        });
      }
    }
  }

  const PuncturedPlane two({{0, 0}, {5, 0}});
  LoopSampler pairs(two, two.default_base(), 6);
  for (int i = 0; i < 50; ++i) {
    const auto l1 = pairs.any(3);
    const auto l2 = pairs.any(3);
    const auto& base = pairs.base();
    const auto sum = connected_sum(l1, Sign::kPlus, Sign::kMinus, l2, base, two);
    const auto lhs = crossing_word(sum, two);
    const auto rhs = crossing_word(normalize_flag(l1, base, two), two) * crossing_word(normalize_flag(l2, base, two), two);
    t.expect(lhs == rhs, [&] { return to_string(lhs) + " vs " + to_string(rhs); });
    for (std::uint32_t p = 0; p < 2; ++p) {
      t.expect(lhs.exponent_sum(p) == winding_number(sum, two[p]), [&] { return "exponent sum vs winding"; });
    }
  }
  return t;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buffer;
  for (std::size_t n; (n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0;) out.append(buffer.data(), n);
  pclose(pipe);
  return out;
}

Tally cli_suite() {
  Tally t;
  const std::filesystem::path fixtures = FLAGCYCLES_FIXTURES;
  const auto script = fixtures / "session.fc";
  std::size_t commands = 0;
  {
    std::istringstream lines(read_file(script));
    for (std::string line; std::getline(lines, line);) {
      const auto first = line.find_first_not_of(" \t");
      if (first != std::string::npos && line[first] != '#') ++commands;
    }
  }
  t.detail = std::to_string(commands) + " commands";
  t.expect(commands >= 20, [&] { return "script has only " + std::to_string(commands) + " commands"; });
  const std::string command =
      std::string("\"") + FLAGCYCLES_CLI + "\" --transcript --script \"" + script.string() + "\"";
  const auto first = capture(command);
  const auto second = capture(command);
  const auto golden = read_file(fixtures / "session.golden");
  t.expect(!golden.empty(), [] { return "golden transcript missing"; });
  t.expect(first == second, [] { return "two runs differ"; });
  t.expect(first == golden, [&] {
    std::size_t i = 0;
    while (i < first.size() && i < golden.size() && first[i] == golden[i]) ++i;
    return "transcript differs from golden at byte " + std::to_string(i);
  });
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Tally (*run)();
  };
  const Criterion criteria[] = {
      {"involution", involution_suite}, {"four-laws", four_laws_suite},
      {"trees", tree_suite},            {"associativity", associativity_suite},
      {"monoid", monoid_suite},         {"homology", homology_suite},
      {"oracle", oracle_suite},         {"cli", cli_suite},
  };
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 8; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Tally tally;
    try {
      tally = criteria[i].run();
    } catch (const std::exception& e) {
      tally.failures = 1;
      tally.first = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    all = report(i + 1, criteria[i].name, tally, dt.count()) && all;
  }
  const std::chrono::duration<double> total = std::chrono::steady_clock::now() - start;
  std::printf("%s in %.2fs\n", all ? "all criteria passed" : "some criteria FAILED", total.count());
  return all ? 0 : 1;
}
