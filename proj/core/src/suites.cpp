#include "flagcycles/suites.hpp"

#include <functional>

#include "flagcycles/abelian.hpp"
#include "flagcycles/enumerate.hpp"
#include "flagcycles/errors.hpp"
#include "flagcycles/pairing_tree.hpp"
#include "flagcycles/plane.hpp"

namespace flagcycles {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

SuiteResult involution_suite(const Generators& gens) {
  Tally t("involution");
  const auto words = enumerate_words(gens, 0, 3);
  for (const auto& u : words) {
    const auto iu = involution(u);
    t.expect(involution(iu) == u, [&] { return "inv(inv(" + to_string(u) + ")) != itself"; });
    t.expect(class_of(u) == class_of(iu), [&] { return "class differs on fiber of " + to_string(u); });
    for (const auto& v : words) {
      t.expect(involution(concat(u, v)) == concat(involution(v), iu),
               [&] { return "anti-automorphism fails for " + to_string(u) + " , " + to_string(v); });
    }
  }
  return t.take();
}

SuiteResult laws_suite(const Generators& gens) {
  Tally t("laws");
  for (std::size_t i = 0; i < gens->size(); ++i) {
    for (std::size_t j = 0; j < gens->size(); ++j) {
      const auto a = generator_class(gens, i);
      const auto b = generator_class(gens, j);
      for (Sign s : kBothSigns) {
        for (Sign r : kBothSigns) {
          t.expect(check_commutation_law(a, s, r, b), [&] {
            return gens->name(i) + std::string(1, sign_char(s)) + "#" + sign_char(r) + gens->name(j);
          });
        }
      }
    }
  }
  return t.take();
}

SuiteResult trees_suite(const Generators& gens) {
  Tally t("trees");
  const auto n = gens->size();
  for (std::size_t leaves = 1; leaves <= 3; ++leaves) {
    for (const auto& tree : enumerate_trees(leaves, n)) {
      if (!tree.is_leaf()) {
        t.expect(eval_tree(gens, flip(tree)) == involution(eval_tree(gens, tree)),
                 [&] { return "flip law fails for " + to_string(gens, tree); });
      }
      const RootedPresentation rooted{tree, Sign::kPlus};
      const auto cls = class_of(eval_tree(gens, rooted));
      for (const auto& member : move_closure(rooted)) {
        t.expect(class_of(eval_tree(gens, member)) == cls,
                 [&] { return "move changes class: " + to_string(gens, member); });
      }
    }
  }
  for (const auto& w : enumerate_words(gens, 1, 3)) {
    t.expect(eval_tree(gens, word_to_tree(w)) == w,
             [&] { return "round trip fails for " + to_string(w); });
  }
  return t.take();
}

SuiteResult assoc_suite(const Generators& gens) {
  Tally t("assoc");
  const auto policy = CanonicalPolicy::as_computed();
  const auto n = gens->size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto ca = generator_class(gens, a);
        const auto cb = generator_class(gens, b);
        const auto cc = generator_class(gens, c);
        const auto ab = class_of(pair(ca, Sign::kPlus, Sign::kMinus, cb), policy);
        const auto bc = class_of(pair(cb, Sign::kPlus, Sign::kMinus, cc), policy);
        const auto left = pair(ab, Sign::kPlus, Sign::kMinus, cc);
        const auto right = pair(ca, Sign::kPlus, Sign::kMinus, bc);
        t.expect(left == right, [&] { return to_string(left) + " != " + to_string(right); });
      }
    }
  }
  return t.take();
}

SuiteResult monoid_suite(const Generators& gens) {
  Tally t("monoid");
  const Word identity(gens);
  for (const auto& w : enumerate_words(gens, 1, 3)) {
    const auto doubled = concat(w, involution(w));
    t.expect(doubled != identity, [&] { return to_string(doubled) + " collapsed to the identity"; });
    t.expect(abelianize(doubled).is_zero(),
             [&] { return "abelian image of " + to_string(doubled) + " is nonzero"; });
  }
  return t.take();
}

SuiteResult homology_suite(const Generators& gens) {
  Tally t("homology");
  const auto n = gens->size();
  std::vector<std::int64_t> row(n, 0);
  row[0] = 2;
  const RelationLattice lattice(n, {row});
  const RelationLattice free_lattice(n);
  const auto words = enumerate_words(gens, 0, 2);
  for (const auto& u : words) {
    for (const auto& v : words) {
      const auto uv = concat(u, v);
      t.expect(multiset_quotient(uv) == multiset_quotient(u) + multiset_quotient(v),
               [&] { return "multiset stage not additive on " + to_string(uv); });
      t.expect(abelianize(uv) == abelianize(u) + abelianize(v),
               [&] { return "abelianization not additive on " + to_string(uv); });
      t.expect(diagram_check(u, v, lattice) && diagram_check(u, v, free_lattice),
               [&] { return "diagram fails for " + to_string(u) + " , " + to_string(v); });
    }
    const auto cls = reduce_coset(abelianize(u), lattice);
    t.expect(reduce_coset(cls.rep(), lattice) == cls,
             [&] { return "reduction not idempotent on " + to_string(u); });
    t.expect(reduce_coset(abelianize(u) + AbelianVector(row), lattice) == cls,
             [&] { return "lattice shift changes the class of " + to_string(u); });
  }
  return t.take();
}

SuiteResult oracle_suite() {
  Tally t("oracle");
  const PuncturedPlane single({{Rational(0), Rational(0)}});
  const auto report = verify_group_law(single, 20, 1);
  t.expect(report.passed(), [&] { return report.counterexamples.front(); });

  const PuncturedPlane twin({{Rational(0), Rational(0)}, {Rational(3), Rational(1, 2)}});
  LoopSampler sampler(twin, twin.default_base(), 2);
  for (int i = 0; i < 20; ++i) {
    const auto a = sampler.any(2);
    const auto b = sampler.any(2);
    for (Sign s : kBothSigns) {
      for (Sign r : kBothSigns) {
        const auto sum = connected_sum(a, s, r, b, sampler.base(), twin);
        const auto wa = winding_profile(a, twin);
        const auto wb = winding_profile(b, twin);
        const auto ws = winding_profile(sum, twin);
        for (std::size_t j = 0; j < twin.size(); ++j) {
          t.expect(ws[j] == sign_value(s) * wa[j] + sign_value(-r) * wb[j],
                   [&] { return "signed addition fails at puncture " + std::to_string(j + 1); });
        }
      }
    }
    const auto sum = connected_sum(a, Sign::kPlus, Sign::kMinus, b, sampler.base(), twin);
    t.expect(crossing_word(sum, twin) == crossing_word(a, twin) * crossing_word(b, twin),
             [&] { return "crossing word of a sum is not the product"; });
  }
  return t.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"involution", "laws",     "trees", "assoc",
                                              "monoid",     "homology", "oracle"};
  return names;
}

SuiteResult run_suite(std::string_view name, const Generators& gens) {
  if (name == "involution") return involution_suite(gens);
  if (name == "laws") return laws_suite(gens);
  if (name == "trees") return trees_suite(gens);
  if (name == "assoc") return assoc_suite(gens);
  if (name == "monoid") return monoid_suite(gens);
  if (name == "homology") return homology_suite(gens);
  if (name == "oracle") return oracle_suite();
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::string to_string(const SuiteResult& result) {
  std::string out = result.name + ": " + std::to_string(result.cases) + " cases, " +
                    std::to_string(result.failures) + " failures, " +
                    (result.passed() ? "pass" : "FAIL");
  if (!result.passed()) out += " (first: " + result.first_failure + ")";
  return out;
}

}  // namespace flagcycles
