#include <gtest/gtest.h>

#include <random>

#include "flagcycles/enumerate.hpp"
#include "flagcycles/errors.hpp"
#include "flagcycles/word.hpp"

using namespace flagcycles;

namespace {

class WordTest : public ::testing::Test {
 protected:
  Generators gens = make_generators({"a", "b", "c"});

  Word w(std::string_view text) const { return parse_word(gens, text); }
  PresentationClass cls(std::string_view text) const { return class_of(w(text)); }
};

TEST(GeneratorSetTest, RejectsBadNames) {
  EXPECT_THROW(GeneratorSet({}), DomainError);
  EXPECT_THROW(GeneratorSet({"a", "a"}), DomainError);
  EXPECT_THROW(GeneratorSet({"1a"}), DomainError);
  EXPECT_THROW(GeneratorSet({"a-b"}), DomainError);
  EXPECT_NO_THROW(GeneratorSet({"c_1", "Xy9"}));
}

TEST_F(WordTest, ConcatAppendsLetters) {
  EXPECT_EQ(to_string(concat(w("a+"), w("b-"))), "a+ b-");
  EXPECT_EQ(concat(Word(gens), w("a+ c-")), w("a+ c-"));
  EXPECT_EQ(concat(w("a+ c-"), Word(gens)), w("a+ c-"));
  EXPECT_EQ(concat(w("a+ b+"), w("c-")), concat(w("a+"), w("b+ c-")));
}

TEST_F(WordTest, ConcatRejectsForeignGenerators) {
  const auto other = make_generators({"x", "y"});
  EXPECT_THROW(concat(w("a+"), parse_word(other, "x+")), DomainError);
  // Equal generator sets held by different pointers are compatible.
  const auto twin = make_generators({"a", "b", "c"});
  EXPECT_EQ(concat(w("a+"), parse_word(twin, "b+")), w("a+ b+"));
}

TEST_F(WordTest, Involution) {
  EXPECT_EQ(to_string(involution(w("a+ b+"))), "b- a-");
  EXPECT_EQ(involution(Word(gens)), Word(gens));
  EXPECT_EQ(to_string(involution(w("a- b+ c-"))), "c+ b- a+");
}

TEST_F(WordTest, ClassOfDefaultPolicy) {
  const auto c = cls("b- a-");
  EXPECT_EQ(to_string(c.canonical()), "a+ b+");
  EXPECT_EQ(to_string(c.anti()), "b- a-");
  EXPECT_FALSE(c.degenerate());

  const auto single = cls("a+");
  EXPECT_EQ(to_string(single.canonical()), "a+");
  EXPECT_EQ(to_string(single.anti()), "a-");
  EXPECT_EQ(cls("a-"), single);
  EXPECT_EQ(to_string(cls("a-").canonical()), "a+");

  const auto fixed = cls("a+ a-");
  EXPECT_EQ(fixed.canonical(), fixed.anti());
  EXPECT_TRUE(fixed.degenerate());
  EXPECT_EQ(to_string(fixed), "{a+ a- | a+ a-} degenerate");
}

TEST_F(WordTest, PoliciesPickDifferentSectionsOfTheSameClass) {
  const auto computed = class_of(w("b+ a+"), CanonicalPolicy::as_computed());
  const auto lex = class_of(w("b+ a+"));
  EXPECT_EQ(to_string(computed.canonical()), "b+ a+");
  EXPECT_EQ(to_string(lex.canonical()), "a- b-");
  EXPECT_EQ(computed, lex);

  const auto policy = CanonicalPolicy::lex_least().with_override(w("b- a-"));
  EXPECT_EQ(policy.mode(), CanonicalPolicy::Mode::kExplicit);
  EXPECT_EQ(to_string(class_of(w("a+ b+"), policy).canonical()), "b- a-");
  EXPECT_EQ(to_string(class_of(w("b- a-"), policy).canonical()), "b- a-");
  // Words without an override fall back to lexicographic order.
  EXPECT_EQ(to_string(class_of(w("c- b-"), policy).canonical()), "b+ c+");
}

TEST_F(WordTest, SignedForm) {
  const auto a = cls("a+");
  EXPECT_EQ(to_string(signed_form(a, Sign::kPlus)), "a+");
  EXPECT_EQ(to_string(signed_form(a, Sign::kMinus)), "a-");
  EXPECT_EQ(to_string(signed_form(cls("a+ b+"), Sign::kMinus)), "b- a-");
}

TEST_F(WordTest, FourPairings) {
  const auto a = generator_class(gens, 0);
  const auto b = generator_class(gens, 1);
  EXPECT_EQ(to_string(pair(a, Sign::kPlus, Sign::kMinus, b)), "a+ b+");
  EXPECT_EQ(to_string(pair(a, Sign::kMinus, Sign::kPlus, b)), "a- b-");
  EXPECT_EQ(to_string(pair(a, Sign::kPlus, Sign::kPlus, b)), "a+ b-");
  EXPECT_EQ(to_string(pair(a, Sign::kMinus, Sign::kMinus, b)), "a- b+");
  // ... and their flipped presentations
  EXPECT_EQ(to_string(pair(b, Sign::kMinus, Sign::kPlus, a)), "b- a-");
  EXPECT_EQ(to_string(pair(b, Sign::kPlus, Sign::kMinus, a)), "b+ a+");
  EXPECT_EQ(to_string(pair(b, Sign::kPlus, Sign::kPlus, a)), "b+ a-");
  EXPECT_EQ(to_string(pair(b, Sign::kMinus, Sign::kMinus, a)), "b- a+");
}

TEST_F(WordTest, CommutationLaws) {
  const auto a = generator_class(gens, 0);
  const auto b = generator_class(gens, 1);
  EXPECT_TRUE(check_commutation_law(a, Sign::kPlus, Sign::kMinus, b));
  EXPECT_TRUE(check_commutation_law(a, Sign::kPlus, Sign::kPlus, b));
  EXPECT_EQ(involution(w("a+ b-")), w("b+ a-"));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (Sign s : kBothSigns) {
        for (Sign t : kBothSigns) {
          EXPECT_TRUE(check_commutation_law(generator_class(gens, i), s, t, generator_class(gens, j)));
        }
      }
    }
  }
}

TEST_F(WordTest, ProductClassesOfDistinctGeneratorsDiffer) {
  // [a]^+ #^- [b] and [a]^- #^+ [b] are different classes: ab vs a^- b^-.
  const auto a = generator_class(gens, 0);
  const auto b = generator_class(gens, 1);
  EXPECT_NE(class_of(pair(a, Sign::kPlus, Sign::kMinus, b)),
            class_of(pair(a, Sign::kMinus, Sign::kPlus, b)));
}

TEST_F(WordTest, ParseAndPrint) {
  EXPECT_EQ(parse_word(gens, ""), Word(gens));
  EXPECT_EQ(parse_word(gens, "  \xCE\xB5 "), Word(gens));
  EXPECT_EQ(to_string(Word(gens)), "\xCE\xB5");
  EXPECT_EQ(to_string(w("  a+   b-\tc+ ")), "a+ b- c+");
}

TEST_F(WordTest, ParseErrors) {
  try {
    parse_word(gens, "a+ b");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 5u);
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"'+'", "'-'"}));
  }
  EXPECT_THROW(parse_word(gens, "a+b-"), SyntaxError);
  EXPECT_THROW(parse_word(gens, "+a"), SyntaxError);
  EXPECT_THROW(parse_word(gens, "a+ q-"), DomainError);
}

TEST_F(WordTest, LetterOrderIsGeneratorThenSign) {
  EXPECT_LT(w("a-"), w("b+"));
  EXPECT_LT(w("a+"), w("a-"));
  EXPECT_LT(w("a+ c+"), w("a- a-"));
}

// Property sweeps over random words.

std::vector<Letter> random_letters(std::mt19937_64& rng, std::size_t gens, std::size_t max_len) {
  std::vector<Letter> out(rng() % (max_len + 1));
  for (auto& l : out) {
    l = {static_cast<std::uint32_t>(rng() % gens), rng() % 2 ? Sign::kPlus : Sign::kMinus};
  }
  return out;
}

TEST_F(WordTest, InvolutionIsAnAntiAutomorphism) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Word u(gens, random_letters(rng, 3, 7));
    const Word v(gens, random_letters(rng, 3, 7));
    EXPECT_EQ(involution(involution(u)), u);
    EXPECT_EQ(involution(concat(u, v)), concat(involution(v), involution(u)));
    EXPECT_EQ(class_of(u), class_of(involution(u)));
  }
}

TEST_F(WordTest, MonoidNotGroup) {
  for (const auto& x : enumerate_words(gens, 1, 3)) {
    EXPECT_NE(concat(x, involution(x)), Word(gens));
  }
}

TEST_F(WordTest, SignSwapAutomorphismCommutesWithOperations) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Word u(gens, random_letters(rng, 3, 5));
    const Word v(gens, random_letters(rng, 3, 5));
    const std::size_t g = rng() % 3;
    auto phi = [g](const Word& x) { return swap_generator_sign(x, g); };
    EXPECT_EQ(phi(concat(u, v)), concat(phi(u), phi(v)));
    EXPECT_EQ(phi(involution(u)), involution(phi(u)));
    EXPECT_EQ(phi(phi(u)), u);
    const auto cu = PresentationClass::with_canonical(u);
    const auto cv = PresentationClass::with_canonical(v);
    for (Sign s : kBothSigns) {
      for (Sign t : kBothSigns) {
        EXPECT_EQ(phi(pair(cu, s, t, cv)),
                  pair(swap_generator_sign(cu, g), s, t, swap_generator_sign(cv, g)));
      }
    }
  }
}

TEST_F(WordTest, EnumerationCounts) {
  EXPECT_EQ(enumerate_words(gens, 0, 0).size(), 1u);
  EXPECT_EQ(enumerate_words(gens, 0, 2).size(), 1u + 6u + 36u);
  EXPECT_EQ(enumerate_words(gens, 2, 2).size(), 36u);
}

}  // namespace
