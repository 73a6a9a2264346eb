#pragma once

// Free monoid on signed generators c_i^+, c_i^- together with its
// reverse-and-flip involution, presentation classes {w, inv(w)} and the four
// signed pairings a^s #^t b, computed on presentations as a^s b^(-t).

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flagcycles {

enum class Sign : std::uint8_t { kPlus = 0, kMinus = 1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus;
}
constexpr int sign_value(Sign s) noexcept { return s == Sign::kPlus ? 1 : -1; }
constexpr char sign_char(Sign s) noexcept { return s == Sign::kPlus ? '+' : '-'; }

inline constexpr Sign kBothSigns[] = {Sign::kPlus, Sign::kMinus};

/// Ordered, nonempty list of distinct generator names.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<std::string> names_;
};

using Generators = std::shared_ptr<const GeneratorSet>;

Generators make_generators(std::vector<std::string> names);

bool is_identifier(std::string_view text) noexcept;

/// c_gen^sign. Ordered by generator index first, then + before -.
struct Letter {
  std::uint32_t gen = 0;
  Sign sign = Sign::kPlus;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter flipped(Letter l) noexcept { return {l.gen, -l.sign}; }

class Word {
 public:
  /// Throws DomainError if a letter refers to a generator outside `gens`.
  explicit Word(Generators gens, std::vector<Letter> letters = {});

  static Word letter(Generators gens, std::size_t gen, Sign sign);

  const Generators& generators() const noexcept { return gens_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const Word& a, const Word& b);

  /// Lexicographic letter order; only meaningful over a common generator set.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  Generators gens_;
  std::vector<Letter> letters_;
};

bool same_generators(const Generators& a, const Generators& b) noexcept;

Word concat(const Word& u, const Word& v);

/// c_{i1}^{s1} ... c_{in}^{sn}  ->  c_{in}^{-sn} ... c_{i1}^{-s1}
Word involution(const Word& w);

/// Alphabet automorphism swapping c_gen^+ and c_gen^-.
Word swap_generator_sign(const Word& w, std::size_t gen);

/// Whitespace-separated `name+` / `name-` tokens; ε for the empty word.
std::string to_string(const Word& w);

/// Inverse of to_string. The empty string and a lone `ε` both denote the
/// identity. Throws SyntaxError on malformed tokens and DomainError on names
/// missing from `gens`.
Word parse_word(const Generators& gens, std::string_view text);

/// Rule selecting which of {w, inv(w)} is the canonical presentation.
class CanonicalPolicy {
 public:
  enum class Mode { kLexLeast, kAsComputed, kExplicit };

  static CanonicalPolicy lex_least() { return CanonicalPolicy(Mode::kLexLeast); }
  /// The word handed to class_of is kept as canonical.
  static CanonicalPolicy as_computed() { return CanonicalPolicy(Mode::kAsComputed); }

  /// Declares `canonical` the canonical member of its class. Words without an
  /// override fall back to lexicographic-least.
  CanonicalPolicy with_override(const Word& canonical) const;

  Mode mode() const noexcept { return mode_; }

  /// Explicit overrides in insertion-independent order.
  std::vector<std::vector<Letter>> overrides() const;

  /// True when `w` (rather than its involution `anti`) should be canonical.
  bool keeps(const Word& w, const Word& anti) const;

  friend bool operator==(const CanonicalPolicy&, const CanonicalPolicy&) = default;

 private:
  explicit CanonicalPolicy(Mode mode) : mode_(mode) {}

  Mode mode_;
  // keyed by the lex-least member of the pair; value is the chosen canonical
  std::map<std::vector<Letter>, std::vector<Letter>> overrides_;
};

/// Unordered pair {canonical, anti} with anti = involution(canonical).
class PresentationClass {
 public:
  static PresentationClass with_canonical(Word canonical);

  const Word& canonical() const noexcept { return canonical_; }
  const Word& anti() const noexcept { return anti_; }

  /// The word is fixed by the involution, so the fiber has a single element.
  bool degenerate() const { return canonical_ == anti_; }

  /// Equality of the underlying unordered pairs; the section choice is ignored.
  friend bool operator==(const PresentationClass& a, const PresentationClass& b);

 private:
  PresentationClass(Word canonical, Word anti)
      : canonical_(std::move(canonical)), anti_(std::move(anti)) {}

  Word canonical_;
  Word anti_;
};

PresentationClass class_of(const Word& w,
                           const CanonicalPolicy& policy = CanonicalPolicy::lex_least());

/// Class of the bare generator, with c_gen^+ canonical.
PresentationClass generator_class(const Generators& gens, std::size_t gen);

Word signed_form(const PresentationClass& p, Sign s);

/// The word a^s b^(-t) presenting [a]^s #^t [b].
Word pair(const PresentationClass& a, Sign s, Sign t, const PresentationClass& b);

/// a^s #^t b and b^t #^s a present the same class.
bool check_commutation_law(const PresentationClass& a, Sign s, Sign t,
                           const PresentationClass& b);

PresentationClass swap_generator_sign(const PresentationClass& p, std::size_t gen);

std::string to_string(const PresentationClass& p);

}  // namespace flagcycles
