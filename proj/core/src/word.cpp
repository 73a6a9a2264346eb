#include "flagcycles/word.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "flagcycles/errors.hpp"
#include "scanner.hpp"

namespace flagcycles {

namespace {

constexpr std::string_view kEpsilon = "\xCE\xB5";  // ε

}  // namespace

bool is_identifier(std::string_view text) noexcept {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text.front()))) return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

GeneratorSet::GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("generator set must be nonempty");
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw DomainError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw DomainError("duplicate generator name '" + n + "'");
  }
}

std::optional<std::size_t> GeneratorSet::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Generators make_generators(std::vector<std::string> names) {
  return std::make_shared<const GeneratorSet>(std::move(names));
}

bool same_generators(const Generators& a, const Generators& b) noexcept {
  return a == b || (a && b && *a == *b);
}

Word::Word(Generators gens, std::vector<Letter> letters)
    : gens_(std::move(gens)), letters_(std::move(letters)) {
  if (!gens_) throw DomainError("word requires a generator set");
  for (const auto& l : letters_) {
    if (l.gen >= gens_->size()) {
      throw DomainError("generator index " + std::to_string(l.gen) + " out of range");
    }
  }
}

Word Word::letter(Generators gens, std::size_t gen, Sign sign) {
  return Word(std::move(gens), {Letter{static_cast<std::uint32_t>(gen), sign}});
}

bool operator==(const Word& a, const Word& b) {
  return a.letters_ == b.letters_ && same_generators(a.gens_, b.gens_);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

Word concat(const Word& u, const Word& v) {
  if (!same_generators(u.generators(), v.generators())) {
    throw DomainError("concat: words over different generator sets");
  }
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(u.generators(), std::move(out));
}

Word involution(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(flipped(*it));
  return Word(w.generators(), std::move(out));
}

Word swap_generator_sign(const Word& w, std::size_t gen) {
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  for (auto& l : out) {
    if (l.gen == gen) l = flipped(l);
  }
  return Word(w.generators(), std::move(out));
}

std::string to_string(const Word& w) {
  if (w.empty()) return std::string(kEpsilon);
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out.push_back(' ');
    out += w.generators()->name(l.gen);
    out.push_back(sign_char(l.sign));
  }
  return out;
}

Word parse_word(const Generators& gens, std::string_view text) {
  detail::Scanner in(text);
  in.skip_space();
  if (in.consume(kEpsilon)) {
    in.expect_end();
    return Word(gens);
  }
  std::vector<Letter> letters;
  while (!in.at_end()) {
    const auto line = in.line();
    const auto column = in.column();
    const auto name = in.identifier();
    Sign sign;
    if (in.consume('+')) {
      sign = Sign::kPlus;
    } else if (in.consume('-')) {
      sign = Sign::kMinus;
    } else {
      in.fail(in.at_end() ? "unexpected end of input"
                          : std::string("unexpected '") + in.peek() + "'",
              {"'+'", "'-'"});
    }
    if (!in.skip_space() && !in.at_end()) {
      in.fail(std::string("unexpected '") + in.peek() + "'", {"whitespace", "end of input"});
    }
    const auto gen = gens->find(name);
    if (!gen) {
      throw DomainError(std::to_string(line) + ":" + std::to_string(column) +
                        ": unknown generator '" + name + "'");
    }
    letters.push_back({static_cast<std::uint32_t>(*gen), sign});
  }
  return Word(gens, std::move(letters));
}

CanonicalPolicy CanonicalPolicy::with_override(const Word& canonical) const {
  CanonicalPolicy out = *this;
  out.mode_ = Mode::kExplicit;
  const auto anti = involution(canonical);
  const auto& key = std::min(canonical, anti);
  out.overrides_[std::vector<Letter>(key.letters().begin(), key.letters().end())] =
      std::vector<Letter>(canonical.letters().begin(), canonical.letters().end());
  return out;
}

std::vector<std::vector<Letter>> CanonicalPolicy::overrides() const {
  std::vector<std::vector<Letter>> out;
  out.reserve(overrides_.size());
  for (const auto& [key, chosen] : overrides_) out.push_back(chosen);
  return out;
}

bool CanonicalPolicy::keeps(const Word& w, const Word& anti) const {
  switch (mode_) {
    case Mode::kAsComputed:
      return true;
    case Mode::kExplicit: {
      const auto& key = std::min(w, anti);
      const auto it = overrides_.find(std::vector<Letter>(key.letters().begin(), key.letters().end()));
      if (it != overrides_.end()) {
        return std::equal(it->second.begin(), it->second.end(), w.letters().begin(),
                          w.letters().end());
      }
      break;
    }
    case Mode::kLexLeast:
      break;
  }
  return w <= anti;
}

PresentationClass PresentationClass::with_canonical(Word canonical) {
  auto anti = involution(canonical);
  return PresentationClass(std::move(canonical), std::move(anti));
}

bool operator==(const PresentationClass& a, const PresentationClass& b) {
  return (a.canonical_ == b.canonical_ && a.anti_ == b.anti_) ||
         (a.canonical_ == b.anti_ && a.anti_ == b.canonical_);
}

PresentationClass class_of(const Word& w, const CanonicalPolicy& policy) {
  const auto anti = involution(w);
  return PresentationClass::with_canonical(policy.keeps(w, anti) ? w : anti);
}

PresentationClass generator_class(const Generators& gens, std::size_t gen) {
  return PresentationClass::with_canonical(Word::letter(gens, gen, Sign::kPlus));
}

Word signed_form(const PresentationClass& p, Sign s) {
  return s == Sign::kPlus ? p.canonical() : p.anti();
}

Word pair(const PresentationClass& a, Sign s, Sign t, const PresentationClass& b) {
  return concat(signed_form(a, s), signed_form(b, -t));
}

bool check_commutation_law(const PresentationClass& a, Sign s, Sign t,
                           const PresentationClass& b) {
  return class_of(pair(a, s, t, b)) == class_of(pair(b, t, s, a));
}

PresentationClass swap_generator_sign(const PresentationClass& p, std::size_t gen) {
  return PresentationClass::with_canonical(swap_generator_sign(p.canonical(), gen));
}

std::string to_string(const PresentationClass& p) {
  std::string out = "{" + to_string(p.canonical()) + " | " + to_string(p.anti()) + "}";
  if (p.degenerate()) out += " degenerate";
  return out;
}

}  // namespace flagcycles
