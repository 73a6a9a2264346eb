#include "flagcycles/pairing_tree.hpp"

#include <deque>
#include <optional>
#include <vector>

#include "flagcycles/errors.hpp"
#include "scanner.hpp"

namespace flagcycles {

struct PairingTree::Rep {
  std::size_t gen = 0;
  Sign left_sign = Sign::kPlus;
  Sign right_sign = Sign::kPlus;
  std::optional<PairingTree> left;
  std::optional<PairingTree> right;
  std::size_t leaves = 1;
};

PairingTree PairingTree::leaf(std::size_t gen) {
  auto rep = std::make_shared<Rep>();
  rep->gen = gen;
  return PairingTree(std::move(rep));
}

PairingTree PairingTree::node(Sign left_sign, Sign right_sign, PairingTree left,
                              PairingTree right) {
  auto rep = std::make_shared<Rep>();
  rep->left_sign = left_sign;
  rep->right_sign = right_sign;
  rep->leaves = left.leaf_count() + right.leaf_count();
  rep->left = std::move(left);
  rep->right = std::move(right);
  return PairingTree(std::move(rep));
}

bool PairingTree::is_leaf() const noexcept { return !rep_->left.has_value(); }

std::size_t PairingTree::gen() const {
  if (!is_leaf()) throw DomainError("gen() on a pairing node");
  return rep_->gen;
}

Sign PairingTree::left_sign() const {
  if (is_leaf()) throw DomainError("left_sign() on a leaf");
  return rep_->left_sign;
}

Sign PairingTree::right_sign() const {
  if (is_leaf()) throw DomainError("right_sign() on a leaf");
  return rep_->right_sign;
}

const PairingTree& PairingTree::left() const {
  if (is_leaf()) throw DomainError("left() on a leaf");
  return *rep_->left;
}

const PairingTree& PairingTree::right() const {
  if (is_leaf()) throw DomainError("right() on a leaf");
  return *rep_->right;
}

std::size_t PairingTree::leaf_count() const noexcept { return rep_->leaves; }

bool operator==(const PairingTree& a, const PairingTree& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

// Leaves sort before nodes; nodes compare by signs, then left, then right.
std::strong_ordering operator<=>(const PairingTree& a, const PairingTree& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (a.is_leaf() != b.is_leaf()) {
    return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_leaf()) return a.rep_->gen <=> b.rep_->gen;
  if (auto c = a.rep_->left_sign <=> b.rep_->left_sign; c != 0) return c;
  if (auto c = a.rep_->right_sign <=> b.rep_->right_sign; c != 0) return c;
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

std::strong_ordering operator<=>(const RootedPresentation& a, const RootedPresentation& b) {
  if (auto c = a.root <=> b.root; c != 0) return c;
  return a.tree <=> b.tree;
}

namespace {

// Appends eval(t) (s = +) or involution(eval(t)) (s = -).
void append_form(const Generators& gens, const PairingTree& t, Sign s, std::vector<Letter>& out) {
  if (t.is_leaf()) {
    if (t.gen() >= gens->size()) {
      throw DomainError("leaf generator index " + std::to_string(t.gen()) + " out of range");
    }
    out.push_back({static_cast<std::uint32_t>(t.gen()), s});
    return;
  }
  // inv(form(L,a) form(R,-b)) = form(R,b) form(L,-a)
  if (s == Sign::kPlus) {
    append_form(gens, t.left(), t.left_sign(), out);
    append_form(gens, t.right(), -t.right_sign(), out);
  } else {
    append_form(gens, t.right(), t.right_sign(), out);
    append_form(gens, t.left(), -t.left_sign(), out);
  }
}

}  // namespace

Word eval_tree(const Generators& gens, const PairingTree& tree) {
  return eval_tree(gens, RootedPresentation{tree, Sign::kPlus});
}

Word eval_tree(const Generators& gens, const RootedPresentation& r) {
  std::vector<Letter> out;
  out.reserve(r.tree.leaf_count());
  append_form(gens, r.tree, r.root, out);
  return Word(gens, std::move(out));
}

PairingTree flip(const PairingTree& node) {
  if (node.is_leaf()) throw DomainError("flip: argument is a leaf");
  return PairingTree::node(node.right_sign(), node.left_sign(), node.right(), node.left());
}

RootedPresentation word_to_tree(const Word& w) {
  if (w.empty()) throw DomainError("word_to_tree: the empty word has no tree");
  const auto letters = w.letters();
  if (letters.size() == 1) return {PairingTree::leaf(letters[0].gen), letters[0].sign};
  // The first node's left sign carries the first letter; each appended leaf
  // contributes c_i^(-t), so t = -sign.
  auto acc = PairingTree::node(letters[0].sign, -letters[1].sign,
                               PairingTree::leaf(letters[0].gen),
                               PairingTree::leaf(letters[1].gen));
  for (std::size_t i = 2; i < letters.size(); ++i) {
    acc = PairingTree::node(Sign::kPlus, -letters[i].sign, std::move(acc),
                            PairingTree::leaf(letters[i].gen));
  }
  return {std::move(acc), Sign::kPlus};
}

namespace {

bool is_plain_pairing(const PairingTree& t) {
  return !t.is_leaf() && t.left_sign() == Sign::kPlus && t.right_sign() == Sign::kMinus;
}

// All trees one move away from `t` that evaluate to exactly the same word
// (root flips are handled by the caller).
void neighbours(const PairingTree& t, std::vector<PairingTree>& out) {
  if (t.is_leaf()) return;
  const Sign s = t.left_sign();
  const Sign r = t.right_sign();
  const auto& left = t.left();
  const auto& right = t.right();

  if (!left.is_leaf()) out.push_back(PairingTree::node(-s, r, flip(left), right));
  if (!right.is_leaf()) out.push_back(PairingTree::node(s, -r, left, flip(right)));

  if (is_plain_pairing(t)) {
    if (is_plain_pairing(left)) {
      out.push_back(PairingTree::node(
          Sign::kPlus, Sign::kMinus, left.left(),
          PairingTree::node(Sign::kPlus, Sign::kMinus, left.right(), right)));
    }
    if (is_plain_pairing(right)) {
      out.push_back(PairingTree::node(
          Sign::kPlus, Sign::kMinus,
          PairingTree::node(Sign::kPlus, Sign::kMinus, left, right.left()), right.right()));
    }
  }

  std::vector<PairingTree> sub;
  neighbours(left, sub);
  for (auto& n : sub) out.push_back(PairingTree::node(s, r, std::move(n), right));
  sub.clear();
  neighbours(right, sub);
  for (auto& n : sub) out.push_back(PairingTree::node(s, r, left, std::move(n)));
}

}  // namespace

std::set<RootedPresentation> move_closure(const RootedPresentation& r, std::size_t cap) {
  std::set<RootedPresentation> seen{r};
  std::deque<RootedPresentation> frontier{r};
  std::vector<PairingTree> next;
  auto visit = [&](RootedPresentation candidate) {
    if (seen.insert(candidate).second) {
      if (seen.size() > cap) {
        throw ResourceError("move closure exceeded cap of " + std::to_string(cap));
      }
      frontier.push_back(std::move(candidate));
    }
  };
  while (!frontier.empty()) {
    auto current = std::move(frontier.front());
    frontier.pop_front();
    if (!current.tree.is_leaf()) visit({flip(current.tree), -current.root});
    next.clear();
    neighbours(current.tree, next);
    for (auto& t : next) visit({std::move(t), current.root});
  }
  return seen;
}

std::string to_string(const Generators& gens, const PairingTree& tree) {
  if (tree.is_leaf()) return "leaf:" + gens->name(tree.gen());
  std::string out = "(pair ";
  out.push_back(sign_char(tree.left_sign()));
  out.push_back(sign_char(tree.right_sign()));
  out += ' ' + to_string(gens, tree.left()) + ' ' + to_string(gens, tree.right()) + ')';
  return out;
}

std::string to_string(const Generators& gens, const RootedPresentation& r) {
  return std::string("[") + sign_char(r.root) + ' ' + to_string(gens, r.tree) + ']';
}

namespace {

Sign read_sign(detail::Scanner& in) {
  if (in.consume('+')) return Sign::kPlus;
  if (in.consume('-')) return Sign::kMinus;
  in.fail(in.at_end() ? "unexpected end of input" : std::string("unexpected '") + in.peek() + "'",
          {"'+'", "'-'"});
}

PairingTree read_tree(const Generators& gens, detail::Scanner& in) {
  in.skip_space();
  if (in.consume("leaf:")) {
    const auto line = in.line();
    const auto column = in.column();
    const auto name = in.identifier();
    const auto gen = gens->find(name);
    if (!gen) {
      throw DomainError(std::to_string(line) + ":" + std::to_string(column) +
                        ": unknown generator '" + name + "'");
    }
    return PairingTree::leaf(*gen);
  }
  if (!in.consume('(')) {
    in.fail(in.at_end() ? "unexpected end of input"
                        : std::string("unexpected '") + in.peek() + "'",
            {"'leaf:'", "'('"});
  }
  in.skip_space();
  if (!in.consume("pair")) in.fail("malformed pairing", {"'pair'"});
  if (!in.skip_space()) in.fail("malformed pairing", {"whitespace"});
  const Sign s = read_sign(in);
  const Sign t = read_sign(in);
  auto left = read_tree(gens, in);
  auto right = read_tree(gens, in);
  in.skip_space();
  in.expect(')');
  return PairingTree::node(s, t, std::move(left), std::move(right));
}

}  // namespace

PairingTree parse_tree(const Generators& gens, std::string_view text) {
  detail::Scanner in(text);
  auto tree = read_tree(gens, in);
  in.expect_end();
  return tree;
}

RootedPresentation parse_rooted(const Generators& gens, std::string_view text) {
  detail::Scanner in(text);
  in.skip_space();
  in.expect('[');
  in.skip_space();
  const Sign root = read_sign(in);
  auto tree = read_tree(gens, in);
  in.skip_space();
  in.expect(']');
  in.expect_end();
  return {std::move(tree), root};
}

}  // namespace flagcycles
