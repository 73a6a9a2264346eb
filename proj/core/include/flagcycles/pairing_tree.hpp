#pragma once

// Signed binary trees of pairings. A node Node(s, t, L, R) stands for
// L^s #^t R and evaluates to form(L, s) form(R, -t), where form(T, -) is the
// involution of eval(T). A rooted presentation carries an extra root sign that
// selects which of the two presentations of the whole tree is produced.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "flagcycles/word.hpp"

namespace flagcycles {

class PairingTree {
 public:
  static PairingTree leaf(std::size_t gen);
  static PairingTree node(Sign left_sign, Sign right_sign, PairingTree left, PairingTree right);

  bool is_leaf() const noexcept;
  /// Generator index of a leaf. Throws DomainError on a node.
  std::size_t gen() const;
  /// Node accessors. Throw DomainError on a leaf.
  Sign left_sign() const;
  Sign right_sign() const;
  const PairingTree& left() const;
  const PairingTree& right() const;

  std::size_t leaf_count() const noexcept;

  friend bool operator==(const PairingTree& a, const PairingTree& b);
  friend std::strong_ordering operator<=>(const PairingTree& a, const PairingTree& b);

 private:
  struct Rep;
  explicit PairingTree(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

struct RootedPresentation {
  PairingTree tree;
  Sign root = Sign::kPlus;

  friend bool operator==(const RootedPresentation&, const RootedPresentation&) = default;
  friend std::strong_ordering operator<=>(const RootedPresentation& a,
                                          const RootedPresentation& b);
};

/// Evaluation of the bare tree (root sign +).
Word eval_tree(const Generators& gens, const PairingTree& tree);
Word eval_tree(const Generators& gens, const RootedPresentation& r);

/// Node(s, t, L, R) -> Node(t, s, R, L). eval(flip(n)) = involution(eval(n)).
PairingTree flip(const PairingTree& node);

/// Left comb whose evaluation is exactly `w`. Throws DomainError on ε.
RootedPresentation word_to_tree(const Word& w);

inline constexpr std::size_t kDefaultClosureCap = 10'000;

/// Closure of {r} under flips at any node (compensated by the parent's sign,
/// or by the root sign at the top) and under reassociation
/// Node(+,-,Node(+,-,A,B),C) <-> Node(+,-,A,Node(+,-,B,C)).
/// Throws ResourceError once more than `cap` members are found.
std::set<RootedPresentation> move_closure(const RootedPresentation& r,
                                          std::size_t cap = kDefaultClosureCap);

/// `leaf:<name>` | `(pair <s><t> <tree> <tree>)`
std::string to_string(const Generators& gens, const PairingTree& tree);
/// `[<r> <tree>]`
std::string to_string(const Generators& gens, const RootedPresentation& r);

PairingTree parse_tree(const Generators& gens, std::string_view text);
RootedPresentation parse_rooted(const Generators& gens, std::string_view text);

}  // namespace flagcycles
