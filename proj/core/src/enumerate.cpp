#include "flagcycles/enumerate.hpp"

#include <map>

namespace flagcycles {

std::vector<Word> enumerate_words(const Generators& gens, std::size_t min_length,
                                  std::size_t max_length) {
  std::vector<Letter> alphabet;
  for (std::uint32_t g = 0; g < gens->size(); ++g) {
    for (Sign s : kBothSigns) alphabet.push_back({g, s});
  }
  std::vector<Word> out;
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t length = 0; length <= max_length; ++length) {
    if (length >= min_length) {
      for (const auto& letters : layer) out.emplace_back(gens, letters);
    }
    if (length == max_length) break;
    std::vector<std::vector<Letter>> next;
    next.reserve(layer.size() * alphabet.size());
    for (const auto& letters : layer) {
      for (const auto& l : alphabet) {
        auto extended = letters;
        extended.push_back(l);
        next.push_back(std::move(extended));
      }
    }
    layer = std::move(next);
  }
  return out;
}

namespace {

const std::vector<PairingTree>& trees_with(std::size_t leaves, std::size_t generators,
                                           std::map<std::size_t, std::vector<PairingTree>>& memo) {
  if (auto it = memo.find(leaves); it != memo.end()) return it->second;
  std::vector<PairingTree> out;
  if (leaves == 1) {
    for (std::size_t g = 0; g < generators; ++g) out.push_back(PairingTree::leaf(g));
  } else {
    for (std::size_t k = 1; k < leaves; ++k) {
      const auto& lefts = trees_with(k, generators, memo);
      const auto& rights = trees_with(leaves - k, generators, memo);
      for (const auto& l : lefts) {
        for (const auto& r : rights) {
          for (Sign s : kBothSigns) {
            for (Sign t : kBothSigns) out.push_back(PairingTree::node(s, t, l, r));
          }
        }
      }
    }
  }
  return memo.emplace(leaves, std::move(out)).first->second;
}

}  // namespace

std::vector<PairingTree> enumerate_trees(std::size_t leaves, std::size_t generators) {
  if (leaves == 0) return {};
  std::map<std::size_t, std::vector<PairingTree>> memo;
  return trees_with(leaves, generators, memo);
}

}  // namespace flagcycles
