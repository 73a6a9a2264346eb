#pragma once

#include <cstddef>
#include <vector>

#include "flagcycles/pairing_tree.hpp"
#include "flagcycles/word.hpp"

namespace flagcycles {

/// Every word of length in [min_length, max_length], shortest first, then in
/// lexicographic letter order.
std::vector<Word> enumerate_words(const Generators& gens, std::size_t min_length,
                                  std::size_t max_length);

/// Every pairing tree with exactly `leaves` leaves over `generators` labels,
/// across all shapes and all four sign pairs at every node.
std::vector<PairingTree> enumerate_trees(std::size_t leaves, std::size_t generators);

}  // namespace flagcycles
