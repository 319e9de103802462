#pragma once

#include <map>
#include <vector>

#include "qpleth/partition.hpp"

namespace qpleth {

// Coefficient picked up by the exchange move on an adjacent inverted pair
// (low, high), low < high, moving it to (high - a, low + a):
//   a = 0                     -> t
//   1 <= a < floor(d/2)       -> t^{a+1} - t^{a-1}
//   a = floor(d/2), d = high-low, eps = d mod 2 -> t^{a+eps} - t^{a-1}
// Throws when a is out of range.
TPoly c_coeff(int low, int high, int a);

// Expansion of a composition-indexed vertex-operator word over partitions:
// repeatedly applies the exchange move at the minimum adjacent-inversion
// index; weakly decreasing end states with a negative entry contribute
// nothing, trailing zeros are stripped. Memoized across calls; the returned
// reference stays valid for the lifetime of the process.
const std::map<Partition, TPoly>& straighten(const Composition& w);

// Coefficient of the partition la in straighten(mu). Exploits the dominance
// bound (targets dominate the word) to skip hopeless words cheaply.
TPoly b_coeff(const Partition& la, const Composition& mu);

// One node of the canonical straightening tree; the root carries no move.
struct StraightenNode {
    Composition state;
    int move_index = 0;   // 1-based index i of the move applied to the parent
    int move_amount = 0;  // a
    TPoly coeff;          // C of that move; 1 at the root
    std::vector<StraightenNode> children;
};

// Full canonical tree below w (without state sharing, for display/fixtures).
StraightenNode straighten_tree(const Composition& w);

// All states appearing strictly below the root, deduplicated.
std::vector<Composition> tree_states(const StraightenNode& root);

}  // namespace qpleth
