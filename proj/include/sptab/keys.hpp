#pragma once

// Right and left key maps for straight Kashiwara-Nakashima tableaux, each
// computed two ways that must agree:
//
//  - via jeu de taquin: the j-th right key column is the right split of
//    the last column of the reshape of the suffix starting at column j
//    whose target rotates the suffix lengths one place left; the j-th
//    left key column mirrors this on the prefix ending at column j with
//    its lengths rotated one place right.
//
//  - the direct way: matchings between adjacent split columns. For the
//    right key an accumulating column sweeps right, adding for each
//    unmatched entry the smallest letter at least as large whose value
//    and bar-mate are both absent. For the left key, deletions sweep
//    left: each unmatched right-split entry removes, scanning upward from
//    its row, the first surviving left-split entry exceeding its nearest
//    surviving upper-right neighbor, or the topmost surviving entry when
//    none qualifies.
//
// The right key records the Demazure atom containing the tableau; the
// left key records the opposite one.

#include <string>
#include <vector>

#include "sptab/crystal.hpp"
#include "sptab/tableau.hpp"

namespace sptab {

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // (index into left, index into right)
    std::vector<int> unmatched_left;
    std::vector<int> unmatched_right;
};

// Greedy matching between a right split column and the left split column
// to its right: right entries are taken largest first, each matching the
// biggest unmatched left entry less than or equal to it.
Matching match_split_columns(const Column& rc, const Column& lc);

SkewTableau right_key_sjdt(const SkewTableau& t);
SkewTableau left_key_sjdt(const SkewTableau& t);

SkewTableau right_key_direct(const SkewTableau& t, std::vector<std::string>* trace = nullptr);
SkewTableau left_key_direct(const SkewTableau& t, std::vector<std::string>* trace = nullptr);

SkewTableau right_key(const SkewTableau& t);
SkewTableau left_key(const SkewTableau& t);

// Weight of the right key: the orbit weight v with t in the atom of v.
std::vector<int> atom_of(const SkewTableau& t);

// One run of adjacent length swaps (an odd-even pass structure) that
// sorts the column lengths increasingly, recording every stage and the
// key columns read off the outer columns, then both keys.
std::vector<std::string> sjdt_key_trace(const SkewTableau& t);

// Sum of x^wt(T) over vertices whose right key is entrywise at most the
// key of v; equals the Demazure character.
LaurentPolynomial character_via_keys(const CrystalGraph& g, const std::vector<int>& v);

}  // namespace sptab
