#pragma once

// Column insertion, the dual RSK correspondence on strict biwords, and the
// cocrystal of a straight tableau: the type A crystal whose vertices are
// the skew tableaux reachable from it by jeu de taquin slides between
// consecutive columns.
//
// A vertex is kept as its sequence of r column contents, empty slots
// included; its displayed alignment overlaps adjacent columns as much as
// possible and starts a column just below its right neighbour when empty
// slots separate them. The lowering operator F_i moves one cell from the
// i-th slot, counted from the right, to the (i+1)-th; availability and
// the recorded Q-symbol are transported along edges by the type A
// operators on the alphabet [r]. On unbarred vertices dual RSK of the
// biword independently reproduces the base tableau and the Q-symbol, and
// generation checks that it does.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sptab/tableau.hpp"

namespace sptab {

struct Biword {
    std::vector<std::pair<int, Letter>> pairs;  // (slot from the right, letter)

    bool operator==(const Biword& o) const { return pairs == o.pairs; }
};

// Biword of a column sequence: tops count slots from the right, empty
// slots included; bottoms read each column top to bottom.
Biword biword_of(const std::vector<Column>& slots);
Biword biword_of(const SkewTableau& t);

std::string biword_str(const Biword& w);    // "t1:b1 t2:b2 ..."
Biword parse_biword(const std::string& s);

// Column insertion of a word, leftmost letter first.
SkewTableau column_insert_word(const std::vector<Letter>& word, int n);

// Dual RSK on a strict biword with tops in [r] and unbarred bottoms in
// [n]: returns the insertion tableau and the recording tableau of
// conjugate shape.
std::pair<SkewTableau, SkewTableau> dual_rsk(const Biword& w, int n, int r);

struct Cocrystal {
    int n = 0;                                  // alphabet bound of the vertices
    int r = 0;                                  // number of column slots
    std::vector<std::vector<Column>> vertices;  // slot contents, left to right
    std::vector<SkewTableau> placed;            // aligned form of each vertex
    std::vector<SkewTableau> qsymbols;          // Q-symbols on the alphabet [r]
    std::vector<std::vector<int>> f_edge;       // [v][i-1] -> vertex index or -1
    std::vector<std::vector<int>> e_edge;
    int base = -1;                              // index of the generating tableau

    int index_of(const std::vector<Column>& slots) const;
};

// Closure of a straight tableau under the slide operators on r slots.
Cocrystal generate_cocrystal(const SkewTableau& t, int r);

// Vertices whose slot lengths, right to left, permute those of the base.
std::vector<int> cocrystal_key_indices(const Cocrystal& c);

nlohmann::json cocrystal_to_json(const Cocrystal& c);
std::string cocrystal_to_dot(const Cocrystal& c);

}  // namespace sptab
